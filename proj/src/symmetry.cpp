#include "cubegeo/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cubegeo/facet.hpp"

namespace cubegeo {

SignedPerm SignedPerm::identity(std::size_t n) {
    SignedPerm g;
    g.perm.resize(n);
    std::iota(g.perm.begin(), g.perm.end(), 0);
    g.flip.assign(n, false);
    return g;
}

Vec SignedPerm::apply(const Vec& p) const {
    const std::size_t n = perm.size();
    if (p.dim() != n) throw std::invalid_argument("SignedPerm: dimension mismatch");
    Vec q(n);
    for (std::size_t i = 0; i < n; ++i)
        q[i] = flip[i] ? Rat(1) - p[perm[i]] : p[perm[i]];
    return q;
}

SignedPerm SignedPerm::inverse() const {
    const std::size_t n = perm.size();
    SignedPerm g;
    g.perm.resize(n);
    g.flip.assign(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        g.perm[perm[i]] = static_cast<int>(i);
        g.flip[perm[i]] = flip[i];
    }
    return g;
}

SignedPerm SignedPerm::compose(const SignedPerm& inner) const {
    // (this o inner)(p): q_i = this applied to (inner p)
    const std::size_t n = perm.size();
    SignedPerm g;
    g.perm.resize(n);
    g.flip.assign(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        g.perm[i] = inner.perm[perm[i]];
        g.flip[i] = flip[i] != inner.flip[perm[i]];
    }
    return g;
}

bool SignedPerm::is_identity() const {
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i) || flip[i]) return false;
    return true;
}

std::string SignedPerm::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) s += " ";
        if (flip[i]) s += "~";
        s += std::to_string(perm[i]);
    }
    return s + ")";
}

const std::vector<SignedPerm>& cube_symmetries(std::size_t n) {
    static std::map<std::size_t, std::vector<SignedPerm>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<SignedPerm> all;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            SignedPerm g;
            g.perm = perm;
            g.flip.resize(n);
            for (std::size_t i = 0; i < n; ++i) g.flip[i] = (mask >> i) & 1u;
            all.push_back(std::move(g));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(all.begin(), all.end());
    return cache.emplace(n, std::move(all)).first->second;
}

Vec DeltaPoint::surface_point() const {
    Vec p(coords.size() + 1);
    for (std::size_t i = 0; i < coords.size(); ++i) p[i] = coords[i];
    p[coords.size()] = Rat(0);
    return p;
}

DeltaPoint make_delta(const std::vector<Rat>& coords) {
    const Rat half(1, 2);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < Rat(0) || coords[i] > half)
            throw std::invalid_argument("make_delta: coordinate outside [0,1/2]");
        if (i && coords[i] > coords[i - 1])
            throw std::invalid_argument("make_delta: coordinates not sorted descending");
    }
    DeltaPoint d;
    d.coords = coords;
    d.witness = SignedPerm::identity(coords.size() + 1);
    return d;
}

namespace {

bool in_fundamental_form(const Vec& q) {
    const std::size_t n = q.dim();
    if (q[n - 1] != Rat(0)) return false;
    const Rat half(1, 2);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (q[i] > half || q[i] < Rat(0)) return false;
        if (i && q[i] > q[i - 1]) return false;
    }
    return true;
}

} // namespace

DeltaPoint reduce_to_fundamental(const Vec& p) {
    if (!on_boundary(p))
        throw std::invalid_argument("reduce_to_fundamental: point not on the boundary");
    const std::size_t n = p.dim();
    for (const SignedPerm& g : cube_symmetries(n)) {
        Vec q = g.apply(p);
        if (!in_fundamental_form(q)) continue;
        DeltaPoint d;
        d.coords.assign(n - 1, Rat(0));
        for (std::size_t i = 0; i + 1 < n; ++i) d.coords[i] = q[i];
        d.witness = g;
        return d; // symmetries are pre-sorted, so the first hit is lex-least
    }
    throw std::logic_error("reduce_to_fundamental: no reducing symmetry found");
}

std::vector<SignedPerm> stabilizer(const Vec& p) {
    std::vector<SignedPerm> out;
    for (const SignedPerm& g : cube_symmetries(p.dim()))
        if (g.apply(p) == p) out.push_back(g);
    return out;
}

} // namespace cubegeo
