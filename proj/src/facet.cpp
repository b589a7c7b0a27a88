#include "cubegeo/facet.hpp"

#include <stdexcept>

namespace cubegeo {

namespace {
constexpr char kNames[4][2] = {{'L', 'R'}, {'F', 'B'}, {'D', 'U'}, {'S', 'G'}};
}

std::string facet_name(const Facet& f) {
    if (f.axis < 0 || f.axis > 3 || f.side < 0 || f.side > 1)
        throw std::invalid_argument("facet_name: bad facet");
    return std::string(1, kNames[f.axis][f.side]);
}

Facet facet_from_name(char ch) {
    for (int axis = 0; axis < 4; ++axis)
        for (int side = 0; side < 2; ++side)
            if (kNames[axis][side] == ch) return Facet{axis, side};
    throw std::invalid_argument(std::string("unknown facet name '") + ch + "'");
}

Facet facet_from_name(const std::string& name) {
    if (name.size() != 1) throw std::invalid_argument("unknown facet name \"" + name + "\"");
    return facet_from_name(name[0]);
}

std::vector<Facet> all_facets(std::size_t n) {
    std::vector<Facet> out;
    for (int axis = 0; axis < static_cast<int>(n); ++axis)
        for (int side = 0; side < 2; ++side) out.push_back(Facet{axis, side});
    return out;
}

std::vector<Facet> facets_of(const Vec& p) {
    std::vector<Facet> out;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (p[i] < Rat(0) || p[i] > Rat(1))
            throw std::invalid_argument("facets_of: point not on the boundary");
        if (p[i] == Rat(0)) out.push_back(Facet{static_cast<int>(i), 0});
        if (p[i] == Rat(1)) out.push_back(Facet{static_cast<int>(i), 1});
    }
    if (out.empty()) throw std::invalid_argument("facets_of: interior point");
    return out;
}

Vec to_chart(const Facet& f, const Vec& p) {
    if (p[f.axis] != Rat(f.side))
        throw std::invalid_argument("to_chart: point not in aff(" + facet_name(f) + ")");
    Vec q(p.dim() - 1);
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.dim(); ++i)
        if (i != static_cast<std::size_t>(f.axis)) q[k++] = p[i];
    return q;
}

Vec from_chart(const Facet& f, const Vec& q) {
    Vec p(q.dim() + 1);
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.dim(); ++i)
        p[i] = (i == static_cast<std::size_t>(f.axis)) ? Rat(f.side) : q[k++];
    return p;
}

} // namespace cubegeo
