#include "cubegeo/oracle.hpp"

#include <stdexcept>

namespace cubegeo {

std::vector<UnfoldSeq> enumerate_sequences(std::size_t n, const Facet& src, const Facet& dst,
                                           std::size_t max_len) {
    if (max_len < 1) throw std::invalid_argument("enumerate_sequences: max_len >= 1");
    std::vector<UnfoldSeq> out;
    std::vector<Facet> path = {src};
    auto rec = [&](auto&& self) -> void {
        if (path.back() == dst) out.push_back(UnfoldSeq(path));
        if (path.size() == max_len) return;
        for (const Facet& f : all_facets(n)) {
            if (!adjacent(path.back(), f)) continue;
            if (path.size() >= 2 && f == path[path.size() - 2]) continue; // non-backtracking
            path.push_back(f);
            self(self);
            path.pop_back();
        }
    };
    rec(rec);
    return out;
}

namespace {

Rat box_dist_sq(const Vec& p, const Box& box) {
    Rat s;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (p[i] < box.lo[i]) {
            Rat d = box.lo[i] - p[i];
            s += d * d;
        } else if (p[i] > box.hi[i]) {
            Rat d = p[i] - box.hi[i];
            s += d * d;
        }
    }
    return s;
}

Box map_box(const AffineIso& iso, const Box& box) {
    const std::size_t n = box.lo.size();
    Vec lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = box.lo[i];
        hi[i] = box.hi[i];
    }
    Vec a = iso.apply(lo), b = iso.apply(hi);
    Box out;
    out.lo.resize(n);
    out.hi.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.lo[i] = a[i] < b[i] ? a[i] : b[i];
        out.hi[i] = a[i] < b[i] ? b[i] : a[i];
    }
    return out;
}

// Greedy ordered-crossing check: the segment q -> img must meet every window
// box at nondecreasing parameters. Exact rational interval clipping.
bool windows_ok(const Vec& q, const Vec& img, const std::vector<Box>& windows) {
    const std::size_t n = q.dim();
    Rat t_prev(0);
    for (const Box& w : windows) {
        Rat lo = t_prev, hi(1);
        bool empty = false;
        for (std::size_t i = 0; i < n && !empty; ++i) {
            Rat d = img[i] - q[i];
            if (d.is_zero()) {
                if (q[i] < w.lo[i] || q[i] > w.hi[i]) empty = true;
                continue;
            }
            Rat t0 = (w.lo[i] - q[i]) / d;
            Rat t1 = (w.hi[i] - q[i]) / d;
            if (t0 > t1) std::swap(t0, t1);
            if (t0 > lo) lo = t0;
            if (t1 < hi) hi = t1;
            if (lo > hi) empty = true;
        }
        if (empty) return false;
        t_prev = lo;
    }
    return true;
}

struct Dfs {
    std::size_t n;
    const Vec* p;
    const Vec* q;
    std::vector<Facet> p_facets;
    OracleOptions opts;
    OracleResult result;

    std::vector<Facet> path;
    std::vector<Box> windows;

    bool contains_p(const Facet& f) const {
        for (const Facet& g : p_facets)
            if (g == f) return true;
        return false;
    }

    void run(const Facet& start) {
        path = {start};
        windows.clear();
        AffineIso id = AffineIso::identity(n);
        visit(id, id);
    }

    void visit(const AffineIso& fwd, const AffineIso& inv) {
        if (result.nodes >= opts.node_cap) {
            result.node_capped = true;
            return;
        }
        ++result.nodes;
        const Facet& cur = path.back();
        if (contains_p(cur)) {
            Vec q_pulled = inv.apply(*q);
            Rat d2 = sq_dist(q_pulled, *p);
            if (!result.found || d2 <= result.sq_dist) {
                Vec img = fwd.apply(*p);
                if (windows_ok(*q, img, windows)) {
                    if (!result.found || d2 < result.sq_dist) {
                        result.found = true;
                        result.sq_dist = d2;
                        result.best_seq.clear();
                        for (const Facet& f : path) result.best_seq.push_back(facet_name(f));
                    }
                }
            }
        }
        if (path.size() == opts.max_len) return;
        for (const Facet& f : all_facets(n)) {
            if (!adjacent(path.back(), f)) continue;
            if (path.size() >= 2 && f == path[path.size() - 2]) continue;
            Box face = shared_face(path.back(), f, n);
            if (result.found) {
                // any valid path through this window is at least this long
                Vec q_pulled = inv.apply(*q);
                if (box_dist_sq(q_pulled, face) > result.sq_dist) continue;
            }
            AffineIso step = unfold_step(path.back(), f, n);
            AffineIso fwd2 = fwd.compose(step);
            AffineIso inv2 = step.inverse().compose(inv);
            windows.push_back(map_box(fwd, face));
            path.push_back(f);
            visit(fwd2, inv2);
            path.pop_back();
            windows.pop_back();
        }
    }
};

} // namespace

OracleResult oracle_distance(const Vec& p, const Vec& q, const OracleOptions& opts) {
    if (p.dim() != q.dim()) throw std::invalid_argument("oracle_distance: dim mismatch");
    Dfs dfs;
    dfs.n = p.dim();
    dfs.p = &p;
    dfs.q = &q;
    dfs.p_facets = facets_of(p);
    dfs.opts = opts;
    for (const Facet& fq : facets_of(q)) dfs.run(fq);
    OracleResult r = std::move(dfs.result);
    if (!r.found && !r.node_capped)
        throw std::runtime_error("oracle_distance: no valid candidate at max_len " +
                                 std::to_string(opts.max_len) + "; raise max_len");
    return r;
}

OracleFarthest oracle_farthest(const DeltaPoint& p, unsigned grid_den, bool full_surface) {
    if (grid_den == 0) throw std::invalid_argument("oracle_farthest: grid_den > 0");
    OracleFarthest best;
    bool first = true;
    auto consider = [&](const Vec& q4, const Rat& d2) {
        if (first || d2 > best.sq_dist) {
            best.sq_dist = d2;
            best.point = q4;
            first = false;
        }
    };
    auto min_over = [](const std::vector<SourceImage>& imgs, const Vec& q4) {
        Rat m;
        bool fst = true;
        for (const SourceImage& s : imgs) {
            Rat d = sq_dist(s.point, q4);
            if (fst || d < m) { m = d; fst = false; }
        }
        return m;
    };
    if (!full_surface) {
        // grid of iota(Delta) = {1/2 <= x <= y <= z <= 1} inside the goal facet
        const auto imgs = source_images_4cube(p);
        for (unsigned ix = grid_den / 2; ix <= grid_den; ++ix)
            for (unsigned iy = ix; iy <= grid_den; ++iy)
                for (unsigned iz = iy; iz <= grid_den; ++iz) {
                    Vec q4 = from_chart(facet_from_name('G'),
                                        Vec{Rat(ix, grid_den), Rat(iy, grid_den),
                                            Rat(iz, grid_den)});
                    consider(q4, min_over(imgs, q4));
                }
    } else {
        const auto srcs = src_all_facets(p);
        for (const Facet& f : all_facets(4)) {
            const auto& imgs = srcs.at(facet_name(f));
            for (unsigned ix = 0; ix <= grid_den; ++ix)
                for (unsigned iy = 0; iy <= grid_den; ++iy)
                    for (unsigned iz = 0; iz <= grid_den; ++iz) {
                        Vec q4 = from_chart(
                            f, Vec{Rat(ix, grid_den), Rat(iy, grid_den), Rat(iz, grid_den)});
                        consider(q4, min_over(imgs, q4));
                    }
        }
    }
    return best;
}

Eq11Audit eq11_audit(const std::vector<std::pair<DeltaPoint, Vec>>& pairs, std::size_t max_len) {
    Eq11Audit audit;
    for (const auto& [p, q] : pairs) {
        ++audit.pairs;
        Rat via_images = dist_on_surface(p, q).sq_dist;
        OracleOptions o;
        o.max_len = max_len;
        OracleResult r = oracle_distance(p.surface_point(), q, o);
        if (!r.found || r.sq_dist != via_images) {
            ++audit.mismatches;
            audit.mismatch_details.push_back(
                "p=(" + p.surface_point().to_string() + ") q=(" + q.to_string() +
                ") images=" + via_images.to_string() +
                " oracle=" + (r.found ? r.sq_dist.to_string() : std::string("none")));
        }
        OracleOptions o6 = o;
        o6.max_len = max_len + 1;
        OracleResult r6 = oracle_distance(p.surface_point(), q, o6);
        if (!r6.found || r6.sq_dist != r.sq_dist) audit.saturated = false;
    }
    return audit;
}

} // namespace cubegeo
