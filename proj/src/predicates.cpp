#include "cubegeo/predicates.hpp"

#include <stdexcept>

namespace cubegeo {

Rat det(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat result(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            result = -result;
        }
        result *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            Rat f = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return result;
}

int orient(const std::vector<Vec>& pts) {
    if (pts.empty()) throw std::invalid_argument("orient: no points");
    const std::size_t d = pts[0].dim();
    if (pts.size() != d + 1) throw std::invalid_argument("orient: need d+1 points");
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d));
    for (std::size_t r = 0; r < d; ++r) {
        if (pts[r + 1].dim() != d) throw std::invalid_argument("orient: dimension mismatch");
        for (std::size_t c = 0; c < d; ++c) m[r][c] = pts[r + 1][c] - pts[0][c];
    }
    return det(std::move(m)).sign();
}

Rat outcircle(const Vec& p1, const Vec& p2, const Vec& p3, const Vec& p4) {
    std::vector<std::vector<Rat>> m;
    for (const Vec* p : {&p1, &p2, &p3, &p4}) {
        const Vec& q = *p;
        m.push_back({q[0], q[1], Rat(1), q[0] * q[0] + q[1] * q[1]});
    }
    return det(std::move(m));
}

Rat outsphere(const Vec& p1, const Vec& p2, const Vec& p3, const Vec& p4, const Vec& p5) {
    std::vector<std::vector<Rat>> m;
    for (const Vec* p : {&p1, &p2, &p3, &p4, &p5}) {
        const Vec& q = *p;
        m.push_back({q[0], q[1], q[2], Rat(1), q[0] * q[0] + q[1] * q[1] + q[2] * q[2]});
    }
    return det(std::move(m));
}

Side incircle_side(const Vec& p1, const Vec& p2, const Vec& p3, const Vec& p4) {
    int o = orient({p1, p2, p3});
    if (o == 0) throw std::invalid_argument("incircle_side: collinear base triple");
    Rat inc = -outcircle(p1, p2, p3, p4);
    int s = o * inc.sign();
    return s > 0 ? Side::inside : (s < 0 ? Side::outside : Side::on);
}

Side insphere_side(const Vec& p1, const Vec& p2, const Vec& p3, const Vec& p4, const Vec& p5) {
    int o = orient({p1, p2, p3, p4});
    if (o == 0) throw std::invalid_argument("insphere_side: coplanar base quadruple");
    Rat ins = -outsphere(p1, p2, p3, p4, p5);
    int s = o * ins.sign();
    return s > 0 ? Side::inside : (s < 0 ? Side::outside : Side::on);
}

std::optional<Vec> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            Rat f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

Vec circumcenter(const std::vector<Vec>& pts) {
    if (pts.empty()) throw std::invalid_argument("circumcenter: no points");
    const std::size_t d = pts[0].dim();
    if (pts.size() != d + 1) throw std::invalid_argument("circumcenter: need d+1 points");
    // bisector system: 2 (p_i - p_0) . x = |p_i|^2 - |p_0|^2
    std::vector<std::vector<Rat>> a(d, std::vector<Rat>(d));
    std::vector<Rat> b(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) a[i][k] = Rat(2) * (pts[i + 1][k] - pts[0][k]);
        b[i] = sq_norm(pts[i + 1]) - sq_norm(pts[0]);
    }
    auto x = solve_linear(std::move(a), std::move(b));
    if (!x) throw std::invalid_argument("circumcenter: affinely dependent input");
    return *x;
}

Vec reflect(const Hyperplane& h, const Vec& p) {
    // p - 2 ((<n,p> - off) / <n,n>) n
    Rat t = (dot(h.normal, p) - h.offset) / sq_norm(h.normal);
    return p - (Rat(2) * t) * h.normal;
}

} // namespace cubegeo
