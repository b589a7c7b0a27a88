#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubegeo/rat.hpp"

namespace cubegeo {

/// Point/vector with exact rational coordinates. Dimension is fixed at
/// construction (2..4 for the core geometry, arbitrary for the n-cube
/// sampling estimator).
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t dim) : c_(dim) {}
    Vec(std::initializer_list<Rat> list) : c_(list) {}
    explicit Vec(std::vector<Rat> coords) : c_(std::move(coords)) {}

    std::size_t dim() const { return c_.size(); }
    const Rat& operator[](std::size_t i) const { return c_.at(i); }
    Rat& operator[](std::size_t i) { return c_.at(i); }

    friend Vec operator+(const Vec& a, const Vec& b) {
        check(a, b);
        Vec r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Vec operator-(const Vec& a, const Vec& b) {
        check(a, b);
        Vec r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend Vec operator*(const Rat& s, const Vec& a) {
        Vec r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.c_[i] = s * a.c_[i];
        return r;
    }

    friend bool operator==(const Vec& a, const Vec& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

    /// Lexicographic coordinate order (deterministic tie-breaking).
    friend bool lex_less(const Vec& a, const Vec& b) {
        check(a, b);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (a.c_[i] < b.c_[i]) return true;
            if (a.c_[i] > b.c_[i]) return false;
        }
        return false;
    }

    friend Rat dot(const Vec& a, const Vec& b) {
        check(a, b);
        Rat s;
        for (std::size_t i = 0; i < a.dim(); ++i) s += a.c_[i] * b.c_[i];
        return s;
    }
    friend Rat sq_norm(const Vec& a) { return dot(a, a); }
    friend Rat sq_dist(const Vec& a, const Vec& b) { return sq_norm(a - b); }

    /// Comma-separated exact rationals.
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (i) s += ",";
            s += c_[i].to_string();
        }
        return s;
    }
    static Vec parse(const std::string& s, std::size_t expect_dim = 0);

private:
    static void check(const Vec& a, const Vec& b) {
        if (a.dim() != b.dim()) throw std::invalid_argument("Vec: dimension mismatch");
    }
    std::vector<Rat> c_;
};

} // namespace cubegeo
