#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cubegeo {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. All arithmetic and comparisons are exact; doubles appear
/// only at output boundaries (to_double rounds to nearest, ties to even).
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(static_cast<long>(n)) {}
    Rat(int n) : q_(n) {}
    Rat(long num, long den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rat(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    int sign() const { return mpq_sgn(q_.get_mpq_t()); }
    bool is_zero() const { return sign() == 0; }

    Rat operator-() const { Rat r; r.q_ = -q_; return r; }
    friend Rat operator+(const Rat& a, const Rat& b) { Rat r; r.q_ = a.q_ + b.q_; return r; }
    friend Rat operator-(const Rat& a, const Rat& b) { Rat r; r.q_ = a.q_ - b.q_; return r; }
    friend Rat operator*(const Rat& a, const Rat& b) { Rat r; r.q_ = a.q_ * b.q_; return r; }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        Rat r; r.q_ = a.q_ / b.q_; return r;
    }
    Rat& operator+=(const Rat& b) { q_ += b.q_; return *this; }
    Rat& operator-=(const Rat& b) { q_ -= b.q_; return *this; }
    Rat& operator*=(const Rat& b) { q_ *= b.q_; return *this; }
    Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    Rat abs() const { Rat r; r.q_ = ::abs(q_); return r; }

    /// Serialize as "num/den", "num" when den == 1.
    std::string to_string() const;

    /// Parse "num/den", plain integers, or decimal literals ("0.9" -> 9/10).
    /// Throws std::invalid_argument with the offending position on bad input.
    static Rat parse(std::string_view s);

    /// Nearest 64-bit double (round to nearest, ties to even).
    double to_double() const;

    /// Exact value of a double (every finite double is rational).
    static Rat from_double_exact(double x);

    /// Nearest rational with denominator dividing `den_pow2` = 2^k
    /// (round half away from zero). Used to cap bit growth in orbit tails.
    Rat snap_to_pow2(unsigned k) const;

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat abs(const Rat& r) { return r.abs(); }

} // namespace cubegeo
