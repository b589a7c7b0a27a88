#include "cubegeo/rat.hpp"

#include <cctype>
#include <ostream>

#include <mpfr.h>

namespace cubegeo {

std::string Rat::to_string() const {
    if (den() == 1) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

namespace {

[[noreturn]] void parse_fail(std::string_view s, std::size_t pos, const char* why) {
    throw std::invalid_argument("bad rational \"" + std::string(s) + "\" at position " +
                                std::to_string(pos) + ": " + why);
}

std::size_t scan_digits(std::string_view s, std::size_t pos) {
    std::size_t i = pos;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == pos) parse_fail(s, pos, "expected digits");
    return i;
}

} // namespace

Rat Rat::parse(std::string_view s) {
    if (s.empty()) parse_fail(s, 0, "empty string");
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') { neg = (s[i] == '-'); ++i; }
    std::size_t j = scan_digits(s, i);
    std::string int_part(s.substr(i, j - i));
    i = j;
    if (i < s.size() && s[i] == '/') {
        ++i;
        if (i < s.size() && s[i] == '+') ++i;
        j = scan_digits(s, i);
        std::string den_part(s.substr(i, j - i));
        if (j != s.size()) parse_fail(s, j, "trailing characters");
        mpz_class num(int_part, 10), den(den_part, 10);
        if (den == 0) parse_fail(s, i, "zero denominator");
        if (neg) num = -num;
        return Rat(num, den);
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        j = scan_digits(s, i);
        std::string frac_part(s.substr(i, j - i));
        if (j != s.size()) parse_fail(s, j, "trailing characters");
        mpz_class num(int_part + frac_part, 10);
        mpz_class den(1);
        for (std::size_t k = 0; k < frac_part.size(); ++k) den *= 10;
        if (neg) num = -num;
        return Rat(num, den);
    }
    if (i != s.size()) parse_fail(s, i, "trailing characters");
    mpz_class num(int_part, 10);
    if (neg) num = -num;
    return Rat(num, mpz_class(1));
}

double Rat::to_double() const {
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_set_q(t, q_.get_mpq_t(), MPFR_RNDN);
    double d = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return d;
}

Rat Rat::from_double_exact(double x) {
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return Rat(q);
}

Rat Rat::snap_to_pow2(unsigned k) const {
    // round(x * 2^k) / 2^k, half away from zero
    mpz_class scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), k);
    mpz_class n = num() * scale;
    mpz_class d = den();
    mpz_class twice_d = 2 * d;
    mpz_class rounded;
    if (sgn(n) >= 0) {
        mpz_class t = 2 * n + d;
        mpz_fdiv_q(rounded.get_mpz_t(), t.get_mpz_t(), twice_d.get_mpz_t());
    } else {
        mpz_class t = 2 * n - d;
        mpz_cdiv_q(rounded.get_mpz_t(), t.get_mpz_t(), twice_d.get_mpz_t());
    }
    return Rat(rounded, scale);
}

} // namespace cubegeo
