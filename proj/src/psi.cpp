#include "cubegeo/psi.hpp"

#include <stdexcept>

#include "cubegeo/predicates.hpp"
#include "cubegeo/source_images.hpp"

namespace cubegeo {

std::string psi_name(PsiName p) {
    switch (p) {
        case PsiName::psi1: return "psi1";
        case PsiName::psi2: return "psi2";
        case PsiName::psi1L: return "psi1L";
        case PsiName::psi2L: return "psi2L";
        case PsiName::psi3L: return "psi3L";
        case PsiName::psi4L: return "psi4L";
        case PsiName::psi5L: return "psi5L";
        case PsiName::psi22: return "psi22";
        case PsiName::psi32: return "psi32";
    }
    return "?";
}

Rat psi1(const Rat& a, const Rat& c) {
    return Rat(8) * (-a + c + a * a + Rat(4) * a * c + c * c - Rat(2) * a * a * c -
                     Rat(2) * c * c * c);
}

Rat psi2(const Rat& a, const Rat& c) {
    return Rat(4) * (Rat(-2) * a + Rat(8) * c + Rat(3) * a * a - Rat(8) * a * c -
                     Rat(5) * c * c - a * a * a + Rat(3) * a * a * c - a * c * c +
                     Rat(3) * c * c * c);
}

Rat psi1L(const Rat& a, const Rat& c) { return psi1(Rat(1) - a, c); }
Rat psi2L(const Rat& a, const Rat& c) { return psi2(Rat(1) - a, c); }

Rat psi3L(const Rat& a, const Rat& c) {
    return Rat(16) * c * (Rat(-1) + Rat(2) * a + a * a + c * c);
}

Rat psi4L(const Rat& a, const Rat& c) {
    return Rat(4) * (a - a * a * a - Rat(3) * c - Rat(2) * a * c + a * a * c -
                     Rat(2) * c * c - a * c * c + c * c * c);
}

Rat psi5L(const Rat& a, const Rat& c) {
    return Rat(8) * (a - a * a - c - Rat(4) * a * c - Rat(2) * a * a * c +
                     Rat(3) * c * c - Rat(2) * c * c * c);
}

Rat psi22(const Rat& a, const Rat& b, const Rat& c) {
    return Rat(3) - Rat(3) * a - Rat(3) * b - Rat(17) * c + Rat(3) * a * b + Rat(8) * a * c +
           Rat(8) * b * c + c * c - Rat(4) * a * b * c - Rat(2) * a * c * c -
           Rat(2) * b * c * c + Rat(4) * c * c * c;
}

namespace {

Vec chart3(const SourceImage& s) {
    return Vec{s.point[0], s.point[1], s.point[2]};
}

Vec source3(const DeltaPoint& p, const std::string& label) {
    for (const SourceImage& s : source_images_4cube(p))
        if (s.label == label) return chart3(s);
    throw std::logic_error("source label not found: " + label);
}

} // namespace

Rat psi32(const Rat& a, const Rat& b, const Rat& c) {
    DeltaPoint p = make_delta(a, b, c);
    return outsphere(source3(p, "U"), source3(p, "B"), source3(p, "BD"), source3(p, "RD"),
                     source3(p, "UR"));
}

Rat eval_psi(PsiName name, const std::vector<Rat>& args) {
    switch (name) {
        case PsiName::psi1:
        case PsiName::psi2:
        case PsiName::psi1L:
        case PsiName::psi2L:
        case PsiName::psi3L:
        case PsiName::psi4L:
        case PsiName::psi5L:
            if (args.size() != 2)
                throw std::invalid_argument("eval_psi: " + psi_name(name) + " takes (a,c)");
            break;
        case PsiName::psi22:
        case PsiName::psi32:
            if (args.size() != 3)
                throw std::invalid_argument("eval_psi: " + psi_name(name) + " takes (a,b,c)");
            break;
    }
    switch (name) {
        case PsiName::psi1: return psi1(args[0], args[1]);
        case PsiName::psi2: return psi2(args[0], args[1]);
        case PsiName::psi1L: return psi1L(args[0], args[1]);
        case PsiName::psi2L: return psi2L(args[0], args[1]);
        case PsiName::psi3L: return psi3L(args[0], args[1]);
        case PsiName::psi4L: return psi4L(args[0], args[1]);
        case PsiName::psi5L: return psi5L(args[0], args[1]);
        case PsiName::psi22: return psi22(args[0], args[1], args[2]);
        case PsiName::psi32: return psi32(args[0], args[1], args[2]);
    }
    throw std::logic_error("eval_psi: unreachable");
}

Rat psi22_determinant_form(const Rat& a, const Rat& b, const Rat& c) {
    if (a == b) throw std::invalid_argument("psi22_determinant_form: a == b");
    DeltaPoint p = make_delta(a, b, c);
    Rat d = outsphere(source3(p, "U"), source3(p, "B"), source3(p, "BD"), source3(p, "RD"),
                      source3(p, "R"));
    return d / (Rat(4) * (a - b));
}

std::pair<Rat, Rat> psi22_decomposition_sides(const Rat& a, const Rat& b, const Rat& c) {
    if (a == b || c == Rat(1, 2))
        throw std::invalid_argument("psi22_decomposition_sides: excluded denominators");
    // the decomposition holds with the unscaled band polynomial psi1/8
    Rat p1a = psi1(a, c) / Rat(8), p1b = psi1(b, c) / Rat(8);
    Rat den = (a - b) * (Rat(1) - Rat(2) * c);
    Rat rhs = -(Rat(3) - Rat(3) * b - Rat(8) * c + Rat(4) * b * c + Rat(2) * c * c) / den * p1a +
              (Rat(3) - Rat(3) * a - Rat(8) * c + Rat(4) * a * c + Rat(2) * c * c) / den * p1b;
    return {psi22(a, b, c), rhs};
}

std::pair<Rat, Rat> psi32_combination_sides(const Rat& a, const Rat& b, const Rat& c) {
    Rat den = Rat(3) - Rat(3) * a - Rat(8) * c + Rat(4) * a * c + Rat(2) * c * c;
    if (den.is_zero()) throw std::invalid_argument("psi32_combination_sides: singular");
    Rat p22 = psi22(a, b, c);
    Rat t1 = Rat(4) * (a - b) *
             (Rat(4) - Rat(4) * a - Rat(6) * c + a * a + Rat(5) * c * c) / den * p22;
    Rat bell = Rat(5) * c * (Rat(1) - c) * (Rat(3) - Rat(2) * c) * (Rat(1) + Rat(2) * c);
    Rat t2 = (Rat(2) - a + c) * (bell + (Rat(3) - Rat(4) * c) * p22) / (den * den) * psi2(a, c);
    return {psi32(a, b, c), t1 + t2};
}

} // namespace cubegeo
