#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubegeo/symmetry.hpp"

namespace cubegeo {

/// The classification polynomials. Planar ones take (a,c); psi22/psi32 take
/// (a,b,c). psi22 is the expanded cubic (defined at a=b); psi32 is the
/// 5-point outsphere determinant on source-image coordinates.
enum class PsiName { psi1, psi2, psi1L, psi2L, psi3L, psi4L, psi5L, psi22, psi32 };

std::string psi_name(PsiName p);

Rat eval_psi(PsiName name, const std::vector<Rat>& args);

Rat psi1(const Rat& a, const Rat& c);
Rat psi2(const Rat& a, const Rat& c);
Rat psi1L(const Rat& a, const Rat& c);
Rat psi2L(const Rat& a, const Rat& c);
Rat psi3L(const Rat& a, const Rat& c);
Rat psi4L(const Rat& a, const Rat& c);
Rat psi5L(const Rat& a, const Rat& c);
Rat psi22(const Rat& a, const Rat& b, const Rat& c);
Rat psi32(const Rat& a, const Rat& b, const Rat& c);

/// Test oracles. psi22_determinant_form = outsphere(pU,pB,pBD,pRD,pR)/(4(a-b))
/// (undefined at a=b); the decomposition returns both sides of the identity
/// that rewrites psi22 in terms of psi1/8 values (undefined at a=b, c=1/2).
Rat psi22_determinant_form(const Rat& a, const Rat& b, const Rat& c);
std::pair<Rat, Rat> psi22_decomposition_sides(const Rat& a, const Rat& b, const Rat& c);
/// Both sides of the psi32 combination identity (undefined where
/// 3-3a-8c+4ac+2c^2 vanishes).
std::pair<Rat, Rat> psi32_combination_sides(const Rat& a, const Rat& b, const Rat& c);

} // namespace cubegeo
