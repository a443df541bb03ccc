#pragma once

#include <utility>
#include <vector>

#include <lie/linalg.hpp>
#include <lie/rat.hpp>

namespace lie {

// Univariate polynomials over Q, stored as coefficient vectors indexed by
// power (coeff[k] is the coefficient of T^k). The zero polynomial is the
// empty vector; nonzero polynomials carry no trailing zero coefficients.
using UPoly = std::vector<Rat>;

UPoly upoly_trim(UPoly p);
int upoly_deg(const UPoly& p);  // -1 for the zero polynomial

UPoly upoly_add(const UPoly& a, const UPoly& b);
UPoly upoly_sub(const UPoly& a, const UPoly& b);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
UPoly upoly_scale(const UPoly& a, const Rat& c);
UPoly upoly_monic(const UPoly& a);

// quotient/remainder with deg(rem) < deg(b); b must be nonzero
std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b);

UPoly upoly_gcd(UPoly a, UPoly b);  // monic, gcd(0,0) = 0
UPoly upoly_derivative(const UPoly& p);
Rat upoly_eval(const UPoly& p, const Rat& x);

bool upoly_is_squarefree(const UPoly& p);
// true when p = c*T^k with k >= 1
bool upoly_is_power_of_t(const UPoly& p);

std::string upoly_str(const UPoly& p);

// Roots over Q with multiplicities, plus the factor left after dividing all
// of them out. A constant leftover means the polynomial splits over Q.
struct RootReport {
    std::vector<std::pair<Rat, int>> roots;
    UPoly leftover;
};
RootReport rational_roots(const UPoly& p);

// Monic minimal polynomial of a square matrix, computed as the lcm of the
// Krylov annihilators of the standard basis vectors.
UPoly minimal_polynomial(const RatMat& a);

}  // namespace lie
