#ifndef DWORK_WEIL_HPP
#define DWORK_WEIL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dwork/counts.hpp"

namespace dwork::weil {

// The four possible reductions of a mirror Euler factor mod 2; Forbidden
// (1 + t^2 + t^4) must never arise from an actual mirror quartic.
enum class EulerClassMod2 { OneT4, T3T4, Cyclotomic5, Forbidden };

const char* class_name(EulerClassMod2 c);

EulerClassMod2 class_from_parities(int a_mod2, int b_mod2);

// P(t) = 1 - a t + b t^2 - q^3 a t^3 + q^6 t^4
struct WeilQuartic {
    uint64_t q = 0;
    long long a = 0;
    long long b = 0;

    std::array<long long, 5> coeffs() const {
        long long q3 = static_cast<long long>(q) * q * q;
        return {1, -a, b, -q3 * a, q3 * q3};
    }
};

EulerClassMod2 mod2_class(const WeilQuartic& w);

// a = p_1, b = (p_1^2 - p_2)/2 from the zeta decomposition over F_q, F_{q^2};
// asserts integrality, |a| <= 4 q^{3/2}, and reciprocal roots of modulus
// q^{3/2} to 1e-6 relative tolerance.
WeilQuartic reconstruct_mirror_quartic(const RationalPsi& psi, uint32_t p,
                                       uint32_t k = 1,
                                       uint64_t budget = counts::kDefaultBudget,
                                       int jobs = 1);

// Genus-g curve L-polynomial from power sums s_1..s_g (Newton) plus the
// weight-1 functional equation c_{2g-i} = q^{g-i} c_i; coefficients c_0..c_2g.
std::vector<long long> curve_l_polynomial(const RationalPsi& psi, uint32_t p,
                                          char which,
                                          uint64_t budget = counts::kDefaultBudget);

// exact integer square root of a degree-2g polynomial with constant term 1;
// returns true and fills half (degree g) when coeffs = half^2
bool perfect_square_poly(const std::vector<long long>& coeffs,
                         std::vector<long long>& half);

// All reciprocal roots of the integer polynomial (coeffs low-to-high, c_0 = 1)
// must have |alpha| = target within rel_tol. Repeated roots are deflated away
// exactly (rational gcd with the derivative) before the numeric check.
// Throws WeilBoundViolation.
void verify_reciprocal_roots(const std::vector<long long>& coeffs, double target,
                             double rel_tol = 1e-6);

}  // namespace dwork::weil

#endif
