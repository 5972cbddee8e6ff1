#ifndef DWORK_COUNTS_HPP
#define DWORK_COUNTS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dwork/ffield.hpp"

namespace dwork::counts {

using ff::FieldCtx;
using ff::FqElem;

enum class Method { Naive, Accelerated };

inline constexpr uint64_t kDefaultBudget = 2'000'000'000ull;

struct CountRecord {
    RationalPsi psi;
    uint64_t q = 0;
    std::string variety;  // f-roots, U, V, Y, X-proj, A-curve, B-curve
    long long count = 0;
    Method method = Method::Accelerated;
};

// psi reduced into F_q; BadReduction if the denominator vanishes
FqElem reduce_psi(const FieldCtx& F, const RationalPsi& psi);
// BadReduction unless psi^5 != 1 in F_q
void require_good_reduction(const FieldCtx& F, FqElem psi);

// n(f_psi, q) = #{x in F_q : 4x^5 - 5 psi x^4 + 1 = 0}
long long count_quintic_roots(const FieldCtx& F, FqElem psi);

// #U_psi(F_q), U: x1+x2+x3+x4 + 1/(x1x2x3x4) - 5psi = 0 on (F_q*)^4.
// Naive walks all (q-1)^4 tuples; Accelerated clears denominators to
// A x4^2 + A c x4 + 1 = 0 per (x1,x2,x3) and adds quadratic root counts.
long long count_U(const FieldCtx& F, FqElem psi, Method method,
                  uint64_t budget = kDefaultBudget);

// #V_psi(F_q), the C2-fixed locus x1=x3, x2=x4
long long count_V(const FieldCtx& F, FqElem psi);

// #Y_psi(F_q) = #U + correction, both correction terms exact integers
long long count_Y(const FieldCtx& F, FqElem psi, uint64_t budget = kDefaultBudget);

// #X_psi(P^4)(F_q) = (N_affine - 1)/(q - 1).
// Accelerated: root-count table T[A][B] = #{x : x^5 + Ax + B = 0} built in
// O(q^2), then q^4 table lookups over (x0..x3). Naive: straight q^5 walk.
long long count_X_projective(const FieldCtx& F, FqElem psi,
                             Method method = Method::Accelerated,
                             uint64_t budget = kDefaultBudget, int jobs = 1);

// y^5 = prod (x - b)^m with merged branch points; degree = sum of multiplicities
struct SuperellipticSpec {
    std::vector<std::pair<FqElem, int>> branches;
    int degree = 0;

    // A: x^2 (1-x)^3 (x-psi^5)^2,  B: x^2 (1-x)^4 (x-psi^5); merges equal
    // x-coordinates (psi = 0 in F_q) before the gcd checks
    static SuperellipticSpec curve(const FieldCtx& F, FqElem psi, char which);
};

// smooth projective point count: fifth-power fibers + one place per rational
// branch point + one place at infinity (gcd(5, deg) = 1)
long long count_superelliptic(const FieldCtx& F, const SuperellipticSpec& spec);

// degree of the curve L-polynomial: 4 * (#branch points incl. infinity - 2)
int lpoly_degree(const SuperellipticSpec& spec);

// s_r(curve) = q + 1 - #curve(F_q) for the given field
long long curve_trace(const FieldCtx& F, FqElem psi, char which);

// r-th power sum of the four mirror-quartic Frobenius eigenvalues, via the
// X_psi zeta decomposition over F_{q^r}, q = p^k. The curve factors enter
// with multiplicities 80/deg(L_A) and 120/deg(L_B): (10,15) generically,
// (20,30) when branch merging halves the L-degrees.
long long h3_power_sum(const RationalPsi& psi, uint32_t p, uint32_t k, int r,
                       uint64_t budget = kDefaultBudget, int jobs = 1);

}  // namespace dwork::counts

#endif
