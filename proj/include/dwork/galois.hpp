#ifndef DWORK_GALOIS_HPP
#define DWORK_GALOIS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dwork/sp4s6.hpp"
#include "dwork/weil.hpp"

namespace dwork::galois {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::rational<BigInt>;

bool rational_is_square(const BigRat& r);

// D_psi = 2^8 5^5 (1 - psi^5), cross-checked against Res(f, f')/lc(f)
struct Discriminant {
    BigRat value;
    bool is_square;
};
Discriminant discriminant(const RationalPsi& psi);

enum class GroupTag { C5, D10, F20, A5, S5, Reducible, Unknown };
const char* group_name(GroupTag t);

struct IrredCertificate {
    enum class Kind {
        IrreducibleModP,         // f mod p1 irreducible
        PatternIncompatibility,  // no proper factor degree compatible with all patterns
        RationalRoot,            // explicit root (reducible)
        QuadraticFactor,         // explicit quadratic factor (reducible)
        Inconclusive
    };
    Kind kind = Kind::Inconclusive;
    long long p1 = 0;
    std::vector<long long> primes_used;  // for PatternIncompatibility
    BigRat root;                         // for RationalRoot
    std::vector<BigInt> factor;          // for QuadraticFactor, low-to-high
};

struct IrredResult {
    bool irreducible = false;
    bool known = false;  // false => Inconclusive, never a wrong answer
    IrredCertificate cert;
};
IrredResult is_irreducible(const RationalPsi& psi, long long prime_budget = 200);

// the sextic resolvent of g_psi = x^5 - 5 psi x + 4 (denominators cleared by
// z = den * x); a rational root detects Gal inside F20 for irreducible f_psi
struct ResolventResult {
    std::vector<BigInt> sextic;  // monic in z, low-to-high
    bool has_root = false;
    BigRat root;          // root of the original x-sextic
    bool root_is_10psi = false;
};
ResolventResult dummit_resolvent(const RationalPsi& psi);

// degree pattern of f_psi mod p; throws RamifiedPrime unless squarefree of degree 5
sp4s6::CycleType frobenius_cycle_type(const RationalPsi& psi, long long p);

bool is_good_prime(const RationalPsi& psi, long long p);

struct GaloisVerdict {
    GroupTag tag = GroupTag::Unknown;
    bool disc_square = false;
    bool has_resolvent_root = false;
    IrredResult irred;
    std::map<std::vector<int>, long long> histogram;
    long long primes_sampled = 0;
    std::string note;  // witnesses, Monte-Carlo caveats
};

GaloisVerdict classify(const RationalPsi& psi, long long prime_budget = 200);

// theoretical cycle-type support of each verdict group inside S5
bool cycle_type_in_support(GroupTag tag, const std::vector<int>& parts);

struct ReciprocityRow {
    long long p = 0;
    std::vector<int> cycle;
    long long n_roots = 0;
    bool depth2 = false;
    long long a = 0, b = 0;
    weil::EulerClassMod2 class_from_cycle;
    weil::EulerClassMod2 class_from_quartic;  // valid when depth2
    bool congruence_ok = false;               // a = n + 1 (mod 2)
    bool parity_ok = false;                   // a even => b even
    bool dictionary_ok = false;               // classes agree
};

struct ReciprocityReport {
    RationalPsi psi;
    std::vector<ReciprocityRow> rows;
    long long skipped_ramified = 0;
    long long forbidden_count = 0;
    long long failures = 0;
};

// per-prime scan; depth 1 checks the parity component only, depth 2
// reconstructs the full quartic where q^4-scale work fits the budget
ReciprocityReport reciprocity_scan(const RationalPsi& psi, long long prime_max,
                                   int depth, uint64_t budget = counts::kDefaultBudget,
                                   int jobs = 1);

}  // namespace dwork::galois

#endif
