#ifndef DWORK_ERRORS_HPP
#define DWORK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dwork {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// psi not definable over F_q, or psi^5 = 1 there (bad reduction).
struct BadReduction : Error {
    using Error::Error;
};

// an exact division that must succeed did not; signals a counting bug upstream.
struct IntegralityError : Error {
    using Error::Error;
};

// enumeration would exceed the configured inner-step budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

// reconstructed polynomial violates |root| = q^{w/2}.
struct WeilBoundViolation : Error {
    using Error::Error;
};

// f_psi mod p is not squarefree (or p divides lead/denominator).
struct RamifiedPrime : Error {
    using Error::Error;
};

// a merged branch multiplicity shares a factor with 5.
struct RamificationError : Error {
    using Error::Error;
};

// hyperelliptic right-hand side not squarefree mod p.
struct SingularModel : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace dwork

#endif
