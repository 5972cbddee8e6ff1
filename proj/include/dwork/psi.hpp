#ifndef DWORK_PSI_HPP
#define DWORK_PSI_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "dwork/errors.hpp"

namespace dwork {

// The family parameter psi = num/den in lowest terms, den > 0.
// psi = 1 (the singular fiber, psi^5 = 1 over Q) is rejected.
struct RationalPsi {
    long long num = 0;
    long long den = 1;

    RationalPsi() = default;
    RationalPsi(long long n, long long d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw ConfigError("psi: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == den) throw ConfigError("psi = 1 is excluded (psi^5 = 1)");
    }

    bool is_zero() const { return num == 0; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const RationalPsi& a, const RationalPsi& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const RationalPsi& a, const RationalPsi& b) {
        return a.num * b.den < b.num * a.den;
    }
};

// Parses "u", "-u" or "u/v".
RationalPsi parse_psi(const std::string& s);

}  // namespace dwork

#endif
