#ifndef DWORK_POLYMOD_HPP
#define DWORK_POLYMOD_HPP

// Dense univariate polynomial arithmetic over F_p for word-sized primes
// (p^2 must fit in uint64). Coefficients low-to-high.

#include <cstdint>
#include <vector>

namespace dwork::polymod {

using Poly = std::vector<uint64_t>;

inline uint64_t addm(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline uint64_t subm(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
inline uint64_t mulm(uint64_t a, uint64_t b, uint64_t p) { return a * b % p; }

inline uint64_t powm(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

inline uint64_t invm(uint64_t a, uint64_t p) { return powm(a, p - 2, p); }

inline int degree(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i]) return i;
    return -1;
}

inline void trim(Poly& f) { f.resize(static_cast<size_t>(degree(f) + 1)); }

inline Poly mul(const Poly& a, const Poly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < b.size(); ++j)
                if (b[j]) r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
    return r;
}

// remainder of a modulo b (b nonzero)
inline Poly rem(Poly a, const Poly& b, uint64_t p) {
    int db = degree(b);
    uint64_t leadinv = invm(b[db], p);
    for (int da = degree(a); da >= db; da = degree(a)) {
        uint64_t c = mulm(a[da], leadinv, p);
        for (int j = 0; j <= db; ++j)
            a[da - db + j] = subm(a[da - db + j], mulm(c, b[j], p), p);
    }
    trim(a);
    return a;
}

inline Poly quot(Poly a, const Poly& b, uint64_t p) {
    int db = degree(b);
    uint64_t leadinv = invm(b[db], p);
    Poly q(static_cast<size_t>(std::max(0, degree(a) - db + 1)), 0);
    for (int da = degree(a); da >= db; da = degree(a)) {
        uint64_t c = mulm(a[da], leadinv, p);
        q[da - db] = c;
        for (int j = 0; j <= db; ++j)
            a[da - db + j] = subm(a[da - db + j], mulm(c, b[j], p), p);
    }
    return q;
}

inline Poly gcd(Poly a, Poly b, uint64_t p) {
    trim(a);
    trim(b);
    while (degree(b) >= 0) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    int d = degree(a);
    if (d >= 0) {
        uint64_t c = invm(a[d], p);
        for (auto& x : a) x = mulm(x, c, p);
    }
    return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, uint64_t p) {
    return rem(mul(a, b, p), m, p);
}

// base^e mod (m, p)
inline Poly powmod(Poly base, uint64_t e, const Poly& m, uint64_t p) {
    Poly r{1};
    base = rem(std::move(base), m, p);
    while (e) {
        if (e & 1) r = mulmod(r, base, m, p);
        base = mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

inline Poly derivative(const Poly& f, uint64_t p) {
    Poly d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(mulm(f[i], i % p, p));
    trim(d);
    return d;
}

inline Poly make_monic(Poly f, uint64_t p) {
    int d = degree(f);
    if (d < 0) return f;
    uint64_t c = invm(f[d], p);
    for (auto& x : f) x = mulm(x, c, p);
    trim(f);
    return f;
}

// degrees of the distinct-degree factorization of squarefree monic f:
// result[d] = number of irreducible factors of degree d+1
std::vector<int> distinct_degree_pattern(Poly f, uint64_t p);

// all roots of f in F_p (f need not be squarefree); Cantor-Zassenhaus split
// on the product of linear factors, driven by the given rng state
std::vector<uint64_t> roots(const Poly& f, uint64_t p, uint64_t& rng_state);

uint64_t splitmix64(uint64_t& state);

}  // namespace dwork::polymod

#endif
