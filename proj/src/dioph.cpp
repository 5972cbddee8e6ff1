#include "dwork/dioph.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "dwork/polymod.hpp"

namespace dwork::dioph {

namespace pm = polymod;

HyperellipticModel HyperellipticModel::curve_c(long long p) {
    return {p, {-1, 0, 0, 0, 0, 11, 0, 0, 0, 0, 1}};
}

HyperellipticModel HyperellipticModel::curve_d10(long long p) {
    return {p, {5, 0, 0, 0, 0, -5}};
}

long long count_hyperelliptic(const HyperellipticModel& model) {
    const long long p = model.p;
    if (p < 3) throw ConfigError("odd prime required");
    pm::Poly f;
    for (long long c : model.f) f.push_back(static_cast<uint64_t>(((c % p) + p) % p));
    pm::trim(f);
    if (pm::degree(f) != static_cast<int>(model.f.size()) - 1)
        throw SingularModel("leading coefficient vanishes mod p");
    if (pm::degree(pm::gcd(f, pm::derivative(f, p), p)) != 0)
        throw SingularModel("right-hand side not squarefree mod p");
    long long cnt = 0;
    for (long long x = 0; x < p; ++x) {
        uint64_t v = 0;
        for (auto it = f.rbegin(); it != f.rend(); ++it)
            v = (v * static_cast<uint64_t>(x) + *it) % p;
        if (v == 0) {
            cnt += 1;
        } else {
            cnt += 1 + (pm::powm(v, (p - 1) / 2, p) == 1 ? 1 : -1);
        }
    }
    size_t deg = model.f.size() - 1;
    if (deg % 2 == 1) {
        cnt += 1;
    } else {
        uint64_t lead = f[deg];
        if (pm::powm(lead, (p - 1) / 2, p) == 1) cnt += 2;
    }
    return cnt;
}

long long epsilon_power_sum(int r) {
    // p_r = e1 p_{r-1} - e2 p_{r-2}, e1 = e2 = -1; p_0 = 2, p_1 = -1
    long long prev = 2, cur = -1;
    if (r == 0) return prev;
    for (int i = 1; i < r; ++i) {
        long long next = -cur + prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

bool quintic_shift_factors(long long c, long long d) {
    // (X^5 - eps_+^5)(X^5 - eps_-^5) = X^10 - tr(eps^5) X^5 + N(eps)^5
    QuadRingElem eps{0, 1};
    QuadRingElem e5 = eps * eps * eps * eps * eps;
    long long tr = e5.trace();
    if (tr != -epsilon_power_sum(5)) throw Error("power-sum routes disagree");
    long long nrm5 = 1;
    for (int i = 0; i < 5; ++i) nrm5 *= eps.norm();
    return c == -tr && d == nrm5;
}

bool factorization_identity() { return quintic_shift_factors(11, -1); }

long long torsion_set_cardinality(TorsionCurve curve) {
    if (curve == TorsionCurve::C) {
        // X^10 + 11 X^5 - 1 = (X^5 - eps_+^5)(X^5 - eps_-^5): the two quintic
        // factors are coprime iff tr^2 - 4 N^5 != 0, and each X^5 = c != 0
        // has five distinct roots; plus infinity_pm (even degree, lead 1)
        if (!factorization_identity()) throw Error("factorization identity failed");
        QuadRingElem eps{0, 1};
        QuadRingElem e5 = eps * eps * eps * eps * eps;
        long long tr = e5.trace();
        long long disc = tr * tr - 4 * (-1);  // N(eps)^5 = -1
        long long roots = disc != 0 ? 10 : 5;
        long long norm_is_zero = 0;  // eps units, fifth powers nonzero
        return roots + norm_is_zero + 2;
    }
    // Y^2 = 5(1 - X^5): X^5 - 1 is squarefree (gcd with 5X^4), five (x, 0);
    // f(0) = 5 != 0 gives (0, +-sqrt5); one place at infinity (odd degree)
    long long weierstrass = 5;
    long long vertical = 2;
    return weierstrass + vertical + 1;
}

namespace {

bool is_prime_u64_small(uint64_t n) {
    // deterministic Miller-Rabin, sound below 3.2e9
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        uint64_t x = pm::powm(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = pm::mulm(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

struct FP {
    uint64_t p;
    uint64_t fifth_exp;  // inverse of 5 mod p-1

    uint64_t add(uint64_t a, uint64_t b) const { return pm::addm(a, b, p); }
    uint64_t sub(uint64_t a, uint64_t b) const { return pm::subm(a, b, p); }
    uint64_t mul(uint64_t a, uint64_t b) const { return pm::mulm(a, b, p); }
    uint64_t pow(uint64_t a, uint64_t e) const { return pm::powm(a, e, p); }
    uint64_t inv(uint64_t a) const { return pm::invm(a, p); }
    uint64_t neg(uint64_t a) const { return a ? p - a : 0; }
    uint64_t fifth_root(uint64_t a) const { return pow(a, fifth_exp); }
    uint64_t of(long long v) const {
        long long r = v % static_cast<long long>(p);
        return static_cast<uint64_t>(r < 0 ? r + static_cast<long long>(p) : r);
    }

    bool on_curve(uint64_t X, uint64_t Y) const {
        uint64_t x5 = pow(X, 5);
        uint64_t rhs = sub(add(mul(x5, x5), mul(of(11), x5)), 1);
        return mul(Y, Y) == rhs;
    }
};

uint64_t egcd_inv(uint64_t a, uint64_t m) {
    // inverse of a mod m for non-prime m (used for 5^{-1} mod p-1)
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(m), newr = static_cast<long long>(a % m);
    while (newr != 0) {
        long long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw ConfigError("not invertible");
    return static_cast<uint64_t>(t < 0 ? t + static_cast<long long>(m) : t);
}

}  // namespace

IdentityReport substitution_identity_check(IdentityKind kind, int trials, uint64_t seed,
                                           uint64_t prime, uint64_t y_offset) {
    if (trials < 1) throw ConfigError("trials must be >= 1");
    if (!is_prime_u64_small(prime) || prime % 5 != 4 || prime >= (1ull << 30))
        throw ConfigError("identity prime must be prime, = 4 mod 5, below 2^30");
    FP F{prime, egcd_inv(5, prime - 1)};
    IdentityReport rep;
    rep.kind = kind == IdentityKind::WeberD10 ? "WEBER_D10" : "F20_RESOLVENT";
    rep.trials = trials;
    rep.seed = seed;
    rep.prime = prime;
    for (int t = 0; t < trials; ++t) {
        uint64_t rng = seed + 0x1000000007ull * static_cast<uint64_t>(t + 1);
        bool pass = false, done = false;
        while (!done) {
            if (kind == IdentityKind::WeberD10) {
                uint64_t lam = pm::splitmix64(rng) % prime;
                uint64_t Q = F.add(F.sub(F.mul(lam, lam), F.mul(6, lam)), 25);
                if (lam == 0 || lam == 1 || Q == 0) {
                    ++rep.skips;
                    continue;
                }
                uint64_t l1 = F.sub(lam, 1);
                uint64_t l1_4 = F.pow(l1, 4);
                uint64_t mu5 = F.mul(F.mul(4, F.mul(l1_4, Q)),
                                     F.inv(F.mul(F.pow(5, 5), lam)));
                if (mu5 == 0) {
                    ++rep.skips;
                    continue;
                }
                uint64_t mu = F.fifth_root(mu5);
                // the curve coordinates carried by the parametrization
                // (first coordinate linear in mu, second rational in lambda)
                uint64_t X = F.mul(F.mul(5, mu), F.inv(F.mul(2, l1)));
                uint64_t l1_5 = F.mul(l1_4, l1);
                uint64_t Yn = F.add(
                    F.mul(F.neg(F.mul(8, F.sub(lam, 3))), l1_5),
                    F.mul(F.mul(F.pow(5, 5), F.sub(F.mul(2, lam), 1)), mu5));
                uint64_t Y = F.mul(Yn, F.inv(F.mul(32, l1_5)));
                Y = F.add(Y, F.of(static_cast<long long>(y_offset)));
                pass = F.on_curve(X, Y);
                done = true;
            } else {
                uint64_t ps = pm::splitmix64(rng) % prime;
                if (ps == 0) {
                    ++rep.skips;
                    continue;
                }
                uint64_t ps5 = F.pow(ps, 5);
                pm::Poly sextic{
                    F.mul(F.mul(4000000 % prime, ps), F.add(3, ps5)),
                    F.neg(F.mul(800000, F.add(1, F.mul(2, ps5)))),
                    F.mul(250000, F.pow(ps, 4)),
                    F.neg(F.mul(20000, F.pow(ps, 3))),
                    F.mul(1000, F.mul(ps, ps)),
                    F.neg(F.mul(40, ps)),
                    1};
                auto rts = pm::roots(sextic, prime, rng);
                uint64_t xr = 0;
                bool found = false;
                for (uint64_t r : rts)
                    if (r != F.mul(10, ps)) {
                        xr = r;
                        found = true;
                        break;
                    }
                if (!found) {
                    ++rep.skips;
                    continue;
                }
                uint64_t d = F.sub(xr, F.mul(10, ps));
                uint64_t d5 = F.pow(d, 5);
                uint64_t X = F.mul(10, F.inv(d));
                uint64_t Yn = F.sub(F.mul(xr, F.sub(800000, d5)),
                                    F.mul(10000000 % prime, ps));
                uint64_t Y = F.mul(Yn, F.inv(F.mul(20, F.mul(d5, ps))));
                Y = F.add(Y, F.of(static_cast<long long>(y_offset)));
                pass = F.on_curve(X, Y);
                done = true;
            }
        }
        if (pass) ++rep.passes;
    }
    rep.ok = rep.passes == rep.trials;
    return rep;
}

std::pair<bool, bool> disc_square_equivalence(const RationalPsi& psi) {
    using BigInt = boost::multiprecision::cpp_int;
    using BigRat = boost::rational<BigInt>;
    auto is_sq = [](const BigRat& r) {
        if (r < BigRat(0)) return false;
        BigInt n = r.numerator() * r.denominator();
        BigInt root = boost::multiprecision::sqrt(n);
        return root * root == n;
    };
    BigInt u5 = 1, v5 = 1;
    for (int i = 0; i < 5; ++i) {
        u5 *= psi.num;
        v5 *= psi.den;
    }
    BigRat one_minus(v5 - u5, v5);
    BigRat d_psi = BigRat(BigInt(800000)) * one_minus;
    BigRat five = BigRat(BigInt(5)) * one_minus;
    bool a = is_sq(d_psi), b = is_sq(five);
    if (a != b) throw Error("2^8 5^4 square equivalence violated (bug)");
    return {a, b};
}

}  // namespace dwork::dioph
