#include "dwork/galois.hpp"

#include <algorithm>
#include <array>

#include "dwork/polymod.hpp"

namespace dwork::galois {

namespace {

BigInt big_pow(BigInt base, unsigned e) {
    BigInt r = 1;
    while (e--) r *= base;
    return r;
}

bool is_square_int(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

// f_psi with denominators cleared: den * (4x^5 - 5 psi x^4 + 1)
// = 4v x^5 - 5u x^4 + v, u/v = psi
std::vector<BigInt> cleared_quintic(const RationalPsi& psi) {
    return {BigInt(psi.den), 0, 0, 0, BigInt(-5) * psi.num, BigInt(4) * psi.den};
}

std::vector<BigInt> derivative_poly(const std::vector<BigInt>& f) {
    std::vector<BigInt> d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * BigInt(static_cast<long long>(i)));
    return d;
}

// resultant of integer polynomials via the Sylvester determinant with exact
// rational Gaussian elimination (degrees here are tiny)
BigRat resultant(const std::vector<BigInt>& f, const std::vector<BigInt>& g) {
    int m = static_cast<int>(f.size()) - 1, n = static_cast<int>(g.size()) - 1;
    int size = m + n;
    std::vector<std::vector<BigRat>> s(size, std::vector<BigRat>(size, BigRat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = BigRat(f[m - j]);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = BigRat(g[n - j]);
    BigRat det(1);
    for (int col = 0; col < size; ++col) {
        int piv = -1;
        for (int r = col; r < size; ++r)
            if (s[r][col] != BigRat(0)) {
                piv = r;
                break;
            }
        if (piv < 0) return BigRat(0);
        if (piv != col) {
            std::swap(s[piv], s[col]);
            det = -det;
        }
        det *= s[col][col];
        BigRat inv = BigRat(1) / s[col][col];
        for (int r = col + 1; r < size; ++r) {
            if (s[r][col] == BigRat(0)) continue;
            BigRat factor = s[r][col] * inv;
            for (int c = col; c < size; ++c) s[r][c] -= factor * s[col][c];
        }
    }
    return det;
}

std::vector<long long> small_primes(long long bound) {
    std::vector<long long> out;
    for (long long n = 2; n <= bound; ++n) {
        bool prime = true;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(n);
    }
    return out;
}

// all positive divisors of |n| (n != 0)
std::vector<BigInt> divisors_of(BigInt n) {
    if (n < 0) n = -n;
    std::vector<std::pair<BigInt, int>> fac;
    for (BigInt d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            fac.emplace_back(d, e);
        }
    }
    if (n > 1) fac.emplace_back(n, 1);
    std::vector<BigInt> divs{1};
    for (const auto& [pr, e] : fac) {
        size_t base = divs.size();
        BigInt pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= pr;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

BigInt eval_poly(const std::vector<BigInt>& f, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigRat eval_poly_rat(const std::vector<BigInt>& f, const BigRat& x) {
    BigRat acc(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + BigRat(*it);
    return acc;
}

}  // namespace

bool rational_is_square(const BigRat& r) {
    if (r < BigRat(0)) return false;
    return is_square_int(r.numerator() * r.denominator());
}

Discriminant discriminant(const RationalPsi& psi) {
    BigRat p5 = BigRat(big_pow(BigInt(psi.num), 5), big_pow(BigInt(psi.den), 5));
    BigRat value = BigRat(BigInt(800000)) * (BigRat(1) - p5);
    // independent route: disc = (-1)^{n(n-1)/2} Res(F, F') / lc(F) on the
    // cleared F = den * f, then disc(f) = disc(F) / den^{2n-2}
    std::vector<BigInt> fi = cleared_quintic(psi);
    std::vector<BigInt> fd = derivative_poly(fi);
    BigRat res = resultant(fi, fd);
    // disc(c f) = c^{2n-2} disc(f) with n = 5; here c = den
    BigRat disc_cleared = res / BigRat(BigInt(4) * psi.den);
    BigRat disc = disc_cleared / BigRat(big_pow(BigInt(psi.den), 8));
    if (disc != value)
        throw IntegralityError("discriminant resultant cross-check failed for psi = " +
                               psi.str());
    return {value, rational_is_square(value)};
}

const char* group_name(GroupTag t) {
    switch (t) {
        case GroupTag::C5: return "C5";
        case GroupTag::D10: return "D10";
        case GroupTag::F20: return "F20";
        case GroupTag::A5: return "A5";
        case GroupTag::S5: return "S5";
        case GroupTag::Reducible: return "REDUCIBLE";
        case GroupTag::Unknown: return "UNKNOWN";
    }
    return "?";
}

bool is_good_prime(const RationalPsi& psi, long long p) {
    if (p == 2 || p == 5) return false;
    if (psi.den % p == 0) return false;
    // ramified iff disc = 2^8 5^5 (1 - psi^5) = 0 mod p, i.e. psi^5 = 1 mod p
    long long u = ((psi.num % p) + p) % p;
    long long v = ((psi.den % p) + p) % p;
    uint64_t pv = polymod::mulm(u, polymod::invm(v, p), p);
    return polymod::powm(pv, 5, p) != 1 % p;
}

sp4s6::CycleType frobenius_cycle_type(const RationalPsi& psi, long long p) {
    if (p == 2 || p == 5 || psi.den % p == 0)
        throw RamifiedPrime("p = " + std::to_string(p) + " is not a good prime");
    uint64_t up = static_cast<uint64_t>(((psi.num % p) + p) % p);
    uint64_t vp = static_cast<uint64_t>(((psi.den % p) + p) % p);
    uint64_t pm = polymod::mulm(up, polymod::invm(vp, p), p);
    // f = 4x^5 - 5 psi x^4 + 1 mod p
    polymod::Poly f{1, 0, 0, 0,
                    polymod::mulm(static_cast<uint64_t>(p - 1), polymod::mulm(5, pm, static_cast<uint64_t>(p)), static_cast<uint64_t>(p)),
                    static_cast<uint64_t>(4 % p)};
    polymod::Poly g = polymod::gcd(f, polymod::derivative(f, p), p);
    if (polymod::degree(g) != 0)
        throw RamifiedPrime("f_psi mod " + std::to_string(p) + " is not squarefree");
    auto counts = polymod::distinct_degree_pattern(f, p);
    sp4s6::CycleType ct;
    for (int d = static_cast<int>(counts.size()); d >= 1; --d)
        for (int i = 0; i < counts[d - 1]; ++i) ct.parts.push_back(d);
    if (ct.degree() != 5) throw RamifiedPrime("degree pattern does not sum to 5");
    return ct;
}

IrredResult is_irreducible(const RationalPsi& psi, long long prime_budget) {
    IrredResult out;
    auto f = cleared_quintic(psi);
    // rational roots first: a root r/s needs r | f0, s | f5 (both nonzero here)
    for (const BigInt& r : divisors_of(f[0]))
        for (const BigInt& s : divisors_of(f[5]))
            for (int sign = -1; sign <= 1; sign += 2) {
                BigRat cand(sign * r, s);
                if (eval_poly_rat(f, cand) == BigRat(0)) {
                    out.irreducible = false;
                    out.known = true;
                    out.cert.kind = IrredCertificate::Kind::RationalRoot;
                    out.cert.root = cand;
                    return out;
                }
            }
    // mod-p degree patterns
    std::vector<long long> used;
    // degrees 1..4 still allowed for a proper factor
    std::array<bool, 5> possible{false, true, true, true, true};
    for (long long p : small_primes(prime_budget)) {
        if (!is_good_prime(psi, p)) continue;
        sp4s6::CycleType ct;
        try {
            ct = frobenius_cycle_type(psi, p);
        } catch (const RamifiedPrime&) {
            continue;
        }
        used.push_back(p);
        if (ct.parts.size() == 1) {
            out.irreducible = true;
            out.known = true;
            out.cert.kind = IrredCertificate::Kind::IrreducibleModP;
            out.cert.p1 = p;
            return out;
        }
        // subset sums achievable from this pattern
        std::array<bool, 6> reach{};
        reach[0] = true;
        for (int part : ct.parts)
            for (int s = 5; s >= part; --s)
                if (reach[s - part]) reach[s] = true;
        for (int d = 1; d <= 4; ++d)
            if (!reach[d]) possible[d] = false;
        if (!possible[1] && !possible[2] && !possible[3] && !possible[4]) {
            out.irreducible = true;
            out.known = true;
            out.cert.kind = IrredCertificate::Kind::PatternIncompatibility;
            out.cert.primes_used = used;
            return out;
        }
    }
    // bounded search for a quadratic factor a x^2 + b x + c over Z of the
    // primitive part (no rational root, so degree-2 is the only option left)
    BigInt g = 0;
    for (const auto& c : f) g = boost::multiprecision::gcd(g, c < 0 ? BigInt(-c) : c);
    std::vector<BigInt> fp;
    for (const auto& c : f) fp.push_back(c / g);
    // Cauchy root bound for the rational roots of fp
    BigRat maxc(0);
    for (size_t i = 0; i + 1 < fp.size(); ++i) {
        BigRat a(fp[i] < 0 ? BigInt(-fp[i]) : fp[i], fp[5] < 0 ? BigInt(-fp[5]) : fp[5]);
        if (a > maxc) maxc = a;
    }
    BigInt bound = maxc.numerator() / maxc.denominator() + 2;
    for (const BigInt& a : divisors_of(fp[5]))
        for (const BigInt& c0 : divisors_of(fp[0]))
            for (int sc = -1; sc <= 1; sc += 2)
                for (BigInt b = -2 * bound * a; b <= 2 * bound * a; ++b) {
                    // divide fp by a x^2 + b x + sc*c0 over Q, check exactness
                    std::vector<BigRat> r{BigRat(fp[0]), BigRat(fp[1]), BigRat(fp[2]),
                                          BigRat(fp[3]), BigRat(fp[4]), BigRat(fp[5])};
                    std::array<BigRat, 3> d{BigRat(sc * c0), BigRat(b), BigRat(a)};
                    bool exact = true;
                    for (int i = 5; i >= 2; --i) {
                        BigRat q = r[i] / d[2];
                        for (int j = 0; j < 3; ++j) r[i - 2 + j] -= q * d[j];
                    }
                    exact = r[0] == BigRat(0) && r[1] == BigRat(0);
                    if (exact) {
                        out.irreducible = false;
                        out.known = true;
                        out.cert.kind = IrredCertificate::Kind::QuadraticFactor;
                        out.cert.factor = {sc * c0, b, a};
                        return out;
                    }
                }
    out.known = false;
    out.cert.kind = IrredCertificate::Kind::Inconclusive;
    out.cert.primes_used = used;
    return out;
}

ResolventResult dummit_resolvent(const RationalPsi& psi) {
    ResolventResult out;
    const BigInt u(psi.num), v(psi.den);
    BigInt u5 = big_pow(u, 5), v5 = big_pow(v, 5);
    // z = v x; monic integer sextic in z
    out.sextic = {BigInt(4000000) * u * (BigInt(3) * v5 + u5),
                  BigInt(-800000) * (v5 + 2 * u5),
                  BigInt(250000) * big_pow(u, 4),
                  BigInt(-20000) * big_pow(u, 3),
                  BigInt(1000) * u * u,
                  BigInt(-40) * u,
                  BigInt(1)};
    if (out.sextic[0] == 0) {
        out.has_root = true;
        out.root = BigRat(0);
    } else {
        for (const BigInt& d : divisors_of(out.sextic[0])) {
            for (int sign = -1; sign <= 1; sign += 2) {
                BigInt cand = sign * d;
                if (eval_poly(out.sextic, cand) == 0) {
                    out.has_root = true;
                    out.root = BigRat(cand, v);
                    break;
                }
            }
            if (out.has_root) break;
        }
    }
    if (out.has_root) out.root_is_10psi = out.root == BigRat(BigInt(10) * u, v);
    return out;
}

bool cycle_type_in_support(GroupTag tag, const std::vector<int>& parts) {
    auto eq = [&](std::initializer_list<int> l) {
        return parts == std::vector<int>(l);
    };
    bool id = eq({1, 1, 1, 1, 1}), five = eq({5}), tt = eq({2, 2, 1});
    switch (tag) {
        case GroupTag::C5: return id || five;
        case GroupTag::D10: return id || five || tt;
        case GroupTag::F20: return id || five || tt || eq({4, 1});
        case GroupTag::A5: return id || five || tt || eq({3, 1, 1});
        case GroupTag::S5: return true;
        default: return false;
    }
}

GaloisVerdict classify(const RationalPsi& psi, long long prime_budget) {
    GaloisVerdict v;
    v.irred = is_irreducible(psi, prime_budget);
    if (v.irred.known && !v.irred.irreducible) {
        v.tag = GroupTag::Reducible;
        return v;
    }
    if (!v.irred.known) {
        v.tag = GroupTag::Unknown;
        v.note = "irreducibility inconclusive within prime budget";
        return v;
    }
    v.disc_square = discriminant(psi).is_square;
    auto res = dummit_resolvent(psi);
    v.has_resolvent_root = res.has_root;
    // sample cycle types at all good primes within budget
    bool saw_221 = false;
    for (long long p : small_primes(prime_budget)) {
        if (!is_good_prime(psi, p)) continue;
        auto ct = frobenius_cycle_type(psi, p);
        ++v.histogram[ct.parts];
        ++v.primes_sampled;
        if (ct.parts == std::vector<int>{2, 2, 1}) saw_221 = true;
    }
    if (res.has_root) {
        if (!v.disc_square) {
            v.tag = GroupTag::F20;
        } else if (saw_221) {
            v.tag = GroupTag::D10;
        } else {
            v.tag = GroupTag::C5;
            v.note = "C5 vs D10 separated by absence of (2,2,1) in " +
                     std::to_string(v.primes_sampled) + " sampled primes (Monte-Carlo)";
        }
    } else {
        v.tag = v.disc_square ? GroupTag::A5 : GroupTag::S5;
    }
    for (const auto& [parts, cnt] : v.histogram)
        if (!cycle_type_in_support(v.tag, parts)) {
            v.note = "cycle type outside the verdict support; witness p-pattern size " +
                     std::to_string(parts.size());
            v.tag = GroupTag::Unknown;
            break;
        }
    return v;
}

ReciprocityReport reciprocity_scan(const RationalPsi& psi, long long prime_max,
                                   int depth, uint64_t budget, int jobs) {
    ReciprocityReport rep;
    rep.psi = psi;
    for (long long p : small_primes(prime_max)) {
        if (p == 2 || p == 5 || psi.den % p == 0) continue;
        if (!is_good_prime(psi, p)) {
            ++rep.skipped_ramified;
            continue;
        }
        ReciprocityRow row;
        row.p = p;
        auto ct = frobenius_cycle_type(psi, p);
        row.cycle = ct.parts;
        row.class_from_cycle = sp4s6::cycle_type_to_class(ct);
        ff::FieldCtx F(static_cast<uint32_t>(p), 1);
        row.n_roots = counts::count_quintic_roots(F, counts::reduce_psi(F, psi));
        // #(parts = 1) = n in the squarefree case
        long long ones = std::count(ct.parts.begin(), ct.parts.end(), 1);
        bool ones_ok = ones == row.n_roots;
        // depth-1 parity component: class parity of a equals (n+1) mod 2
        int a_parity_from_class =
            row.class_from_cycle == weil::EulerClassMod2::OneT4 ? 0 : 1;
        row.congruence_ok = ones_ok && a_parity_from_class == (row.n_roots + 1) % 2;
        row.parity_ok = true;
        row.dictionary_ok = true;
        uint64_t depth2_work = static_cast<uint64_t>(p) * p;
        depth2_work *= depth2_work;  // (p^2)^2
        depth2_work *= depth2_work;  // (p^2)^4
        if (depth == 2 && depth2_work <= budget) {
            auto w = weil::reconstruct_mirror_quartic(psi, static_cast<uint32_t>(p), 1,
                                                      budget, jobs);
            row.depth2 = true;
            row.a = w.a;
            row.b = w.b;
            row.class_from_quartic = weil::mod2_class(w);
            row.congruence_ok =
                row.congruence_ok && ((w.a - row.n_roots - 1) % 2 == 0);
            row.parity_ok = (w.a % 2 != 0) || (w.b % 2 == 0);
            row.dictionary_ok = row.class_from_quartic == row.class_from_cycle;
            if (row.class_from_quartic == weil::EulerClassMod2::Forbidden)
                ++rep.forbidden_count;
        }
        if (!row.congruence_ok || !row.parity_ok || !row.dictionary_ok) ++rep.failures;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace dwork::galois
