#include "dwork/weil.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cmath>

namespace dwork::weil {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::rational<BigInt>;

const char* class_name(EulerClassMod2 c) {
    switch (c) {
        case EulerClassMod2::OneT4: return "1+t^4";
        case EulerClassMod2::T3T4: return "1+t+t^3+t^4";
        case EulerClassMod2::Cyclotomic5: return "1+t+t^2+t^3+t^4";
        case EulerClassMod2::Forbidden: return "1+t^2+t^4";
    }
    return "?";
}

EulerClassMod2 class_from_parities(int a_mod2, int b_mod2) {
    if (a_mod2 == 0 && b_mod2 == 0) return EulerClassMod2::OneT4;
    if (a_mod2 == 1 && b_mod2 == 0) return EulerClassMod2::T3T4;
    if (a_mod2 == 1 && b_mod2 == 1) return EulerClassMod2::Cyclotomic5;
    return EulerClassMod2::Forbidden;
}

EulerClassMod2 mod2_class(const WeilQuartic& w) {
    return class_from_parities(static_cast<int>(((w.a % 2) + 2) % 2),
                               static_cast<int>(((w.b % 2) + 2) % 2));
}

WeilQuartic reconstruct_mirror_quartic(const RationalPsi& psi, uint32_t p, uint32_t k,
                                       uint64_t budget, int jobs) {
    long long p1 = counts::h3_power_sum(psi, p, k, 1, budget, jobs);
    long long p2 = counts::h3_power_sum(psi, p, k, 2, budget, jobs);
    long long num = p1 * p1 - p2;
    if (num % 2 != 0)
        throw IntegralityError("p1^2 - p2 is odd for psi = " + psi.str());
    WeilQuartic w;
    w.q = 1;
    for (uint32_t i = 0; i < k; ++i) w.q *= p;
    w.a = p1;
    w.b = num / 2;
    long long q3 = static_cast<long long>(w.q) * w.q * w.q;
    if (w.a * w.a > 16 * q3)
        throw WeilBoundViolation("|a| > 4 q^{3/2} for psi = " + psi.str());
    auto c = w.coeffs();
    verify_reciprocal_roots(std::vector<long long>(c.begin(), c.end()),
                            std::pow(static_cast<double>(w.q), 1.5));
    return w;
}

std::vector<long long> curve_l_polynomial(const RationalPsi& psi, uint32_t p,
                                          char which, uint64_t budget) {
    ff::FieldCtx F1(p, 1);
    ff::FqElem pm1 = counts::reduce_psi(F1, psi);
    auto spec1 = counts::SuperellipticSpec::curve(F1, pm1, which);
    int g = counts::lpoly_degree(spec1) / 2;
    std::vector<long long> s;
    for (int r = 1; r <= g; ++r) {
        ff::FieldCtx F(p, static_cast<uint32_t>(r));
        uint64_t steps = static_cast<uint64_t>(F.q());
        if (steps > budget) throw BudgetExceeded("curve count over F_{q^r} over budget");
        s.push_back(counts::curve_trace(F, counts::reduce_psi(F, psi), which));
    }
    // Newton: s_k = e1 s_{k-1} - e2 s_{k-2} + ... + (-1)^{k-1} k e_k
    std::vector<long long> e{1};
    for (int kk = 1; kk <= g; ++kk) {
        long long acc = 0;
        for (int i = 1; i < kk; ++i)
            acc += ((i - 1) % 2 == 0 ? 1 : -1) * e[i] * s[kk - i - 1];
        long long val = s[kk - 1] - acc;
        if (val % kk != 0) throw IntegralityError("Newton identity division inexact");
        e.push_back(((kk - 1) % 2 == 0 ? 1 : -1) * (val / kk));
    }
    std::vector<long long> c(2 * g + 1);
    for (int i = 0; i <= g; ++i) c[i] = (i % 2 == 0 ? 1 : -1) * e[i];
    long long qpow = 1;
    for (int i = g - 1; i >= 0; --i) {
        qpow *= p;
        c[2 * g - i] = qpow * c[i];
    }
    verify_reciprocal_roots(c, std::sqrt(static_cast<double>(p)));
    return c;
}

bool perfect_square_poly(const std::vector<long long>& coeffs,
                         std::vector<long long>& half) {
    if (coeffs.size() % 2 == 0 || coeffs.empty() || coeffs[0] != 1) return false;
    size_t g = (coeffs.size() - 1) / 2;
    std::vector<BigRat> r(g + 1);
    r[0] = BigRat(1);
    for (size_t i = 1; i <= g; ++i) {
        BigRat acc(0);
        for (size_t j = 1; j < i; ++j) acc += r[j] * r[i - j];
        r[i] = (BigRat(BigInt(coeffs[i])) - acc) / BigRat(2);
    }
    std::vector<BigRat> sq(2 * g + 1, BigRat(0));
    for (size_t i = 0; i <= g; ++i)
        for (size_t j = 0; j <= g; ++j) sq[i + j] += r[i] * r[j];
    for (size_t i = 0; i <= 2 * g; ++i)
        if (sq[i] != BigRat(BigInt(coeffs[i]))) return false;
    half.clear();
    for (size_t i = 0; i <= g; ++i) {
        if (r[i].denominator() != 1) return false;
        half.push_back(static_cast<long long>(r[i].numerator()));
    }
    return true;
}

namespace {

// polynomial utilities over Q for exact squarefree deflation
using Poly = std::vector<BigRat>;

int deg(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != BigRat(0)) return i;
    return -1;
}

Poly derivative(const Poly& f) {
    Poly d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * BigRat(BigInt(i)));
    return d;
}

// remainder of a by monic-scaled b
Poly rem(Poly a, const Poly& b) {
    int db = deg(b);
    for (int da = deg(a); da >= db && da >= 0; da = deg(a)) {
        BigRat c = a[da] / b[db];
        for (int j = 0; j <= db; ++j) a[da - db + j] -= c * b[j];
    }
    return a;
}

Poly gcd(Poly a, Poly b) {
    while (deg(b) >= 0) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    BigRat lead = a[deg(a)];
    for (auto& c : a) c /= lead;
    a.resize(deg(a) + 1);
    return a;
}

Poly quo(Poly a, const Poly& b) {
    int db = deg(b);
    Poly q(std::max(0, deg(a) - db + 1), BigRat(0));
    for (int da = deg(a); da >= db && da >= 0; da = deg(a)) {
        BigRat c = a[da] / b[db];
        q[da - db] = c;
        for (int j = 0; j <= db; ++j) a[da - db + j] -= c * b[j];
    }
    return q;
}

}  // namespace

void verify_reciprocal_roots(const std::vector<long long>& coeffs, double target,
                             double rel_tol) {
    Poly f;
    for (long long c : coeffs) f.emplace_back(BigInt(c));
    int d = deg(f);
    if (d <= 0) throw WeilBoundViolation("degenerate polynomial");
    Poly sf = f;
    Poly g = gcd(f, derivative(f));
    if (deg(g) > 0) sf = quo(f, g);
    int m = deg(sf);
    // companion matrix of the monic squarefree part
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(m, m);
    BigRat lead = sf[m];
    for (int i = 0; i < m; ++i) {
        BigRat c = sf[i] / lead;
        comp(i, m - 1) =
            -boost::rational_cast<double>(c);
        if (i > 0) comp(i, i - 1) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, /*computeEigenvectors=*/false);
    for (int i = 0; i < m; ++i) {
        double tmod = std::abs(solver.eigenvalues()[i]);
        if (tmod == 0.0) throw WeilBoundViolation("zero root");
        double recip = 1.0 / tmod;
        if (std::abs(recip - target) > rel_tol * target)
            throw WeilBoundViolation("reciprocal root modulus " + std::to_string(recip) +
                                     " differs from " + std::to_string(target));
    }
}

}  // namespace dwork::weil
