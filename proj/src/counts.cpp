#include "dwork/counts.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace dwork::counts {

FqElem reduce_psi(const FieldCtx& F, const RationalPsi& psi) {
    return F.from_rational(psi);
}

void require_good_reduction(const FieldCtx& F, FqElem psi) {
    if (psi.v != 0 && F.pow(psi, 5) == F.one())
        throw BadReduction("psi^5 = 1 in F_" + std::to_string(F.q()));
}

long long count_quintic_roots(const FieldCtx& F, FqElem psi) {
    const FqElem four = F.from_int(4), one = F.one();
    const FqElem fivepsi = F.mul(F.from_int(5), psi);
    long long n = 0;
    for (uint32_t x = 0; x < F.q(); ++x) {
        FqElem x4 = x ? F.pow({x}, 4) : F.zero();
        FqElem x5 = F.mul(x4, {x});
        FqElem val = F.add(F.sub(F.mul(four, x5), F.mul(fivepsi, x4)), one);
        if (val.v == 0) ++n;
    }
    return n;
}

long long count_U(const FieldCtx& F, FqElem psi, Method method, uint64_t budget) {
    require_good_reduction(F, psi);
    const uint32_t q = F.q();
    const uint64_t nz = q - 1;
    const FqElem fivepsi = F.mul(F.from_int(5), psi);
    long long cnt = 0;
    if (method == Method::Naive) {
        if (nz * nz * nz * nz > budget)
            throw BudgetExceeded("naive U count needs (q-1)^4 = " +
                                 std::to_string(nz * nz * nz * nz) + " steps");
        for (uint32_t x1 = 1; x1 < q; ++x1)
            for (uint32_t x2 = 1; x2 < q; ++x2) {
                FqElem s12 = F.add({x1}, {x2});
                FqElem p12 = F.mul({x1}, {x2});
                for (uint32_t x3 = 1; x3 < q; ++x3) {
                    FqElem s3 = F.add(s12, {x3});
                    FqElem p3 = F.mul(p12, {x3});
                    for (uint32_t x4 = 1; x4 < q; ++x4) {
                        FqElem val = F.sub(
                            F.add(F.add(s3, {x4}), F.inv(F.mul(p3, {x4}))), fivepsi);
                        if (val.v == 0) ++cnt;
                    }
                }
            }
        return cnt;
    }
    if (nz * nz * nz > budget)
        throw BudgetExceeded("accelerated U count needs (q-1)^3 steps");
    const FqElem one = F.one();
    for (uint32_t x1 = 1; x1 < q; ++x1)
        for (uint32_t x2 = 1; x2 < q; ++x2) {
            FqElem s12 = F.add({x1}, {x2});
            FqElem p12 = F.mul({x1}, {x2});
            for (uint32_t x3 = 1; x3 < q; ++x3) {
                FqElem A = F.mul(p12, {x3});
                FqElem c = F.sub(F.add(s12, {x3}), fivepsi);
                // roots of A x^2 + A c x + 1 are nonzero (constant term 1)
                cnt += F.quadratic_root_count(A, F.mul(A, c), one);
            }
        }
    return cnt;
}

long long count_V(const FieldCtx& F, FqElem psi) {
    require_good_reduction(F, psi);
    const uint32_t q = F.q();
    const FqElem two = F.from_int(2), fivepsi = F.mul(F.from_int(5), psi);
    long long cnt = 0;
    for (uint32_t x1 = 1; x1 < q; ++x1) {
        FqElem t1 = F.mul(two, {x1});
        FqElem sq1 = F.mul({x1}, {x1});
        for (uint32_t x2 = 1; x2 < q; ++x2) {
            FqElem den = F.mul(sq1, F.mul({x2}, {x2}));
            FqElem val = F.sub(F.add(F.add(t1, F.mul(two, {x2})), F.inv(den)), fivepsi);
            if (val.v == 0) ++cnt;
        }
    }
    return cnt;
}

long long count_Y(const FieldCtx& F, FqElem psi, uint64_t budget) {
    const long long q = F.q();
    long long u = count_U(F, psi, Method::Accelerated, budget);
    long long num1 = (q - 1) * (q - 1) * (q - 1) * (q - 1) - 1;  // (q-1)^4 + (-1)^5
    if (num1 % q != 0) throw IntegralityError("((q-1)^4 - 1)/q is not integral");
    long long num2 = q * q * q * q - 1;
    if (num2 % (q - 1) != 0) throw IntegralityError("(q^4-1)/(q-1) is not integral");
    return u - num1 / q + num2 / (q - 1);
}

namespace {

struct XTable {
    const FieldCtx& F;
    std::vector<FqElem> fifth;      // x^5
    std::vector<uint32_t> rootcnt;  // T[A*q+B] = #{x : x^5 + Ax + B = 0}
    FqElem c;                       // -5 psi

    XTable(const FieldCtx& F_, FqElem psi) : F(F_) {
        const uint32_t q = F.q();
        fifth.resize(q);
        for (uint32_t x = 0; x < q; ++x) fifth[x] = x ? F.pow({x}, 5) : F.zero();
        rootcnt.assign(static_cast<size_t>(q) * q, 0);
        for (uint32_t A = 0; A < q; ++A)
            for (uint32_t x = 0; x < q; ++x) {
                FqElem B = F.neg(F.add(fifth[x], F.mul({A}, {x})));
                ++rootcnt[static_cast<size_t>(A) * q + B.v];
            }
        c = F.neg(F.mul(F.from_int(5), psi));
    }

    long long affine_range(uint32_t x0_begin, uint32_t x0_end) const {
        const uint32_t q = F.q();
        long long acc = 0;
        for (uint32_t x0 = x0_begin; x0 < x0_end; ++x0) {
            FqElem m0 = F.mul(c, {x0});
            FqElem s0 = fifth[x0];
            for (uint32_t x1 = 0; x1 < q; ++x1) {
                FqElem m1 = F.mul(m0, {x1});
                FqElem s1 = F.add(s0, fifth[x1]);
                for (uint32_t x2 = 0; x2 < q; ++x2) {
                    FqElem m2 = F.mul(m1, {x2});
                    FqElem s2 = F.add(s1, fifth[x2]);
                    const uint32_t* row = rootcnt.data();
                    for (uint32_t x3 = 0; x3 < q; ++x3) {
                        FqElem A = F.mul(m2, {x3});
                        FqElem B = F.add(s2, fifth[x3]);
                        acc += row[static_cast<size_t>(A.v) * q + B.v];
                    }
                }
            }
        }
        return acc;
    }
};

long long count_X_affine_naive(const FieldCtx& F, FqElem psi, uint64_t budget) {
    const uint32_t q = F.q();
    uint64_t steps = 1;
    for (int i = 0; i < 5; ++i) steps *= q;
    if (steps > budget) throw BudgetExceeded("naive X count needs q^5 steps");
    std::vector<FqElem> fifth(q);
    for (uint32_t x = 0; x < q; ++x) fifth[x] = x ? F.pow({x}, 5) : F.zero();
    const FqElem fivepsi = F.mul(F.from_int(5), psi);
    long long acc = 0;
    for (uint32_t x0 = 0; x0 < q; ++x0)
        for (uint32_t x1 = 0; x1 < q; ++x1)
            for (uint32_t x2 = 0; x2 < q; ++x2)
                for (uint32_t x3 = 0; x3 < q; ++x3) {
                    FqElem s = F.add(F.add(fifth[x0], fifth[x1]),
                                     F.add(fifth[x2], fifth[x3]));
                    FqElem m = F.mul(F.mul({x0}, {x1}), F.mul({x2}, {x3}));
                    FqElem mm = F.mul(fivepsi, m);
                    for (uint32_t x4 = 0; x4 < q; ++x4) {
                        FqElem val = F.sub(F.add(s, fifth[x4]), F.mul(mm, {x4}));
                        if (val.v == 0) ++acc;
                    }
                }
    return acc;
}

}  // namespace

long long count_X_projective(const FieldCtx& F, FqElem psi, Method method,
                             uint64_t budget, int jobs) {
    require_good_reduction(F, psi);
    const uint32_t q = F.q();
    long long n_affine = 0;
    if (method == Method::Naive) {
        n_affine = count_X_affine_naive(F, psi, budget);
    } else {
        uint64_t steps = static_cast<uint64_t>(q) * q * q * q;
        if (steps > budget)
            throw BudgetExceeded("X count needs q^4 = " + std::to_string(steps) +
                                 " table lookups > budget " + std::to_string(budget));
        XTable table(F, psi);
        jobs = std::max(1, std::min<int>(jobs, q));
        if (jobs == 1) {
            n_affine = table.affine_range(0, q);
        } else {
            std::vector<long long> partial(jobs, 0);
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t) {
                uint32_t lo = static_cast<uint32_t>(static_cast<uint64_t>(q) * t / jobs);
                uint32_t hi =
                    static_cast<uint32_t>(static_cast<uint64_t>(q) * (t + 1) / jobs);
                pool.emplace_back(
                    [&, t, lo, hi] { partial[t] = table.affine_range(lo, hi); });
            }
            for (auto& th : pool) th.join();
            n_affine = std::accumulate(partial.begin(), partial.end(), 0ll);
        }
    }
    if ((n_affine - 1) % (q - 1) != 0)
        throw IntegralityError("(N_affine - 1) not divisible by q - 1");
    return (n_affine - 1) / (q - 1);
}

SuperellipticSpec SuperellipticSpec::curve(const FieldCtx& F, FqElem psi, char which) {
    require_good_reduction(F, psi);
    FqElem psi5 = psi.v ? F.pow(psi, 5) : F.zero();
    std::vector<std::pair<FqElem, int>> raw;
    if (which == 'A')
        raw = {{F.zero(), 2}, {F.one(), 3}, {psi5, 2}};
    else if (which == 'B')
        raw = {{F.zero(), 2}, {F.one(), 4}, {psi5, 1}};
    else
        throw ConfigError("superelliptic curve tag must be 'A' or 'B'");
    SuperellipticSpec spec;
    for (const auto& [x, m] : raw) {
        bool merged = false;
        for (auto& [bx, bm] : spec.branches)
            if (bx == x) {
                bm += m;
                merged = true;
            }
        if (!merged) spec.branches.emplace_back(x, m);
        spec.degree += m;
    }
    for (const auto& [bx, bm] : spec.branches)
        if (bm % 5 == 0)
            throw RamificationError("merged branch multiplicity divisible by 5");
    if (spec.degree % 5 == 0) throw RamificationError("total degree divisible by 5");
    return spec;
}

long long count_superelliptic(const FieldCtx& F, const SuperellipticSpec& spec) {
    long long cnt = 0;
    for (uint32_t x = 0; x < F.q(); ++x) {
        FqElem val = F.one();
        bool at_branch = false;
        for (const auto& [bx, bm] : spec.branches) {
            FqElem d = F.sub({x}, bx);
            if (d.v == 0) {
                at_branch = true;
                break;
            }
            val = F.mul(val, F.pow(d, bm));
        }
        cnt += at_branch ? 1 : F.fifth_power_count(val);
    }
    return cnt + 1;  // single place at infinity: gcd(5, degree) = 1
}

int lpoly_degree(const SuperellipticSpec& spec) {
    return 4 * (static_cast<int>(spec.branches.size()) + 1 - 2);
}

long long curve_trace(const FieldCtx& F, FqElem psi, char which) {
    auto spec = SuperellipticSpec::curve(F, psi, which);
    return static_cast<long long>(F.q()) + 1 - count_superelliptic(F, spec);
}

long long h3_power_sum(const RationalPsi& psi, uint32_t p, uint32_t k, int r,
                       uint64_t budget, int jobs) {
    FieldCtx F(p, k * static_cast<uint32_t>(r));
    FqElem pm = reduce_psi(F, psi);
    require_good_reduction(F, pm);
    long long X = count_X_projective(F, pm, Method::Accelerated, budget, jobs);
    auto specA = SuperellipticSpec::curve(F, pm, 'A');
    auto specB = SuperellipticSpec::curve(F, pm, 'B');
    int degA = lpoly_degree(specA), degB = lpoly_degree(specB);
    if (80 % degA != 0 || 120 % degB != 0)
        throw IntegralityError("curve slot dimension not divisible by L-degree");
    long long multA = 80 / degA, multB = 120 / degB;
    long long qr = F.q();
    long long sA = qr + 1 - count_superelliptic(F, specA);
    long long sB = qr + 1 - count_superelliptic(F, specB);
    return (1 + qr + qr * qr + qr * qr * qr - X) - multA * qr * sA - multB * qr * sB;
}

}  // namespace dwork::counts
