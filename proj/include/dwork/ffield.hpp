#ifndef DWORK_FFIELD_HPP
#define DWORK_FFIELD_HPP

#include <cassert>
#include <cstdint>
#include <vector>

#include "dwork/errors.hpp"
#include "dwork/psi.hpp"

namespace dwork::ff {

// An element of F_q held as a canonical index in [0, q):
// the coefficient vector (c_0, ..., c_{k-1}) of the residue encoded base p.
struct FqElem {
    uint32_t v = 0;
    friend bool operator==(FqElem a, FqElem b) { return a.v == b.v; }
    friend bool operator!=(FqElem a, FqElem b) { return a.v != b.v; }
    friend bool operator<(FqElem a, FqElem b) { return a.v < b.v; }
};

// F_q, q = p^k, p an odd prime != 5, k in {1,2,3,4}.
//
// Multiplication and residue tests run on generator-power tables (exp/log);
// addition uses a full q x q table for small q and digitwise arithmetic
// otherwise. Immutable after construction; safe to share across threads.
class FieldCtx {
  public:
    FieldCtx(uint32_t p, uint32_t k);

    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint32_t q() const { return q_; }

    FqElem zero() const { return {0}; }
    FqElem one() const { return {1}; }
    FqElem generator() const { return {gen_}; }
    // modulus coefficients c_0..c_k (monic, degree k); empty for k = 1
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    FqElem from_int(long long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return {static_cast<uint32_t>(r)};
    }
    // throws BadReduction if den(psi) vanishes mod p
    FqElem from_rational(const RationalPsi& psi) const;

    FqElem add(FqElem a, FqElem b) const {
        if (!add_table_.empty()) return {add_table_[a.v * q_ + b.v]};
        return add_slow(a, b);
    }
    FqElem neg(FqElem a) const { return {neg_[a.v]}; }
    FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
    FqElem mul(FqElem a, FqElem b) const {
        if (a.v == 0 || b.v == 0) return {0};
        uint32_t s = log_[a.v] + log_[b.v];
        if (s >= q_ - 1) s -= q_ - 1;
        return {exp_[s]};
    }
    FqElem inv(FqElem a) const {
        assert(a.v != 0);
        uint32_t l = log_[a.v];
        return {exp_[l == 0 ? 0 : q_ - 1 - l]};
    }
    FqElem pow(FqElem a, uint64_t e) const {
        if (a.v == 0) {
            assert(e > 0);
            return {0};
        }
        return {exp_[static_cast<uint32_t>((static_cast<uint64_t>(log_[a.v]) * e) % (q_ - 1))]};
    }

    // log-parity quadratic residue test; a must be nonzero
    bool is_square(FqElem a) const {
        assert(a.v != 0);
        return (log_[a.v] & 1u) == 0;
    }

    // #{y in F_q : y^5 = c}
    int fifth_power_count(FqElem c) const {
        if (c.v == 0) return 1;
        uint32_t d = ((q_ - 1) % 5 == 0) ? 5 : 1;
        return (log_[c.v] % d == 0) ? static_cast<int>(d) : 0;
    }

    // #{x : a2 x^2 + a1 x + a0 = 0}, via the residue status of a1^2 - 4 a2 a0
    int quadratic_root_count(FqElem a2, FqElem a1, FqElem a0) const {
        assert(a2.v != 0);
        FqElem disc = sub(mul(a1, a1), mul(mul(from_int(4), a2), a0));
        if (disc.v == 0) return 1;
        return is_square(disc) ? 2 : 0;
    }

    uint32_t log(FqElem a) const {
        assert(a.v != 0);
        return log_[a.v];
    }
    FqElem exp(uint32_t e) const { return {exp_[e % (q_ - 1)]}; }

  private:
    FqElem add_slow(FqElem a, FqElem b) const;
    uint32_t mul_raw(uint32_t a, uint32_t b) const;  // polynomial multiplication, no tables
    uint32_t pow_raw(uint32_t a, uint64_t e) const;
    void find_modulus();
    void find_generator();
    void build_tables();

    uint32_t p_ = 0, k_ = 0, q_ = 0;
    uint32_t gen_ = 0;
    std::vector<uint32_t> modulus_;      // c_0..c_k, monic
    std::vector<uint32_t> exp_;          // size q-1
    std::vector<uint32_t> log_;          // size q, log_[0] unused
    std::vector<uint32_t> neg_;          // size q
    std::vector<uint32_t> add_table_;    // size q*q when q <= kAddTableMax, else empty
    static constexpr uint32_t kAddTableMax = 2048;
};

FieldCtx make_field(uint32_t p, uint32_t k);

// The embedding F_{p^k} -> F_{p^K} (k | K) sending the degree-k generator to a
// root of its minimal polynomial found by search in the big field.
class Embedding {
  public:
    Embedding(const FieldCtx& from, const FieldCtx& to);
    FqElem map(FqElem a) const;
    const FieldCtx& from() const { return *from_; }
    const FieldCtx& to() const { return *to_; }

  private:
    const FieldCtx* from_;
    const FieldCtx* to_;
    std::vector<FqElem> gen_pow_;  // images of 1, g, g^2, ... g^{k-1} basis? no: root powers
};

}  // namespace dwork::ff

#endif
