#include "dwork/ffield.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace dwork {

RationalPsi parse_psi(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return RationalPsi(std::stoll(s));
        return RationalPsi(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw ConfigError("cannot parse psi: " + s);
    }
}

}  // namespace dwork

namespace dwork::ff {

namespace {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> out;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

FieldCtx::FieldCtx(uint32_t p, uint32_t k) : p_(p), k_(k) {
    if (!is_prime_u32(p)) throw ConfigError("p = " + std::to_string(p) + " is not prime");
    if (p == 2 || p == 5)
        throw ConfigError("p in {2,5} excluded by the good-reduction condition");
    if (k < 1 || k > 4) throw ConfigError("extension degree k must be in {1,2,3,4}");
    uint64_t q = 1;
    for (uint32_t i = 0; i < k; ++i) q *= p;
    if (q > (1u << 20)) throw ConfigError("field too large: q = " + std::to_string(q));
    q_ = static_cast<uint32_t>(q);
    if (k_ > 1) find_modulus();
    find_generator();
    build_tables();
}

// polynomial multiplication of index-encoded elements, reduced by modulus_
uint32_t FieldCtx::mul_raw(uint32_t a, uint32_t b) const {
    if (k_ == 1) return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    std::array<uint32_t, 4> ca{}, cb{};
    for (uint32_t i = 0; i < k_; ++i, a /= p_) ca[i] = a % p_;
    for (uint32_t i = 0; i < k_; ++i, b /= p_) cb[i] = b % p_;
    std::array<uint64_t, 7> prod{};
    for (uint32_t i = 0; i < k_; ++i)
        for (uint32_t j = 0; j < k_; ++j) prod[i + j] += static_cast<uint64_t>(ca[i]) * cb[j];
    for (int i = 2 * static_cast<int>(k_) - 2; i >= static_cast<int>(k_); --i) {
        uint64_t c = prod[i] % p_;
        if (c == 0) continue;
        prod[i] = 0;
        // x^k = -modulus tail
        for (uint32_t j = 0; j < k_; ++j)
            prod[i - k_ + j] += c * (p_ - modulus_[j]) % p_ * 1ull;
    }
    uint32_t out = 0;
    for (int i = static_cast<int>(k_) - 1; i >= 0; --i)
        out = out * p_ + static_cast<uint32_t>(prod[i] % p_);
    return out;
}

uint32_t FieldCtx::pow_raw(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul_raw(r, a);
        a = mul_raw(a, a);
        e >>= 1;
    }
    return r;
}

FqElem FieldCtx::add_slow(FqElem a, FqElem b) const {
    uint32_t av = a.v, bv = b.v, out = 0, mult = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        uint32_t s = av % p_ + bv % p_;
        if (s >= p_) s -= p_;
        out += s * mult;
        mult *= p_;
        av /= p_;
        bv /= p_;
    }
    return {out};
}

void FieldCtx::find_modulus() {
    // lowest monic irreducible of degree k: no roots, and for k = 4 no
    // irreducible quadratic divisor (1+3 splits have roots; 2+2 does not)
    std::vector<uint32_t> tail(k_);
    auto eval_at = [&](uint32_t x) {
        uint64_t acc = 1;  // monic leading coefficient
        for (int i = static_cast<int>(k_) - 1; i >= 0; --i) acc = (acc * x + tail[i]) % p_;
        return static_cast<uint32_t>(acc);
    };
    auto has_quadratic_divisor = [&]() {
        // trial division of x^4 + tail by monic quadratics x^2 + bx + c without roots
        for (uint32_t b = 0; b < p_; ++b)
            for (uint32_t c = 0; c < p_; ++c) {
                bool rootfree = true;
                for (uint32_t x = 0; x < p_ && rootfree; ++x)
                    if ((x * x + b * x + c) % p_ == 0) rootfree = false;
                if (!rootfree) continue;
                // f = (x^2+bx+c)(x^2+ex+f0) + remainder; match coefficients
                // e = t3 - b ; f0 = t2 - c - e*b ; check t1 = e*c + f0*b, t0 = f0*c
                uint64_t e = (tail[3] + p_ - b) % p_;
                uint64_t f0 = ((tail[2] + 2ull * p_ * p_) - c - e * b % p_ + p_ * p_) % p_;
                if ((e * c + f0 * b) % p_ == tail[1] && (f0 * c) % p_ == tail[0]) return true;
            }
        return false;
    };
    while (true) {
        bool has_root = false;
        if (tail[0] != 0) {
            for (uint32_t x = 0; x < p_ && !has_root; ++x)
                if (eval_at(x) == 0) has_root = true;
            if (!has_root && (k_ < 4 || !has_quadratic_divisor())) {
                modulus_.assign(tail.begin(), tail.end());
                modulus_.push_back(1);
                return;
            }
        }
        // next tail, counting up base p
        for (uint32_t i = 0;; ++i) {
            if (i == k_) throw ConfigError("no irreducible modulus found");
            if (++tail[i] < p_) break;
            tail[i] = 0;
        }
    }
}

void FieldCtx::find_generator() {
    auto factors = prime_factors(q_ - 1);
    for (uint32_t g = 2; g < q_; ++g) {
        bool ok = true;
        for (uint32_t r : factors)
            if (pow_raw(g, (q_ - 1) / r) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen_ = g;
            return;
        }
    }
    throw ConfigError("no generator found (modulus not irreducible?)");
}

void FieldCtx::build_tables() {
    exp_.resize(q_ - 1);
    exp_[0] = 1;
    for (uint32_t i = 1; i < q_ - 1; ++i) exp_[i] = mul_raw(exp_[i - 1], gen_);
    log_.assign(q_, 0);
    std::vector<bool> seen(q_, false);
    for (uint32_t i = 0; i < q_ - 1; ++i) {
        if (exp_[i] == 0 || seen[exp_[i]])
            throw ConfigError("exp table is not a bijection onto F_q \\ {0}");
        seen[exp_[i]] = true;
        log_[exp_[i]] = i;
    }
    if (mul_raw(exp_[q_ - 2], gen_) != 1) throw ConfigError("generator order check failed");
    neg_.resize(q_);
    for (uint32_t a = 0; a < q_; ++a) {
        uint32_t av = a, out = 0, mult = 1;
        for (uint32_t i = 0; i < k_; ++i) {
            uint32_t d = av % p_;
            out += (d == 0 ? 0 : p_ - d) * mult;
            mult *= p_;
            av /= p_;
        }
        neg_[a] = out;
    }
    if (q_ <= kAddTableMax) {
        add_table_.resize(static_cast<size_t>(q_) * q_);
        for (uint32_t a = 0; a < q_; ++a)
            for (uint32_t b = 0; b <= a; ++b) {
                uint32_t s = add_slow({a}, {b}).v;
                add_table_[static_cast<size_t>(a) * q_ + b] = s;
                add_table_[static_cast<size_t>(b) * q_ + a] = s;
            }
    }
}

FqElem FieldCtx::from_rational(const RationalPsi& psi) const {
    FqElem den = from_int(psi.den);
    if (den.v == 0)
        throw BadReduction("psi = " + psi.str() + " has no reduction mod " + std::to_string(p_));
    return mul(from_int(psi.num), inv(den));
}

FieldCtx make_field(uint32_t p, uint32_t k) { return FieldCtx(p, k); }

Embedding::Embedding(const FieldCtx& from, const FieldCtx& to) : from_(&from), to_(&to) {
    if (from.p() != to.p() || to.k() % from.k() != 0)
        throw ConfigError("embedding requires equal characteristic and k | K");
    FqElem root = to.zero();
    if (from.k() > 1) {
        bool found = false;
        const auto& m = from.modulus();
        for (uint32_t x = 0; x < to.q() && !found; ++x) {
            FqElem acc = to.zero();
            for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i)
                acc = to.add(to.mul(acc, {x}), to.from_int(m[i]));
            if (acc.v == 0) {
                root = {x};
                found = true;
            }
        }
        if (!found) throw ConfigError("modulus has no root in the big field");
    }
    gen_pow_.resize(from.k());
    gen_pow_[0] = to.one();
    for (uint32_t i = 1; i < from.k(); ++i) gen_pow_[i] = to.mul(gen_pow_[i - 1], root);
}

FqElem Embedding::map(FqElem a) const {
    uint32_t av = a.v;
    FqElem out = to_->zero();
    for (uint32_t i = 0; i < from_->k(); ++i, av /= from_->p()) {
        uint32_t d = av % from_->p();
        if (d) out = to_->add(out, to_->mul(to_->from_int(d), gen_pow_[i]));
    }
    return out;
}

}  // namespace dwork::ff
