#include "dwork/polymod.hpp"

namespace dwork::polymod {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::vector<int> distinct_degree_pattern(Poly f, uint64_t p) {
    f = make_monic(std::move(f), p);
    std::vector<int> counts;
    Poly h{0, 1};  // x
    int d = 0;
    while (degree(f) > 0) {
        ++d;
        h = powmod(std::move(h), p, f, p);
        Poly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = subm(hx[1], 1, p);
        Poly g = gcd(f, hx, p);
        int dg = degree(g);
        counts.resize(static_cast<size_t>(d), 0);
        if (dg > 0) {
            counts[d - 1] = dg / d;
            f = quot(std::move(f), g, p);
        }
        if (degree(f) > 0 && degree(f) < 2 * (d + 1)) {
            // remainder is a single irreducible factor
            counts.resize(static_cast<size_t>(degree(f)), 0);
            counts[degree(f) - 1] += 1;
            break;
        }
    }
    return counts;
}

namespace {

void split_linear(const Poly& g, uint64_t p, uint64_t& rng, std::vector<uint64_t>& out) {
    int d = degree(g);
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(mulm(subm(0, g[0], p), invm(g[1], p), p));
        return;
    }
    while (true) {
        uint64_t t = splitmix64(rng) % p;
        Poly h = powmod(Poly{t, 1}, (p - 1) / 2, g, p);
        if (h.empty()) h = {0};
        h[0] = subm(h[0], 1, p);
        Poly d1 = gcd(g, h, p);
        int dd = degree(d1);
        if (dd > 0 && dd < d) {
            split_linear(d1, p, rng, out);
            split_linear(quot(g, d1, p), p, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<uint64_t> roots(const Poly& f, uint64_t p, uint64_t& rng_state) {
    Poly m = make_monic(f, p);
    if (degree(m) <= 0) return {};
    // product of linear factors: gcd(x^p - x, f)
    Poly xp = powmod(Poly{0, 1}, p, m, p);
    if (xp.size() < 2) xp.resize(2, 0);
    xp[1] = subm(xp[1], 1, p);
    Poly g = gcd(m, xp, p);
    std::vector<uint64_t> out;
    split_linear(g, p, rng_state, out);
    return out;
}

}  // namespace dwork::polymod
