#include "dwork/sp4s6.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dwork::sp4s6 {

Perm6 Perm6::from_cycles(const std::string& s) {
    Perm6 out;
    size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        if (s[i] != '(') throw ConfigError("bad cycle string: " + s);
        std::vector<uint8_t> cyc;
        ++i;
        while (i < s.size() && s[i] != ')') {
            char c = s[i];
            if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (c < '1' || c > '6') throw ConfigError("cycle points must be 1..6: " + s);
            cyc.push_back(static_cast<uint8_t>(c - '0'));
            ++i;
        }
        if (i == s.size()) throw ConfigError("unterminated cycle: " + s);
        ++i;
        Perm6 c;
        for (size_t j = 0; j < cyc.size(); ++j)
            c.img[cyc[j] - 1] = cyc[(j + 1) % cyc.size()];
        out = c * out;  // cycles written left-to-right compose like the display
    }
    return out;
}

Perm6 Perm6::inverse() const {
    Perm6 r;
    for (int i = 0; i < 6; ++i) r.img[img[i] - 1] = static_cast<uint8_t>(i + 1);
    return r;
}

int Perm6::order() const {
    Perm6 x = *this;
    int n = 1;
    while (!x.is_identity()) {
        x = x * (*this);
        ++n;
    }
    return n;
}

std::vector<int> Perm6::cycle_type() const {
    std::array<bool, 7> seen{};
    std::vector<int> parts;
    for (uint8_t i = 1; i <= 6; ++i) {
        if (seen[i]) continue;
        int len = 0;
        uint8_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img[j - 1];
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

SpMat4 SpMat4::from_rows(std::array<std::array<int, 4>, 4> rows) {
    SpMat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.set(i, j, rows[i][j]);
    return m;
}

SpMat4 SpMat4::transpose() const {
    SpMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.set(j, i, get(i, j));
    return r;
}

int SpMat4::order() const {
    SpMat4 x = *this;
    int n = 1;
    while (!(x == identity())) {
        x = x * (*this);
        ++n;
        if (n > 720) throw Error("matrix order exceeds 720; not in the image group");
    }
    return n;
}

bool is_symplectic(SpMat4 m) { return m.transpose() * kJ * m == kJ; }

bool in_endoscopic_h(SpMat4 m) {
    static constexpr int zero_positions[8][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 3},
                                                 {2, 0}, {2, 3}, {3, 1}, {3, 2}};
    for (auto [i, j] : zero_positions)
        if (m.get(i, j)) return false;
    int outer = (m.get(0, 0) & m.get(3, 3)) ^ (m.get(0, 3) & m.get(3, 0));
    int inner = (m.get(1, 1) & m.get(2, 2)) ^ (m.get(1, 2) & m.get(2, 1));
    return outer == inner && outer != 0;
}

namespace {

// representatives of e1..e4 in F_2^6, as bitmasks over coordinates 1..6
constexpr uint8_t kBasis[4] = {0b000011, 0b011000, 0b101000, 0b000101};
constexpr uint8_t kOnes = 0b111111;

uint8_t act_on_vector(const Perm6& sigma, uint8_t v) {
    // (sigma . x)_i = x_{sigma^{-1}(i)}: coordinate j moves to sigma(j)
    uint8_t out = 0;
    for (int j = 1; j <= 6; ++j)
        if (v >> (j - 1) & 1) out |= static_cast<uint8_t>(1u << (sigma(static_cast<uint8_t>(j)) - 1));
    return out;
}

int to_basis(uint8_t v) {
    for (int bits = 0; bits < 16; ++bits) {
        uint8_t acc = 0;
        for (int i = 0; i < 4; ++i)
            if (bits >> i & 1) acc ^= kBasis[i];
        if (acc == v || acc == (v ^ kOnes)) return bits;
    }
    throw Error("vector not in W");
}

}  // namespace

SpMat4 phi(const Perm6& sigma) {
    SpMat4 m;
    for (int j = 0; j < 4; ++j) {
        int col = to_basis(act_on_vector(sigma, kBasis[j]));
        for (int i = 0; i < 4; ++i)
            if (col >> i & 1) m.set(i, j, 1);
    }
    return m;
}

uint8_t charpoly_mod2(SpMat4 m) {
    // det(tI + M) over F_2 by permanent-style expansion (signs vanish);
    // entries are linear polynomials encoded as bitmasks in t
    uint8_t ent[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            ent[i][j] = static_cast<uint8_t>((i == j ? 2 : 0) | m.get(i, j));
    auto pmul = [](uint32_t a, uint32_t b) {
        uint32_t r = 0;
        for (int k = 0; a >> k; ++k)
            if (a >> k & 1) r ^= b << k;
        return r;
    };
    uint32_t total = 0;
    int idx[4] = {0, 1, 2, 3};
    std::sort(idx, idx + 4);
    do {
        uint32_t prod = 1;
        for (int i = 0; i < 4 && prod; ++i) prod = pmul(prod, ent[i][idx[i]]);
        total ^= prod;
    } while (std::next_permutation(idx, idx + 4));
    return static_cast<uint8_t>(total);
}

int CycleType::degree() const {
    int d = 0;
    for (int p : parts) d += p;
    return d;
}

weil::EulerClassMod2 cycle_type_to_class(const CycleType& ct) {
    if (ct.degree() != 5)
        throw ConfigError("cycle_type_to_class takes partitions of 5");
    bool has3 = false, is5 = false;
    for (int p : ct.parts) {
        if (p == 3) has3 = true;
        if (p == 5) is5 = true;
    }
    if (is5) return weil::EulerClassMod2::Cyclotomic5;
    if (has3) return weil::EulerClassMod2::T3T4;
    return weil::EulerClassMod2::OneT4;
}

const char* subgroup_name(SubgroupTag t) {
    switch (t) {
        case SubgroupTag::C5: return "C5";
        case SubgroupTag::D10: return "D10";
        case SubgroupTag::F20: return "F20";
        case SubgroupTag::A5: return "A5";
        case SubgroupTag::S5: return "S5";
        case SubgroupTag::A6: return "A6";
        case SubgroupTag::S6: return "S6";
        case SubgroupTag::Other: return "OTHER";
    }
    return "?";
}

SubgroupVerdict classify_subgroup(std::span<const Perm6> generators) {
    std::set<Perm6> group{Perm6::identity()};
    std::vector<Perm6> frontier(group.begin(), group.end());
    while (!frontier.empty()) {
        std::vector<Perm6> next;
        for (const auto& a : frontier)
            for (const auto& g : generators) {
                Perm6 c = a * g;
                if (group.insert(c).second) next.push_back(c);
                if (group.size() > 720) throw Error("subgroup closure exceeded |S6|");
            }
        frontier = std::move(next);
    }
    SubgroupVerdict v;
    v.order = group.size();
    for (const auto& g : group)
        if (g.cycle_type() == std::vector<int>{3, 3}) v.has33 = true;
    if (v.order % 5 == 0) {
        // subgroups of S6 of order divisible by 5 are classified by order
        switch (v.order) {
            case 5: v.tag = SubgroupTag::C5; break;
            case 10: v.tag = SubgroupTag::D10; break;
            case 20: v.tag = SubgroupTag::F20; break;
            case 60: v.tag = SubgroupTag::A5; break;
            case 120: v.tag = SubgroupTag::S5; break;
            case 360: v.tag = SubgroupTag::A6; break;
            case 720: v.tag = SubgroupTag::S6; break;
            default: v.tag = SubgroupTag::Other;
        }
    }
    return v;
}

// ---- F_4 arithmetic ----

namespace {
// multiplication table for 0,1,a,a+1 with a^2 = a+1
constexpr uint8_t kMul4[4][4] = {
    {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
}

F4 f4_add(F4 x, F4 y) { return {static_cast<uint8_t>(x.v ^ y.v)}; }
F4 f4_mul(F4 x, F4 y) { return {kMul4[x.v][y.v]}; }

F4 Mat2F4::det() const { return f4_add(f4_mul(e[0], e[3]), f4_mul(e[1], e[2])); }

Mat2F4 operator*(const Mat2F4& a, const Mat2F4& b) {
    Mat2F4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.e[2 * i + j] = f4_add(f4_mul(a.e[2 * i], b.e[j]),
                                    f4_mul(a.e[2 * i + 1], b.e[2 + j]));
    return r;
}

bool operator<(const Mat2F4& a, const Mat2F4& b) {
    for (int i = 0; i < 4; ++i)
        if (a.e[i].v != b.e[i].v) return a.e[i].v < b.e[i].v;
    return false;
}

Mat4F4 Mat4F4::identity() {
    Mat4F4 m;
    for (int i = 0; i < 4; ++i) m.e[5 * i] = {1};
    return m;
}

Mat4F4 operator*(const Mat4F4& a, const Mat4F4& b) {
    Mat4F4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            F4 acc{};
            for (int k = 0; k < 4; ++k)
                acc = f4_add(acc, f4_mul(a.e[4 * i + k], b.e[4 * k + j]));
            r.e[4 * i + j] = acc;
        }
    return r;
}

Mat4F4 sym3_sl2f4(const Mat2F4& m) {
    if (!(m.det() == F4{1}))
        throw ConfigError("sym3_sl2f4 requires det = 1");
    F4 al = m.e[0], be = m.e[1], ga = m.e[2], de = m.e[3];
    auto sq = [](F4 x) { return f4_mul(x, x); };
    auto cube = [&](F4 x) { return f4_mul(sq(x), x); };
    // columns = images of v1^3, v1^2 v2, v1 v2^2, v2^3 (char 2 kills the 3's)
    F4 col[4][4] = {
        {cube(al), f4_mul(sq(al), ga), f4_mul(al, sq(ga)), cube(ga)},
        {f4_mul(sq(al), be), f4_mul(sq(al), de), f4_mul(be, sq(ga)), f4_mul(sq(ga), de)},
        {f4_mul(al, sq(be)), f4_mul(sq(be), ga), f4_mul(al, sq(de)), f4_mul(ga, sq(de))},
        {cube(be), f4_mul(sq(be), de), f4_mul(be, sq(de)), cube(de)}};
    Mat4F4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.e[4 * i + j] = col[j][i];
    return r;
}

std::array<F4, 5> charpoly_f4(const Mat4F4& m) {
    // det(tI + M) over F_4, expansion over the 24 permutations (char 2: no signs)
    std::array<F4, 5> total{};
    int idx[4] = {0, 1, 2, 3};
    do {
        // product of linear factors (M[i][idx[i]] + delta * t)
        std::array<F4, 5> prod{};
        prod[0] = {1};
        int degree = 0;
        for (int i = 0; i < 4; ++i) {
            F4 c = m.e[4 * i + idx[i]];
            bool has_t = idx[i] == i;
            std::array<F4, 5> next{};
            for (int d = 0; d <= degree; ++d) {
                next[d] = f4_add(next[d], f4_mul(prod[d], c));
                if (has_t) next[d + 1] = f4_add(next[d + 1], prod[d]);
            }
            prod = next;
            degree += has_t ? 1 : 0;
        }
        for (int d = 0; d < 5; ++d) total[d] = f4_add(total[d], prod[d]);
    } while (std::next_permutation(idx, idx + 4));
    return total;
}

bool is_symplectic_f4(const Mat4F4& m) {
    // J antidiagonal over F_4
    Mat4F4 j;
    for (int i = 0; i < 4; ++i) j.e[4 * i + (3 - i)] = {1};
    Mat4F4 mt;
    for (int i = 0; i < 4; ++i)
        for (int jj = 0; jj < 4; ++jj) mt.e[4 * i + jj] = m.e[4 * jj + i];
    return mt * j * m == j;
}

std::vector<Mat2F4> sl2f4_elements() {
    const Mat2F4 gens[3] = {{{F4{1}, F4{0}, F4{1}, F4{1}}},
                            {{F4{1}, F4{1}, F4{0}, F4{1}}},
                            {{F4{2}, F4{0}, F4{0}, F4{3}}}};
    std::set<Mat2F4> group{Mat2F4{{F4{1}, F4{0}, F4{0}, F4{1}}}};
    std::vector<Mat2F4> frontier(group.begin(), group.end());
    while (!frontier.empty()) {
        std::vector<Mat2F4> next;
        for (const auto& a : frontier)
            for (const auto& g : gens) {
                Mat2F4 c = a * g;
                if (group.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    return {group.begin(), group.end()};
}

}  // namespace dwork::sp4s6
