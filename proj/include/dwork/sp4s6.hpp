#ifndef DWORK_SP4S6_HPP
#define DWORK_SP4S6_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dwork/errors.hpp"
#include "dwork/weil.hpp"

namespace dwork::sp4s6 {

// a permutation of {1..6} stored by images: img[i] = sigma(i+1)
struct Perm6 {
    std::array<uint8_t, 6> img{1, 2, 3, 4, 5, 6};

    static Perm6 identity() { return {}; }
    // cycles like "(12)(34)" or "(25463)"; points are single digits 1..6
    static Perm6 from_cycles(const std::string& s);

    uint8_t operator()(uint8_t x) const { return img[x - 1]; }
    Perm6 inverse() const;
    int order() const;
    bool is_identity() const { return *this == identity(); }
    // multiset of cycle lengths on {1..6}, descending
    std::vector<int> cycle_type() const;

    friend Perm6 operator*(const Perm6& a, const Perm6& b) {  // (a*b)(x) = a(b(x))
        Perm6 r;
        for (int i = 0; i < 6; ++i) r.img[i] = a.img[b.img[i] - 1];
        return r;
    }
    friend bool operator==(const Perm6& a, const Perm6& b) { return a.img == b.img; }
    friend bool operator<(const Perm6& a, const Perm6& b) { return a.img < b.img; }
};

// 4x4 matrix over F_2, row-major 16 bits: bit (4*i + j) = entry (i, j)
struct SpMat4 {
    uint16_t bits = 0;

    static SpMat4 identity() { return {0x8421}; }
    static SpMat4 from_rows(std::array<std::array<int, 4>, 4> rows);

    int get(int i, int j) const { return (bits >> (4 * i + j)) & 1; }
    void set(int i, int j, int v) {
        if (v) bits |= static_cast<uint16_t>(1u << (4 * i + j));
        else bits &= static_cast<uint16_t>(~(1u << (4 * i + j)));
    }
    SpMat4 transpose() const;
    int order() const;  // requires invertibility

    friend SpMat4 operator*(SpMat4 a, SpMat4 b) {
        SpMat4 r;
        for (int i = 0; i < 4; ++i) {
            uint16_t row = static_cast<uint16_t>((a.bits >> (4 * i)) & 0xF);
            uint16_t acc = 0;
            for (int k = 0; k < 4; ++k)
                if (row >> k & 1) acc ^= static_cast<uint16_t>((b.bits >> (4 * k)) & 0xF);
            r.bits |= static_cast<uint16_t>(acc << (4 * i));
        }
        return r;
    }
    friend bool operator==(SpMat4 a, SpMat4 b) { return a.bits == b.bits; }
    friend bool operator<(SpMat4 a, SpMat4 b) { return a.bits < b.bits; }
};

// J = antidiag(1,1,1,1): the form (0_2 s; -s 0_2), s = (0 1; 1 0), signs vanish mod 2
inline constexpr SpMat4 kJ = {0x1248};

bool is_symplectic(SpMat4 m);  // tM J M = J

// block shape x,y,z,w corners + inner 2x2 with xw - yz = ad - bc (and nonzero)
bool in_endoscopic_h(SpMat4 m);

// the matrix of sigma acting on W = V/U in the basis (e1..e4);
// a group isomorphism S6 -> Sp4(F2)
SpMat4 phi(const Perm6& sigma);

// characteristic polynomial over F_2, bit k of the result = coeff of t^k
uint8_t charpoly_mod2(SpMat4 m);

struct CycleType {
    std::vector<int> parts;
    int degree() const;
};

// class of the quartic charpoly attached to a Frobenius cycle type (degree 5)
weil::EulerClassMod2 cycle_type_to_class(const CycleType& ct);

enum class SubgroupTag { C5, D10, F20, A5, S5, A6, S6, Other };
const char* subgroup_name(SubgroupTag t);

struct SubgroupVerdict {
    SubgroupTag tag = SubgroupTag::Other;
    size_t order = 0;
    bool has33 = false;  // contains an element of cycle type (3,3)
};

SubgroupVerdict classify_subgroup(std::span<const Perm6> generators);

// ---- F_4 = F_2[a]/(a^2+a+1) and the Sym^3 construction ----

// elements 0, 1, a = 2, a+1 = 3
struct F4 {
    uint8_t v = 0;
    friend bool operator==(F4 x, F4 y) { return x.v == y.v; }
    friend bool operator<(F4 x, F4 y) { return x.v < y.v; }
};

F4 f4_add(F4 x, F4 y);
F4 f4_mul(F4 x, F4 y);

struct Mat2F4 {
    std::array<F4, 4> e{};  // row-major
    F4 det() const;
    friend Mat2F4 operator*(const Mat2F4& a, const Mat2F4& b);
    friend bool operator==(const Mat2F4& a, const Mat2F4& b) {
        return a.e[0] == b.e[0] && a.e[1] == b.e[1] && a.e[2] == b.e[2] && a.e[3] == b.e[3];
    }
    friend bool operator<(const Mat2F4& a, const Mat2F4& b);
};

struct Mat4F4 {
    std::array<F4, 16> e{};
    static Mat4F4 identity();
    friend Mat4F4 operator*(const Mat4F4& a, const Mat4F4& b);
    friend bool operator==(const Mat4F4& a, const Mat4F4& b) { return a.e == b.e; }
    friend bool operator<(const Mat4F4& a, const Mat4F4& b) {
        for (int i = 0; i < 16; ++i)
            if (!(a.e[i] == b.e[i])) return a.e[i] < b.e[i];
        return false;
    }
};

// symmetric cube on the basis (v1^3, v1^2 v2, v1 v2^2, v2^3);
// rejects det != 1 (the construction is for SL_2(F_4))
Mat4F4 sym3_sl2f4(const Mat2F4& m);

// characteristic polynomial over F_4, coefficients of t^0..t^4
std::array<F4, 5> charpoly_f4(const Mat4F4& m);

// tM J M = J over F_4 with the antidiagonal J
bool is_symplectic_f4(const Mat4F4& m);

// all 60 elements of SL_2(F_4) by closure from standard generators
std::vector<Mat2F4> sl2f4_elements();

}  // namespace dwork::sp4s6

#endif
