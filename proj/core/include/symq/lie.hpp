#pragma once

#include "symq/matrix_fn.hpp"

#include <vector>

namespace symq {

// An exact complex 4x4 matrix in 2x2 block form (A B; C D).
struct LieElement {
    CMat2 A, B, C, D;

    static LieElement from_blocks(CMat2 a, CMat2 b, CMat2 c, CMat2 d) {
        return LieElement{std::move(a), std::move(b), std::move(c), std::move(d)};
    }
    static LieElement a_block(const CMat2& a) {
        return {a, CMat2::zero(), CMat2::zero(), CMat2::zero()};
    }
    static LieElement b_block(const CMat2& b) {
        return {CMat2::zero(), b, CMat2::zero(), CMat2::zero()};
    }
    static LieElement c_block(const CMat2& c) {
        return {CMat2::zero(), CMat2::zero(), c, CMat2::zero()};
    }
    static LieElement d_block(const CMat2& d) {
        return {CMat2::zero(), CMat2::zero(), CMat2::zero(), d};
    }
    // (A, 0; 0, -A^T), the diagonal part of sp(4,C).
    static LieElement sp_a_block(const CMat2& a) {
        return {a, CMat2::zero(), CMat2::zero(), -a.transpose()};
    }
    static LieElement unit(int k, int l);  // 4x4 elementary matrix E_{kl}, 0-based
    static LieElement inversion() {        // the group element (0 1; 1 0)
        return {CMat2::zero(), CMat2::identity(), CMat2::identity(), CMat2::zero()};
    }

    GQ at(int i, int j) const;  // 0-based 4x4 access
    bool is_zero() const { return A.is_zero() && B.is_zero() && C.is_zero() && D.is_zero(); }

    friend LieElement operator+(const LieElement& x, const LieElement& y) {
        return {x.A + y.A, x.B + y.B, x.C + y.C, x.D + y.D};
    }
    friend LieElement operator-(const LieElement& x, const LieElement& y) {
        return {x.A - y.A, x.B - y.B, x.C - y.C, x.D - y.D};
    }
    LieElement operator-() const { return {-A, -B, -C, -D}; }
    friend LieElement operator*(const GQ& c, const LieElement& x) {
        return {c * x.A, c * x.B, c * x.C, c * x.D};
    }
    friend LieElement operator*(const LieElement& x, const LieElement& y) {
        return {x.A * y.A + x.B * y.C, x.A * y.B + x.B * y.D,
                x.C * y.A + x.D * y.C, x.C * y.B + x.D * y.D};
    }
    friend bool operator==(const LieElement& x, const LieElement& y) {
        return x.A == y.A && x.B == y.B && x.C == y.C && x.D == y.D;
    }

    bool sp4_member() const;   // D = -A^T, B = B^T, C = C^T
    bool sl4_member() const;   // trace zero
    bool u22_member() const;   // (A B; B^* D) with A, D skew-Hermitian
    GQ trace() const { return A.trace() + D.trace(); }
    LieElement transpose() const {
        return {A.transpose(), C.transpose(), B.transpose(), D.transpose()};
    }
};

LieElement bracket(const LieElement& x, const LieElement& y);

// The fixed 10-element basis of sp(4,C): 4 A-type, 3 symmetric B, 3 symmetric C.
const std::vector<LieElement>& sp4_basis();
std::vector<std::string> sp4_basis_names();

// All sixteen elementary 4x4 matrices E_{kl} (gl(2,H_C) basis).
const std::vector<LieElement>& gl4_basis();

// w X w with w = (0 1; 1 0): swaps blocks (A B; C D) -> (D C; B A).
LieElement conjugate_by_inversion(const LieElement& x);

}  // namespace symq
