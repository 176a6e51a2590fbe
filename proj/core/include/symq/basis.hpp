#pragma once

#include "symq/algebra.hpp"

#include <map>

namespace symq {

// Index of a basis element N^{k2/2} * R^m_l on the symmetric slice.
struct RIndex {
    int k2;  // twice the N-exponent
    int l;
    int m;
    friend bool operator<(const RIndex& a, const RIndex& b) {
        return std::tie(a.k2, a.l, a.m) < std::tie(b.k2, b.l, b.m);
    }
    friend bool operator==(const RIndex& a, const RIndex& b) {
        return a.k2 == b.k2 && a.l == b.l && a.m == b.m;
    }
};

// Index of a basis element N^k * t^{l2/2}_{n2/2, m2/2} on the full space.
struct TIndex {
    int k;
    int l2, n2, m2;  // twice-values; n is the first (non-underlined) index
    friend bool operator<(const TIndex& a, const TIndex& b) {
        return std::tie(a.k, a.l2, a.n2, a.m2) < std::tie(b.k, b.l2, b.n2, b.m2);
    }
    friend bool operator==(const TIndex& a, const TIndex& b) {
        return a.k == b.k && a.l2 == b.l2 && a.n2 == b.n2 && a.m2 == b.m2;
    }
};

// Solid harmonic R^m_l on Sym3D, exact, homogeneous of degree l; the zero
// element outside -l <= m <= l (the tables reference one step out of range).
const AlgebraElement& solid_harmonic(int l, int m);

// SU(2) matrix coefficient t^l_{n m} as a Full4D polynomial of degree l2;
// all indices are twice-values. Throws on out-of-range indices.
const AlgebraElement& matrix_coeff(int l2, int n2, int m2);
// Zero outside the admissible range instead of throwing.
AlgebraElement matrix_coeff_or_zero(int l2, int n2, int m2);

// Exact expansion over { N^{k2/2} R^m_l } (Sym3D input of any grading).
std::map<RIndex, GQ> expand_sym(const AlgebraElement& f);
// Exact expansion over { N^k t^l_{n m} } (Full4D input, integer grading).
std::map<TIndex, GQ> expand_full(const AlgebraElement& f);

AlgebraElement reconstruct(Dim dim, const std::map<RIndex, GQ>& coeffs);
AlgebraElement reconstruct(const std::map<TIndex, GQ>& coeffs);

// p = sum_j N^{j2/2} h_j with every h_j annihilated by the Laplacian of the
// element's chart; unique. Keys are twice the N-exponent.
std::map<int, AlgebraElement> harmonic_decompose(const AlgebraElement& p);

}  // namespace symq
