#pragma once

#include "symq/algebra.hpp"

#include <functional>
#include <vector>

namespace symq {

// Constant 2x2 matrix over the Gaussian rationals.
struct CMat2 {
    std::array<GQ, 4> e{};  // row-major

    static CMat2 zero() { return {}; }
    static CMat2 identity() { return {{GQ(1), GQ(0), GQ(0), GQ(1)}}; }
    static CMat2 unit(int i, int j) {
        CMat2 m;
        m.e[2 * i + j] = GQ(1);
        return m;
    }

    const GQ& at(int i, int j) const { return e[2 * i + j]; }
    GQ& at(int i, int j) { return e[2 * i + j]; }

    CMat2 transpose() const { return {{e[0], e[2], e[1], e[3]}}; }
    CMat2 conj_transpose() const {
        return {{e[0].conj(), e[2].conj(), e[1].conj(), e[3].conj()}};
    }
    GQ trace() const { return e[0] + e[3]; }
    bool is_zero() const {
        for (const auto& x : e)
            if (!x.is_zero()) return false;
        return true;
    }

    friend CMat2 operator+(const CMat2& a, const CMat2& b) {
        CMat2 r;
        for (int k = 0; k < 4; ++k) r.e[k] = a.e[k] + b.e[k];
        return r;
    }
    friend CMat2 operator-(const CMat2& a, const CMat2& b) {
        CMat2 r;
        for (int k = 0; k < 4; ++k) r.e[k] = a.e[k] - b.e[k];
        return r;
    }
    CMat2 operator-() const {
        CMat2 r;
        for (int k = 0; k < 4; ++k) r.e[k] = -e[k];
        return r;
    }
    friend CMat2 operator*(const GQ& c, const CMat2& a) {
        CMat2 r;
        for (int k = 0; k < 4; ++k) r.e[k] = c * a.e[k];
        return r;
    }
    friend CMat2 operator*(const CMat2& a, const CMat2& b) {
        CMat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
        return r;
    }
    friend bool operator==(const CMat2& a, const CMat2& b) { return a.e == b.e; }
};

// Value shapes. SymCol(n) / SymRow(n) hold the n+1 independent components of
// a rank-n symmetric tensor of spinors / cospinors; component j corresponds
// to the basis slot with j second-basis factors.
enum class Shape { Scalar, Spinor, CoSpinor, Quat, SymCol, SymRow };

class MatrixFn {
public:
    MatrixFn() : shape_(Shape::Scalar), dim_(Dim::Sym3D), entries_(1, AlgebraElement(Dim::Sym3D)) {}
    MatrixFn(Shape shape, Dim dim, int rank = 0);

    static MatrixFn scalar(AlgebraElement f);
    static MatrixFn spinor(AlgebraElement a, AlgebraElement b);
    static MatrixFn cospinor(AlgebraElement a, AlgebraElement b);
    static MatrixFn quat(AlgebraElement a, AlgebraElement b, AlgebraElement c, AlgebraElement d);
    static MatrixFn sym_col(Dim dim, std::vector<AlgebraElement> comps);
    static MatrixFn sym_row(Dim dim, std::vector<AlgebraElement> comps);
    static MatrixFn constant(Shape shape, Dim dim, const CMat2& m);
    static MatrixFn zero(Shape shape, Dim dim, int rank = 0);
    static MatrixFn z_matrix(Dim dim);       // Z itself as a Quat value
    static MatrixFn z_conjugate(Dim dim);    // Z^+ as a Quat value

    Shape shape() const { return shape_; }
    Dim dim() const { return dim_; }
    int rank() const { return rank_; }
    int entry_count() const { return static_cast<int>(entries_.size()); }
    const AlgebraElement& entry(int k) const { return entries_[k]; }
    AlgebraElement& entry(int k) { return entries_[k]; }
    const AlgebraElement& at(int i, int j) const;  // Quat only
    bool is_zero() const;

    friend MatrixFn operator+(const MatrixFn& a, const MatrixFn& b);
    friend MatrixFn operator-(const MatrixFn& a, const MatrixFn& b);
    MatrixFn operator-() const;
    friend MatrixFn operator*(const GQ& c, const MatrixFn& a);
    friend MatrixFn operator*(const AlgebraElement& c, const MatrixFn& a);
    // Shape-composed product: CoSpinor*Quat, Quat*Spinor, CoSpinor*Spinor,
    // Quat*Quat, Spinor*CoSpinor, Scalar*anything.
    friend MatrixFn operator*(const MatrixFn& a, const MatrixFn& b);
    friend bool operator==(const MatrixFn& a, const MatrixFn& b);
    friend bool operator!=(const MatrixFn& a, const MatrixFn& b) { return !(a == b); }

    AlgebraElement trace() const;  // Quat only
    MatrixFn transpose() const;
    bool is_symmetric() const;     // Quat only

    // The C-linear maps S -> S', S' -> S: (s1;s2)^† = (s2, -s1),
    // (s1',s2')^† = (-s2'; s1').
    MatrixFn dagger() const;

    MatrixFn map_entries(const std::function<AlgebraElement(const AlgebraElement&)>& fn) const;

    std::string str() const;

private:
    Shape shape_;
    Dim dim_;
    int rank_ = 0;
    std::vector<AlgebraElement> entries_;
};

MatrixFn left_mul(const CMat2& m, const MatrixFn& f);   // Spinor, Quat
MatrixFn right_mul(const MatrixFn& f, const CMat2& m);  // CoSpinor, Quat
// (M (x) 1 + 1 (x) M) on rank-2 symmetric values stored as symmetric Quat:
// V -> M V + V M^T for column tensors, G -> M^T G + G M for row tensors.
MatrixFn tensor_pair_left(const MatrixFn& mz, const MatrixFn& f);
MatrixFn tensor_pair_right(const MatrixFn& mz, const MatrixFn& f);

std::vector<Cx> evaluate(const MatrixFn& f, const EvalPoint& p);

}  // namespace symq
