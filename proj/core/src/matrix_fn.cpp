#include "symq/matrix_fn.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace symq {

namespace {

int entry_count_for(Shape shape, int rank) {
    switch (shape) {
        case Shape::Scalar: return 1;
        case Shape::Spinor:
        case Shape::CoSpinor: return 2;
        case Shape::Quat: return 4;
        case Shape::SymCol:
        case Shape::SymRow: return rank + 1;
    }
    return 0;
}

}  // namespace

MatrixFn::MatrixFn(Shape shape, Dim dim, int rank)
    : shape_(shape), dim_(dim), rank_(rank),
      entries_(entry_count_for(shape, rank), AlgebraElement(dim)) {}

MatrixFn MatrixFn::scalar(AlgebraElement f) {
    MatrixFn r(Shape::Scalar, f.dim());
    r.entries_[0] = std::move(f);
    return r;
}

MatrixFn MatrixFn::spinor(AlgebraElement a, AlgebraElement b) {
    MatrixFn r(Shape::Spinor, a.dim());
    r.entries_[0] = std::move(a);
    r.entries_[1] = std::move(b);
    return r;
}

MatrixFn MatrixFn::cospinor(AlgebraElement a, AlgebraElement b) {
    MatrixFn r(Shape::CoSpinor, a.dim());
    r.entries_[0] = std::move(a);
    r.entries_[1] = std::move(b);
    return r;
}

MatrixFn MatrixFn::quat(AlgebraElement a, AlgebraElement b, AlgebraElement c, AlgebraElement d) {
    MatrixFn r(Shape::Quat, a.dim());
    r.entries_[0] = std::move(a);
    r.entries_[1] = std::move(b);
    r.entries_[2] = std::move(c);
    r.entries_[3] = std::move(d);
    return r;
}

MatrixFn MatrixFn::sym_col(Dim dim, std::vector<AlgebraElement> comps) {
    MatrixFn r(Shape::SymCol, dim, static_cast<int>(comps.size()) - 1);
    r.entries_ = std::move(comps);
    return r;
}

MatrixFn MatrixFn::sym_row(Dim dim, std::vector<AlgebraElement> comps) {
    MatrixFn r(Shape::SymRow, dim, static_cast<int>(comps.size()) - 1);
    r.entries_ = std::move(comps);
    return r;
}

MatrixFn MatrixFn::constant(Shape shape, Dim dim, const CMat2& m) {
    if (shape != Shape::Quat) throw std::invalid_argument("constant: Quat only");
    MatrixFn r(Shape::Quat, dim);
    for (int k = 0; k < 4; ++k) r.entries_[k] = AlgebraElement::constant(dim, m.e[k]);
    return r;
}

MatrixFn MatrixFn::zero(Shape shape, Dim dim, int rank) { return MatrixFn(shape, dim, rank); }

MatrixFn MatrixFn::z_matrix(Dim dim) {
    auto v = [dim](Var x) { return AlgebraElement::variable(dim, x); };
    if (dim == Dim::Full4D)
        return quat(v(Var::Z11), v(Var::Z12), v(Var::Z21), v(Var::Z22));
    AlgebraElement it = GQ::i() * v(Var::T);
    return quat(v(Var::Z11), it, it, v(Var::Z22));
}

MatrixFn MatrixFn::z_conjugate(Dim dim) {
    auto v = [dim](Var x) { return AlgebraElement::variable(dim, x); };
    if (dim == Dim::Full4D)
        return quat(v(Var::Z22), -v(Var::Z12), -v(Var::Z21), v(Var::Z11));
    AlgebraElement mit = -(GQ::i() * v(Var::T));
    return quat(v(Var::Z22), mit, mit, v(Var::Z11));
}

const AlgebraElement& MatrixFn::at(int i, int j) const {
    if (shape_ != Shape::Quat) throw std::invalid_argument("at(i,j): Quat only");
    return entries_[2 * i + j];
}

bool MatrixFn::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

MatrixFn operator+(const MatrixFn& a, const MatrixFn& b) {
    if (a.shape_ != b.shape_ || a.dim_ != b.dim_ || a.rank_ != b.rank_)
        throw std::invalid_argument("shape mismatch in MatrixFn +");
    MatrixFn r = a;
    for (size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
    return r;
}

MatrixFn operator-(const MatrixFn& a, const MatrixFn& b) { return a + (-b); }

MatrixFn MatrixFn::operator-() const {
    MatrixFn r = *this;
    for (auto& e : r.entries_) e = -e;
    return r;
}

MatrixFn operator*(const GQ& c, const MatrixFn& a) {
    MatrixFn r = a;
    for (auto& e : r.entries_) e = c * e;
    return r;
}

MatrixFn operator*(const AlgebraElement& c, const MatrixFn& a) {
    MatrixFn r = a;
    for (auto& e : r.entries_) e = c * e;
    return r;
}

MatrixFn operator*(const MatrixFn& a, const MatrixFn& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("dim mismatch in MatrixFn *");
    const Dim dim = a.dim_;
    if (a.shape_ == Shape::Scalar) return a.entries_[0] * b;
    if (b.shape_ == Shape::Scalar) return b.entries_[0] * a;
    if (a.shape_ == Shape::Quat && b.shape_ == Shape::Quat) {
        MatrixFn r(Shape::Quat, dim);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.entries_[2 * i + j] =
                    a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
        return r;
    }
    if (a.shape_ == Shape::Quat && b.shape_ == Shape::Spinor) {
        return MatrixFn::spinor(a.at(0, 0) * b.entries_[0] + a.at(0, 1) * b.entries_[1],
                                a.at(1, 0) * b.entries_[0] + a.at(1, 1) * b.entries_[1]);
    }
    if (a.shape_ == Shape::CoSpinor && b.shape_ == Shape::Quat) {
        return MatrixFn::cospinor(a.entries_[0] * b.at(0, 0) + a.entries_[1] * b.at(1, 0),
                                  a.entries_[0] * b.at(0, 1) + a.entries_[1] * b.at(1, 1));
    }
    if (a.shape_ == Shape::CoSpinor && b.shape_ == Shape::Spinor) {
        return MatrixFn::scalar(a.entries_[0] * b.entries_[0] + a.entries_[1] * b.entries_[1]);
    }
    if (a.shape_ == Shape::Spinor && b.shape_ == Shape::CoSpinor) {
        return MatrixFn::quat(a.entries_[0] * b.entries_[0], a.entries_[0] * b.entries_[1],
                              a.entries_[1] * b.entries_[0], a.entries_[1] * b.entries_[1]);
    }
    throw std::invalid_argument("MatrixFn shapes do not compose");
}

bool operator==(const MatrixFn& a, const MatrixFn& b) {
    return a.shape_ == b.shape_ && a.dim_ == b.dim_ && a.rank_ == b.rank_ &&
           a.entries_ == b.entries_;
}

AlgebraElement MatrixFn::trace() const {
    if (shape_ != Shape::Quat) throw std::invalid_argument("trace: Quat only");
    return entries_[0] + entries_[3];
}

MatrixFn MatrixFn::transpose() const {
    switch (shape_) {
        case Shape::Scalar: return *this;
        case Shape::Spinor: {
            MatrixFn r = *this;
            r.shape_ = Shape::CoSpinor;
            return r;
        }
        case Shape::CoSpinor: {
            MatrixFn r = *this;
            r.shape_ = Shape::Spinor;
            return r;
        }
        case Shape::Quat: {
            MatrixFn r = *this;
            std::swap(r.entries_[1], r.entries_[2]);
            return r;
        }
        case Shape::SymCol: {
            MatrixFn r = *this;
            r.shape_ = Shape::SymRow;
            return r;
        }
        case Shape::SymRow: {
            MatrixFn r = *this;
            r.shape_ = Shape::SymCol;
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

bool MatrixFn::is_symmetric() const {
    if (shape_ != Shape::Quat) return false;
    return entries_[1] == entries_[2];
}

MatrixFn MatrixFn::dagger() const {
    if (shape_ == Shape::Spinor) return cospinor(entries_[1], -entries_[0]);
    if (shape_ == Shape::CoSpinor) return spinor(-entries_[1], entries_[0]);
    throw std::invalid_argument("dagger: spinor shapes only");
}

MatrixFn MatrixFn::map_entries(
    const std::function<AlgebraElement(const AlgebraElement&)>& fn) const {
    MatrixFn r = *this;
    for (auto& e : r.entries_) e = fn(e);
    return r;
}

std::string MatrixFn::str() const {
    std::ostringstream os;
    switch (shape_) {
        case Shape::Scalar: return entries_[0].str();
        case Shape::Spinor: os << "col(" << entries_[0].str() << ", " << entries_[1].str() << ")"; break;
        case Shape::CoSpinor: os << "row(" << entries_[0].str() << ", " << entries_[1].str() << ")"; break;
        case Shape::Quat:
            os << "mat(" << entries_[0].str() << ", " << entries_[1].str() << "; "
               << entries_[2].str() << ", " << entries_[3].str() << ")";
            break;
        case Shape::SymCol:
        case Shape::SymRow: {
            os << (shape_ == Shape::SymCol ? "symcol(" : "symrow(");
            for (size_t k = 0; k < entries_.size(); ++k) {
                if (k) os << ", ";
                os << entries_[k].str();
            }
            os << ")";
            break;
        }
    }
    return os.str();
}

MatrixFn left_mul(const CMat2& m, const MatrixFn& f) {
    return MatrixFn::constant(Shape::Quat, f.dim(), m) * f;
}

MatrixFn right_mul(const MatrixFn& f, const CMat2& m) {
    return f * MatrixFn::constant(Shape::Quat, f.dim(), m);
}

MatrixFn tensor_pair_left(const MatrixFn& mz, const MatrixFn& f) {
    if (f.shape() != Shape::Quat) throw std::invalid_argument("tensor_pair_left: Quat rep only");
    return mz * f + f * mz.transpose();
}

MatrixFn tensor_pair_right(const MatrixFn& mz, const MatrixFn& f) {
    if (f.shape() != Shape::Quat) throw std::invalid_argument("tensor_pair_right: Quat rep only");
    return mz.transpose() * f + f * mz;
}

std::vector<Cx> evaluate(const MatrixFn& f, const EvalPoint& p) {
    std::vector<Cx> out;
    out.reserve(f.entry_count());
    for (int k = 0; k < f.entry_count(); ++k) out.push_back(f.entry(k).evaluate(p));
    return out;
}

}  // namespace symq
