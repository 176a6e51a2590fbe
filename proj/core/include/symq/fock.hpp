#pragma once

#include "symq/lie.hpp"
#include "symq/matrix_fn.hpp"

#include <map>

namespace symq {

enum class FockSpace { W, Wplus, Wminus };

// Exponent vector for up to 4 variable pairs (2r slots used).
using FockMono = std::array<int, 8>;

// Finite Laurent polynomial in w_1..w_r, w*_{r+1}..w*_{2r}.
// Degree grading: deg w_k = -1 (k <= r), deg w*_k = +1.
class FockElement {
public:
    explicit FockElement(int r = 2, FockSpace space = FockSpace::W) : r_(r), space_(space) {}

    static FockElement zero(int r, FockSpace space) { return FockElement(r, space); }
    static FockElement monomial(int r, FockSpace space, const FockMono& m, const GQ& c);
    static FockElement one(int r, FockSpace space = FockSpace::Wplus) {
        return monomial(r, space, FockMono{}, GQ(1));
    }

    int r() const { return r_; }
    FockSpace space() const { return space_; }
    const std::map<FockMono, GQ>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    int degree() const;  // throws on zero/inhomogeneous

    friend FockElement operator+(const FockElement& a, const FockElement& b);
    friend FockElement operator-(const FockElement& a, const FockElement& b);
    FockElement operator-() const;
    friend FockElement operator*(const GQ& c, const FockElement& a);
    friend bool operator==(const FockElement& a, const FockElement& b);
    friend bool operator!=(const FockElement& a, const FockElement& b) { return !(a == b); }

    std::string str() const;

    // Adds c * w^m, applying the space constraint (terms outside the cone of
    // Wplus/Wminus are dropped per the quotient-module truncation).
    void add_term(const FockMono& m, const GQ& c);

private:
    int r_;
    FockSpace space_;
    std::map<FockMono, GQ> terms_;
};

// Ladder operator a_k or a*_k, k = 1..2r. Creation operators are
// a_1..a_r (multiply by w_k) and a*_{r+1}..a*_{2r} (multiply by w*_k);
// the remaining ones differentiate.
struct LadderOp {
    bool star;
    int k;  // 1-based
};

FockElement ladder_apply(const LadderOp& op, const FockElement& f);

// Symmetric (Weyl-ordered) quadratic operator expressions: exact linear
// combinations of a_k a_l, a*_k a*_l and :a_k a*_l:. Symbols are indexed
// 0..2r-1 for a_k and 2r..4r-1 for a*_k.
class QuadExpr {
public:
    explicit QuadExpr(int r = 2) : r_(r) {}

    static QuadExpr aa(int r, int k, int l);           // a_k a_l
    static QuadExpr star_star(int r, int k, int l);    // a*_k a*_l
    static QuadExpr normal(int r, int k, int l);       // :a_k a*_l:

    int r() const { return r_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, GQ>& terms() const { return terms_; }

    friend QuadExpr operator+(const QuadExpr& a, const QuadExpr& b);
    friend QuadExpr operator-(const QuadExpr& a, const QuadExpr& b);
    QuadExpr operator-() const;
    friend QuadExpr operator*(const GQ& c, const QuadExpr& a);
    friend bool operator==(const QuadExpr& a, const QuadExpr& b);

    FockElement apply(const FockElement& f) const;
    std::string str() const;

    void add(int sym1, int sym2, const GQ& c);

private:
    std::map<std::pair<int, int>, GQ> terms_;  // key: ordered symbol pair
    int r_;
};

// Commutator of quadratic operators (exact; quadratics close under bracket).
QuadExpr quad_bracket(const QuadExpr& a, const QuadExpr& b);

// Commutator [Q, s] of a quadratic with a single ladder symbol, as an exact
// linear combination of symbols.
std::map<int, GQ> quad_lin_bracket(const QuadExpr& q, int sym);

// The realized dictionary gl(4,C) -> quadratic operators (r = 2):
// E_{kl} maps to -(:a*_k a_l:) for l in {1,2} and +(:a*_k a_l:) for l in {3,4}.
QuadExpr lie_embed(const LieElement& x);

// Monomial bases of the weight spaces (r = 2; all indices are twice-values).
FockElement basis_p(int l2, int mu2, int nu2);
FockElement basis_p_tilde(int l2, int mu2, int nu2);
FockElement basis_P(int n, int l2, int mu2, int nu2);
FockElement basis_Q(int n, int l2, int mu2, int nu2);
FockElement basis_P_tilde(int n, int l2, int mu2, int nu2);
FockElement basis_Q_tilde(int n, int l2, int mu2, int nu2);

// The intertwiners into polynomial functions on the quaternions (r = 2).
// n = 0 gives a Scalar, n = 1 a Spinor/CoSpinor, n = 2 a symmetric Quat,
// n >= 3 a SymCol/SymRow of rank n.
MatrixFn phi_plus(int n, const FockElement& f);
MatrixFn psi_plus(int n, const FockElement& f);
MatrixFn phi_minus(int n, const FockElement& f);
MatrixFn psi_minus(int n, const FockElement& f);

// sigma: exponent swap (w_1, w_2) <-> (w*_3, w*_4); degree n -> -n.
FockElement sigma_swap(const FockElement& f);

// Torus residue pairing between W^+ and W^-:
// <f, g> = sum_a f_a i^{|a|} g_{-a-1}.
GQ metaplectic_pairing(const FockElement& f, const FockElement& g);

}  // namespace symq
