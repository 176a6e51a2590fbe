#include "symq/fock.hpp"

#include "symq/basis.hpp"

#include <sstream>
#include <stdexcept>

namespace symq {

namespace {

bool in_cone(FockSpace space, int r, const FockMono& m) {
    if (space == FockSpace::W) return true;
    for (int k = 0; k < 2 * r; ++k) {
        if (space == FockSpace::Wplus && m[k] < 0) return false;
        if (space == FockSpace::Wminus && m[k] > -1) return false;
    }
    return true;
}

int grading(int r, const FockMono& m) {
    int d = 0;
    for (int k = 0; k < r; ++k) d -= m[k];
    for (int k = r; k < 2 * r; ++k) d += m[k];
    return d;
}

}  // namespace

FockElement FockElement::monomial(int r, FockSpace space, const FockMono& m, const GQ& c) {
    FockElement f(r, space);
    f.add_term(m, c);
    return f;
}

void FockElement::add_term(const FockMono& m, const GQ& c) {
    if (c.is_zero() || !in_cone(space_, r_, m)) return;
    auto [it, fresh] = terms_.try_emplace(m, GQ(0));
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

bool FockElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = grading(r_, terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (grading(r_, m) != d) return false;
    return true;
}

int FockElement::degree() const {
    if (terms_.empty()) throw std::domain_error("degree of the zero element");
    if (!is_homogeneous()) throw std::domain_error("degree of inhomogeneous element");
    return grading(r_, terms_.begin()->first);
}

FockElement operator+(const FockElement& a, const FockElement& b) {
    if (a.r_ != b.r_ || a.space_ != b.space_)
        throw std::invalid_argument("Fock space mismatch in +");
    FockElement r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

FockElement operator-(const FockElement& a, const FockElement& b) { return a + (-b); }

FockElement FockElement::operator-() const {
    FockElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

FockElement operator*(const GQ& c, const FockElement& a) {
    FockElement r(a.r_, a.space_);
    if (c.is_zero()) return r;
    r.terms_ = a.terms_;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

bool operator==(const FockElement& a, const FockElement& b) {
    return a.r_ == b.r_ && a.space_ == b.space_ && a.terms_ == b.terms_;
}

std::string FockElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int k = 0; k < 2 * r_; ++k)
            if (m[k] != 0) {
                os << "*" << (k < r_ ? "w" : "w*") << (k + 1);
                if (m[k] != 1) os << "^" << m[k];
            }
    }
    return os.str();
}

FockElement ladder_apply(const LadderOp& op, const FockElement& f) {
    const int r = f.r();
    if (op.k < 1 || op.k > 2 * r) throw std::out_of_range("ladder index");
    const int slot = op.k - 1;
    const bool creation = op.star ? (op.k > r) : (op.k <= r);
    FockElement out(r, f.space());
    for (const auto& [m, c] : f.terms()) {
        FockMono n = m;
        if (creation) {
            n[slot] += 1;
            out.add_term(n, c);  // add_term drops monomials leaving the cone
        } else {
            const GQ factor{Rational(m[slot])};
            n[slot] -= 1;
            out.add_term(n, c * factor);
        }
    }
    return out;
}

// ---- quadratic operators ------------------------------------------------

namespace {

// Pairing form: omega(a_k, a*_k) = -1 for k <= r, +1 for k > r.
GQ omega(int r, int s1, int s2) {
    const int n = 2 * r;
    if (s1 < n && s2 >= n && s2 - n == s1) return GQ(s1 < r ? -1 : 1);
    if (s2 < n && s1 >= n && s1 - n == s2) return GQ(s2 < r ? 1 : -1);
    return GQ(0);
}

LadderOp symbol_op(int r, int s) {
    if (s < 2 * r) return LadderOp{false, s + 1};
    return LadderOp{true, s - 2 * r + 1};
}

}  // namespace

void QuadExpr::add(int sym1, int sym2, const GQ& c) {
    if (c.is_zero()) return;
    auto key = std::minmax(sym1, sym2);
    auto [it, fresh] = terms_.try_emplace(std::make_pair(key.first, key.second), GQ(0));
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

QuadExpr QuadExpr::aa(int r, int k, int l) {
    QuadExpr q(r);
    q.add(k - 1, l - 1, GQ(1));
    return q;
}

QuadExpr QuadExpr::star_star(int r, int k, int l) {
    QuadExpr q(r);
    q.add(2 * r + k - 1, 2 * r + l - 1, GQ(1));
    return q;
}

QuadExpr QuadExpr::normal(int r, int k, int l) {
    QuadExpr q(r);
    q.add(k - 1, 2 * r + l - 1, GQ(1));
    return q;
}

QuadExpr operator+(const QuadExpr& a, const QuadExpr& b) {
    if (a.r_ != b.r_) throw std::invalid_argument("rank mismatch");
    QuadExpr r = a;
    for (const auto& [m, c] : b.terms_) r.add(m.first, m.second, c);
    return r;
}

QuadExpr operator-(const QuadExpr& a, const QuadExpr& b) { return a + (-b); }

QuadExpr QuadExpr::operator-() const {
    QuadExpr r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

QuadExpr operator*(const GQ& c, const QuadExpr& a) {
    QuadExpr r(a.r_);
    if (c.is_zero()) return r;
    r.terms_ = a.terms_;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

bool operator==(const QuadExpr& a, const QuadExpr& b) {
    return a.r_ == b.r_ && a.terms_ == b.terms_;
}

FockElement QuadExpr::apply(const FockElement& f) const {
    FockElement out(f.r(), f.space());
    for (const auto& [pair, c] : terms_) {
        const LadderOp u = symbol_op(r_, pair.first);
        const LadderOp v = symbol_op(r_, pair.second);
        if (pair.first == pair.second || omega(r_, pair.first, pair.second).is_zero()) {
            // The two operators commute; a single ordering suffices.
            out = out + c * ladder_apply(u, ladder_apply(v, f));
        } else {
            // Weyl-symmetric product: (uv + vu) / 2.
            FockElement s = ladder_apply(u, ladder_apply(v, f)) +
                            ladder_apply(v, ladder_apply(u, f));
            out = out + (c * GQ(Rational(1, 2))) * s;
        }
    }
    return out;
}

std::string QuadExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    auto name = [&](int s) {
        std::ostringstream o;
        if (s < 2 * r_) o << "a" << s + 1;
        else o << "a*" << s - 2 * r_ + 1;
        return o.str();
    };
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")[" << name(m.first) << " " << name(m.second) << "]";
    }
    return os.str();
}

QuadExpr quad_bracket(const QuadExpr& a, const QuadExpr& b) {
    if (a.r() != b.r()) throw std::invalid_argument("rank mismatch");
    const int r = a.r();
    QuadExpr out(r);
    // For symmetric-ordered quadratics the commutator is given exactly by the
    // Poisson-type bracket of the symbols:
    // [u v, s t] = w(v,s) u t + w(v,t) u s + w(u,s) v t + w(u,t) v s.
    for (const auto& [p, cp] : a.terms())
        for (const auto& [q, cq] : b.terms()) {
            const int u = p.first, v = p.second, s = q.first, t = q.second;
            const GQ c = cp * cq;
            out.add(u, t, c * omega(r, v, s));
            out.add(u, s, c * omega(r, v, t));
            out.add(v, t, c * omega(r, u, s));
            out.add(v, s, c * omega(r, u, t));
        }
    return out;
}

std::map<int, GQ> quad_lin_bracket(const QuadExpr& q, int sym) {
    std::map<int, GQ> out;
    auto add = [&](int s, const GQ& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = out.try_emplace(s, GQ(0));
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    };
    for (const auto& [p, cp] : q.terms()) {
        const int u = p.first, v = p.second;
        add(u, cp * omega(q.r(), v, sym));
        add(v, cp * omega(q.r(), u, sym));
    }
    return out;
}

QuadExpr lie_embed(const LieElement& x) {
    QuadExpr out(2);
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
            const GQ c = x.at(k, l);
            if (c.is_zero()) continue;
            const GQ sign = (l < 2) ? GQ(-1) : GQ(1);
            // :a*_k a_l: is the symmetric pair (a_l, a*_k).
            out = out + (sign * c) * QuadExpr::normal(2, l + 1, k + 1);
        }
    return out;
}

// ---- monomial bases ------------------------------------------------------

namespace {

GQ inv_factorials(int a, int b) {
    return GQ(Rational(1) / (factorial(a) * factorial(b)));
}

GQ sign_2l(int l2) { return GQ(l2 % 2 == 0 ? 1 : -1); }

void check_even(int x, const char* what) {
    if (x % 2 != 0) throw std::out_of_range(std::string("index parity violated: ") + what);
}

}  // namespace

FockElement basis_p(int l2, int mu2, int nu2) {
    if (l2 < 0 || std::abs(mu2) > l2 || std::abs(nu2) > l2)
        throw std::out_of_range("basis_p index");
    check_even(l2 - mu2, "p mu");
    check_even(l2 - nu2, "p nu");
    const int a = (l2 - nu2) / 2, b = (l2 + nu2) / 2;
    const int c = (l2 - mu2) / 2, d = (l2 + mu2) / 2;
    return FockElement::monomial(2, FockSpace::Wplus, FockMono{a, b, c, d, 0, 0, 0, 0},
                                 sign_2l(l2) * inv_factorials(a, b));
}

FockElement basis_p_tilde(int l2, int mu2, int nu2) {
    if (l2 < 0 || std::abs(mu2) > l2 || std::abs(nu2) > l2)
        throw std::out_of_range("basis_p_tilde index");
    check_even(l2 - mu2, "pt mu");
    check_even(l2 - nu2, "pt nu");
    const int a = (l2 - nu2) / 2, b = (l2 + nu2) / 2;
    const int c = (l2 - mu2) / 2, d = (l2 + mu2) / 2;
    return FockElement::monomial(
        2, FockSpace::Wminus, FockMono{-(a + 1), -(b + 1), -(c + 1), -(d + 1), 0, 0, 0, 0},
        GQ(factorial(a) * factorial(b)));
}

FockElement basis_P(int n, int l2, int mu2, int nu2) {
    if (n <= 0 || l2 < 0 || std::abs(mu2) > l2 + n || std::abs(nu2) > l2)
        throw std::out_of_range("basis_P index");
    check_even(l2 - nu2, "P nu");
    check_even(l2 + n - mu2, "P mu");
    const int a = (l2 - nu2) / 2, b = (l2 + nu2) / 2;
    const int c = (l2 + n - mu2) / 2, d = (l2 + n + mu2) / 2;
    return FockElement::monomial(2, FockSpace::Wplus, FockMono{a, b, c, d, 0, 0, 0, 0},
                                 sign_2l(l2) * inv_factorials(a, b));
}

FockElement basis_Q(int n, int l2, int mu2, int nu2) {
    if (n <= 0 || l2 < 0 || std::abs(mu2) > l2 || std::abs(nu2) > l2 + n)
        throw std::out_of_range("basis_Q index");
    check_even(l2 - mu2, "Q mu");
    check_even(l2 + n - nu2, "Q nu");
    const int a = (l2 + n - nu2) / 2, b = (l2 + n + nu2) / 2;
    const int c = (l2 - mu2) / 2, d = (l2 + mu2) / 2;
    return FockElement::monomial(2, FockSpace::Wplus, FockMono{a, b, c, d, 0, 0, 0, 0},
                                 sign_2l(l2) * inv_factorials(a, b));
}

FockElement basis_P_tilde(int n, int l2, int mu2, int nu2) {
    if (n <= 0 || l2 < 0 || std::abs(mu2) > l2 || std::abs(nu2) > l2 + n)
        throw std::out_of_range("basis_P_tilde index");
    check_even(l2 - mu2, "Pt mu");
    check_even(l2 + n - nu2, "Pt nu");
    const int a = (l2 + n - nu2) / 2, b = (l2 + n + nu2) / 2;
    const int c = (l2 - mu2) / 2, d = (l2 + mu2) / 2;
    return FockElement::monomial(
        2, FockSpace::Wminus, FockMono{-(a + 1), -(b + 1), -(c + 1), -(d + 1), 0, 0, 0, 0},
        GQ(factorial(a) * factorial(b)));
}

FockElement basis_Q_tilde(int n, int l2, int mu2, int nu2) {
    if (n <= 0 || l2 < 0 || std::abs(mu2) > l2 + n || std::abs(nu2) > l2)
        throw std::out_of_range("basis_Q_tilde index");
    check_even(l2 - nu2, "Qt nu");
    check_even(l2 + n - mu2, "Qt mu");
    const int a = (l2 - nu2) / 2, b = (l2 + nu2) / 2;
    const int c = (l2 + n - mu2) / 2, d = (l2 + n + mu2) / 2;
    return FockElement::monomial(
        2, FockSpace::Wminus, FockMono{-(a + 1), -(b + 1), -(c + 1), -(d + 1), 0, 0, 0, 0},
        GQ(factorial(a) * factorial(b)));
}

// ---- intertwiners ---------------------------------------------------------

namespace {

// Phi^+_0 on a degree-zero element supported in the polynomial cone.
AlgebraElement phi0_plus(const FockElement& f) {
    AlgebraElement out = AlgebraElement::zero(Dim::Full4D);
    for (const auto& [m, c] : f.terms()) {
        const int a = m[0], b = m[1], cc = m[2], d = m[3];
        if (a < 0 || b < 0 || cc < 0 || d < 0)
            throw std::domain_error("phi_plus: support outside W+");
        if (a + b != cc + d) throw std::domain_error("phi_plus: degree is not zero");
        const int l2 = a + b, nu2 = b - a, mu2 = d - cc;
        GQ coeff = c * sign_2l(l2) * GQ(factorial(a) * factorial(b));
        out += coeff * matrix_coeff(l2, nu2, mu2);
    }
    return out;
}

// Phi^-_0: monomials with all-negative exponents, degree zero.
AlgebraElement phi0_minus(const FockElement& f) {
    AlgebraElement out = AlgebraElement::zero(Dim::Full4D);
    for (const auto& [m, c] : f.terms()) {
        const int a = -m[0] - 1, b = -m[1] - 1, cc = -m[2] - 1, d = -m[3] - 1;
        if (a < 0 || b < 0 || cc < 0 || d < 0)
            throw std::domain_error("phi_minus: support outside W-");
        if (a + b != cc + d) throw std::domain_error("phi_minus: degree is not zero");
        const int l2 = a + b, nu2 = b - a, mu2 = d - cc;
        GQ coeff = c / GQ(factorial(a) * factorial(b));
        out += coeff * (AlgebraElement::norm_power(Dim::Full4D, -2) *
                        matrix_coeff(l2, mu2, nu2).invert_substitute());
    }
    return out;
}

MatrixFn assemble_col(int n, const std::vector<AlgebraElement>& comp) {
    if (n == 0) return MatrixFn::scalar(comp[0]);
    if (n == 1) return MatrixFn::spinor(comp[0], comp[1]);
    if (n == 2) return MatrixFn::quat(comp[0], comp[1], comp[1], comp[2]);
    return MatrixFn::sym_col(Dim::Full4D, comp);
}

MatrixFn assemble_row(int n, const std::vector<AlgebraElement>& comp) {
    if (n == 0) return MatrixFn::scalar(comp[0]);
    if (n == 1) return MatrixFn::cospinor(comp[0], comp[1]);
    if (n == 2) return MatrixFn::quat(comp[0], comp[1], comp[1], comp[2]);
    return MatrixFn::sym_row(Dim::Full4D, comp);
}

template <typename Phi0>
MatrixFn tensor_map(int n, const FockElement& f, bool cols, Phi0&& phi0) {
    if (f.r() != 2) throw std::invalid_argument("intertwiners are realized at r = 2");
    if (!f.is_zero() && f.degree() != (cols ? n : -n))
        throw std::domain_error("intertwiner input has the wrong degree");
    std::vector<AlgebraElement> comp;
    comp.reserve(n + 1);
    for (int j = 0; j <= n; ++j) {
        FockElement g = f;
        const LadderOp first = cols ? LadderOp{false, 3} : LadderOp{true, 1};
        const LadderOp second = cols ? LadderOp{false, 4} : LadderOp{true, 2};
        for (int x = 0; x < n - j; ++x) g = ladder_apply(first, g);
        for (int x = 0; x < j; ++x) g = ladder_apply(second, g);
        comp.push_back(phi0(g));
    }
    return cols ? assemble_col(n, comp) : assemble_row(n, comp);
}

}  // namespace

MatrixFn phi_plus(int n, const FockElement& f) {
    return tensor_map(n, f, true, phi0_plus);
}

MatrixFn psi_plus(int n, const FockElement& f) {
    return tensor_map(n, f, false, phi0_plus);
}

MatrixFn phi_minus(int n, const FockElement& f) {
    return tensor_map(n, f, true, phi0_minus);
}

MatrixFn psi_minus(int n, const FockElement& f) {
    return tensor_map(n, f, false, phi0_minus);
}

FockElement sigma_swap(const FockElement& f) {
    if (f.r() != 2) throw std::invalid_argument("sigma_swap is realized at r = 2");
    FockElement out(2, f.space());
    for (const auto& [m, c] : f.terms())
        out.add_term(FockMono{m[2], m[3], m[0], m[1], 0, 0, 0, 0}, c);
    return out;
}

GQ metaplectic_pairing(const FockElement& f, const FockElement& g) {
    if (f.r() != g.r()) throw std::invalid_argument("rank mismatch in pairing");
    const int n = 2 * f.r();
    GQ acc(0);
    for (const auto& [m, c] : f.terms()) {
        FockMono want{};
        int total = 0;
        for (int k = 0; k < n; ++k) {
            want[k] = -m[k] - 1;
            total += m[k];
        }
        auto it = g.terms().find(want);
        if (it == g.terms().end()) continue;
        acc += c * gq_pow_i(total) * it->second;
    }
    return acc;
}

}  // namespace symq
