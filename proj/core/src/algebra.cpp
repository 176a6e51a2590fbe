#include "symq/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace symq {

namespace {

// Chart order: Full4D = (z11, z12, z21, z22); Sym3D = (z11, z22, t).
constexpr const char* kFullNames[] = {"z11", "z12", "z21", "z22"};
constexpr const char* kSymNames[] = {"z11", "z22", "t"};

int checked_sum(const Mono& m) {
    int s = 0;
    for (int e : m) s += e;
    return s;
}

}  // namespace

int var_index(Dim dim, Var v) {
    if (dim == Dim::Full4D) {
        switch (v) {
            case Var::Z11: return 0;
            case Var::Z12: return 1;
            case Var::Z21: return 2;
            case Var::Z22: return 3;
            default: break;
        }
        throw std::invalid_argument("variable t is not a Full4D coordinate");
    }
    switch (v) {
        case Var::Z11: return 0;
        case Var::Z22: return 1;
        case Var::T: return 2;
        default: break;
    }
    throw std::invalid_argument("z12/z21 are not Sym3D coordinates");
}

int coord_count(Dim dim) { return dim == Dim::Full4D ? 4 : 3; }

const char* var_name(Dim dim, int index) {
    return dim == Dim::Full4D ? kFullNames[index] : kSymNames[index];
}

AlgebraElement AlgebraElement::constant(Dim dim, const GQ& c) {
    AlgebraElement r(dim);
    if (!c.is_zero()) r.terms_[Mono{0, 0, 0, 0}] = c;
    return r;
}

AlgebraElement AlgebraElement::variable(Dim dim, Var v) {
    Mono m{0, 0, 0, 0};
    m[var_index(dim, v)] = 1;
    return monomial(dim, m, GQ(1));
}

AlgebraElement AlgebraElement::monomial(Dim dim, const Mono& m, const GQ& c, int half_n) {
    AlgebraElement r(dim);
    r.half_n_ = half_n;
    if (!c.is_zero()) r.terms_[m] = c;
    r.canonicalize();
    return r;
}

AlgebraElement AlgebraElement::norm_power(Dim dim, int half_n) {
    AlgebraElement r(dim);
    r.half_n_ = half_n;
    r.terms_[Mono{0, 0, 0, 0}] = GQ(1);
    return r;
}

AlgebraElement AlgebraElement::norm_poly(Dim dim) { return norm_power(dim, 2); }

const std::map<Mono, GQ>& norm_terms(Dim dim) {
    static const std::map<Mono, GQ> full = {{Mono{1, 0, 0, 1}, GQ(1)},
                                            {Mono{0, 1, 1, 0}, GQ(-1)}};
    static const std::map<Mono, GQ> sym = {{Mono{1, 1, 0, 0}, GQ(1)},
                                           {Mono{0, 0, 2, 0}, GQ(1)}};
    return dim == Dim::Full4D ? full : sym;
}

std::optional<std::map<Mono, GQ>> divide_by_norm(Dim dim, const std::map<Mono, GQ>& p) {
    if (p.empty()) return std::map<Mono, GQ>{};
    // Leading monomial of N under the lexicographic array order is z11*z22.
    const Mono lead = dim == Dim::Full4D ? Mono{1, 0, 0, 1} : Mono{1, 1, 0, 0};
    std::map<Mono, GQ> rem = p;
    std::map<Mono, GQ> quot;
    while (!rem.empty()) {
        auto it = std::prev(rem.end());
        const Mono m = it->first;
        Mono q{};
        for (int k = 0; k < 4; ++k) {
            q[k] = m[k] - lead[k];
            if (q[k] < 0) return std::nullopt;
        }
        const GQ c = it->second;
        quot[q] = c;
        for (const auto& [nm, nc] : norm_terms(dim)) {
            Mono t{};
            for (int k = 0; k < 4; ++k) t[k] = q[k] + nm[k];
            auto jt = rem.find(t);
            GQ val = (jt == rem.end() ? GQ(0) : jt->second) - c * nc;
            if (val.is_zero()) {
                if (jt != rem.end()) rem.erase(jt);
            } else {
                rem[t] = val;
            }
        }
    }
    return quot;
}

void AlgebraElement::canonicalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
    if (terms_.empty()) {
        half_n_ = 0;
        return;
    }
    while (true) {
        auto q = divide_by_norm(dim_, terms_);
        if (!q) break;
        terms_ = std::move(*q);
        half_n_ += 2;
    }
}

bool AlgebraElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = checked_sum(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (checked_sum(m) != d) return false;
    return true;
}

int AlgebraElement::degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero element");
    if (!is_homogeneous()) throw std::domain_error("degree of inhomogeneous element");
    return checked_sum(terms_.begin()->first) + half_n_;
}

std::map<int, AlgebraElement> AlgebraElement::homogeneous_components() const {
    std::map<int, AlgebraElement> out;
    for (const auto& [m, c] : terms_) {
        int d = checked_sum(m) + half_n_;
        auto [it, fresh] = out.try_emplace(d, dim_);
        if (fresh) it->second.half_n_ = half_n_;
        it->second.terms_[m] = c;
    }
    for (auto& [d, f] : out) f.canonicalize();
    return out;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("dim mismatch in +");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.parity() != b.parity())
        throw std::invalid_argument("cannot add across the N^(1/2) grading");
    AlgebraElement r(a.dim_);
    r.half_n_ = std::min(a.half_n_, b.half_n_);
    auto lift = [&](const AlgebraElement& f) {
        std::map<Mono, GQ> t = f.terms_;
        for (int j = 0; j < (f.half_n_ - r.half_n_) / 2; ++j) {
            std::map<Mono, GQ> u;
            for (const auto& [m, c] : t)
                for (const auto& [nm, nc] : norm_terms(a.dim_)) {
                    Mono s{};
                    for (int k = 0; k < 4; ++k) s[k] = m[k] + nm[k];
                    auto [it, fresh] = u.try_emplace(s, GQ(0));
                    it->second += c * nc;
                }
            t = std::move(u);
        }
        return t;
    };
    r.terms_ = lift(a);
    for (const auto& [m, c] : lift(b)) {
        auto [it, fresh] = r.terms_.try_emplace(m, GQ(0));
        it->second += c;
    }
    r.canonicalize();
    return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a + (-b); }

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("dim mismatch in *");
    AlgebraElement r(a.dim_);
    if (a.is_zero() || b.is_zero()) return r;
    r.half_n_ = a.half_n_ + b.half_n_;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Mono s{};
            for (int k = 0; k < 4; ++k) s[k] = ma[k] + mb[k];
            auto [it, fresh] = r.terms_.try_emplace(s, GQ(0));
            it->second += ca * cb;
        }
    r.canonicalize();
    return r;
}

AlgebraElement operator*(const GQ& c, const AlgebraElement& a) {
    if (c.is_zero()) return AlgebraElement::zero(a.dim_);
    AlgebraElement r(a);
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.dim_ == b.dim_ && a.half_n_ == b.half_n_ && a.terms_ == b.terms_;
}

AlgebraElement AlgebraElement::pow(int n) const {
    if (n < 0) {
        // Only pure scalar multiples of N-powers are invertible here.
        if (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0, 0, 0}) {
            AlgebraElement r = norm_power(dim_, half_n_ * n);
            GQ c(1);
            for (int k = 0; k < -n; ++k) c = c / terms_.begin()->second;
            return c * r;
        }
        throw std::domain_error("negative power of a non-invertible element");
    }
    AlgebraElement r = constant(dim_, GQ(1));
    for (int k = 0; k < n; ++k) r *= *this;
    return r;
}

AlgebraElement AlgebraElement::differentiate(Var v) const {
    const int idx = var_index(dim_, v);
    AlgebraElement dn(dim_);  // dN/dv as a polynomial
    if (dim_ == Dim::Full4D) {
        switch (idx) {
            case 0: dn = variable(dim_, Var::Z22); break;
            case 1: dn = -variable(dim_, Var::Z21); break;
            case 2: dn = -variable(dim_, Var::Z12); break;
            case 3: dn = variable(dim_, Var::Z11); break;
        }
    } else {
        switch (idx) {
            case 0: dn = variable(dim_, Var::Z22); break;
            case 1: dn = variable(dim_, Var::Z11); break;
            case 2: dn = GQ(2) * variable(dim_, Var::T); break;
        }
    }
    AlgebraElement dp(dim_);  // d(poly part)
    for (const auto& [m, c] : terms_) {
        if (m[idx] == 0) continue;
        Mono s = m;
        s[idx] -= 1;
        auto [it, fresh] = dp.terms_.try_emplace(s, GQ(0));
        it->second += GQ(Rational(m[idx])) * c;
    }
    dp.canonicalize();
    if (half_n_ == 0) return dp;

    AlgebraElement poly(dim_);
    poly.terms_ = terms_;
    AlgebraElement inner =
        GQ(Rational(half_n_, 2)) * (dn * poly) + AlgebraElement::norm_poly(dim_) * dp;
    AlgebraElement r = AlgebraElement::norm_power(dim_, half_n_ - 2) * inner;
    return r;
}

AlgebraElement AlgebraElement::invert_substitute() const {
    if (is_zero()) return AlgebraElement::zero(dim_);
    // Coordinate images without their N^{-1} factors; a monomial of total
    // degree d picks up N^{-d}, and N^nu maps to N^{-nu}.
    std::array<std::pair<Mono, GQ>, 4> image{};
    if (dim_ == Dim::Full4D) {
        image[0] = {Mono{0, 0, 0, 1}, GQ(1)};   // z11 -> z22
        image[1] = {Mono{0, 1, 0, 0}, GQ(-1)};  // z12 -> -z12
        image[2] = {Mono{0, 0, 1, 0}, GQ(-1)};  // z21 -> -z21
        image[3] = {Mono{1, 0, 0, 0}, GQ(1)};   // z22 -> z11
    } else {
        image[0] = {Mono{0, 1, 0, 0}, GQ(1)};   // z11 -> z22
        image[1] = {Mono{1, 0, 0, 0}, GQ(1)};   // z22 -> z11
        image[2] = {Mono{0, 0, 1, 0}, GQ(-1)};  // t -> -t
    }
    AlgebraElement acc = AlgebraElement::zero(dim_);
    for (const auto& [m, c] : terms_) {
        Mono s{0, 0, 0, 0};
        GQ coeff = c;
        for (int k = 0; k < coord_count(dim_); ++k)
            for (int j = 0; j < m[k]; ++j) {
                for (int x = 0; x < 4; ++x) s[x] += image[k].first[x];
                coeff *= image[k].second;
            }
        acc += monomial(dim_, s, coeff, -2 * checked_sum(m));
    }
    return norm_power(dim_, -half_n_) * acc;
}

AlgebraElement AlgebraElement::conjugate_substitute() const {
    AlgebraElement r(dim_);
    r.half_n_ = half_n_;
    for (const auto& [m, c] : terms_) {
        Mono s = m;
        GQ coeff = c;
        if (dim_ == Dim::Full4D) {
            std::swap(s[0], s[3]);
            if ((m[1] + m[2]) % 2 != 0) coeff = -coeff;
        } else {
            std::swap(s[0], s[1]);
            if (m[2] % 2 != 0) coeff = -coeff;
        }
        r.terms_[s] = coeff;
    }
    r.canonicalize();
    return r;
}

Cx AlgebraElement::evaluate(const EvalPoint& p) const {
    const Cx n = norm_at(dim_, p.coords);
    const Cx b2 = p.branch * p.branch;
    if (std::abs(b2 - n) > 1e-12 * std::max(1.0, std::abs(n)))
        throw std::domain_error("branch value inconsistent with N at the point");
    Cx acc = 0.0;
    for (const auto& [m, c] : terms_) {
        Cx v(static_cast<double>(c.re()), static_cast<double>(c.im()));
        for (int k = 0; k < coord_count(dim_); ++k)
            for (int j = 0; j < m[k]; ++j) v *= p.coords[k];
        acc += v;
    }
    Cx nf = 1.0;
    if (half_n_ != 0) {
        const int e = half_n_ < 0 ? -half_n_ : half_n_;
        for (int j = 0; j < e; ++j) nf *= p.branch;
        if (half_n_ < 0) nf = 1.0 / nf;
    }
    return acc * nf;
}

GQ AlgebraElement::evaluate_exact(const std::array<GQ, 4>& coords, const GQ& branch) const {
    GQ acc(0);
    for (const auto& [m, c] : terms_) {
        GQ v = c;
        for (int k = 0; k < coord_count(dim_); ++k)
            for (int j = 0; j < m[k]; ++j) v *= coords[k];
        acc += v;
    }
    if (half_n_ == 0) return acc;
    const GQ n = norm_at(dim_, coords);
    GQ f(1);
    if (half_n_ % 2 == 0) {
        int e = half_n_ / 2;
        const GQ base = n;
        for (int j = 0; j < (e < 0 ? -e : e); ++j) f *= base;
        if (e < 0) f = GQ(1) / f;
    } else {
        if (branch * branch != n)
            throw std::domain_error("exact branch value inconsistent with N");
        int e = half_n_;
        for (int j = 0; j < (e < 0 ? -e : e); ++j) f *= branch;
        if (e < 0) f = GQ(1) / f;
    }
    return acc * f;
}

GQ AlgebraElement::coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GQ(0) : it->second;
}

std::string AlgebraElement::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    if (half_n_ != 0) {
        os << "N^(" << half_n_;
        os << "/2)*";
    }
    bool first = true;
    os << "(";
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int k = 0; k < coord_count(dim_); ++k)
            if (m[k] > 0) {
                os << "*" << var_name(dim_, k);
                if (m[k] > 1) os << "^" << m[k];
            }
    }
    os << ")";
    return os.str();
}

AlgebraElement restrict_to_sym(const AlgebraElement& f) {
    if (f.dim() == Dim::Sym3D) return f;
    AlgebraElement acc = AlgebraElement::zero(Dim::Sym3D);
    for (const auto& [m, c] : f.terms()) {
        Mono s{m[0], m[3], m[1] + m[2], 0};
        acc += AlgebraElement::monomial(Dim::Sym3D, s, c * gq_pow_i(m[1] + m[2]));
    }
    return AlgebraElement::norm_power(Dim::Sym3D, f.half_n()) * acc;
}

AlgebraElement laplacian(const AlgebraElement& f) {
    if (f.dim() == Dim::Sym3D) {
        return GQ(4) * f.differentiate(Var::Z11).differentiate(Var::Z22) +
               f.differentiate(Var::T).differentiate(Var::T);
    }
    return GQ(4) * (f.differentiate(Var::Z11).differentiate(Var::Z22) -
                    f.differentiate(Var::Z12).differentiate(Var::Z21));
}

GQ norm_at(Dim dim, const std::array<GQ, 4>& c) {
    if (dim == Dim::Full4D) return c[0] * c[3] - c[1] * c[2];
    return c[0] * c[1] + c[2] * c[2];
}

Cx norm_at(Dim dim, const std::array<Cx, 4>& c) {
    if (dim == Dim::Full4D) return c[0] * c[3] - c[1] * c[2];
    return c[0] * c[1] + c[2] * c[2];
}

}  // namespace symq
