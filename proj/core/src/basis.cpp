#include "symq/basis.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace symq {

namespace {

std::mutex g_rml_mutex;
std::mutex g_tcoef_mutex;
std::mutex g_solver_mutex;

const AlgebraElement& zero_sym() {
    static const AlgebraElement z = AlgebraElement::zero(Dim::Sym3D);
    return z;
}

AlgebraElement build_solid_harmonic(int l, int m);

const AlgebraElement& rml_unlocked(int l, int m) {
    static std::map<std::pair<int, int>, AlgebraElement> cache;
    if (l < 0 || m < -l || m > l) return zero_sym();
    auto it = cache.find({l, m});
    if (it != cache.end()) return it->second;
    AlgebraElement v = build_solid_harmonic(l, m);
    auto [jt, ignored] = cache.emplace(std::make_pair(l, m), std::move(v));
    return jt->second;
}

AlgebraElement build_solid_harmonic(int l, int m) {
    const Dim d = Dim::Sym3D;
    if (l == 0) return AlgebraElement::constant(d, GQ(1));
    const AlgebraElement z11 = AlgebraElement::variable(d, Var::Z11);
    const AlgebraElement z22 = AlgebraElement::variable(d, Var::Z22);
    const AlgebraElement t = AlgebraElement::variable(d, Var::T);
    const AlgebraElement n = AlgebraElement::norm_poly(d);
    const int lp = l - 1;
    if (m == l) return GQ(Rational(-(2 * lp + 1))) * (z11 * rml_unlocked(lp, lp));
    if (m == -l) return GQ(Rational(1, 2 * lp + 2)) * (z22 * rml_unlocked(lp, -lp));
    AlgebraElement num = GQ(Rational(2 * lp + 1)) * (t * rml_unlocked(lp, m)) -
                         GQ(Rational(lp + m)) * (n * rml_unlocked(lp - 1, m));
    return GQ(Rational(1, lp - m + 1)) * num;
}

// Term map of N^times * p, multiplied out (no canonical re-extraction).
std::map<Mono, GQ> n_lift(Dim dim, std::map<Mono, GQ> terms, int times) {
    for (int x = 0; x < times; ++x) {
        std::map<Mono, GQ> nxt;
        for (const auto& [mm, cc] : terms)
            for (const auto& [nm, nc] : norm_terms(dim)) {
                Mono t{};
                for (int k = 0; k < 4; ++k) t[k] = mm[k] + nm[k];
                auto [it, fresh] = nxt.try_emplace(t, GQ(0));
                it->second += cc * nc;
            }
        terms = std::move(nxt);
    }
    return terms;
}

std::vector<Mono> monomials_of_degree(Dim dim, int d) {
    std::vector<Mono> out;
    if (dim == Dim::Sym3D) {
        for (int a = d; a >= 0; --a)
            for (int b = d - a; b >= 0; --b) out.push_back(Mono{a, b, d - a - b, 0});
    } else {
        for (int a = d; a >= 0; --a)
            for (int b = d - a; b >= 0; --b)
                for (int c = d - a - b; c >= 0; --c)
                    out.push_back(Mono{a, b, c, d - a - b - c});
    }
    return out;
}

std::vector<std::vector<GQ>> invert_matrix(std::vector<std::vector<GQ>> m) {
    const size_t n = m.size();
    std::vector<std::vector<GQ>> inv(n, std::vector<GQ>(n, GQ(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = GQ(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::logic_error("expansion basis is singular");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        const GQ p = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            const GQ f = m[r][col];
            for (size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

struct DegreeSolver {
    std::map<Mono, int> index_of;
    struct Label {
        int a, b, c, d;  // Sym3D: (j2, l, m, -); Full4D: (j, l2, n2, m2)
    };
    std::vector<Label> labels;
    std::vector<std::vector<GQ>> inv;  // basis coordinates = inv * monomial vector
};

const DegreeSolver& degree_solver(Dim dim, int d) {
    static std::map<std::pair<int, int>, DegreeSolver> cache;
    std::lock_guard<std::mutex> lock(g_solver_mutex);
    const auto key = std::make_pair(dim == Dim::Sym3D ? 0 : 1, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    DegreeSolver s;
    const std::vector<Mono> monos = monomials_of_degree(dim, d);
    for (size_t i = 0; i < monos.size(); ++i) s.index_of[monos[i]] = static_cast<int>(i);
    const size_t n = monos.size();
    std::vector<std::vector<GQ>> cols;
    if (dim == Dim::Sym3D) {
        for (int j = 0; 2 * j <= d; ++j) {
            const int l = d - 2 * j;
            for (int m = -l; m <= l; ++m) {
                const AlgebraElement& h = solid_harmonic(l, m);
                auto plain = n_lift(dim, h.terms(), j + h.half_n() / 2);
                std::vector<GQ> v(n, GQ(0));
                for (const auto& [mm, cc] : plain) v[s.index_of.at(mm)] = cc;
                cols.push_back(std::move(v));
                s.labels.push_back({2 * j, l, m, 0});
            }
        }
    } else {
        for (int j = 0; 2 * j <= d; ++j) {
            const int l2 = d - 2 * j;
            for (int n2 = -l2; n2 <= l2; n2 += 2)
                for (int m2 = -l2; m2 <= l2; m2 += 2) {
                    const AlgebraElement& h = matrix_coeff(l2, n2, m2);
                    auto plain = n_lift(dim, h.terms(), j + h.half_n() / 2);
                    std::vector<GQ> v(n, GQ(0));
                    for (const auto& [mm, cc] : plain) v[s.index_of.at(mm)] = cc;
                    cols.push_back(std::move(v));
                    s.labels.push_back({j, l2, n2, m2});
                }
        }
    }
    if (cols.size() != n) throw std::logic_error("basis count does not match dimension");
    std::vector<std::vector<GQ>> mat(n, std::vector<GQ>(n, GQ(0)));
    for (size_t c = 0; c < cols.size(); ++c)
        for (size_t r = 0; r < n; ++r) mat[r][c] = cols[c][r];
    s.inv = invert_matrix(std::move(mat));
    auto [jt, ignored] = cache.emplace(key, std::move(s));
    return jt->second;
}

}  // namespace

const AlgebraElement& solid_harmonic(int l, int m) {
    std::lock_guard<std::mutex> lock(g_rml_mutex);
    return rml_unlocked(l, m);
}

const AlgebraElement& matrix_coeff(int l2, int n2, int m2) {
    if (l2 < 0 || std::abs(n2) > l2 || std::abs(m2) > l2 || (n2 - l2) % 2 != 0 ||
        (m2 - l2) % 2 != 0)
        throw std::out_of_range("matrix_coeff index out of range");
    std::lock_guard<std::mutex> lock(g_tcoef_mutex);
    static std::map<std::tuple<int, int, int>, AlgebraElement> cache;
    const auto key = std::make_tuple(l2, n2, m2);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    // Coefficient of s^{l-n} in (s z11 + z21)^{l-m} (s z12 + z22)^{l+m}.
    const Dim d = Dim::Full4D;
    const long a = (l2 - m2) / 2;
    const long b = (l2 + m2) / 2;
    const long target = (l2 - n2) / 2;
    AlgebraElement sum = AlgebraElement::zero(d);
    for (long j1 = 0; j1 <= a; ++j1) {
        const long j2 = target - j1;
        if (j2 < 0 || j2 > b) continue;
        const GQ coeff = GQ(binomial(a, j1) * binomial(b, j2));
        Mono mono{static_cast<int>(j1), static_cast<int>(j2), static_cast<int>(a - j1),
                  static_cast<int>(b - j2)};
        sum += AlgebraElement::monomial(d, mono, coeff);
    }
    auto [jt, ignored] = cache.emplace(key, std::move(sum));
    return jt->second;
}

AlgebraElement matrix_coeff_or_zero(int l2, int n2, int m2) {
    if (l2 < 0 || std::abs(n2) > l2 || std::abs(m2) > l2 || (n2 - l2) % 2 != 0 ||
        (m2 - l2) % 2 != 0)
        return AlgebraElement::zero(Dim::Full4D);
    return matrix_coeff(l2, n2, m2);
}

std::map<RIndex, GQ> expand_sym(const AlgebraElement& f) {
    if (f.dim() != Dim::Sym3D) throw std::invalid_argument("expand_sym: Sym3D only");
    std::map<RIndex, GQ> out;
    for (const auto& [deg, comp] : f.homogeneous_components()) {
        const int d = deg - comp.half_n();
        const DegreeSolver& s = degree_solver(Dim::Sym3D, d);
        std::vector<GQ> v(s.index_of.size(), GQ(0));
        for (const auto& [mm, cc] : comp.terms()) v[s.index_of.at(mm)] = cc;
        for (size_t row = 0; row < s.inv.size(); ++row) {
            GQ c(0);
            for (size_t k = 0; k < v.size(); ++k)
                if (!v[k].is_zero()) c += s.inv[row][k] * v[k];
            if (c.is_zero()) continue;
            const auto& lab = s.labels[row];
            out[RIndex{lab.a + comp.half_n(), lab.b, lab.c}] = c;
        }
    }
    return out;
}

std::map<TIndex, GQ> expand_full(const AlgebraElement& f) {
    if (f.dim() != Dim::Full4D) throw std::invalid_argument("expand_full: Full4D only");
    if (f.parity() != 0)
        throw std::invalid_argument("expand_full: integer N-grading required");
    std::map<TIndex, GQ> out;
    for (const auto& [deg, comp] : f.homogeneous_components()) {
        const int d = deg - comp.half_n();
        const DegreeSolver& s = degree_solver(Dim::Full4D, d);
        std::vector<GQ> v(s.index_of.size(), GQ(0));
        for (const auto& [mm, cc] : comp.terms()) v[s.index_of.at(mm)] = cc;
        for (size_t row = 0; row < s.inv.size(); ++row) {
            GQ c(0);
            for (size_t k = 0; k < v.size(); ++k)
                if (!v[k].is_zero()) c += s.inv[row][k] * v[k];
            if (c.is_zero()) continue;
            const auto& lab = s.labels[row];
            out[TIndex{lab.a + comp.half_n() / 2, lab.b, lab.c, lab.d}] = c;
        }
    }
    return out;
}

AlgebraElement reconstruct(Dim dim, const std::map<RIndex, GQ>& coeffs) {
    AlgebraElement acc = AlgebraElement::zero(dim);
    for (const auto& [ix, c] : coeffs)
        acc += c * (AlgebraElement::norm_power(dim, ix.k2) * solid_harmonic(ix.l, ix.m));
    return acc;
}

AlgebraElement reconstruct(const std::map<TIndex, GQ>& coeffs) {
    AlgebraElement acc = AlgebraElement::zero(Dim::Full4D);
    for (const auto& [ix, c] : coeffs)
        acc += c * (AlgebraElement::norm_power(Dim::Full4D, 2 * ix.k) *
                    matrix_coeff(ix.l2, ix.n2, ix.m2));
    return acc;
}

std::map<int, AlgebraElement> harmonic_decompose(const AlgebraElement& p) {
    std::map<int, AlgebraElement> out;
    if (p.dim() == Dim::Sym3D) {
        for (const auto& [ix, c] : expand_sym(p)) {
            auto [it, fresh] = out.try_emplace(ix.k2, AlgebraElement::zero(p.dim()));
            it->second += c * solid_harmonic(ix.l, ix.m);
        }
    } else {
        for (const auto& [ix, c] : expand_full(p)) {
            auto [it, fresh] = out.try_emplace(2 * ix.k, AlgebraElement::zero(p.dim()));
            it->second += c * matrix_coeff(ix.l2, ix.n2, ix.m2);
        }
    }
    return out;
}

}  // namespace symq
