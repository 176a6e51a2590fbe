#include "symq/actions.hpp"

#include <stdexcept>

namespace symq {

namespace {

enum class MatToken { A, At, B, C, D, AZ, ZAt, ZD, CZ, ZC, ZCZ };

enum class TermKind { DTrace, STrace, LMul, RMul, TLeft, TRight };

struct Term {
    TermKind kind;
    MatToken token;
    GQ coeff;
};

using Table = std::vector<Term>;

Term dt(MatToken t, GQ c = GQ(1)) { return {TermKind::DTrace, t, std::move(c)}; }
Term st(GQ c, MatToken t) { return {TermKind::STrace, t, std::move(c)}; }
Term lm(MatToken t, GQ c = GQ(1)) { return {TermKind::LMul, t, std::move(c)}; }
Term rm(MatToken t, GQ c = GQ(1)) { return {TermKind::RMul, t, std::move(c)}; }
Term tl(MatToken t, GQ c = GQ(1)) { return {TermKind::TLeft, t, std::move(c)}; }
Term tr_(MatToken t, GQ c = GQ(1)) { return {TermKind::TRight, t, std::move(c)}; }

const GQ kHalf{Rational(1, 2)};

// Block tables of the gl(2,H_C) actions; the restricted sp(4,C) form is
// A-table(A) + D-table(-A^T) + B/C tables.
struct GlTables {
    Table a, b, c, d;
};

const GlTables& gl_tables(ActionName n) {
    static const std::map<ActionName, GlTables> tables = [] {
        std::map<ActionName, GlTables> t;
        using M = MatToken;
        t[ActionName::PiL] = {
            {dt(M::AZ, GQ(-1))},
            {dt(M::B, GQ(-1))},
            {dt(M::ZCZ), st(GQ(1), M::CZ), lm(M::CZ)},
            {dt(M::ZD), st(GQ(1), M::D), lm(M::D)}};
        t[ActionName::PiR] = {
            {dt(M::AZ, GQ(-1)), st(GQ(-1), M::A), rm(M::A, GQ(-1))},
            {dt(M::B, GQ(-1))},
            {dt(M::ZCZ), st(GQ(1), M::ZC), rm(M::ZC)},
            {dt(M::ZD)}};
        t[ActionName::PiLa] = {
            {dt(M::AZ, GQ(-1)), st(GQ(-2), M::A), lm(M::A)},
            {dt(M::B, GQ(-1))},
            {dt(M::ZCZ), st(GQ(2), M::ZC), lm(M::ZC, GQ(-1))},
            {dt(M::ZD)}};
        t[ActionName::PiRa] = {
            {dt(M::AZ, GQ(-1))},
            {dt(M::B, GQ(-1))},
            {dt(M::ZCZ), st(GQ(2), M::CZ), rm(M::CZ, GQ(-1))},
            {dt(M::ZD), st(GQ(2), M::D), rm(M::D, GQ(-1))}};
        t[ActionName::PiDl] = {
            {dt(M::AZ, GQ(-1))},
            {dt(M::B, GQ(-1))},
            {dt(M::ZCZ), st(GQ(1), M::CZ), tl(M::CZ)},
            {dt(M::ZD), st(GQ(1), M::D), tl(M::D)}};
        t[ActionName::PiDr] = {
            {dt(M::AZ, GQ(-1)), st(GQ(-1), M::A), tr_(M::A, GQ(-1))},
            {dt(M::B, GQ(-1))},
            {dt(M::ZCZ), st(GQ(1), M::ZC), tr_(M::ZC)},
            {dt(M::ZD)}};
        t[ActionName::Rho] = {
            {dt(M::AZ, GQ(-1)), st(GQ(-2), M::A)},
            {dt(M::B, GQ(-1))},
            {dt(M::ZCZ), st(GQ(4), M::CZ)},
            {dt(M::ZD), st(GQ(2), M::D)}};
        t[ActionName::RhoPrime] = {
            {dt(M::AZ, GQ(-1))}, {dt(M::B, GQ(-1))}, {dt(M::ZCZ)}, {dt(M::ZD)}};
        t[ActionName::Rho1] = {
            {dt(M::AZ, GQ(-1)), st(GQ(-1), M::A)},
            {dt(M::B, GQ(-1))},
            {dt(M::ZCZ), st(GQ(2), M::CZ)},
            {dt(M::ZD), st(GQ(1), M::D)}};
        t[ActionName::Rho2Prime] = {
            {dt(M::AZ, GQ(-1)), st(GQ(-1), M::A), lm(M::A)},
            {dt(M::B, GQ(-1))},
            {dt(M::ZCZ), st(GQ(2), M::CZ), lm(M::ZC, GQ(-1)), rm(M::CZ, GQ(-1))},
            {dt(M::ZD), st(GQ(1), M::D), rm(M::D, GQ(-1))}};
        t[ActionName::Rho2] = {
            {dt(M::AZ, GQ(-1)), st(GQ(-1), M::A), rm(M::A, GQ(-1))},
            {dt(M::B, GQ(-1))},
            {dt(M::ZCZ), st(GQ(2), M::CZ), lm(M::CZ), rm(M::ZC)},
            {dt(M::ZD), st(GQ(1), M::D), lm(M::D)}};
        t[ActionName::PiLPrime] = {
            {dt(M::AZ, GQ(-1)), st(GQ(-1), M::A), lm(M::A)},
            {dt(M::B, GQ(-1))},
            {dt(M::ZCZ), st(GQ(1), M::ZC), lm(M::ZC, GQ(-1))},
            {dt(M::ZD)}};
        t[ActionName::PiRPrime] = {
            {dt(M::AZ, GQ(-1))},
            {dt(M::B, GQ(-1))},
            {dt(M::ZCZ), st(GQ(1), M::CZ), rm(M::CZ, GQ(-1))},
            {dt(M::ZD), st(GQ(1), M::D), rm(M::D, GQ(-1))}};
        return t;
    }();
    auto it = tables.find(n);
    if (it == tables.end()) throw std::logic_error("no gl tables for this action");
    return it->second;
}

// Tables of the symplectic-only actions: (A, 0; 0, -A^T), symmetric B, C.
struct SpTables {
    Table a, b, c;
};

const SpTables& sp_tables(ActionName n, int weight_sum) {
    static std::map<std::pair<ActionName, int>, SpTables> cache;
    auto key = std::make_pair(n, weight_sum);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    using M = MatToken;
    SpTables t;
    switch (n) {
        case ActionName::RhoAB:
            t = {{dt(M::AZ, GQ(-1)), dt(M::ZAt, GQ(-1)), st(GQ(Rational(-weight_sum)), M::A)},
                 {dt(M::B, GQ(-1))},
                 {dt(M::ZCZ), st(GQ(Rational(weight_sum)), M::CZ)}};
            break;
        case ActionName::Pi3L:
            t = {{dt(M::AZ, GQ(-1)), dt(M::ZAt, GQ(-1)), st(-kHalf, M::A), lm(M::At, GQ(-1))},
                 {dt(M::B, GQ(-1))},
                 {dt(M::ZCZ), st(kHalf, M::CZ), lm(M::CZ)}};
            break;
        case ActionName::Pi3R:
            t = {{dt(M::AZ, GQ(-1)), dt(M::ZAt, GQ(-1)), st(-kHalf, M::A), rm(M::A, GQ(-1))},
                 {dt(M::B, GQ(-1))},
                 {dt(M::ZCZ), st(kHalf, M::ZC), rm(M::ZC)}};
            break;
        case ActionName::Pi03Dim:
            t = {{dt(M::AZ, GQ(-1)), dt(M::ZAt, GQ(-1)), st(-kHalf, M::A)},
                 {dt(M::B, GQ(-1))},
                 {dt(M::ZCZ), st(kHalf, M::CZ)}};
            break;
        case ActionName::Rho2Star:
            t = {{dt(M::AZ, GQ(-1)), dt(M::ZAt, GQ(-1)), st(GQ(-1), M::A), lm(M::At, GQ(-1)),
                  rm(M::A, GQ(-1))},
                 {dt(M::B, GQ(-1))},
                 {dt(M::ZCZ), st(GQ(1), M::ZC), lm(M::CZ), rm(M::ZC)}};
            break;
        default:
            throw std::logic_error("no sp tables for this action");
    }
    auto [jt, ignored] = cache.emplace(key, std::move(t));
    return jt->second;
}

bool is_sp_only(ActionName n) {
    switch (n) {
        case ActionName::RhoAB:
        case ActionName::Pi3L:
        case ActionName::Pi3R:
        case ActionName::Pi03Dim:
        case ActionName::Rho2Star:
            return true;
        default:
            return false;
    }
}

MatrixFn token_value(MatToken token, Dim dim, const CMat2& a, const CMat2& b, const CMat2& c,
                     const CMat2& d) {
    auto cm = [&](const CMat2& m) { return MatrixFn::constant(Shape::Quat, dim, m); };
    const MatrixFn z = MatrixFn::z_matrix(dim);
    switch (token) {
        case MatToken::A: return cm(a);
        case MatToken::At: return cm(a.transpose());
        case MatToken::B: return cm(b);
        case MatToken::C: return cm(c);
        case MatToken::D: return cm(d);
        case MatToken::AZ: return cm(a) * z;
        case MatToken::ZAt: return z * cm(a.transpose());
        case MatToken::ZD: return z * cm(d);
        case MatToken::CZ: return cm(c) * z;
        case MatToken::ZC: return z * cm(c);
        case MatToken::ZCZ: return z * cm(c) * z;
    }
    throw std::logic_error("unreachable");
}

// The matrix of derivations used inside tr(M d): d_{jk} differentiates by
// the coordinate z_{kj}, with the symmetric chart using -(i/2) d/dt off the
// diagonal.
AlgebraElement trace_derivative(const MatrixFn& m, const AlgebraElement& f) {
    const Dim dim = f.dim();
    if (dim == Dim::Full4D) {
        return m.at(0, 0) * f.differentiate(Var::Z11) + m.at(0, 1) * f.differentiate(Var::Z12) +
               m.at(1, 0) * f.differentiate(Var::Z21) + m.at(1, 1) * f.differentiate(Var::Z22);
    }
    const GQ mhalf_i = GQ(Rational(0), Rational(-1, 2));
    AlgebraElement dt_f = f.differentiate(Var::T);
    return m.at(0, 0) * f.differentiate(Var::Z11) + m.at(1, 1) * f.differentiate(Var::Z22) +
           mhalf_i * ((m.at(0, 1) + m.at(1, 0)) * dt_f);
}

MatrixFn apply_tables(const Table& table, const CMat2& a, const CMat2& b, const CMat2& c,
                      const CMat2& d, const MatrixFn& f) {
    MatrixFn out = MatrixFn::zero(f.shape(), f.dim(), f.rank());
    for (const Term& term : table) {
        MatrixFn m = token_value(term.token, f.dim(), a, b, c, d);
        switch (term.kind) {
            case TermKind::DTrace:
                out = out + term.coeff * f.map_entries([&](const AlgebraElement& e) {
                    return trace_derivative(m, e);
                });
                break;
            case TermKind::STrace: {
                AlgebraElement t = m.trace();
                out = out + term.coeff * (t * f);
                break;
            }
            case TermKind::LMul:
                out = out + term.coeff * (m * f);
                break;
            case TermKind::RMul:
                out = out + term.coeff * (f * m);
                break;
            case TermKind::TLeft:
                out = out + term.coeff * tensor_pair_left(m, f);
                break;
            case TermKind::TRight:
                out = out + term.coeff * tensor_pair_right(m, f);
                break;
        }
    }
    return out;
}

}  // namespace

std::optional<ActionId> parse_action(const std::string& name, Dim dim) {
    static const std::map<std::string, ActionName> names = {
        {"pi_l", ActionName::PiL},           {"pi_r", ActionName::PiR},
        {"pi_la", ActionName::PiLa},         {"pi_ra", ActionName::PiRa},
        {"pi_dl", ActionName::PiDl},         {"pi_dr", ActionName::PiDr},
        {"rho2_prime", ActionName::Rho2Prime}, {"rho2_star", ActionName::Rho2Star},
        {"rho_2", ActionName::Rho2},         {"pi_l_prime", ActionName::PiLPrime},
        {"pi_r_prime", ActionName::PiRPrime}, {"pi3_l", ActionName::Pi3L},
        {"pi3_r", ActionName::Pi3R},         {"rho", ActionName::Rho},
        {"rho_prime", ActionName::RhoPrime}, {"rho_1", ActionName::Rho1},
        {"pi0_3dim", ActionName::Pi03Dim},
    };
    if (name.rfind("rho_ab", 0) == 0) {
        auto open = name.find('(');
        auto comma = name.find(',');
        auto close = name.find(')');
        if (open == std::string::npos || comma == std::string::npos || close == std::string::npos)
            return std::nullopt;
        int alpha = std::stoi(name.substr(open + 1, comma - open - 1));
        int beta = std::stoi(name.substr(comma + 1, close - comma - 1));
        return ActionId::rho_ab(alpha, beta);
    }
    auto it = names.find(name);
    if (it == names.end()) return std::nullopt;
    ActionName n = it->second;
    if (is_sp_only(n) && dim == Dim::Full4D) return std::nullopt;
    return ActionId{n, dim, 0};
}

std::string action_name(const ActionId& id) {
    switch (id.name) {
        case ActionName::PiL: return "pi_l";
        case ActionName::PiR: return "pi_r";
        case ActionName::PiLa: return "pi_la";
        case ActionName::PiRa: return "pi_ra";
        case ActionName::PiDl: return "pi_dl";
        case ActionName::PiDr: return "pi_dr";
        case ActionName::RhoAB: return "rho_ab(" + std::to_string(id.weight_sum) + ",0)";
        case ActionName::Rho2Prime: return "rho2_prime";
        case ActionName::Rho2Star: return "rho2_star";
        case ActionName::Rho2: return "rho_2";
        case ActionName::PiLPrime: return "pi_l_prime";
        case ActionName::PiRPrime: return "pi_r_prime";
        case ActionName::Pi3L: return "pi3_l";
        case ActionName::Pi3R: return "pi3_r";
        case ActionName::Rho: return "rho";
        case ActionName::RhoPrime: return "rho_prime";
        case ActionName::Rho1: return "rho_1";
        case ActionName::Pi03Dim: return "pi0_3dim";
    }
    return "?";
}

std::vector<std::string> action_vocabulary() {
    return {"pi_l",  "pi_r",  "pi_la",      "pi_ra",      "pi_dl",      "pi_dr",
            "rho_ab(a,b)", "rho2_prime", "rho2_star", "rho_2", "pi_l_prime", "pi_r_prime",
            "pi3_l", "pi3_r", "rho",        "rho_prime",  "rho_1",      "pi0_3dim"};
}

Shape action_shape(const ActionId& id) {
    switch (id.name) {
        case ActionName::PiL:
        case ActionName::PiLa:
        case ActionName::PiLPrime:
        case ActionName::Pi3L:
            return Shape::Spinor;
        case ActionName::PiR:
        case ActionName::PiRa:
        case ActionName::PiRPrime:
        case ActionName::Pi3R:
            return Shape::CoSpinor;
        case ActionName::PiDl:
        case ActionName::PiDr:
        case ActionName::Rho2Prime:
        case ActionName::Rho2Star:
        case ActionName::Rho2:
            return Shape::Quat;
        default:
            return Shape::Scalar;
    }
}

bool action_accepts_gl(const ActionId& id) {
    return !is_sp_only(id.name) && id.dim == Dim::Full4D;
}

MatrixFn apply_action(const ActionId& id, const LieElement& x, const MatrixFn& f) {
    if (f.shape() != action_shape(id))
        throw std::invalid_argument("apply_action: shape mismatch for " + action_name(id));
    if (f.dim() != id.dim) throw std::invalid_argument("apply_action: dim mismatch");
    if (is_sp_only(id.name) || id.dim == Dim::Sym3D) {
        if (!x.sp4_member())
            throw std::invalid_argument("apply_action: sp(4,C) membership required");
    }
    if (is_sp_only(id.name)) {
        const SpTables& t = sp_tables(id.name, id.weight_sum);
        MatrixFn out = apply_tables(t.a, x.A, x.B, x.C, x.D, f);
        out = out + apply_tables(t.b, x.A, x.B, x.C, x.D, f);
        out = out + apply_tables(t.c, x.A, x.B, x.C, x.D, f);
        return out;
    }
    const GlTables& t = gl_tables(id.name);
    MatrixFn out = apply_tables(t.a, x.A, x.B, x.C, x.D, f);
    out = out + apply_tables(t.b, x.A, x.B, x.C, x.D, f);
    out = out + apply_tables(t.c, x.A, x.B, x.C, x.D, f);
    out = out + apply_tables(t.d, x.A, x.B, x.C, x.D, f);
    return out;
}

namespace {

// Inversion data: f -> sign * N^{p2/2} * pre * (f o inv) * post.
enum class Factor { None, Z, Zplus, ZplusT };

struct InversionRule {
    Factor pre = Factor::None;
    Factor post = Factor::None;
    int p2 = 0;
    int sign = 1;
};

InversionRule inversion_rule(const ActionId& id) {
    switch (id.name) {
        case ActionName::PiL: return {Factor::Zplus, Factor::None, -4, 1};
        case ActionName::PiR: return {Factor::None, Factor::Zplus, -4, -1};
        case ActionName::PiLa: return {Factor::Z, Factor::None, -4, -1};
        case ActionName::PiRa: return {Factor::None, Factor::Z, -4, 1};
        case ActionName::PiDl: return {Factor::Zplus, Factor::ZplusT, -6, 1};
        case ActionName::PiDr: return {Factor::ZplusT, Factor::Zplus, -6, 1};
        case ActionName::RhoAB: return {Factor::None, Factor::None, -2 * id.weight_sum, 1};
        case ActionName::Rho2Prime: return {Factor::Z, Factor::Z, -4, -1};
        case ActionName::Rho2Star: return {Factor::Zplus, Factor::Zplus, -6, -1};
        case ActionName::Rho2: return {Factor::Zplus, Factor::Zplus, -8, -1};
        case ActionName::PiLPrime: return {Factor::Z, Factor::None, -2, -1};
        case ActionName::PiRPrime: return {Factor::None, Factor::Z, -2, 1};
        case ActionName::Pi3L: return {Factor::Zplus, Factor::None, -3, 1};
        case ActionName::Pi3R: return {Factor::None, Factor::Zplus, -3, -1};
        case ActionName::Rho: return {Factor::None, Factor::None, -8, 1};
        case ActionName::RhoPrime: return {Factor::None, Factor::None, 0, 1};
        case ActionName::Rho1: return {Factor::None, Factor::None, -4, 1};
        case ActionName::Pi03Dim: return {Factor::None, Factor::None, -1, 1};
    }
    throw std::logic_error("unreachable");
}

MatrixFn factor_matrix(Factor f, Dim dim) {
    switch (f) {
        case Factor::Z: return MatrixFn::z_matrix(dim);
        case Factor::Zplus: return MatrixFn::z_conjugate(dim);
        case Factor::ZplusT: return MatrixFn::z_conjugate(dim).transpose();
        case Factor::None: break;
    }
    throw std::logic_error("unreachable");
}

}  // namespace

MatrixFn apply_inversion(const ActionId& id, const MatrixFn& f) {
    if (f.shape() != action_shape(id))
        throw std::invalid_argument("apply_inversion: shape mismatch");
    if (f.dim() != id.dim) throw std::invalid_argument("apply_inversion: dim mismatch");
    const InversionRule rule = inversion_rule(id);
    MatrixFn g = f.map_entries([](const AlgebraElement& e) { return e.invert_substitute(); });
    if (rule.pre != Factor::None) g = factor_matrix(rule.pre, f.dim()) * g;
    if (rule.post != Factor::None) g = g * factor_matrix(rule.post, f.dim());
    AlgebraElement scale = AlgebraElement::norm_power(f.dim(), rule.p2);
    if (rule.sign < 0) scale = -scale;
    return scale * g;
}

bool bracket_check(const ActionId& id, const LieElement& x, const LieElement& y,
                   const MatrixFn& f) {
    MatrixFn lhs = apply_action(id, x, apply_action(id, y, f)) -
                   apply_action(id, y, apply_action(id, x, f));
    MatrixFn rhs = apply_action(id, bracket(x, y), f);
    return lhs == rhs;
}

// ---- derivative-matrix systems ---------------------------------------------

AlgebraElement DiffOp::operator()(const AlgebraElement& f) const {
    AlgebraElement acc = AlgebraElement::zero(f.dim());
    for (const auto& [c, v] : parts) acc += c * f.differentiate(v);
    return acc;
}

DiffMatrix nabla_plus(Dim dim) {
    if (dim == Dim::Full4D) {
        return {DiffOp{{{GQ(2), Var::Z22}}}, DiffOp{{{GQ(-2), Var::Z21}}},
                DiffOp{{{GQ(-2), Var::Z12}}}, DiffOp{{{GQ(2), Var::Z11}}}};
    }
    const GQ half_i{Rational(0), Rational(1, 2)};
    return {DiffOp{{{GQ(1), Var::Z22}}}, DiffOp{{{half_i, Var::T}}},
            DiffOp{{{half_i, Var::T}}}, DiffOp{{{GQ(1), Var::Z11}}}};
}

DiffMatrix nabla(Dim dim) {
    if (dim == Dim::Full4D) {
        return {DiffOp{{{GQ(2), Var::Z11}}}, DiffOp{{{GQ(2), Var::Z21}}},
                DiffOp{{{GQ(2), Var::Z12}}}, DiffOp{{{GQ(2), Var::Z22}}}};
    }
    const GQ mhalf_i{Rational(0), Rational(-1, 2)};
    return {DiffOp{{{GQ(1), Var::Z11}}}, DiffOp{{{mhalf_i, Var::T}}},
            DiffOp{{{mhalf_i, Var::T}}}, DiffOp{{{GQ(1), Var::Z22}}}};
}

DiffMatrix transpose(const DiffMatrix& m) { return {m[0], m[2], m[1], m[3]}; }

MatrixFn deriv_left(const DiffMatrix& op, const MatrixFn& f) {
    if (f.shape() == Shape::Spinor) {
        return MatrixFn::spinor(op[0](f.entry(0)) + op[1](f.entry(1)),
                                op[2](f.entry(0)) + op[3](f.entry(1)));
    }
    if (f.shape() == Shape::Quat) {
        return MatrixFn::quat(op[0](f.at(0, 0)) + op[1](f.at(1, 0)),
                              op[0](f.at(0, 1)) + op[1](f.at(1, 1)),
                              op[2](f.at(0, 0)) + op[3](f.at(1, 0)),
                              op[2](f.at(0, 1)) + op[3](f.at(1, 1)));
    }
    throw std::invalid_argument("deriv_left: spinor or quat shapes");
}

MatrixFn deriv_right(const MatrixFn& f, const DiffMatrix& op) {
    if (f.shape() == Shape::CoSpinor) {
        return MatrixFn::cospinor(op[0](f.entry(0)) + op[2](f.entry(1)),
                                  op[1](f.entry(0)) + op[3](f.entry(1)));
    }
    if (f.shape() == Shape::Quat) {
        return MatrixFn::quat(op[0](f.at(0, 0)) + op[2](f.at(0, 1)),
                              op[1](f.at(0, 0)) + op[3](f.at(0, 1)),
                              op[0](f.at(1, 0)) + op[2](f.at(1, 1)),
                              op[1](f.at(1, 0)) + op[3](f.at(1, 1)));
    }
    throw std::invalid_argument("deriv_right: cospinor or quat shapes");
}

namespace {

std::vector<MatrixFn> res_nabla_plus_left(const MatrixFn& f) {
    return {deriv_left(nabla_plus(f.dim()), f)};
}
std::vector<MatrixFn> res_nabla_plus_right(const MatrixFn& f) {
    return {deriv_right(f, nabla_plus(f.dim()))};
}
std::vector<MatrixFn> res_nabla_left(const MatrixFn& f) {
    return {deriv_left(nabla(f.dim()), f)};
}
std::vector<MatrixFn> res_nabla_right(const MatrixFn& f) {
    return {deriv_right(f, nabla(f.dim()))};
}
std::vector<MatrixFn> res_doubly_left(const MatrixFn& f) {
    return {deriv_left(nabla_plus(f.dim()), f), deriv_right(f, transpose(nabla_plus(f.dim())))};
}
std::vector<MatrixFn> res_doubly_right(const MatrixFn& f) {
    return {deriv_left(transpose(nabla_plus(f.dim())), f), deriv_right(f, nabla_plus(f.dim()))};
}
std::vector<MatrixFn> res_harmonic(const MatrixFn& f) {
    return {f.map_entries([](const AlgebraElement& e) { return laplacian(e); })};
}

}  // namespace

std::optional<KernelSystem> kernel_system(const ActionId& id) {
    switch (id.name) {
        case ActionName::PiL:
            if (id.dim == Dim::Full4D) return KernelSystem{"nabla_plus_left", res_nabla_plus_left};
            return std::nullopt;
        case ActionName::PiR:
            if (id.dim == Dim::Full4D) return KernelSystem{"nabla_plus_right", res_nabla_plus_right};
            return std::nullopt;
        case ActionName::PiLa:
            if (id.dim == Dim::Full4D) return KernelSystem{"nabla_left", res_nabla_left};
            return std::nullopt;
        case ActionName::PiRa:
            if (id.dim == Dim::Full4D) return KernelSystem{"nabla_right", res_nabla_right};
            return std::nullopt;
        case ActionName::PiDl:
            if (id.dim == Dim::Full4D) return KernelSystem{"doubly_left", res_doubly_left};
            return std::nullopt;
        case ActionName::PiDr:
            if (id.dim == Dim::Full4D) return KernelSystem{"doubly_right", res_doubly_right};
            return std::nullopt;
        case ActionName::Pi3L: return KernelSystem{"dirac3_left", res_nabla_plus_left};
        case ActionName::Pi3R: return KernelSystem{"dirac3_right", res_nabla_plus_right};
        case ActionName::Pi03Dim: return KernelSystem{"harmonic3", res_harmonic};
        default: return std::nullopt;
    }
}

KernelCheck kernel_preservation_check(const ActionId& id, const LieElement& x,
                                      const MatrixFn& f) {
    auto sys = kernel_system(id);
    if (!sys) throw std::invalid_argument("no kernel system bound to " + action_name(id));
    auto ok = [&](const MatrixFn& g) {
        for (const MatrixFn& r : sys->residuals(g))
            if (!r.is_zero()) return false;
        return true;
    };
    if (!ok(f)) return KernelCheck::PreconditionFailed;
    return ok(apply_action(id, x, f)) ? KernelCheck::Preserved : KernelCheck::Violated;
}

}  // namespace symq
