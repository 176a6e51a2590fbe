#pragma once

#include "symq/lie.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symq {

// Every named Lie-algebra action. The pi_* names carry both the full
// gl(2,H_C) form on Full4D functions and the restricted sp(4,C) form on the
// symmetric slice; which one applies is selected by the dim of the argument.
enum class ActionName {
    PiL, PiR, PiLa, PiRa, PiDl, PiDr,
    RhoAB, Rho2Prime, Rho2Star, Rho2,
    PiLPrime, PiRPrime, Pi3L, Pi3R,
    Rho, RhoPrime, Rho1, Pi03Dim,
};

struct ActionId {
    ActionName name;
    Dim dim;
    int weight_sum = 0;  // alpha + beta, used by RhoAB only

    static ActionId make(ActionName n, Dim d) { return {n, d, 0}; }
    static ActionId rho_ab(int alpha, int beta) {
        return {ActionName::RhoAB, Dim::Sym3D, alpha + beta};
    }
};

// Parses the CLI vocabulary: pi_l, pi_r, pi_la, pi_ra, pi_dl, pi_dr,
// rho_ab(a,b), rho2_prime, rho2_star, rho_2, pi_l_prime, pi_r_prime, pi3_l,
// pi3_r, rho, rho_prime, rho_1, pi0_3dim.
std::optional<ActionId> parse_action(const std::string& name, Dim dim);
std::string action_name(const ActionId& id);
std::vector<std::string> action_vocabulary();

Shape action_shape(const ActionId& id);
// Whether the id takes general gl(2,H_C) arguments in this dim (otherwise
// the argument must be an sp(4,C) member).
bool action_accepts_gl(const ActionId& id);

MatrixFn apply_action(const ActionId& id, const LieElement& x, const MatrixFn& f);
MatrixFn apply_inversion(const ActionId& id, const MatrixFn& f);

bool bracket_check(const ActionId& id, const LieElement& x, const LieElement& y,
                   const MatrixFn& f);

// First-order 2x2 operator matrices applied entrywise from the left
// (columns / Quat) or right (rows / Quat).
struct DiffOp {
    std::vector<std::pair<GQ, Var>> parts;
    AlgebraElement operator()(const AlgebraElement& f) const;
};
using DiffMatrix = std::array<DiffOp, 4>;

DiffMatrix nabla_plus(Dim dim);   // 2(d22,-d21;-d12,d11) or (d22, i/2 dt; ., d11)
DiffMatrix nabla(Dim dim);        // 2(d11,d21;d12,d22)  or (d11, -i/2 dt; ., d22)
DiffMatrix transpose(const DiffMatrix& m);

MatrixFn deriv_left(const DiffMatrix& op, const MatrixFn& f);
MatrixFn deriv_right(const MatrixFn& f, const DiffMatrix& op);

// The Dirac-type system attached to an action (empty if the action's space
// carries no kernel condition).
struct KernelSystem {
    std::string name;
    std::vector<MatrixFn> (*residuals)(const MatrixFn& f);
};
std::optional<KernelSystem> kernel_system(const ActionId& id);

enum class KernelCheck { Preserved, PreconditionFailed, Violated };
KernelCheck kernel_preservation_check(const ActionId& id, const LieElement& x,
                                      const MatrixFn& f);

}  // namespace symq
