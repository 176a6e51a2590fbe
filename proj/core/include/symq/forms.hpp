#pragma once

#include "symq/matrix_fn.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symq {

enum class FormId {
    ProjectM, ProjectSh,
    PairM, Pair1Reg, PairWres, PairMeta,
    TriObvious4D, TriEasy4D, TriScalar4D,
    TriScalar3DPlus, TriScalar3DMinus,
    TriQuasi, TriMainPlus, TriMainMinus,
};

std::optional<FormId> parse_form(const std::string& name);
std::string form_name(FormId id);
std::vector<std::string> form_vocabulary();

// The trivial-component projections. On the symmetric slice this is the
// N^{-3/2} R^0_0 coefficient (equal to the normalized cycle integral); on the
// full space the N^{-2} t^0_{00} coefficient (the normalized U(2)_R integral).
GQ project_trivial_m(const AlgebraElement& f);
GQ project_trivial_sh(const AlgebraElement& f);

// Bilinear pairings evaluated by multiply-then-project.
GQ pairing(FormId id, const MatrixFn& f, const MatrixFn& g);

// Trilinear forms evaluated by multiply-then-project; shapes must compose to
// a scalar (row * middle * column), scalars throughout for the scalar forms.
GQ trilinear(FormId id, const MatrixFn& g, const MatrixFn& mid, const MatrixFn& f);

}  // namespace symq
