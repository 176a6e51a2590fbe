#include "symq/forms.hpp"

#include "symq/basis.hpp"

#include <map>
#include <stdexcept>

namespace symq {

std::optional<FormId> parse_form(const std::string& name) {
    static const std::map<std::string, FormId> names = {
        {"project_M", FormId::ProjectM},
        {"project_Sh", FormId::ProjectSh},
        {"pair_M", FormId::PairM},
        {"pair_1reg", FormId::Pair1Reg},
        {"pair_Wres", FormId::PairWres},
        {"pair_meta", FormId::PairMeta},
        {"tri_obvious4D", FormId::TriObvious4D},
        {"tri_easy4D", FormId::TriEasy4D},
        {"tri_scalar4D", FormId::TriScalar4D},
        {"tri_scalar3D_plus", FormId::TriScalar3DPlus},
        {"tri_scalar3D_minus", FormId::TriScalar3DMinus},
        {"tri_quasi", FormId::TriQuasi},
        {"tri_main_plus", FormId::TriMainPlus},
        {"tri_main_minus", FormId::TriMainMinus},
    };
    auto it = names.find(name);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

std::string form_name(FormId id) {
    switch (id) {
        case FormId::ProjectM: return "project_M";
        case FormId::ProjectSh: return "project_Sh";
        case FormId::PairM: return "pair_M";
        case FormId::Pair1Reg: return "pair_1reg";
        case FormId::PairWres: return "pair_Wres";
        case FormId::PairMeta: return "pair_meta";
        case FormId::TriObvious4D: return "tri_obvious4D";
        case FormId::TriEasy4D: return "tri_easy4D";
        case FormId::TriScalar4D: return "tri_scalar4D";
        case FormId::TriScalar3DPlus: return "tri_scalar3D_plus";
        case FormId::TriScalar3DMinus: return "tri_scalar3D_minus";
        case FormId::TriQuasi: return "tri_quasi";
        case FormId::TriMainPlus: return "tri_main_plus";
        case FormId::TriMainMinus: return "tri_main_minus";
    }
    return "?";
}

std::vector<std::string> form_vocabulary() {
    return {"project_M",  "project_Sh", "pair_M",           "pair_1reg",
            "pair_Wres",  "pair_meta",  "tri_obvious4D",    "tri_easy4D",
            "tri_scalar4D", "tri_scalar3D_plus", "tri_scalar3D_minus",
            "tri_quasi",  "tri_main_plus", "tri_main_minus"};
}

GQ project_trivial_m(const AlgebraElement& f) {
    if (f.dim() != Dim::Sym3D)
        throw std::invalid_argument("project_M expects a symmetric-slice element");
    if (!f.is_zero() && f.parity() != 1)
        throw std::invalid_argument("project_M expects half-integer N-grading");
    auto e = expand_sym(f);
    auto it = e.find(RIndex{-3, 0, 0});
    return it == e.end() ? GQ(0) : it->second;
}

GQ project_trivial_sh(const AlgebraElement& f) {
    if (f.dim() != Dim::Full4D)
        throw std::invalid_argument("project_Sh expects a full-space element");
    if (!f.is_zero() && f.parity() != 0)
        throw std::invalid_argument("project_Sh expects integer N-grading");
    auto e = expand_full(f);
    auto it = e.find(TIndex{-2, 0, 0, 0});
    return it == e.end() ? GQ(0) : it->second;
}

namespace {

GQ project_by_dim(const AlgebraElement& f) {
    return f.dim() == Dim::Sym3D ? project_trivial_m(f) : project_trivial_sh(f);
}

}  // namespace

GQ pairing(FormId id, const MatrixFn& f, const MatrixFn& g) {
    switch (id) {
        case FormId::PairM: {
            if (f.shape() != Shape::Scalar || g.shape() != Shape::Scalar)
                throw std::invalid_argument("pair_M expects scalar arguments");
            return project_trivial_m((f * g).entry(0));
        }
        case FormId::Pair1Reg: {
            if (f.shape() != Shape::CoSpinor || g.shape() != Shape::Spinor)
                throw std::invalid_argument("pair_1reg expects a row and a column");
            return project_trivial_m((f * g).entry(0));
        }
        case FormId::PairWres: {
            if (f.shape() != Shape::Quat || g.shape() != Shape::Quat)
                throw std::invalid_argument("pair_Wres expects 2x2 arguments");
            return project_trivial_m((f * g).trace());
        }
        default:
            throw std::invalid_argument("not a pairing id: " + form_name(id));
    }
}

GQ trilinear(FormId id, const MatrixFn& g, const MatrixFn& mid, const MatrixFn& f) {
    switch (id) {
        case FormId::TriScalar3DPlus:
        case FormId::TriScalar3DMinus: {
            if (g.shape() != Shape::Scalar || mid.shape() != Shape::Scalar ||
                f.shape() != Shape::Scalar)
                throw std::invalid_argument("scalar trilinear form expects scalars");
            return project_trivial_m((g * mid * f).entry(0));
        }
        case FormId::TriQuasi:
        case FormId::TriMainPlus:
        case FormId::TriMainMinus: {
            if (g.shape() != Shape::CoSpinor || mid.shape() != Shape::Quat ||
                f.shape() != Shape::Spinor)
                throw std::invalid_argument("trilinear form expects row * 2x2 * column");
            return project_trivial_m((g * mid * f).entry(0));
        }
        case FormId::TriScalar4D: {
            return project_trivial_sh((g * mid * f).entry(0));
        }
        case FormId::TriObvious4D:
        case FormId::TriEasy4D: {
            if (g.shape() != Shape::CoSpinor || mid.shape() != Shape::Quat ||
                f.shape() != Shape::Spinor)
                throw std::invalid_argument("trilinear form expects row * 2x2 * column");
            return project_trivial_sh((g * mid * f).entry(0));
        }
        default:
            throw std::invalid_argument("not a trilinear id: " + form_name(id));
    }
}

}  // namespace symq
