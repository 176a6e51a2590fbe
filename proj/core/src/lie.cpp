#include "symq/lie.hpp"

namespace symq {

LieElement LieElement::unit(int k, int l) {
    LieElement x;
    CMat2& block = (k < 2) ? (l < 2 ? x.A : x.B) : (l < 2 ? x.C : x.D);
    block.at(k % 2, l % 2) = GQ(1);
    return x;
}

GQ LieElement::at(int i, int j) const {
    const CMat2& block = (i < 2) ? (j < 2 ? A : B) : (j < 2 ? C : D);
    return block.at(i % 2, j % 2);
}

bool LieElement::sp4_member() const {
    return D == -A.transpose() && B == B.transpose() && C == C.transpose();
}

bool LieElement::sl4_member() const { return trace().is_zero(); }

bool LieElement::u22_member() const {
    const CMat2 zero;
    return (A.conj_transpose() + A) == zero && (D.conj_transpose() + D) == zero &&
           C == B.conj_transpose();
}

LieElement bracket(const LieElement& x, const LieElement& y) { return x * y - y * x; }

const std::vector<LieElement>& sp4_basis() {
    static const std::vector<LieElement> basis = [] {
        std::vector<LieElement> b;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) b.push_back(LieElement::sp_a_block(CMat2::unit(i, j)));
        const CMat2 s11 = CMat2::unit(0, 0);
        const CMat2 s22 = CMat2::unit(1, 1);
        const CMat2 s12 = CMat2::unit(0, 1) + CMat2::unit(1, 0);
        for (const CMat2& s : {s11, s12, s22}) b.push_back(LieElement::b_block(s));
        for (const CMat2& s : {s11, s12, s22}) b.push_back(LieElement::c_block(s));
        return b;
    }();
    return basis;
}

std::vector<std::string> sp4_basis_names() {
    return {"a11", "a12", "a21", "a22", "b11", "b12", "b22", "c11", "c12", "c22"};
}

const std::vector<LieElement>& gl4_basis() {
    static const std::vector<LieElement> basis = [] {
        std::vector<LieElement> b;
        for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l) b.push_back(LieElement::unit(k, l));
        return b;
    }();
    return basis;
}

LieElement conjugate_by_inversion(const LieElement& x) {
    return {x.D, x.C, x.B, x.A};
}

}  // namespace symq
