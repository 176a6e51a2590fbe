#pragma once

#include "symq/matrix_fn.hpp"

#include <optional>
#include <string>

namespace symq {

// Named K-type families on the symmetric slice. Spinor families carry (l, m);
// the lowercase-p variants are the row-valued transposes. The combination
// families carry an extra N-power index k (Ccomb integer, Chalf half-integer)
// baked into the element.
enum class KFamily {
    Vt, Vb, Vpt, Vpb, Ut, Ub, Upt, Upb,
    T, M, B, Ccomb, Chalf,
    StarT, StarM, StarB, StarC,
};

struct KTypeId {
    KFamily family;
    int l = 0;
    int m = 0;
    int k2 = 0;  // twice the N-exponent; used by Ccomb (even), Chalf (odd), StarC (odd)
};

// Index ranges exactly as displayed; in_range reports the family window.
bool ktype_in_range(const KTypeId& id);

// The basis element itself (without any extra N^k factor except for the
// combination families). Throws on out-of-range indices.
MatrixFn ktype(const KTypeId& id);
// Zero outside the admissible window (the derivative tables step outside).
MatrixFn ktype_or_zero(const KTypeId& id);

Shape ktype_shape(KFamily family);
std::optional<KFamily> parse_kfamily(const std::string& name);
std::string kfamily_name(KFamily family);

}  // namespace symq
