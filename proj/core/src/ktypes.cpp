#include "symq/ktypes.hpp"

#include "symq/basis.hpp"

#include <stdexcept>

namespace symq {

namespace {

const Dim d3 = Dim::Sym3D;

GQ gi() { return GQ::i(); }

AlgebraElement R(int l, int m) { return solid_harmonic(l, m); }

MatrixFn spinor_family(bool top, bool anti, int l, int m) {
    // top/anti selects among v^t, v^b, u^t, u^b.
    if (!anti) {
        if (top)
            return MatrixFn::spinor(GQ(Rational(l + m + 1)) * R(l, m), gi() * R(l, m + 1));
        return MatrixFn::spinor(GQ(Rational(l - m)) * R(l, m), -(gi() * R(l, m + 1)));
    }
    if (top)
        return MatrixFn::spinor(R(l, m), GQ(Rational(0), Rational(l + m)) * R(l, m - 1));
    return MatrixFn::spinor(R(l, m), GQ(Rational(0), Rational(-(l - m + 1))) * R(l, m - 1));
}

MatrixFn quat_family(KFamily fam, int l, int m) {
    switch (fam) {
        case KFamily::T:
            return MatrixFn::quat(R(l, m + 1), GQ(Rational(0), Rational(l + m + 1)) * R(l, m),
                                  GQ(Rational(0), Rational(l + m + 1)) * R(l, m),
                                  GQ(Rational(-(l + m) * (l + m + 1))) * R(l, m - 1));
        case KFamily::M:
            return MatrixFn::quat(R(l, m + 1), GQ(Rational(0), Rational(m)) * R(l, m),
                                  GQ(Rational(0), Rational(m)) * R(l, m),
                                  GQ(Rational((l + m) * (l - m + 1))) * R(l, m - 1));
        case KFamily::B:
            return MatrixFn::quat(R(l, m + 1), GQ(Rational(0), Rational(-(l - m))) * R(l, m),
                                  GQ(Rational(0), Rational(-(l - m))) * R(l, m),
                                  GQ(Rational(-(l - m) * (l - m + 1))) * R(l, m - 1));
        case KFamily::StarT:
            return MatrixFn::quat(GQ(Rational((l + m) * (l + m + 1))) * R(l, m - 1),
                                  GQ(Rational(0), Rational(l + m + 1)) * R(l, m),
                                  GQ(Rational(0), Rational(l + m + 1)) * R(l, m),
                                  -R(l, m + 1));
        case KFamily::StarM:
            return MatrixFn::quat(GQ(Rational((l + m) * (l - m + 1))) * R(l, m - 1),
                                  GQ(Rational(0), Rational(-m)) * R(l, m),
                                  GQ(Rational(0), Rational(-m)) * R(l, m), R(l, m + 1));
        case KFamily::StarB:
            return MatrixFn::quat(GQ(Rational((l - m) * (l - m + 1))) * R(l, m - 1),
                                  GQ(Rational(0), Rational(-(l - m))) * R(l, m),
                                  GQ(Rational(0), Rational(-(l - m))) * R(l, m), -R(l, m + 1));
        default:
            throw std::logic_error("not a quat family");
    }
}

}  // namespace

bool ktype_in_range(const KTypeId& id) {
    const int l = id.l, m = id.m;
    switch (id.family) {
        case KFamily::Vt:
        case KFamily::Vpt: return l >= 0 && -l - 1 <= m && m <= l;
        case KFamily::Vb:
        case KFamily::Vpb: return l >= 1 && -l <= m && m <= l - 1;
        case KFamily::Ut:
        case KFamily::Upt: return l >= 0 && -l <= m && m <= l + 1;
        case KFamily::Ub:
        case KFamily::Upb: return l >= 1 && -l + 1 <= m && m <= l;
        case KFamily::T: return l >= 0 && -l - 1 <= m && m <= l + 1;
        case KFamily::M: return l >= 0 && -l <= m && m <= l;
        case KFamily::B: return l >= 1 && -l + 1 <= m && m <= l - 1;
        case KFamily::Ccomb: return l >= 0 && -l <= m && m <= l && id.k2 % 2 == 0;
        case KFamily::Chalf: return l >= 0 && -l <= m && m <= l && (id.k2 % 2 + 2) % 2 == 1;
        case KFamily::StarT: return l >= 0 && -l - 1 <= m && m <= l + 1;
        case KFamily::StarM: return l >= 0 && -l <= m && m <= l;
        case KFamily::StarB: return l >= 1 && -l + 1 <= m && m <= l - 1;
        case KFamily::StarC: return l >= 1 && -l <= m && m <= l && (id.k2 % 2 + 2) % 2 == 1;
    }
    return false;
}

MatrixFn ktype(const KTypeId& id) {
    if (!ktype_in_range(id)) throw std::out_of_range("ktype index out of range");
    const int l = id.l, m = id.m;
    switch (id.family) {
        case KFamily::Vt: return spinor_family(true, false, l, m);
        case KFamily::Vb: return spinor_family(false, false, l, m);
        case KFamily::Vpt: return spinor_family(true, false, l, m).transpose();
        case KFamily::Vpb: return spinor_family(false, false, l, m).transpose();
        case KFamily::Ut: return spinor_family(true, true, l, m);
        case KFamily::Ub: return spinor_family(false, true, l, m);
        case KFamily::Upt: return spinor_family(true, true, l, m).transpose();
        case KFamily::Upb: return spinor_family(false, true, l, m).transpose();
        case KFamily::T:
        case KFamily::M:
        case KFamily::B:
        case KFamily::StarT:
        case KFamily::StarM:
        case KFamily::StarB:
            return quat_family(id.family, l, m);
        case KFamily::Ccomb: {
            // C^m_{k,l} = 2k N^{k-1} B^m_{l+1} - (2k+2l+1) N^k T^m_{l-1}
            const int k2 = id.k2;
            MatrixFn b = quat_family(KFamily::B, l + 1, m);
            MatrixFn out = AlgebraElement::norm_power(d3, k2 - 2) * (GQ(Rational(k2)) * b);
            if (l >= 1) {
                MatrixFn t = quat_family(KFamily::T, l - 1, m);
                out = out - AlgebraElement::norm_power(d3, k2) *
                                (GQ(Rational(k2 + 2 * l + 1)) * t);
            }
            return out;
        }
        case KFamily::Chalf: {
            // C^m_{k+1/2,l} = (2k+1) N^{k-1/2} B^m_{l+1} - 2(k+l+1) N^{k+1/2} T^m_{l-1}
            const int k2 = id.k2;  // odd: 2k+1
            MatrixFn b = quat_family(KFamily::B, l + 1, m);
            MatrixFn out = AlgebraElement::norm_power(d3, k2 - 2) * (GQ(Rational(k2)) * b);
            if (l >= 1) {
                MatrixFn t = quat_family(KFamily::T, l - 1, m);
                out = out - AlgebraElement::norm_power(d3, k2) *
                                (GQ(Rational(k2 + 2 * l + 1)) * t);
            }
            return out;
        }
        case KFamily::StarC: {
            // *C^m_{k,l} = (2k+1) l N^{k-1/2} *B^m_{l+1}
            //            + 2(k+l+1)(l+1) N^{k+1/2} *T^m_{l-1}
            const int k2 = id.k2;  // odd: 2k+1
            MatrixFn b = quat_family(KFamily::StarB, l + 1, m);
            MatrixFn out =
                AlgebraElement::norm_power(d3, k2 - 2) * (GQ(Rational(k2 * l)) * b);
            MatrixFn t = quat_family(KFamily::StarT, l - 1, m);
            out = out + AlgebraElement::norm_power(d3, k2) *
                            (GQ(Rational((k2 + 2 * l + 1) * (l + 1))) * t);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

MatrixFn ktype_or_zero(const KTypeId& id) {
    if (!ktype_in_range(id)) return MatrixFn::zero(ktype_shape(id.family), d3);
    return ktype(id);
}

Shape ktype_shape(KFamily family) {
    switch (family) {
        case KFamily::Vt:
        case KFamily::Vb:
        case KFamily::Ut:
        case KFamily::Ub:
            return Shape::Spinor;
        case KFamily::Vpt:
        case KFamily::Vpb:
        case KFamily::Upt:
        case KFamily::Upb:
            return Shape::CoSpinor;
        default:
            return Shape::Quat;
    }
}

std::optional<KFamily> parse_kfamily(const std::string& name) {
    static const std::map<std::string, KFamily> names = {
        {"vt", KFamily::Vt},   {"vb", KFamily::Vb},   {"vpt", KFamily::Vpt},
        {"vpb", KFamily::Vpb}, {"ut", KFamily::Ut},   {"ub", KFamily::Ub},
        {"upt", KFamily::Upt}, {"upb", KFamily::Upb}, {"T", KFamily::T},
        {"M", KFamily::M},     {"B", KFamily::B},     {"C", KFamily::Ccomb},
        {"Ch", KFamily::Chalf}, {"sT", KFamily::StarT}, {"sM", KFamily::StarM},
        {"sB", KFamily::StarB}, {"sC", KFamily::StarC},
    };
    auto it = names.find(name);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

std::string kfamily_name(KFamily family) {
    switch (family) {
        case KFamily::Vt: return "vt";
        case KFamily::Vb: return "vb";
        case KFamily::Vpt: return "vpt";
        case KFamily::Vpb: return "vpb";
        case KFamily::Ut: return "ut";
        case KFamily::Ub: return "ub";
        case KFamily::Upt: return "upt";
        case KFamily::Upb: return "upb";
        case KFamily::T: return "T";
        case KFamily::M: return "M";
        case KFamily::B: return "B";
        case KFamily::Ccomb: return "C";
        case KFamily::Chalf: return "Ch";
        case KFamily::StarT: return "sT";
        case KFamily::StarM: return "sM";
        case KFamily::StarB: return "sB";
        case KFamily::StarC: return "sC";
    }
    return "?";
}

}  // namespace symq
