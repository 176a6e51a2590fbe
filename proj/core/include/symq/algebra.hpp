#pragma once

#include "symq/rational.hpp"

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <vector>

namespace symq {

// Coordinate model. Full4D uses (z11, z12, z21, z22) on the 2x2 matrix space
// with N(Z) = z11*z22 - z12*z21. Sym3D uses (z11, z22, t) on the symmetric
// slice z12 = z21 = i*t, where N(Z) = z11*z22 + t^2.
enum class Dim { Full4D, Sym3D };

enum class Var { Z11, Z12, Z21, Z22, T };

int var_index(Dim dim, Var v);           // throws if v not in dim's chart
int coord_count(Dim dim);                 // 4 or 3
const char* var_name(Dim dim, int index);

// Exponent vector; slots beyond coord_count(dim) stay zero.
using Mono = std::array<int, 4>;

using Cx = std::complex<double>;

// Point for floating-point evaluation: coordinates in chart order plus the
// value assigned to N^(1/2) (must square to N at the point).
struct EvalPoint {
    std::array<Cx, 4> coords{};
    Cx branch{1.0, 0.0};
};

// A finite sum  N(Z)^nu * sum_a c_a z^a  with nu in (1/2)Z stored as
// half_n = 2*nu. Canonical form: the polynomial part is not divisible by N
// and the zero element has half_n = 0.
class AlgebraElement {
public:
    AlgebraElement() : dim_(Dim::Sym3D) {}
    explicit AlgebraElement(Dim dim) : dim_(dim) {}

    static AlgebraElement zero(Dim dim) { return AlgebraElement(dim); }
    static AlgebraElement constant(Dim dim, const GQ& c);
    static AlgebraElement variable(Dim dim, Var v);
    static AlgebraElement monomial(Dim dim, const Mono& m, const GQ& c, int half_n = 0);
    static AlgebraElement norm_power(Dim dim, int half_n);  // N^(half_n/2)
    static AlgebraElement norm_poly(Dim dim);               // N itself (canonical)

    Dim dim() const { return dim_; }
    int half_n() const { return half_n_; }
    const std::map<Mono, GQ>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Grading class of the N-power: 0 for integer nu, 1 for half-integer.
    int parity() const { return ((half_n_ % 2) + 2) % 2; }

    bool is_homogeneous() const;
    int degree() const;  // throws on inhomogeneous or zero input
    std::map<int, AlgebraElement> homogeneous_components() const;

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const GQ& c, const AlgebraElement& a);
    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& b) { *this = *this + b; return *this; }
    AlgebraElement& operator-=(const AlgebraElement& b) { *this = *this - b; return *this; }
    AlgebraElement& operator*=(const AlgebraElement& b) { *this = *this * b; return *this; }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    AlgebraElement pow(int n) const;  // n >= 0, or n < 0 for pure N-powers

    // d/d var, including the chain rule through N^nu.
    AlgebraElement differentiate(Var v) const;

    // Z -> Z^{-1}: z11 -> z22/N, z22 -> z11/N, z12 -> -z12/N, z21 -> -z21/N
    // (Sym3D: t -> -t/N) and N^nu -> N^{-nu}. An involution.
    AlgebraElement invert_substitute() const;

    // Quaternionic conjugate Z -> Z^+: z11 <-> z22, off-diagonals negated.
    AlgebraElement conjugate_substitute() const;

    Cx evaluate(const EvalPoint& p) const;

    // Exact evaluation; branch must satisfy branch^2 = N(point) and is only
    // consulted for odd half_n.
    GQ evaluate_exact(const std::array<GQ, 4>& coords, const GQ& branch = GQ(1)) const;

    GQ coefficient(const Mono& m) const;

    std::string str() const;

private:
    void canonicalize();

    Dim dim_;
    int half_n_ = 0;
    std::map<Mono, GQ> terms_;
};

// Exact divisibility of a polynomial term map by N; returns the quotient map.
std::optional<std::map<Mono, GQ>> divide_by_norm(Dim dim, const std::map<Mono, GQ>& p);

// The quadratic N as a raw term map (for convolution-style internals).
const std::map<Mono, GQ>& norm_terms(Dim dim);

// Restriction of a Full4D element to the symmetric slice z12 = z21 = i*t.
AlgebraElement restrict_to_sym(const AlgebraElement& f);

// Laplacians: 4 dz11 dz22 + dt^2 on Sym3D, 4(dz11 dz22 - dz12 dz21) on Full4D.
AlgebraElement laplacian(const AlgebraElement& f);

GQ norm_at(Dim dim, const std::array<GQ, 4>& coords);
Cx norm_at(Dim dim, const std::array<Cx, 4>& coords);

}  // namespace symq
