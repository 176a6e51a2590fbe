#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symq/algebra.hpp"
#include "symq/matrix_fn.hpp"

#include <random>

using namespace symq;

namespace {

AlgebraElement var(Dim d, Var v) { return AlgebraElement::variable(d, v); }

AlgebraElement random_element(std::mt19937& rng, Dim dim, int parity) {
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<int> expo(0, 2);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> npow(-1, 1);
    AlgebraElement f = AlgebraElement::zero(dim);
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Mono m{0, 0, 0, 0};
        for (int v = 0; v < coord_count(dim); ++v) m[v] = expo(rng);
        GQ c(Rational(coeff(rng)), Rational(coeff(rng)));
        f += AlgebraElement::monomial(dim, m, c, 2 * npow(rng) + parity);
    }
    return f;
}

}  // namespace

TEST_CASE("formal square root multiplies to N") {
    for (Dim d : {Dim::Sym3D, Dim::Full4D}) {
        auto half = AlgebraElement::norm_power(d, 1);
        auto n = half * half;
        CHECK(n == AlgebraElement::norm_power(d, 2));
        CHECK(n.half_n() == 2);
        CHECK(n.terms().size() == 1);  // canonical: the poly part is 1
    }
}

TEST_CASE("z11*z22 is not N-divisible on the symmetric slice") {
    auto p = var(Dim::Sym3D, Var::Z11) * var(Dim::Sym3D, Var::Z22);
    CHECK(p.half_n() == 0);
    CHECK(p.terms().size() == 1);
}

TEST_CASE("canonical form factors maximal N powers") {
    const Dim d = Dim::Sym3D;
    auto p = AlgebraElement::norm_poly(d) * var(d, Var::Z11);
    CHECK(p.half_n() == 2);
    CHECK(p == AlgebraElement::norm_power(d, 2) * var(d, Var::Z11));

    AlgebraElement z = GQ(0) * AlgebraElement::norm_power(d, -3);
    CHECK(z.is_zero());
    CHECK(z.half_n() == 0);
}

TEST_CASE("degree bookkeeping counts N^(1/2) as degree one") {
    auto f = AlgebraElement::norm_power(Dim::Sym3D, -3);
    CHECK(f.degree() == -3);
    auto g = AlgebraElement::norm_power(Dim::Sym3D, 1) * var(Dim::Sym3D, Var::T);
    CHECK(g.degree() == 2);
    auto mixed = var(Dim::Sym3D, Var::T) + AlgebraElement::constant(Dim::Sym3D, GQ(1));
    CHECK(!mixed.is_homogeneous());
    CHECK_THROWS(mixed.degree());
}

TEST_CASE("grade mismatch in addition is rejected") {
    auto a = AlgebraElement::norm_power(Dim::Sym3D, 1);
    auto b = AlgebraElement::constant(Dim::Sym3D, GQ(1));
    CHECK_THROWS(a + b);
}

TEST_CASE("derivatives through N powers") {
    const Dim d = Dim::Sym3D;
    auto t = var(d, Var::T);

    auto dhalf = AlgebraElement::norm_power(d, 1).differentiate(Var::T);
    CHECK(dhalf == AlgebraElement::norm_power(d, -1) * t);

    auto dinv = AlgebraElement::norm_power(d, -2).differentiate(Var::Z11);
    CHECK(dinv == -(AlgebraElement::norm_power(d, -4) * var(d, Var::Z22)));

    // R^0_2 = (3t^2 - N)/2 has d/dt = 2t.
    auto r02 = GQ(Rational(3, 2)) * (t * t) - GQ(Rational(1, 2)) * AlgebraElement::norm_poly(d);
    CHECK(r02.differentiate(Var::T) == GQ(2) * t);
}

TEST_CASE("Leibniz rule on random pairs") {
    std::mt19937 rng(12345);
    for (Dim d : {Dim::Sym3D, Dim::Full4D}) {
        const Var last = d == Dim::Sym3D ? Var::T : Var::Z22;
        for (int trial = 0; trial < 25; ++trial) {
            auto f = random_element(rng, d, trial % 2);
            auto g = random_element(rng, d, trial % 2);
            for (Var v : {Var::Z11, last}) {
                auto lhs = (f * g).differentiate(v);
                auto rhs = f.differentiate(v) * g + f * g.differentiate(v);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(777);
    for (Dim d : {Dim::Sym3D, Dim::Full4D}) {
        for (int trial = 0; trial < 20; ++trial) {
            const int p = trial % 2;
            auto a = random_element(rng, d, p);
            auto b = random_element(rng, d, p);
            auto c = random_element(rng, d, p);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
        }
    }
}

TEST_CASE("inversion substitution") {
    const Dim d = Dim::Sym3D;
    CHECK(AlgebraElement::norm_power(d, 2).invert_substitute() ==
          AlgebraElement::norm_power(d, -2));
    CHECK(var(d, Var::T).invert_substitute() ==
          -(AlgebraElement::norm_power(d, -2) * var(d, Var::T)));

    std::mt19937 rng(99);
    for (Dim dd : {Dim::Sym3D, Dim::Full4D})
        for (int trial = 0; trial < 20; ++trial) {
            auto f = random_element(rng, dd, trial % 2);
            CHECK(f.invert_substitute().invert_substitute() == f);
        }
}

TEST_CASE("evaluation with explicit branch") {
    const Dim d = Dim::Sym3D;
    EvalPoint p;
    p.coords = {Cx(1), Cx(1), Cx(0), Cx(0)};  // z11=1, z22=1, t=0
    p.branch = Cx(1);
    CHECK(AlgebraElement::norm_poly(d).evaluate(p) == Cx(1));
    CHECK(AlgebraElement::norm_power(d, -3).evaluate(p) == Cx(1));

    auto t = var(d, Var::T);
    auto r02 = GQ(Rational(3, 2)) * (t * t) - GQ(Rational(1, 2)) * AlgebraElement::norm_poly(d);
    EvalPoint q;
    q.coords = {Cx(0), Cx(0), Cx(2), Cx(0)};
    q.branch = Cx(2);
    CHECK(r02.evaluate(q) == Cx(4));  // (3*4 - 4)/2 with N = t^2 here

    EvalPoint bad = p;
    bad.branch = Cx(2);
    CHECK_THROWS(AlgebraElement::norm_poly(d).evaluate(bad));
}

TEST_CASE("exact evaluation") {
    const Dim d = Dim::Sym3D;
    auto f = AlgebraElement::norm_power(d, -3) * var(d, Var::T);
    std::array<GQ, 4> pt{GQ(3), GQ(3), GQ(4), GQ(0)};  // N = 9 + 16 = 25
    CHECK(f.evaluate_exact(pt, GQ(5)) == GQ(Rational(4, 125)));
    CHECK_THROWS(f.evaluate_exact(pt, GQ(3)));
}

TEST_CASE("restriction to the symmetric slice") {
    auto f = var(Dim::Full4D, Var::Z12) * var(Dim::Full4D, Var::Z21);
    auto g = restrict_to_sym(f);  // (it)*(it) = -t^2
    auto t = var(Dim::Sym3D, Var::T);
    CHECK(g == -(t * t));

    // d/dt of the restriction = restriction of i*(d12 + d21).
    auto h = var(Dim::Full4D, Var::Z12) * var(Dim::Full4D, Var::Z11);
    auto lhs = restrict_to_sym(h).differentiate(Var::T);
    auto rhs = restrict_to_sym(GQ::i() * (h.differentiate(Var::Z12) + h.differentiate(Var::Z21)));
    CHECK(lhs == rhs);
}

TEST_CASE("matrix product example from the generator family") {
    const Dim d = Dim::Sym3D;
    auto z11 = var(d, Var::Z11);
    auto z22 = var(d, Var::Z22);
    auto f0 = MatrixFn::quat(z11, AlgebraElement::zero(d), AlgebraElement::zero(d), -z22);
    auto row = MatrixFn::cospinor(AlgebraElement::constant(d, GQ(1)), AlgebraElement::zero(d));
    auto col = MatrixFn::spinor(z11, AlgebraElement::zero(d));
    auto out = row * f0 * col;
    CHECK(out.shape() == Shape::Scalar);
    CHECK(out.entry(0) == z11 * z11);
}

TEST_CASE("quaternionic conjugation and Z matrices") {
    for (Dim d : {Dim::Sym3D, Dim::Full4D}) {
        auto z = MatrixFn::z_matrix(d);
        auto zp = MatrixFn::z_conjugate(d);
        auto prod = z * zp;
        auto n = AlgebraElement::norm_poly(d);
        CHECK(prod.at(0, 0) == n);
        CHECK(prod.at(1, 1) == n);
        CHECK(prod.at(0, 1).is_zero());
        CHECK(prod.at(1, 0).is_zero());
    }
}

TEST_CASE("dagger maps behave like quaternionic conjugation") {
    const Dim d = Dim::Full4D;
    std::mt19937 rng(5);
    auto s = MatrixFn::spinor(random_element(rng, d, 0), random_element(rng, d, 0));
    CHECK(s.dagger().dagger() == s);
    auto z = MatrixFn::z_matrix(d);
    // (Z s)^dagger = s^dagger Z^+
    CHECK((z * s).dagger() == s.dagger() * MatrixFn::z_conjugate(d));
}
