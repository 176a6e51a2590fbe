#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symq/ktypes.hpp"
#include "symq/subspaces.hpp"

using namespace symq;

TEST_CASE("span solver basics") {
    SpanSolver s;
    auto one = MatrixFn::scalar(AlgebraElement::constant(Dim::Sym3D, GQ(1)));
    auto t = MatrixFn::scalar(AlgebraElement::variable(Dim::Sym3D, Var::T));
    CHECK(s.add(one));
    CHECK(!s.add(one));
    CHECK(s.add(t));
    CHECK(s.rank() == 2);
    CHECK(s.contains(MatrixFn::scalar(AlgebraElement::variable(Dim::Sym3D, Var::T) +
                                      AlgebraElement::constant(Dim::Sym3D, GQ(5)))));
    CHECK(!s.contains(MatrixFn::scalar(AlgebraElement::variable(Dim::Sym3D, Var::Z11))));
}

TEST_CASE("every registered family behaves as expected in a small window") {
    for (const auto& fam : subspace_families()) {
        auto outcome = check_subspace(fam, 1, 2);
        INFO(fam.name);
        CHECK(outcome.as_expected);
        CHECK(!outcome.window_too_small);
        if (!fam.expect_invariant) CHECK(!outcome.leaks.empty());
    }
}

TEST_CASE("degree slices of the spinor catalog have the stated dimension") {
    for (int d = 0; d <= 4; ++d) CHECK(check_regular_slice_dimension(d));
}

TEST_CASE("bounded-degree generation from the middle K-type") {
    CHECK(check_doubly_regular_generation(3, 4));
}

TEST_CASE("multiplicity-one resolution of the matrix catalog") {
    // The T/M/B elements inside a window are linearly independent, and the
    // multiplicity-two pairs (T at (k,l), B at (k-1,l+2)) change basis to
    // (T, C-combination) invertibly.
    SpanSolver span;
    int count = 0;
    for (int l = 0; l <= 3; ++l)
        for (int k = 0; k <= 1; ++k) {
            for (int m = -l - 1; m <= l + 1; ++m, ++count)
                CHECK(span.add(AlgebraElement::norm_power(Dim::Sym3D, 2 * k) *
                               ktype({KFamily::T, l, m, 0})));
            if (l >= 1)
                for (int m = -l; m <= l; ++m, ++count)
                    CHECK(span.add(AlgebraElement::norm_power(Dim::Sym3D, 2 * k) *
                                   ktype({KFamily::M, l, m, 0})));
            if (l >= 2)
                for (int m = -l + 1; m <= l - 1; ++m, ++count)
                    CHECK(span.add(AlgebraElement::norm_power(Dim::Sym3D, 2 * k) *
                                   ktype({KFamily::B, l, m, 0})));
        }
    CHECK(span.rank() == count);
    // C at (k >= 1, l+1) lies in the span of the (T, B) pair it combines.
    SpanSolver pair;
    pair.add(AlgebraElement::norm_power(Dim::Sym3D, 2) * ktype({KFamily::T, 1, 0, 0}));
    pair.add(ktype({KFamily::B, 3, 0, 0}));
    CHECK(pair.contains(ktype({KFamily::Ccomb, 2, 0, 2})));
    // ...and the (T, C) pair recovers B.
    SpanSolver pair2;
    pair2.add(AlgebraElement::norm_power(Dim::Sym3D, 2) * ktype({KFamily::T, 1, 0, 0}));
    pair2.add(ktype({KFamily::Ccomb, 2, 0, 2}));
    CHECK(pair2.contains(ktype({KFamily::B, 3, 0, 0})));
}
