#pragma once

#include "symq/actions.hpp"
#include "symq/basis.hpp"

#include <functional>
#include <string>
#include <vector>

namespace symq {

struct LabeledFn {
    std::string label;
    MatrixFn fn;
};

// Exact incremental span of symmetric-slice MatrixFns, flattened over
// (entry, basis-index) coordinates.
class SpanSolver {
public:
    using Key = std::pair<int, RIndex>;
    using Vec = std::map<Key, GQ>;

    static Vec flatten(const MatrixFn& f);

    // Adds to the span; returns false if the element was already contained.
    bool add(const MatrixFn& f);
    bool contains(const MatrixFn& f) const;
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    Vec reduce(Vec v) const;
    std::map<Key, Vec> rows_;
};

// A named invariant-subspace fixture: generators enumerated inside a window,
// together with the action and the expected outcome (the wall fixtures are
// registered with expect_invariant = false).
struct SubspaceFamily {
    std::string name;
    ActionId action;
    bool expect_invariant = true;
    std::function<std::vector<LabeledFn>(int kmax, int lmax)> gens;
};

const std::vector<SubspaceFamily>& subspace_families();

struct SubspaceOutcome {
    std::string name;
    bool invariant = true;       // observed
    bool as_expected = true;     // observed == expected
    bool window_too_small = false;
    int images_checked = 0;
    std::vector<std::string> leaks;
};

SubspaceOutcome check_subspace(const SubspaceFamily& family, int kmax, int lmax);

// Degree-d slice of the spinor catalog has dimension (d+1)(d+2).
bool check_regular_slice_dimension(int d);

// Bounded-degree generation: the orbit of M^0_1 under generator words,
// together with the restricted biharmonic image, spans the whole polynomial
// window of the 2x2 symmetric catalog.
bool check_doubly_regular_generation(int max_degree, int max_word);

}  // namespace symq
