#include "symq/subspaces.hpp"

#include "symq/ktypes.hpp"

#include <sstream>

namespace symq {

namespace {

const Dim d3 = Dim::Sym3D;

MatrixFn npow(int half, const MatrixFn& f) {
    return AlgebraElement::norm_power(d3, half) * f;
}

std::string lbl(const char* fam, int k2, int l, int m) {
    std::ostringstream os;
    os << fam << "[k2=" << k2 << ",l=" << l << ",m=" << m << "]";
    return os.str();
}

}  // namespace

SpanSolver::Vec SpanSolver::flatten(const MatrixFn& f) {
    Vec v;
    for (int e = 0; e < f.entry_count(); ++e) {
        if (f.entry(e).is_zero()) continue;
        for (const auto& [ix, c] : expand_sym(f.entry(e))) v[{e, ix}] = c;
    }
    return v;
}

SpanSolver::Vec SpanSolver::reduce(Vec v) const {
    while (!v.empty()) {
        const Key pivot = v.begin()->first;
        auto row = rows_.find(pivot);
        if (row == rows_.end()) break;
        const GQ factor = v.begin()->second;  // row is normalized to leading 1
        for (const auto& [k, c] : row->second) {
            auto [it, fresh] = v.try_emplace(k, GQ(0));
            it->second -= factor * c;
            if (it->second.is_zero()) v.erase(it);
        }
    }
    return v;
}

bool SpanSolver::add(const MatrixFn& f) {
    Vec v = reduce(flatten(f));
    if (v.empty()) return false;
    const GQ lead = v.begin()->second;
    for (auto& [k, c] : v) c /= lead;
    const Key pivot = v.begin()->first;
    rows_.emplace(pivot, std::move(v));
    return true;
}

bool SpanSolver::contains(const MatrixFn& f) const { return reduce(flatten(f)).empty(); }

namespace {

using Gens = std::vector<LabeledFn>;

// ---- family generator enumerations ----------------------------------------

// Scalar families N^{k2/2} R^m_l with per-l k2 ranges.
template <typename Lo, typename Hi>
Gens scalar_gens(Lo lo, Hi hi, int lmax, int parity) {
    Gens out;
    for (int l = 0; l <= lmax; ++l)
        for (int k2 = lo(l); k2 <= hi(l); k2 += 2) {
            if (((k2 % 2) + 2) % 2 != parity) continue;
            for (int m = -l; m <= l; ++m)
                out.push_back({lbl("R", k2, l, m),
                               MatrixFn::scalar(AlgebraElement::norm_power(d3, k2) *
                                                solid_harmonic(l, m))});
        }
    return out;
}

// Spinor families over v't / v'b with per-l k2 ranges (k2 is the power on
// the v't member; the v'b member carries k2 - 2 at l+1).
template <typename Lo, typename Hi>
Gens vprime_gens(Lo lo, Hi hi, int lmax) {
    Gens out;
    for (int l = 0; l <= lmax; ++l)
        for (int k2 = lo(l); k2 <= hi(l); k2 += 2) {
            for (int m = -l - 1; m <= l; ++m)
                out.push_back({lbl("v't", k2, l, m),
                               npow(k2, ktype({KFamily::Vpt, l, m, 0}))});
            for (int m = -l - 1; m <= l; ++m)
                out.push_back({lbl("v'b", k2 - 2, l + 1, m),
                               npow(k2 - 2, ktype({KFamily::Vpb, l + 1, m, 0}))});
        }
    return out;
}

Gens wres_plus_gens(int kmax, int lmax) {
    Gens out;
    for (int l = 0; l <= lmax; ++l)
        for (int k = 0; k <= kmax; ++k) {
            for (int m = -l - 1; m <= l + 1; ++m)
                out.push_back({lbl("T", 2 * k, l, m), npow(2 * k, ktype({KFamily::T, l, m, 0}))});
            if (l >= 1)
                for (int m = -l; m <= l; ++m)
                    out.push_back(
                        {lbl("M", 2 * k, l, m), npow(2 * k, ktype({KFamily::M, l, m, 0}))});
            for (int m = -l; m <= l; ++m)
                out.push_back({lbl("B", 2 * k, l + 1, m),
                               npow(2 * k, ktype({KFamily::B, l + 1, m, 0}))});
        }
    return out;
}

Gens wres_minus_gens(int kmax, int lmax) {
    Gens out;
    for (int l = 0; l <= lmax; ++l)
        for (int k = -(l + 1) - kmax; k <= -(l + 1); ++k) {
            if (l >= 1)
                for (int m = -l; m <= l; ++m)
                    out.push_back(
                        {lbl("M", 2 * k, l, m), npow(2 * k, ktype({KFamily::M, l, m, 0}))});
            for (int m = -l; m <= l; ++m)
                out.push_back({lbl("B", 2 * k - 2, l + 1, m),
                               npow(2 * k - 2, ktype({KFamily::B, l + 1, m, 0}))});
            for (int m = -l; m <= l; ++m)
                out.push_back({lbl("C", 2 * k, l + 1, m),
                               ktype({KFamily::Ccomb, l + 1, m, 2 * k})});
        }
    return out;
}

template <typename Lo, typename Hi>
Gens c_comb_gens(Lo lo, Hi hi, int lmax, KFamily fam) {
    Gens out;
    const int lstart = fam == KFamily::StarC ? 1 : 1;  // C index l >= 1 here
    for (int l = lstart; l <= lmax + 1; ++l)
        for (int k2 = lo(l); k2 <= hi(l); k2 += 2)
            for (int m = -l; m <= l; ++m)
                out.push_back({lbl(fam == KFamily::StarC ? "*C" : "C", k2, l, m),
                               ktype({fam, l, m, k2})});
    return out;
}

Gens mi_star_gens(int kmax, int lmax) {
    Gens out;
    for (int l = 1; l <= lmax; ++l)
        for (int k2 = -2 * kmax - 1; k2 <= 2 * kmax + 1; k2 += 2)
            for (int m = -l; m <= l; ++m)
                out.push_back({lbl("*M", k2, l, m), npow(k2, ktype({KFamily::StarM, l, m, 0}))});
    for (int l = 1; l <= lmax + 1; ++l)
        for (int k2 = -2 * kmax - 1; k2 <= 2 * kmax + 1; k2 += 2)
            for (int m = -l; m <= l; ++m)
                out.push_back({lbl("*C", k2, l, m), ktype({KFamily::StarC, l, m, k2})});
    return out;
}

Gens mi_star_sub_gens(int kmax, int lmax) {
    Gens out;
    (void)kmax;
    for (int l = 1; l <= lmax; ++l) {
        for (int k = -(l + 1); k <= -2; ++k)
            for (int m = -l; m <= l; ++m)
                out.push_back(
                    {lbl("*M", 2 * k + 1, l, m), npow(2 * k + 1, ktype({KFamily::StarM, l, m, 0}))});
        for (int k = -(l + 1); k <= -1; ++k)
            for (int m = -l; m <= l; ++m)
                out.push_back({lbl("*C", 2 * k + 1, l, m),
                               ktype({KFamily::StarC, l, m, 2 * k + 1})});
    }
    return out;
}

Gens whalf_core_gens(int kmax, int lmax) {
    Gens out;
    for (int l = 0; l <= lmax; ++l) {
        for (int k = -kmax - l - 1; k <= kmax; ++k)
            for (int m = -l; m <= l; ++m)
                out.push_back({lbl("Ch", 2 * k + 1, l, m),
                               ktype({KFamily::Chalf, l, m, 2 * k + 1})});
        for (int k = -(l + 1); k <= -1; ++k) {
            for (int m = -l - 1; m <= l + 1; ++m)
                out.push_back(
                    {lbl("T", 2 * k + 1, l, m), npow(2 * k + 1, ktype({KFamily::T, l, m, 0}))});
            if (l >= 1)
                for (int m = -l; m <= l; ++m)
                    out.push_back(
                        {lbl("M", 2 * k + 1, l, m), npow(2 * k + 1, ktype({KFamily::M, l, m, 0}))});
        }
    }
    return out;
}

Gens whalf_mid_plus_gens(int kmax, int lmax) {
    Gens out;
    for (int l = 0; l <= lmax; ++l)
        for (int k = -(l + 1); k <= kmax; ++k)
            for (int m = -l - 1; m <= l + 1; ++m) {
                out.push_back(
                    {lbl("T", 2 * k + 1, l, m), npow(2 * k + 1, ktype({KFamily::T, l, m, 0}))});
                if (l >= 1 && -l <= m && m <= l)
                    out.push_back(
                        {lbl("M", 2 * k + 1, l, m), npow(2 * k + 1, ktype({KFamily::M, l, m, 0}))});
                if (-l <= m && m <= l)
                    out.push_back({lbl("Ch", 2 * k + 1, l, m),
                                   ktype({KFamily::Chalf, l, m, 2 * k + 1})});
            }
    return out;
}

Gens whalf_mid_minus_gens(int kmax, int lmax) {
    Gens out;
    for (int l = 0; l <= lmax; ++l)
        for (int k = -kmax - l - 2; k <= -1; ++k)
            for (int m = -l - 1; m <= l + 1; ++m) {
                out.push_back(
                    {lbl("T", 2 * k + 1, l, m), npow(2 * k + 1, ktype({KFamily::T, l, m, 0}))});
                if (l >= 1 && -l <= m && m <= l)
                    out.push_back(
                        {lbl("M", 2 * k + 1, l, m), npow(2 * k + 1, ktype({KFamily::M, l, m, 0}))});
                if (-l <= m && m <= l)
                    out.push_back({lbl("Ch", 2 * k + 3, l, m),
                                   ktype({KFamily::Chalf, l, m, 2 * k + 3})});
            }
    return out;
}

Gens b01_line(int k2, bool plus_side, int kmax, int lmax) {
    Gens out = c_comb_gens([&](int l) { return plus_side ? 0 : -2 * (l + kmax); },
                           [&](int l) { return plus_side ? 2 * kmax : -2 * l; }, lmax,
                           KFamily::Ccomb);
    out.push_back({lbl("B", k2, 1, 0), npow(k2, ktype({KFamily::B, 1, 0, 0}))});
    return out;
}

}  // namespace

const std::vector<SubspaceFamily>& subspace_families() {
    static const std::vector<SubspaceFamily> families = [] {
        std::vector<SubspaceFamily> f;
        auto always = [](int) { return 0; };
        (void)always;

        // rho_{a,b} with integer grading, a+b = -1 and 3.
        f.push_back({"rho_ab(-1): polynomial cone", ActionId::rho_ab(-1, 0), true,
                     [](int kmax, int lmax) {
                         return scalar_gens([](int) { return 0; },
                                            [&](int) { return 2 * kmax; }, lmax, 0);
                     }});
        f.push_back({"rho_ab(-1): tail k <= -(l-1)", ActionId::rho_ab(-1, 0), true,
                     [](int kmax, int lmax) {
                         return scalar_gens([&](int l) { return -2 * (l - 1) - 2 * kmax; },
                                            [](int l) { return -2 * (l - 1); }, lmax, 0);
                     }});
        f.push_back({"rho_ab(-1): window 0 <= k <= -(l-1)", ActionId::rho_ab(-1, 0), true,
                     [](int kmax, int lmax) {
                         (void)kmax;
                         return scalar_gens([](int) { return 0; },
                                            [](int l) { return -2 * (l - 1); }, lmax, 0);
                     }});
        f.push_back({"rho_ab(3): polynomial cone", ActionId::rho_ab(2, 1), true,
                     [](int kmax, int lmax) {
                         return scalar_gens([](int) { return 0; },
                                            [&](int) { return 2 * kmax; }, lmax, 0);
                     }});
        f.push_back({"rho_ab(3): tail k <= -(l+3)", ActionId::rho_ab(2, 1), true,
                     [](int kmax, int lmax) {
                         return scalar_gens([&](int l) { return -2 * (l + 3) - 2 * kmax; },
                                            [](int l) { return -2 * (l + 3); }, lmax, 0);
                     }});
        f.push_back({"rho_ab(3): naive tail k <= -(l+1) (wall fixture)",
                     ActionId::rho_ab(2, 1), false, [](int kmax, int lmax) {
                         return scalar_gens([&](int l) { return -2 * (l + 1) - 2 * kmax; },
                                            [](int l) { return -2 * (l + 1); }, lmax, 0);
                     }});

        // rho_M = rho_{a,b} with a+b = 3 on the half-integer space.
        f.push_back({"rho_M: k >= -(l+1/2)", ActionId::rho_ab(2, 1), true,
                     [](int kmax, int lmax) {
                         return scalar_gens([](int l) { return -(2 * l + 1); },
                                            [&](int) { return 2 * kmax + 1; }, lmax, 1);
                     }});
        f.push_back({"rho_M: k <= -5/2", ActionId::rho_ab(2, 1), true,
                     [](int kmax, int lmax) {
                         return scalar_gens([&](int) { return -5 - 2 * kmax; },
                                            [](int) { return -5; }, lmax, 1);
                     }});
        f.push_back({"rho_M: window -(l+1/2) <= k <= -5/2", ActionId::rho_ab(2, 1), true,
                     [](int kmax, int lmax) {
                         (void)kmax;
                         return scalar_gens([](int l) { return -(2 * l + 1); },
                                            [](int) { return -5; }, lmax, 1);
                     }});
        f.push_back({"rho_ab(2): naive half tail k >= -(l-1/2) (wall fixture)",
                     ActionId::rho_ab(1, 1), false, [](int kmax, int lmax) {
                         return scalar_gens([](int l) { return -(2 * l - 1); },
                                            [&](int) { return 2 * kmax + 1; }, lmax, 1);
                     }});

        // Scalar middles of the symmetric-slice scalar trilinear form.
        f.push_back({"H3 middle: k >= -(l+1)", ActionId::rho_ab(1, 1), true,
                     [](int kmax, int lmax) {
                         return scalar_gens([](int l) { return -(2 * l + 1); },
                                            [&](int) { return 2 * kmax + 1; }, lmax, 1);
                     }});
        f.push_back({"H3 middle: k <= -2", ActionId::rho_ab(1, 1), true,
                     [](int kmax, int lmax) {
                         return scalar_gens([&](int) { return -3 - 2 * kmax; },
                                            [](int) { return -3; }, lmax, 1);
                     }});

        // V'_{1/2} under pi_r.
        const ActionId pir3 = ActionId::make(ActionName::PiR, d3);
        f.push_back({"V'_1/2: I+", pir3, true, [](int kmax, int lmax) {
                         return vprime_gens([](int l) { return -(2 * l + 1); },
                                            [&](int) { return 2 * kmax + 1; }, lmax);
                     }});
        f.push_back({"V'_1/2: I-", pir3, true, [](int kmax, int lmax) {
                         return vprime_gens([&](int l) { return -(2 * l + 1) - 2 * kmax; },
                                            [](int) { return -1; }, lmax);
                     }});
        f.push_back({"V'_1/2: core I+ & I-", pir3, true, [](int kmax, int lmax) {
                         (void)kmax;
                         return vprime_gens([](int l) { return -(2 * l + 1); },
                                            [](int) { return -1; }, lmax);
                     }});
        f.push_back({"V'_1/2: top quotient alone (wall fixture)", pir3, false,
                     [](int kmax, int lmax) {
                         return vprime_gens([](int) { return 1; },
                                            [&](int) { return 2 * kmax + 1; }, lmax);
                     }});

        // W'_res under rho2_prime.
        const ActionId r2p = ActionId::make(ActionName::Rho2Prime, d3);
        f.push_back({"W'_res: polynomial cone", r2p, true, wres_plus_gens});
        f.push_back({"W'_res: inverted cone", r2p, true, wres_minus_gens});
        f.push_back({"W'_res: C-span k >= 0", r2p, true, [](int kmax, int lmax) {
                         return c_comb_gens([](int) { return 0; },
                                            [&](int) { return 2 * kmax; }, lmax, KFamily::Ccomb);
                     }});
        f.push_back({"W'_res: C-span k <= -l", r2p, true, [](int kmax, int lmax) {
                         return c_comb_gens([&](int l) { return -2 * l - 2 * kmax; },
                                            [](int l) { return -2 * l; }, lmax, KFamily::Ccomb);
                     }});
        f.push_back({"Res(BH+)", r2p, true, [](int kmax, int lmax) {
                         Gens out = c_comb_gens([](int) { return 0; },
                                                [&](int) { return 2 * kmax; }, lmax,
                                                KFamily::Ccomb);
                         for (int k = 0; k <= kmax; ++k)
                             out.push_back({lbl("B", 2 * k, 1, 0),
                                            npow(2 * k, ktype({KFamily::B, 1, 0, 0}))});
                         return out;
                     }});
        f.push_back({"Res(BH-)", r2p, true, [](int kmax, int lmax) {
                         Gens out = c_comb_gens([&](int l) { return -2 * l - 2 * kmax; },
                                                [](int l) { return -2 * l; }, lmax,
                                                KFamily::Ccomb);
                         for (int k = -1 - kmax; k <= -1; ++k)
                             out.push_back({lbl("B", 2 * k - 2, 1, 0),
                                            npow(2 * k - 2, ktype({KFamily::B, 1, 0, 0}))});
                         return out;
                     }});
        for (int k = 0; k <= 1; ++k)
            f.push_back({"B01 line in the C-quotient, k=" + std::to_string(k), r2p, true,
                         [k](int kmax, int lmax) { return b01_line(2 * k, true, kmax, lmax); }});
        f.push_back({"B01 line in the inverted C-quotient, k'=-1", r2p, true,
                     [](int kmax, int lmax) { return b01_line(-4, false, kmax, lmax); }});

        // W*_res under rho2_star.
        const ActionId r2s = ActionId::make(ActionName::Rho2Star, d3);
        f.push_back({"W*_res: M & C span", r2s, true, mi_star_gens});
        f.push_back({"W*_res: inner M & C span", r2s, true, mi_star_sub_gens});

        // W'_{1/2} under rho2_prime.
        f.push_back({"W'_1/2: core subspace", r2p, true, whalf_core_gens});
        f.push_back({"W'_1/2: middle k >= -(l+1)", r2p, true, whalf_mid_plus_gens});
        f.push_back({"W'_1/2: middle k <= -1", r2p, true, whalf_mid_minus_gens});
        return f;
    }();
    return families;
}

SubspaceOutcome check_subspace(const SubspaceFamily& family, int kmax, int lmax) {
    SubspaceOutcome out;
    out.name = family.name;
    const Gens inner = family.gens(kmax, lmax);
    const Gens outer = family.gens(kmax + 2, lmax + 2);
    SpanSolver span;
    for (const auto& g : outer) span.add(g.fn);
    SpanSolver wide;
    bool wide_built = false;
    for (const auto& g : inner) {
        if (g.fn.is_zero()) continue;
        for (const auto& x : sp4_basis()) {
            MatrixFn img = apply_action(family.action, x, g.fn);
            ++out.images_checked;
            if (img.is_zero() || span.contains(img)) continue;
            if (!wide_built) {
                for (const auto& h : family.gens(kmax + 4, lmax + 4)) wide.add(h.fn);
                wide_built = true;
            }
            if (wide.contains(img)) {
                out.window_too_small = true;
                continue;
            }
            out.invariant = false;
            out.leaks.push_back(g.label);
        }
    }
    out.as_expected = (out.invariant == family.expect_invariant) && !out.window_too_small;
    return out;
}

bool check_regular_slice_dimension(int d) {
    SpanSolver span;
    int count = 0;
    for (int l = 0; l <= d; ++l) {
        if ((d - l) % 2 != 0) continue;
        const int k = (d - l) / 2;
        for (int m = -l - 1; m <= l; ++m) {
            span.add(npow(2 * k, ktype({KFamily::Vt, l, m, 0})));
            ++count;
        }
        if (l >= 1)
            for (int m = -l; m <= l - 1; ++m) {
                span.add(npow(2 * k, ktype({KFamily::Vb, l, m, 0})));
                ++count;
            }
    }
    return span.rank() == (d + 1) * (d + 2) && count == (d + 1) * (d + 2);
}

bool check_doubly_regular_generation(int max_degree, int max_word) {
    const ActionId r2p = ActionId::make(ActionName::Rho2Prime, d3);
    SpanSolver reached;
    // Seed with the restricted biharmonic image (slightly past the window)...
    for (int l = 0; l <= max_degree; ++l)
        for (int k = 0; 2 * k + l <= max_degree + 2; ++k)
            for (int m = -l; m <= l; ++m)
                reached.add(ktype({KFamily::Ccomb, l + 1, m, 2 * k}));
    for (int k = 0; 2 * k + 1 <= max_degree + 2; ++k)
        reached.add(npow(2 * k, ktype({KFamily::B, 1, 0, 0})));
    // ...then grow the orbit of M^0_1 by generator words inside the window.
    std::vector<MatrixFn> frontier{ktype({KFamily::M, 1, 0, 0})};
    reached.add(frontier[0]);
    for (int step = 0; step < max_word; ++step) {
        std::vector<MatrixFn> next;
        for (const auto& g : frontier)
            for (const auto& x : sp4_basis()) {
                MatrixFn img = apply_action(r2p, x, g);
                if (img.is_zero()) continue;
                bool in_window = true;
                for (int e = 0; e < img.entry_count() && in_window; ++e)
                    for (const auto& [ix, c] : expand_sym(img.entry(e)))
                        if (ix.k2 < 0 || ix.k2 + ix.l > max_degree) {
                            in_window = false;
                            break;
                        }
                if (!in_window) continue;
                if (reached.add(img)) next.push_back(img);
            }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    // Every polynomial catalog element of degree <= max_degree must be hit.
    for (int l = 0; l <= max_degree; ++l)
        for (int k = 0; 2 * k + l <= max_degree; ++k) {
            for (int m = -l - 1; m <= l + 1; ++m)
                if (!reached.contains(npow(2 * k, ktype({KFamily::T, l, m, 0})))) return false;
            if (l >= 1) {
                for (int m = -l; m <= l; ++m)
                    if (!reached.contains(npow(2 * k, ktype({KFamily::M, l, m, 0}))))
                        return false;
                for (int m = -l + 1; m <= l - 1; ++m)
                    if (!reached.contains(npow(2 * k, ktype({KFamily::B, l, m, 0}))))
                        return false;
            }
        }
    return true;
}

}  // namespace symq
