#pragma once

#include <qfusion/qchar.hpp>
#include <qfusion/rat.hpp>

#include <string>
#include <vector>

namespace qfusion {

// Outcome of one verification sweep. instances counts independent checks
// performed before the first failure; max_component records the largest
// ambient dimension any single linear-algebra step worked in. detail holds
// the first failure, or an "error: ..." line when a check threw.
struct SweepResult {
    bool ok = true;
    long long instances = 0;
    long long max_component = 0;
    std::string detail;
};

// Every multiset of positive integers with entry sum in [1, max_sum],
// sorted ascending, filtered by the number of parts.
std::vector<std::vector<int>> multisets_up_to(int max_sum, int min_parts = 1,
                                              int max_parts = 1 << 20);

// Named distinct-point tuples shared by the suites and the CLI:
// "integers" = 1..n, "symmetric" = 1,-1,2,-2,.., "halves" = odd halves with
// alternating signs.
std::vector<Rat> point_preset(const std::string& name, int n);

// Total quotient dimension of the limit family equals prod a_i, and the
// layer above the top is empty.
SweepResult sweep_mass(int max_sum);

// Recurrence, closed form, limit-ideal quotient and the dual symmetric-
// polynomial table agree entrywise.
SweepResult sweep_three_routes(int max_sum);

// Cyclic filtration of the evaluation module: character and degreewise
// annihilator match the mirror limit ideal, for three point presets, and
// the character does not depend on the points.
SweepResult sweep_filtration(int max_sum);

// Characters of the limit family and its mirror are reflections of each
// other at every entry.
SweepResult sweep_mirror(int max_sum);

// Components of the limit ideal of (k,..,k) equal the window family of
// level k intersected with the subring of the first n variables.
SweepResult sweep_window(int level_max, int width_max, long long qcap);

// The loop-scaling flow carries point ideals to rescaled-point ideals
// layerwise, and the associated graded of a point ideal matches the origin
// ideal at every bidegree.
SweepResult sweep_flow(int max_sum);

// Level-k limit character of ten equal parts against the closed q-series,
// on the window zdeg <= zmax, qdeg <= smax.
SweepResult sweep_gordon(int k, long long smax, long long zmax);

// Current ideals at distinct points: quotient totals for three presets,
// point-pattern constructors against their degreewise realizations, and
// the widening embedding of limit generators.
SweepResult sweep_points(int max_sum);

// Fixed small battery for the functional model: graded quotient totals at
// generic, coincident and zero points, free layer growth for two factors,
// and the invariant pairing with full Gram rank.
SweepResult sweep_funcmodel_core();

// Graded quotient totals of the functional model for all two- and
// three-factor multisets, at generic, coincident and zero points; at zero
// the table must match the evaluation-ideal character.
SweepResult sweep_funcmodel_totals(int max_sum);

// Lagrange row sums: 0 below the top exponent, 1 at it.
SweepResult sweep_rho(int n_max);

// Both q-Pascal identities, symmetry, and the factorial product law.
SweepResult sweep_qlaws(int m_max);

}  // namespace qfusion
