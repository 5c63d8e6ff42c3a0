#pragma once

#include "lprev/gambles.hpp"
#include "lprev/hrep.hpp"

#include <vector>

namespace lprev {

using MassFunction = Vec;

/// Mass functions dominating a lower prevision. Empty vertices iff the
/// prevision incurs sure loss.
struct CredalSet {
    PossibilitySpace space;
    HRep constraints;  // in mass coordinates
    std::vector<MassFunction> vertices;
};

/// Simplex constraints plus <p, g> >= P(g) for every gamble of k.
HRep credal_hrep(const LowerPrevision& p, const GambleSet& k);

/// Vertices of the credal set, sorted lexicographically.
CredalSet credal_vertices(const LowerPrevision& p, const GambleSet& k);

/// min <p, f> over the credal set; throws InfeasibleError when it is empty.
Rational natural_extension(const LowerPrevision& p, const GambleSet& k, const Gamble& f);

/// Whether p is the lower envelope of its own credal set.
bool is_lower_envelope(const LowerPrevision& p, const GambleSet& k);

}  // namespace lprev
