#pragma once

#include "lprev/gambles.hpp"
#include "lprev/hrep.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace lprev {

enum class ConstraintKind { nonneg, homogeneous, inhomogeneous, general };

const char* to_string(ConstraintKind kind);

/// <coeffs, P> <= rhs over the gambles of the ambient set, kept in the
/// canonical integer form of Halfspace.
struct LinearConstraint {
    Vec coeffs;
    Rational rhs;
    ConstraintKind kind = ConstraintKind::general;

    Halfspace halfspace() const { return {coeffs, rhs}; }
};

/// Where a constraint came from: the subset N, the target gamble (or the
/// unit gamble when absent) and the coefficients solving the combination.
struct Provenance {
    std::vector<std::size_t> subset;
    std::optional<std::size_t> target;
    Vec lambda;
};

struct ConstraintSet {
    GambleSet ambient;
    std::vector<LinearConstraint> constraints;
    std::vector<Provenance> provenance;
    std::size_t raw_generated = 0;  // emissions before deduplication

    HRep to_hrep() const;
};

/// Subsets N of k with 1 < |N| <= |Omega| whose gambles are linearly
/// independent, by size and then lexicographically by index.
std::vector<std::vector<std::size_t>> independent_subsets(const GambleSet& k);

/// Unique lambda with sum_{g in N} lambda_g g = target (the unit gamble when
/// target is absent), or nothing when there is none.
std::optional<Vec> combination_solution(const GambleSet& k, const std::vector<std::size_t>& subset,
                                        const std::optional<std::size_t>& target);

struct GenerateOptions {
    unsigned jobs = 1;
};

/// The finite sufficient constraint set for coherence on k. Requires k in L
/// and containing every singleton indicator.
ConstraintSet generate_constraints(const GambleSet& k, const GenerateOptions& options = {});

struct Violation {
    std::size_t index;  // into the checked constraint list
    Rational excess;    // lhs - rhs, positive
};

struct CheckResult {
    std::vector<Violation> violations;
    bool coherent() const { return violations.empty(); }
};

CheckResult check_against(const LowerPrevision& p, const ConstraintSet& cs);
CheckResult check_against(const LowerPrevision& p, const HRep& h);

/// A combination showing incoherence: sum lambda_g g = gamma on N while
/// sum lambda_g P(g) > gamma.
struct Witness {
    std::vector<std::size_t> subset;
    Vec lambda;
    Rational gamma;
};

struct DirectResult {
    std::optional<Witness> witness;
    bool coherent() const { return !witness.has_value(); }
};

/// Coherence decided from the definition with P-dependent subset selection,
/// without the generated constraint set.
DirectResult check_direct(const LowerPrevision& p, const GambleSet& k);

}  // namespace lprev
