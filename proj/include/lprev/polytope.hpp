#pragma once

#include "lprev/bitset.hpp"
#include "lprev/hrep.hpp"
#include "lprev/lp.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lprev {

bool contains(const HRep& h, std::span<const Rational> x);

/// Indices (into h) of a minimal subset describing the same feasible set.
/// Throws InfeasibleError when h is empty.
std::vector<std::size_t> irredundant_indices(const HRep& h, const Budget* budget = nullptr);

/**
 * Minimal H-representation of the same polytope, in input order.
 *
 * Full-dimensional inputs use an output-sensitive scheme: each candidate is
 * tested by LP against the facets found so far, and every failed test yields
 * a new facet by shooting a ray from a generic interior point. Inputs without
 * interior are reduced by testing each constraint against all others.
 */
HRep remove_redundant(const HRep& h, const Budget* budget = nullptr);

/// Strictly interior point, or nothing when h has empty interior.
std::optional<Vec> interior_point(const HRep& h, const Budget* budget = nullptr);

/// Throws InfeasibleError or UnboundedError unless h is a nonempty polytope.
void require_polytope(const HRep& h, const Budget* budget = nullptr);

struct VertexEnumeration {
    VRep vrep;
    std::vector<Bitset> incidence;  // per vertex: tight constraint indices of the input
};

struct EnumerationOptions {
    Budget budget;
    /// Explicit constraint insertion order (a permutation of 0..m-1); the
    /// default sorts by number of nonzero coefficients, then lexicographically.
    std::optional<std::vector<std::size_t>> insertion_order;
};

/// Double description vertex enumeration; vertices sorted lexicographically.
VertexEnumeration enumerate_vertices(const HRep& h, const EnumerationOptions& options = {});

/// Two vertices are adjacent iff their common tight constraints have rank dim - 1.
AdjacencyGraph adjacency(const HRep& h, const VertexEnumeration& ve);

/// Fourier–Motzkin projection onto the kept coordinates (in the given order),
/// reducing redundancy after every eliminated coordinate.
HRep fm_project(const HRep& h, std::span<const std::size_t> keep, const Budget* budget = nullptr);
HRep fm_project(const HRep& h, std::span<const std::string> keep, const Budget* budget = nullptr);

/// Points among `points` that are not convex combinations of the others.
std::vector<Vec> extreme_points(std::span<const Vec> points, const Budget* budget = nullptr);

}  // namespace lprev
