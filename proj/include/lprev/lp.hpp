#pragma once

#include "lprev/hrep.hpp"

#include <cstdint>

namespace lprev {

enum class Sense { maximize, minimize };
enum class LpStatus { optimal, unbounded, infeasible };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Rational value;  // meaningful when optimal
    Vec point;       // optimal vertex, or a feasible point when unbounded
    Vec ray;         // improving direction when unbounded
};

/**
 * Exact simplex over the rationals for max/min <objective, x> subject to h.
 * Pivots by most negative multiplier until a run of degenerate pivots is
 * seen, then switches to Bland's rule for the remainder of the solve.
 */
LpResult lp_optimize(const Vec& objective, const HRep& h, Sense sense);

namespace lp {

struct SparseRow {
    std::vector<std::uint32_t> index;
    Vec value;

    static SparseRow from_dense(std::span<const Rational> dense);
    Rational dot(std::span<const Rational> x) const;
};

/// Constraint system <row_i, x> <= rhs_i in the solver's sparse layout.
struct System {
    std::size_t dim = 0;
    std::vector<SparseRow> rows;
    Vec rhs;

    static System from(const HRep& h);
    void add(std::span<const Rational> coeffs, Rational b);
    void add(SparseRow row, Rational b);
    void pop_back();
    std::size_t size() const noexcept { return rows.size(); }
    bool satisfied_by(std::span<const Rational> x) const;
};

struct Options {
    const Vec* start = nullptr;  // known feasible point; skips phase one
    const Budget* budget = nullptr;
};

/// Maximizes <objective, x> over the system.
LpResult maximize(const System& system, const Vec& objective, const Options& options = {});

/// A feasible point, or nothing if the system is infeasible.
std::optional<Vec> find_feasible_point(const System& system, const Budget* budget = nullptr);

}  // namespace lp

}  // namespace lprev
