#pragma once

#include "lprev/linalg.hpp"

#include <chrono>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lprev {

/// Half-space <coeffs, x> <= rhs.
struct Halfspace {
    Vec coeffs;
    Rational rhs;

    bool satisfied_by(std::span<const Rational> x) const { return dot(coeffs, x) <= rhs; }
    bool tight_at(std::span<const Rational> x) const { return dot(coeffs, x) == rhs; }

    friend bool operator==(const Halfspace&, const Halfspace&) = default;
    friend auto operator<=>(const Halfspace& a, const Halfspace& b) {
        if (auto c = a.coeffs <=> b.coeffs; c != 0) return c;
        return a.rhs <=> b.rhs;
    }
};

/// Positive rescaling of (coeffs, rhs) to a primitive integer vector.
Halfspace canonical(Halfspace h);

/// Polytope as a list of canonical half-spaces over named coordinates.
class HRep {
public:
    HRep() = default;
    explicit HRep(std::size_t dim);
    HRep(std::size_t dim, std::vector<std::string> names);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return constraints_.size(); }
    const std::vector<Halfspace>& constraints() const noexcept { return constraints_; }
    const Halfspace& operator[](std::size_t i) const { return constraints_[i]; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    /// Appends the canonical form of h; returns false if it was already present.
    bool add(Halfspace h);
    void add_unchecked(Halfspace h);

    /// Removes exact duplicates, keeping first occurrences.
    void deduplicate();

    friend bool operator==(const HRep&, const HRep&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    std::vector<Halfspace> constraints_;
};

struct VRep {
    std::size_t dim = 0;
    std::vector<std::string> names;
    std::vector<Vec> vertices;

    friend bool operator==(const VRep&, const VRep&) = default;
};

struct AdjacencyGraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v, sorted

    std::size_t degree(std::size_t v) const;
    bool adjacent(std::size_t u, std::size_t v) const;

    friend bool operator==(const AdjacencyGraph&, const AdjacencyGraph&) = default;
};

std::vector<std::string> default_names(std::size_t dim);

class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnboundedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Resource limits threaded through the long-running stages.
struct Budget {
    std::size_t max_vertices = 0;  // 0 = unlimited
    std::size_t max_intermediate = 0;  // double description ray cap, 0 = unlimited
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static Budget with_time_limit(double seconds);
    void check_time() const;
};

}  // namespace lprev
