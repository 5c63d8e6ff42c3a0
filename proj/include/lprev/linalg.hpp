#pragma once

#include "lprev/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace lprev {

using Vec = std::vector<Rational>;

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Scales v by a positive rational so that it becomes an integer vector with
/// gcd 1. Returns the factor used (1 for the zero vector).
Rational make_primitive(std::span<Rational> v);

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix from_rows(std::span<const Vec> rows, std::size_t cols);
    static RatMatrix from_columns(std::span<const Vec> columns, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b);

    /// In-place reduced row echelon form; pivots are chosen among the
    /// candidate rows by largest absolute numerator. Returns pivot columns.
    /// Only the first `limit` columns are eligible as pivots.
    std::vector<std::size_t> reduce(std::size_t limit);
    std::vector<std::size_t> reduce() { return reduce(cols_); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::size_t rank(const RatMatrix& m);

/// Rank of a list of equally long vectors.
std::size_t rank(std::span<const Vec> vectors);

bool is_independent(std::span<const Vec> vectors);

class DependentColumnsError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Solves sum_j lambda_j * columns[j] = target for linearly independent
 * columns. Returns the unique solution, or nothing when target lies outside
 * the span. Throws DependentColumnsError if the columns are dependent.
 */
std::optional<Vec> solve_unique(std::span<const Vec> columns, const Vec& target);

/// Affine solution set {particular + sum_k t_k * directions[k]}.
struct AffineSolutionSet {
    Vec particular;
    std::vector<Vec> directions;
};

/// General solution of sum_j lambda_j * columns[j] = target, columns arbitrary.
std::optional<AffineSolutionSet> solve_affine(std::span<const Vec> columns, const Vec& target);

}  // namespace lprev
