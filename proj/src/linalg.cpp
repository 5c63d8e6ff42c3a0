#include "lprev/linalg.hpp"

#include <algorithm>

namespace lprev {

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational acc;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
    return acc;
}

Rational make_primitive(std::span<Rational> v) {
    mpz_class lcm = 1;
    bool any = false;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        any = true;
        if (!x.is_integer()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.denominator().get_mpz_t());
    }
    if (!any) return Rational(1);
    mpz_class g = 0;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        mpz_class n = x.numerator() * (lcm / x.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rational factor(mpq_class(lcm, g));
    if (factor == Rational(1)) return factor;
    for (auto& x : v)
        if (!x.is_zero()) x *= factor;
    return factor;
}

RatMatrix RatMatrix::from_rows(std::span<const Vec> rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("RatMatrix: ragged rows");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

RatMatrix RatMatrix::from_columns(std::span<const Vec> columns, std::size_t rows) {
    RatMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("RatMatrix: ragged columns");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

void RatMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

std::vector<std::size_t> RatMatrix::reduce(std::size_t limit) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < std::min(limit, cols_) && r < rows_; ++c) {
        std::size_t best = rows_;
        for (std::size_t i = r; i < rows_; ++i) {
            if ((*this)(i, c).is_zero()) continue;
            if (best == rows_ || Rational::compare_abs_numerators((*this)(i, c), (*this)(best, c)) > 0) best = i;
        }
        if (best == rows_) continue;
        swap_rows(best, r);
        const Rational inv = (*this)(r, c).inverse();
        for (std::size_t j = c; j < cols_; ++j)
            if (!(*this)(r, j).is_zero()) (*this)(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || (*this)(i, c).is_zero()) continue;
            const Rational factor = (*this)(i, c);
            for (std::size_t j = c; j < cols_; ++j)
                if (!(*this)(r, j).is_zero()) (*this)(i, j) -= factor * (*this)(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix copy = m;
    return copy.reduce().size();
}

std::size_t rank(std::span<const Vec> vectors) {
    if (vectors.empty()) return 0;
    return rank(RatMatrix::from_rows(vectors, vectors.front().size()));
}

bool is_independent(std::span<const Vec> vectors) { return rank(vectors) == vectors.size(); }

namespace {

// Row-reduces [columns | target]; returns nothing if inconsistent.
std::optional<std::pair<RatMatrix, std::vector<std::size_t>>> reduce_system(std::span<const Vec> columns,
                                                                            const Vec& target) {
    const std::size_t rows = target.size();
    const std::size_t n = columns.size();
    RatMatrix m(rows, n + 1);
    for (std::size_t c = 0; c < n; ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("solve: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    for (std::size_t r = 0; r < rows; ++r) m(r, n) = target[r];
    auto pivots = m.reduce(n);
    for (std::size_t r = pivots.size(); r < rows; ++r)
        if (!m(r, n).is_zero()) return std::nullopt;
    return std::make_pair(std::move(m), std::move(pivots));
}

}  // namespace

std::optional<Vec> solve_unique(std::span<const Vec> columns, const Vec& target) {
    const std::size_t rows = target.size();
    const std::size_t n = columns.size();
    RatMatrix m(rows, n + 1);
    for (std::size_t c = 0; c < n; ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("solve_unique: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    for (std::size_t r = 0; r < rows; ++r) m(r, n) = target[r];
    auto pivots = m.reduce(n);
    if (pivots.size() != n) throw DependentColumnsError("solve_unique: columns are linearly dependent");
    for (std::size_t r = n; r < rows; ++r)
        if (!m(r, n).is_zero()) return std::nullopt;
    Vec out(n);
    for (std::size_t r = 0; r < n; ++r) out[pivots[r]] = m(r, n);
    return out;
}

std::optional<AffineSolutionSet> solve_affine(std::span<const Vec> columns, const Vec& target) {
    auto reduced = reduce_system(columns, target);
    if (!reduced) return std::nullopt;
    auto& [m, pivots] = *reduced;
    const std::size_t n = columns.size();
    AffineSolutionSet out;
    out.particular.assign(n, Rational());
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        out.particular[pivots[r]] = m(r, n);
        is_pivot[pivots[r]] = true;
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec dir(n);
        dir[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) dir[pivots[r]] = -m(r, f);
        out.directions.push_back(std::move(dir));
    }
    return out;
}

}  // namespace lprev
