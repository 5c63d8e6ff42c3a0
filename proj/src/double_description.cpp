#include "lprev/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lprev {

namespace {

// Ray of the homogenized cone {(x0, x) : x0 >= 0, b x0 - <a, x> >= 0}.
struct Ray {
    Vec y;
    Bitset zeros;  // processed rows on which the ray is tight
};

std::size_t nonzeros(const Vec& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Rational& r) { return !r.is_zero(); }));
}

std::vector<std::size_t> default_order(const HRep& h) {
    std::vector<std::size_t> order(h.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const std::size_t na = nonzeros(h[a].coeffs), nb = nonzeros(h[b].coeffs);
        if (na != nb) return na < nb;
        return h[a] < h[b];
    });
    return order;
}

// Rows (d+1)x(d+1) -> columns of the inverse, or nothing if singular.
std::optional<std::vector<Vec>> inverse_columns(const std::vector<Vec>& rows) {
    const std::size_t n = rows.size();
    RatMatrix m(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
        m(r, n + r) = 1;
    }
    if (m.reduce(n).size() != n) return std::nullopt;
    std::vector<Vec> cols(n, Vec(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) cols[c][r] = m(r, n + c);
    return cols;
}

}  // namespace

VertexEnumeration enumerate_vertices(const HRep& h, const EnumerationOptions& options) {
    const Budget& budget = options.budget;
    require_polytope(h, &budget);

    const std::size_t m = h.size();
    const std::size_t d = h.dim();
    const std::size_t n = d + 1;

    std::vector<Vec> rows(m + 1, Vec(n));
    for (std::size_t i = 0; i < m; ++i) {
        rows[i][0] = h[i].rhs;
        for (std::size_t k = 0; k < d; ++k) rows[i][k + 1] = -h[i].coeffs[k];
    }
    rows[m][0] = 1;  // x0 >= 0

    std::vector<std::size_t> order;
    if (options.insertion_order) {
        order = *options.insertion_order;
        std::vector<std::size_t> check = order;
        std::sort(check.begin(), check.end());
        for (std::size_t i = 0; i < check.size(); ++i)
            if (check.size() != m || check[i] != i) throw std::invalid_argument("enumerate_vertices: insertion order is not a permutation");
    } else {
        order = default_order(h);
    }
    order.insert(order.begin(), m);

    // Initial simplicial cone from the first n independent rows.
    std::vector<std::size_t> basis;
    std::vector<Vec> basis_rows;
    for (auto i : order) {
        basis_rows.push_back(rows[i]);
        if (rank(basis_rows) == basis_rows.size()) {
            basis.push_back(i);
            if (basis.size() == n) break;
        } else {
            basis_rows.pop_back();
        }
    }
    if (basis.size() != n) throw UnboundedError("enumerate_vertices: constraint matrix is rank deficient");
    auto inverse = inverse_columns(basis_rows);

    std::vector<Ray> rays;
    for (std::size_t k = 0; k < n; ++k) {
        Ray ray{(*inverse)[k], Bitset(m + 1)};
        make_primitive(ray.y);
        for (std::size_t j = 0; j < n; ++j)
            if (j != k) ray.zeros.set(basis[j]);
        rays.push_back(std::move(ray));
    }

    std::vector<bool> in_basis(m + 1, false);
    for (auto i : basis) in_basis[i] = true;

    for (auto row_index : order) {
        if (in_basis[row_index]) continue;
        budget.check_time();
        const Vec& row = rows[row_index];
        std::vector<Rational> value(rays.size());
        std::vector<std::size_t> pos, neg, zero;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            value[r] = dot(row, rays[r].y);
            const int s = value[r].sign();
            (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
        }
        if (neg.empty()) {
            for (auto r : zero) rays[r].zeros.set(row_index);
            continue;
        }

        std::vector<Ray> next;
        next.reserve(pos.size() + zero.size());
        for (auto r : pos) next.push_back(rays[r]);
        for (auto r : zero) {
            next.push_back(rays[r]);
            next.back().zeros.set(row_index);
        }
        for (auto p : pos) {
            for (auto q : neg) {
                const std::size_t shared = rays[p].zeros.intersection_count(rays[q].zeros);
                if (shared + 2 < n) continue;
                const Bitset common = rays[p].zeros & rays[q].zeros;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && common.is_subset_of(rays[r].zeros)) adjacent = false;
                if (!adjacent) continue;
                Ray combined{Vec(n), common};
                for (std::size_t k = 0; k < n; ++k)
                    combined.y[k] = value[p] * rays[q].y[k] - value[q] * rays[p].y[k];
                make_primitive(combined.y);
                combined.zeros.set(row_index);
                next.push_back(std::move(combined));
                if (budget.max_intermediate && next.size() > budget.max_intermediate)
                    throw BudgetExceeded("double description: intermediate ray count exceeds budget");
            }
            budget.check_time();
        }
        rays = std::move(next);
    }

    VertexEnumeration out;
    out.vrep.dim = d;
    out.vrep.names = h.names();
    for (const auto& ray : rays) {
        if (ray.y[0].sign() <= 0) throw UnboundedError("enumerate_vertices: recession direction found");
        Vec x(d);
        const Rational inv = ray.y[0].inverse();
        for (std::size_t k = 0; k < d; ++k) x[k] = ray.y[k + 1] * inv;
        out.vrep.vertices.push_back(std::move(x));
    }
    if (budget.max_vertices && out.vrep.vertices.size() > budget.max_vertices)
        throw BudgetExceeded("vertex count exceeds budget");
    std::sort(out.vrep.vertices.begin(), out.vrep.vertices.end());
    if (std::adjacent_find(out.vrep.vertices.begin(), out.vrep.vertices.end()) != out.vrep.vertices.end())
        throw std::logic_error("enumerate_vertices: duplicate vertex produced");
    for (const auto& x : out.vrep.vertices) {
        Bitset tight(m);
        for (std::size_t i = 0; i < m; ++i)
            if (h[i].tight_at(x)) tight.set(i);
        out.incidence.push_back(std::move(tight));
    }
    return out;
}

AdjacencyGraph adjacency(const HRep& h, const VertexEnumeration& ve) {
    const auto& verts = ve.vrep.vertices;
    if (ve.incidence.size() != verts.size() || ve.vrep.dim != h.dim())
        throw std::invalid_argument("adjacency: enumeration does not match the H-representation");
    for (const auto& inc : ve.incidence)
        if (inc.size() != h.size()) throw std::invalid_argument("adjacency: incidence does not match the H-representation");
    const std::size_t d = h.dim();
    AdjacencyGraph g;
    g.vertex_count = verts.size();
    for (std::size_t u = 0; u < verts.size(); ++u) {
        for (std::size_t v = u + 1; v < verts.size(); ++v) {
            if (ve.incidence[u].intersection_count(ve.incidence[v]) + 1 < d) continue;
            const Bitset common = ve.incidence[u] & ve.incidence[v];
            // A third vertex on the face spanned by the common tight set means
            // that face is not an edge; skip the rank computation then.
            bool candidate = true;
            for (std::size_t w = 0; w < verts.size() && candidate; ++w)
                if (w != u && w != v && common.is_subset_of(ve.incidence[w])) candidate = false;
            if (!candidate) continue;
            std::vector<Vec> tight_rows;
            for (auto i : common.indices()) tight_rows.push_back(h[i].coeffs);
            if (rank(tight_rows) + 1 == d) g.edges.emplace_back(u, v);
        }
    }
    return g;
}

}  // namespace lprev
