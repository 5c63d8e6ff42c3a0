#include "lprev/polytope.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace lprev {

namespace {

struct InteriorProbe {
    Rational depth;  // max t with A x + t <= b, capped at 1
    Vec point;
};

// max t  s.t.  <a_i, x> + t <= b_i,  t <= 1.  Starting from x = 0 is always feasible.
InteriorProbe probe_interior(const HRep& h, const Budget* budget) {
    const std::size_t d = h.dim();
    lp::System sys;
    sys.dim = d + 1;
    Rational t0(1);
    for (const auto& c : h.constraints()) {
        lp::SparseRow row = lp::SparseRow::from_dense(c.coeffs);
        row.index.push_back(static_cast<std::uint32_t>(d));
        row.value.push_back(Rational(1));
        sys.add(std::move(row), c.rhs);
        if (c.rhs < t0) t0 = c.rhs;
    }
    lp::SparseRow cap;
    cap.index.push_back(static_cast<std::uint32_t>(d));
    cap.value.push_back(Rational(1));
    sys.add(std::move(cap), Rational(1));
    Vec start(d + 1);
    start[d] = t0;
    Vec objective(d + 1);
    objective[d] = 1;
    lp::Options opts;
    opts.start = &start;
    opts.budget = budget;
    LpResult r = lp::maximize(sys, objective, opts);
    InteriorProbe out;
    out.depth = r.value;
    out.point.assign(r.point.begin(), r.point.end() - 1);
    return out;
}

// Moves an interior point off any special position so that ray shooting
// rarely hits two hyperplanes at once. Stays strictly interior because each
// row moves by at most half the probe depth.
Vec generic_interior(const HRep& h, const InteriorProbe& probe) {
    const std::size_t d = h.dim();
    std::mt19937 rng(20090710U);
    Vec w(d);
    for (auto& e : w) e = Rational(static_cast<long>(rng() % 2001) - 1000, 1000);
    Rational widest(1);
    for (const auto& c : h.constraints()) {
        Rational norm;
        for (const auto& a : c.coeffs) norm += a.abs();
        if (norm > widest) widest = norm;
    }
    const Rational delta = probe.depth / (Rational(2) * widest);
    Vec z = probe.point;
    for (std::size_t k = 0; k < d; ++k) z[k] += delta * w[k];
    return z;
}

bool redundant_against(const lp::System& others, const Halfspace& c, const Vec& feasible, const Budget* budget) {
    lp::System sys = others;
    sys.add(c.coeffs, c.rhs + Rational(1));
    lp::Options opts;
    opts.start = &feasible;
    opts.budget = budget;
    LpResult r = lp::maximize(sys, c.coeffs, opts);
    return r.status == LpStatus::optimal && r.value <= c.rhs;
}

std::vector<std::size_t> reduce_sequential(const HRep& h, const std::vector<std::size_t>& candidates,
                                           const Vec& feasible, const Budget* budget) {
    std::vector<bool> alive(h.size(), false);
    for (auto i : candidates) alive[i] = true;
    for (auto i : candidates) {
        if (budget) budget->check_time();
        lp::System others;
        others.dim = h.dim();
        for (auto j : candidates)
            if (j != i && alive[j]) others.add(h[j].coeffs, h[j].rhs);
        if (redundant_against(others, h[i], feasible, budget)) alive[i] = false;
    }
    std::vector<std::size_t> out;
    for (auto i : candidates)
        if (alive[i]) out.push_back(i);
    return out;
}

std::vector<std::size_t> reduce_clarkson(const HRep& h, const std::vector<std::size_t>& candidates, const Vec& z,
                                         const Budget* budget) {
    enum class Status { unknown, facet, redundant };
    std::vector<Status> status(h.size(), Status::unknown);
    std::vector<lp::SparseRow> sparse(h.size());
    Vec slack_at_z(h.size());
    for (auto j : candidates) {
        sparse[j] = lp::SparseRow::from_dense(h[j].coeffs);
        slack_at_z[j] = h[j].rhs - sparse[j].dot(z);
    }

    lp::System facets;
    facets.dim = h.dim();
    auto mark_facet = [&](std::size_t j) {
        status[j] = Status::facet;
        facets.add(sparse[j], h[j].rhs);
    };

    for (auto i : candidates) {
        while (status[i] == Status::unknown) {
            if (budget) budget->check_time();
            facets.add(sparse[i], h[i].rhs + Rational(1));
            lp::Options opts;
            opts.start = &z;
            opts.budget = budget;
            LpResult r = lp::maximize(facets, h[i].coeffs, opts);
            facets.pop_back();
            if (r.value <= h[i].rhs) {
                status[i] = Status::redundant;
                break;
            }
            Vec dir(h.dim());
            for (std::size_t k = 0; k < h.dim(); ++k) dir[k] = r.point[k] - z[k];
            std::optional<std::size_t> first;
            Rational best;
            bool tie = false;
            for (auto j : candidates) {
                if (status[j] == Status::redundant) continue;
                Rational along = sparse[j].dot(dir);
                if (along.sign() <= 0) continue;
                Rational t = slack_at_z[j] / along;
                if (!first || t < best) {
                    first = j;
                    best = std::move(t);
                    tie = false;
                } else if (t == best) {
                    tie = true;
                }
            }
            if (!first) throw std::logic_error("remove_redundant: ray shooting found no boundary");
            if (!tie) {
                mark_facet(*first);
                continue;
            }
            // The ray met several hyperplanes at once; decide i directly.
            lp::System others;
            others.dim = h.dim();
            for (auto j : candidates)
                if (j != i && status[j] != Status::redundant) others.add(sparse[j], h[j].rhs);
            if (redundant_against(others, h[i], z, budget))
                status[i] = Status::redundant;
            else
                mark_facet(i);
        }
    }
    std::vector<std::size_t> out;
    for (auto i : candidates)
        if (status[i] == Status::facet) out.push_back(i);
    return out;
}

}  // namespace

bool contains(const HRep& h, std::span<const Rational> x) {
    if (x.size() != h.dim()) throw std::invalid_argument("contains: dimension mismatch");
    return std::all_of(h.constraints().begin(), h.constraints().end(),
                       [&](const Halfspace& c) { return c.satisfied_by(x); });
}

std::optional<Vec> interior_point(const HRep& h, const Budget* budget) {
    InteriorProbe probe = probe_interior(h, budget);
    if (probe.depth.sign() <= 0) return std::nullopt;
    return probe.point;
}

std::vector<std::size_t> irredundant_indices(const HRep& h, const Budget* budget) {
    std::vector<std::size_t> candidates;
    std::set<Halfspace> seen;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Halfspace& c = h[i];
        const bool zero_lhs = std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Rational& a) { return a.is_zero(); });
        if (zero_lhs) {
            if (c.rhs.sign() < 0) throw InfeasibleError("remove_redundant: constraint 0 <= negative");
            continue;
        }
        if (seen.insert(c).second) candidates.push_back(i);
    }
    if (candidates.empty()) return {};
    InteriorProbe probe = probe_interior(h, budget);
    if (probe.depth.sign() < 0) throw InfeasibleError("remove_redundant: empty feasible set");
    if (probe.depth.is_zero()) return reduce_sequential(h, candidates, probe.point, budget);
    return reduce_clarkson(h, candidates, generic_interior(h, probe), budget);
}

HRep remove_redundant(const HRep& h, const Budget* budget) {
    HRep out(h.dim(), h.names());
    for (auto i : irredundant_indices(h, budget)) out.add_unchecked(h[i]);
    return out;
}

void require_polytope(const HRep& h, const Budget* budget) {
    lp::System sys = lp::System::from(h);
    auto feasible = lp::find_feasible_point(sys, budget);
    if (!feasible) throw InfeasibleError("polytope is empty");
    lp::Options opts;
    opts.start = &*feasible;
    opts.budget = budget;
    for (std::size_t k = 0; k < h.dim(); ++k) {
        for (int s : {1, -1}) {
            Vec objective(h.dim());
            objective[k] = s;
            if (lp::maximize(sys, objective, opts).status == LpStatus::unbounded)
                throw UnboundedError("polyhedron is unbounded along coordinate " + h.names()[k]);
        }
    }
}

std::vector<Vec> extreme_points(std::span<const Vec> points, const Budget* budget) {
    std::vector<Vec> unique(points.begin(), points.end());
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    std::vector<Vec> out;
    for (std::size_t i = 0; i < unique.size(); ++i) {
        // Is unique[i] a convex combination of the others?  Variables: weights.
        const std::size_t n = unique.size() - 1;
        lp::System sys;
        sys.dim = n;
        std::vector<const Vec*> others;
        for (std::size_t j = 0; j < unique.size(); ++j)
            if (j != i) others.push_back(&unique[j]);
        for (std::size_t j = 0; j < n; ++j) {
            Vec row(n);
            row[j] = -1;
            sys.add(row, Rational());
        }
        Vec ones(n, Rational(1)), minus_ones(n, Rational(-1));
        sys.add(ones, Rational(1));
        sys.add(minus_ones, Rational(-1));
        for (std::size_t k = 0; k < unique[i].size(); ++k) {
            Vec row(n), neg(n);
            for (std::size_t j = 0; j < n; ++j) {
                row[j] = (*others[j])[k];
                neg[j] = -row[j];
            }
            sys.add(row, unique[i][k]);
            sys.add(neg, -unique[i][k]);
        }
        if (!lp::find_feasible_point(sys, budget)) out.push_back(unique[i]);
    }
    return out;
}

}  // namespace lprev
