#include "lprev/coherence.hpp"
#include "lprev/lp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace lprev {

const char* to_string(ConstraintKind kind) {
    switch (kind) {
        case ConstraintKind::nonneg: return "nonneg";
        case ConstraintKind::homogeneous: return "homogeneous";
        case ConstraintKind::inhomogeneous: return "inhomogeneous";
        case ConstraintKind::general: return "general";
    }
    return "general";
}

HRep ConstraintSet::to_hrep() const {
    HRep h(ambient.size(), ambient.names());
    for (const auto& c : constraints) h.add_unchecked(c.halfspace());
    return h;
}

namespace {

// Incremental echelon basis used to extend subsets one vector at a time.
class EchelonBasis {
public:
    // Adds v if it is independent of the basis; returns whether it was added.
    bool push(const Vec& v) {
        Vec r = v;
        for (const auto& [pivot, row] : rows_) {
            if (r[pivot].is_zero()) continue;
            const Rational f = r[pivot];
            for (std::size_t k = 0; k < r.size(); ++k)
                if (!row[k].is_zero()) r[k] -= f * row[k];
        }
        auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return !x.is_zero(); });
        if (it == r.end()) return false;
        const std::size_t pivot = static_cast<std::size_t>(it - r.begin());
        const Rational inv = r[pivot].inverse();
        for (auto& x : r) x *= inv;
        rows_.emplace_back(pivot, std::move(r));
        return true;
    }
    void pop() { rows_.pop_back(); }

private:
    std::vector<std::pair<std::size_t, Vec>> rows_;
};

// All subsets of `vectors` of size in [min_size, max_size] that are linearly
// independent, by size and then lexicographically.
std::vector<std::vector<std::size_t>> independent_index_sets(const std::vector<Vec>& vectors, std::size_t min_size,
                                                             std::size_t max_size) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    EchelonBasis basis;
    auto extend = [&](auto&& self, std::size_t start) -> void {
        if (current.size() >= min_size) out.push_back(current);
        if (current.size() == max_size) return;
        for (std::size_t j = start; j < vectors.size(); ++j) {
            if (!basis.push(vectors[j])) continue;
            current.push_back(j);
            self(self, j + 1);
            current.pop_back();
            basis.pop();
        }
    };
    extend(extend, 0);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

void require_generator_input(const GambleSet& k, const char* who) {
    if (!k.in_L()) throw std::invalid_argument(std::string(who) + ": gamble set is not in L");
    if (!k.has_all_indicators())
        throw std::invalid_argument(std::string(who) + ": gamble set lacks singleton indicators (augment it first)");
}

struct Emission {
    LinearConstraint constraint;
    Provenance provenance;
};

// Solves sum lambda_j N_j = t for several targets t at once. Returns, per
// target, the unique solution or nothing.
std::vector<std::optional<Vec>> solve_many(const GambleSet& k, const std::vector<std::size_t>& subset,
                                           const std::vector<Vec>& targets) {
    const std::size_t rows = k.space().size();
    const std::size_t n = subset.size();
    RatMatrix m(rows, n + targets.size());
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = k.gamble(subset[c])[r];
    for (std::size_t t = 0; t < targets.size(); ++t)
        for (std::size_t r = 0; r < rows; ++r) m(r, n + t) = targets[t][r];
    auto pivots = m.reduce(n);
    if (pivots.size() != n) throw std::logic_error("solve_many: subset is not independent");
    std::vector<std::optional<Vec>> out;
    for (std::size_t t = 0; t < targets.size(); ++t) {
        bool consistent = true;
        for (std::size_t r = n; r < rows && consistent; ++r) consistent = m(r, n + t).is_zero();
        if (!consistent) {
            out.emplace_back();
            continue;
        }
        Vec lambda(n);
        for (std::size_t r = 0; r < n; ++r) lambda[pivots[r]] = m(r, n + t);
        out.emplace_back(std::move(lambda));
    }
    return out;
}

void emit_for_subset(const GambleSet& k, const std::vector<std::size_t>& subset,
                     const std::map<Bitset, std::vector<std::size_t>>& by_support, std::vector<Emission>& out) {
    const std::size_t omega = k.space().size();
    Bitset supp(omega);
    for (auto j : subset) supp |= support(k.gamble(j));

    std::vector<std::size_t> candidates;
    if (auto it = by_support.find(supp); it != by_support.end())
        for (auto f : it->second)
            if (!std::binary_search(subset.begin(), subset.end(), f)) candidates.push_back(f);
    const bool full = supp.count() == omega;
    if (candidates.empty() && !full) return;

    std::vector<Vec> targets;
    for (auto f : candidates) targets.push_back(k.gamble(f));
    if (full) targets.emplace_back(omega, Rational(1));
    auto solutions = solve_many(k, subset, targets);

    for (std::size_t t = 0; t < candidates.size(); ++t) {
        const auto& lambda = solutions[t];
        if (!lambda) continue;
        if (!std::all_of(lambda->begin(), lambda->end(), [](const Rational& x) { return x.sign() > 0; })) continue;
        Emission e;
        e.constraint.coeffs.assign(k.size(), Rational());
        for (std::size_t j = 0; j < subset.size(); ++j) e.constraint.coeffs[subset[j]] = (*lambda)[j];
        e.constraint.coeffs[candidates[t]] = -1;
        e.constraint.kind = ConstraintKind::homogeneous;
        e.provenance = {subset, candidates[t], *lambda};
        out.push_back(std::move(e));
    }
    if (full && solutions.back()) {
        const Vec& lambda = *solutions.back();
        const auto negatives = std::count_if(lambda.begin(), lambda.end(), [](const Rational& x) { return x.sign() < 0; });
        const bool nonzero = std::none_of(lambda.begin(), lambda.end(), [](const Rational& x) { return x.is_zero(); });
        if (nonzero && negatives <= 1) {
            Emission e;
            e.constraint.coeffs.assign(k.size(), Rational());
            for (std::size_t j = 0; j < subset.size(); ++j) e.constraint.coeffs[subset[j]] = lambda[j];
            e.constraint.rhs = 1;
            e.constraint.kind = ConstraintKind::inhomogeneous;
            e.provenance = {subset, std::nullopt, lambda};
            out.push_back(std::move(e));
        }
    }
}

}  // namespace

std::vector<std::vector<std::size_t>> independent_subsets(const GambleSet& k) {
    if (!k.in_L()) throw std::invalid_argument("independent_subsets: gamble set is not in L");
    return independent_index_sets(k.gambles(), 2, k.space().size());
}

std::optional<Vec> combination_solution(const GambleSet& k, const std::vector<std::size_t>& subset,
                                        const std::optional<std::size_t>& target) {
    std::vector<Vec> columns;
    for (auto j : subset) columns.push_back(k.gamble(j));
    const Vec goal = target ? k.gamble(*target) : Vec(k.space().size(), Rational(1));
    return solve_unique(columns, goal);
}

ConstraintSet generate_constraints(const GambleSet& k, const GenerateOptions& options) {
    require_generator_input(k, "generate_constraints");
    std::map<Bitset, std::vector<std::size_t>> by_support;
    for (std::size_t f = 0; f < k.size(); ++f) by_support[support(k.gamble(f))].push_back(f);

    const auto subsets = independent_subsets(k);
    const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(options.jobs, subsets.size()));
    std::vector<std::vector<Emission>> chunks(jobs);
    auto work = [&](std::size_t chunk) {
        const std::size_t begin = subsets.size() * chunk / jobs, end = subsets.size() * (chunk + 1) / jobs;
        for (std::size_t s = begin; s < end; ++s) emit_for_subset(k, subsets[s], by_support, chunks[chunk]);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t c = 0; c < jobs; ++c) threads.emplace_back(work, c);
        for (auto& t : threads) t.join();
    }

    ConstraintSet cs;
    cs.ambient = k;
    std::set<Halfspace> seen;
    auto accept = [&](LinearConstraint c, Provenance p) {
        ++cs.raw_generated;
        Halfspace h = canonical(c.halfspace());
        if (!seen.insert(h).second) return;
        c.coeffs = std::move(h.coeffs);
        c.rhs = std::move(h.rhs);
        cs.constraints.push_back(std::move(c));
        cs.provenance.push_back(std::move(p));
    };
    for (std::size_t g = 0; g < k.size(); ++g) {
        LinearConstraint c{Vec(k.size()), Rational(), ConstraintKind::nonneg};
        c.coeffs[g] = -1;
        accept(std::move(c), Provenance{{g}, std::nullopt, Vec{Rational(-1)}});
    }
    for (auto& chunk : chunks)
        for (auto& e : chunk) accept(std::move(e.constraint), std::move(e.provenance));
    return cs;
}

CheckResult check_against(const LowerPrevision& p, const HRep& h) {
    if (p.size() != h.dim()) throw std::invalid_argument("check_against: prevision does not match the constraint dimension");
    CheckResult r;
    for (std::size_t i = 0; i < h.size(); ++i) {
        Rational excess = dot(h[i].coeffs, p) - h[i].rhs;
        if (excess.sign() > 0) r.violations.push_back({i, std::move(excess)});
    }
    return r;
}

CheckResult check_against(const LowerPrevision& p, const ConstraintSet& cs) { return check_against(p, cs.to_hrep()); }

namespace {

Vec lambda_at(const AffineSolutionSet& sol, std::span<const Rational> t) {
    Vec lambda = sol.particular;
    for (std::size_t q = 0; q < sol.directions.size(); ++q)
        for (std::size_t j = 0; j < lambda.size(); ++j) lambda[j] += t[q] * sol.directions[q][j];
    return lambda;
}

bool sign_pattern_ok(const Vec& lambda, std::optional<std::size_t> negative) {
    for (std::size_t j = 0; j < lambda.size(); ++j) {
        const int want = negative && *negative == j ? -1 : 1;
        if (lambda[j].sign() != want) return false;
    }
    return true;
}

// Looks for lambda in the affine solution set with the given strict sign
// pattern (all positive, or negative exactly at `negative`) such that
// <lambda, values> > gamma.
std::optional<Vec> violating_combination(const AffineSolutionSet& sol, std::optional<std::size_t> negative,
                                         const Vec& values, const Rational& gamma) {
    const std::size_t n = sol.particular.size();
    const std::size_t q = sol.directions.size();
    auto phi = [&](const Vec& lambda) { return dot(lambda, values) - gamma; };
    if (q == 0) {
        if (sign_pattern_ok(sol.particular, negative) && phi(sol.particular).sign() > 0) return sol.particular;
        return std::nullopt;
    }
    // Rows s_j * lambda_j(t) >= eps, written as <row, (t, eps)> <= rhs.
    lp::System open;
    open.dim = q + 1;
    lp::System closed;
    closed.dim = q;
    for (std::size_t j = 0; j < n; ++j) {
        const int s = negative && *negative == j ? -1 : 1;
        Vec row(q + 1);
        for (std::size_t k = 0; k < q; ++k) row[k] = Rational(-s) * sol.directions[k][j];
        row[q] = 1;
        const Rational rhs = Rational(s) * sol.particular[j];
        open.add(row, rhs);
        row.pop_back();
        closed.add(row, rhs);
    }
    Vec cap(q + 1);
    cap[q] = 1;
    open.add(cap, Rational(1));
    Vec depth(q + 1);
    depth[q] = 1;
    LpResult inner = lp::maximize(open, depth);
    if (inner.status != LpStatus::optimal || inner.value.sign() <= 0) return std::nullopt;
    Vec t0(inner.point.begin(), inner.point.end() - 1);
    const Vec lambda0 = lambda_at(sol, t0);
    const Rational phi0 = phi(lambda0);
    if (phi0.sign() > 0) return lambda0;

    Vec objective(q);
    for (std::size_t k = 0; k < q; ++k) objective[k] = dot(sol.directions[k], values);
    lp::Options opts;
    opts.start = &t0;
    LpResult best = lp::maximize(closed, objective, opts);
    if (best.status == LpStatus::unbounded) {
        // Walk along the improving ray far enough to make phi positive; the
        // ray keeps every strict sign because it lies in the recession cone.
        const Rational slope = dot(objective, best.ray);
        const Rational steps = (-phi0) / slope + Rational(1);
        Vec t = t0;
        for (std::size_t k = 0; k < q; ++k) t[k] += steps * best.ray[k];
        return lambda_at(sol, t);
    }
    const Vec lambda1 = lambda_at(sol, best.point);
    const Rational phi1 = phi(lambda1);
    if (phi1.sign() <= 0) return std::nullopt;
    // Points strictly between lambda0 and lambda1 keep the strict signs.
    const Rational s_min = (-phi0) / (phi1 - phi0);
    const Rational s = (s_min + Rational(1)) / Rational(2);
    Vec lambda(n);
    for (std::size_t j = 0; j < n; ++j) lambda[j] = lambda0[j] + s * (lambda1[j] - lambda0[j]);
    return lambda;
}

}  // namespace

DirectResult check_direct(const LowerPrevision& p, const GambleSet& k) {
    require_generator_input(k, "check_direct");
    if (p.size() != k.size()) throw std::invalid_argument("check_direct: prevision does not match the gamble set");
    DirectResult r;
    for (std::size_t g = 0; g < k.size(); ++g) {
        if (p[g].sign() < 0) {
            r.witness = Witness{{g}, Vec{Rational(-1)}, Rational()};
            return r;
        }
    }
    const std::size_t omega = k.space().size();
    std::vector<Vec> shifted;
    for (std::size_t g = 0; g < k.size(); ++g) {
        Vec v = k.gamble(g);
        for (auto& x : v) x -= p[g];
        shifted.push_back(std::move(v));
    }
    for (const auto& subset : independent_index_sets(shifted, 1, omega)) {
        std::vector<Vec> columns;
        Vec values;
        for (auto j : subset) {
            columns.push_back(k.gamble(j));
            values.push_back(p[j]);
        }
        for (int gamma : {0, 1}) {
            auto sol = solve_affine(columns, Vec(omega, Rational(gamma)));
            if (!sol) continue;
            std::vector<std::optional<std::size_t>> patterns{std::nullopt};
            for (std::size_t j = 0; j < subset.size(); ++j) patterns.emplace_back(j);
            for (const auto& pattern : patterns) {
                if (auto lambda = violating_combination(*sol, pattern, values, Rational(gamma))) {
                    r.witness = Witness{subset, std::move(*lambda), Rational(gamma)};
                    return r;
                }
            }
        }
    }
    return r;
}

}  // namespace lprev
