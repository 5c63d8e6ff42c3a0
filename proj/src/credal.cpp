#include "lprev/credal.hpp"
#include "lprev/lp.hpp"
#include "lprev/polytope.hpp"

#include <algorithm>

namespace lprev {

namespace {

void require_match(const LowerPrevision& p, const GambleSet& k) {
    if (p.size() != k.size()) throw std::invalid_argument("credal: prevision does not match the gamble set");
}

std::vector<std::string> mass_names(const PossibilitySpace& space) {
    std::vector<std::string> out;
    for (const auto& l : space.labels()) out.push_back("p_" + l);
    return out;
}

}  // namespace

HRep credal_hrep(const LowerPrevision& p, const GambleSet& k) {
    require_match(p, k);
    const std::size_t n = k.space().size();
    HRep h(n, mass_names(k.space()));
    for (std::size_t w = 0; w < n; ++w) {
        Vec a(n);
        a[w] = -1;
        h.add_unchecked({a, Rational()});
    }
    h.add_unchecked({Vec(n, Rational(1)), Rational(1)});
    h.add_unchecked({Vec(n, Rational(-1)), Rational(-1)});
    for (std::size_t g = 0; g < k.size(); ++g) {
        Vec a(n);
        for (std::size_t w = 0; w < n; ++w) a[w] = -k.gamble(g)[w];
        h.add_unchecked({a, -p[g]});
    }
    return h;
}

CredalSet credal_vertices(const LowerPrevision& p, const GambleSet& k) {
    CredalSet out{k.space(), credal_hrep(p, k), {}};
    const std::size_t n = k.space().size();
    // Enumerate inside the simplex's affine hull: p_last = 1 - sum of the others.
    HRep reduced(n - 1, std::vector<std::string>(out.constraints.names().begin(), out.constraints.names().end() - 1));
    for (const auto& c : out.constraints.constraints()) {
        Vec a(n - 1);
        for (std::size_t w = 0; w + 1 < n; ++w) a[w] = c.coeffs[w] - c.coeffs[n - 1];
        Halfspace r{std::move(a), c.rhs - c.coeffs[n - 1]};
        const bool zero_lhs = std::all_of(r.coeffs.begin(), r.coeffs.end(), [](const Rational& x) { return x.is_zero(); });
        if (zero_lhs) {
            if (r.rhs.sign() < 0) return out;
            continue;
        }
        reduced.add(std::move(r));
    }
    if (n == 1) {
        out.vertices.push_back(Vec{Rational(1)});
        return out;
    }
    try {
        auto ve = enumerate_vertices(reduced);
        for (const auto& v : ve.vrep.vertices) {
            Vec full(v);
            Rational rest(1);
            for (const auto& x : v) rest -= x;
            full.push_back(rest);
            out.vertices.push_back(std::move(full));
        }
    } catch (const InfeasibleError&) {
        return out;
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

Rational natural_extension(const LowerPrevision& p, const GambleSet& k, const Gamble& f) {
    if (f.size() != k.space().size()) throw std::invalid_argument("natural_extension: gamble has the wrong length");
    LpResult r = lp_optimize(f, credal_hrep(p, k), Sense::minimize);
    if (r.status == LpStatus::infeasible) throw InfeasibleError("natural_extension: the lower prevision incurs sure loss");
    return r.value;
}

bool is_lower_envelope(const LowerPrevision& p, const GambleSet& k) {
    require_match(p, k);
    const HRep h = credal_hrep(p, k);
    const lp::System sys = lp::System::from(h);
    auto start = lp::find_feasible_point(sys);
    if (!start) return false;
    lp::Options opts;
    opts.start = &*start;
    for (std::size_t g = 0; g < k.size(); ++g) {
        Vec negated(k.space().size());
        for (std::size_t w = 0; w < negated.size(); ++w) negated[w] = -k.gamble(g)[w];
        LpResult r = lp::maximize(sys, negated, opts);
        if (-r.value != p[g]) return false;
    }
    return true;
}

}  // namespace lprev
