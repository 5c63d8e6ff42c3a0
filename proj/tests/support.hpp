#pragma once

#include "lprev/gambles.hpp"
#include "lprev/hrep.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace lprev::testing {

inline Rational q(const char* text) { return Rational::parse(text); }

inline Vec vec(std::initializer_list<const char*> items) {
    Vec v;
    for (auto* s : items) v.push_back(Rational::parse(s));
    return v;
}

inline Halfspace le(std::initializer_list<const char*> coeffs, const char* rhs) { return Halfspace{vec(coeffs), q(rhs)}; }

inline HRep make_hrep(std::size_t dim, std::initializer_list<Halfspace> rows) {
    HRep h(dim);
    for (const auto& r : rows) h.add_unchecked(r);
    return h;
}

// x_k in [0, 1] for every k
inline HRep unit_cube(std::size_t dim) {
    HRep h(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        Vec lo(dim), hi(dim);
        lo[k] = -1;
        hi[k] = 1;
        h.add({lo, Rational()});
        h.add({hi, Rational(1)});
    }
    return h;
}

// The two-gamble polytope in (Pf, Pg) coordinates.
inline HRep toy_polytope() {
    return make_hrep(2, {le({"-1", "0"}, "0"), le({"0", "-1"}, "0"), le({"1", "3/4"}, "1"), le({"2/3", "1"}, "1")});
}


// Brute-force oracle over plain GMP: every d-subset of constraints whose
// square system has a unique solution, kept when feasible. Exponential; only
// for small test inputs.
namespace oracle {

using QVec = std::vector<mpq_class>;

inline QVec to_q(const Vec& v) {
    QVec out;
    for (const auto& r : v) out.push_back(r.to_mpq());
    return out;
}

inline std::optional<QVec> solve_square(std::vector<QVec> a, QVec b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            mpq_class f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    QVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

inline bool feasible(const HRep& h, const QVec& x) {
    for (const auto& c : h.constraints()) {
        mpq_class s = 0;
        for (std::size_t k = 0; k < x.size(); ++k) s += c.coeffs[k].to_mpq() * x[k];
        if (s > c.rhs.to_mpq()) return false;
    }
    return true;
}

inline std::vector<QVec> vertices(const HRep& h) {
    const std::size_t d = h.dim(), m = h.size();
    std::vector<QVec> out;
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(d, m)), true);
    if (d > m) return out;
    do {
        std::vector<QVec> a;
        QVec b;
        for (std::size_t i = 0; i < m; ++i)
            if (pick[i]) {
                a.push_back(to_q(h[i].coeffs));
                b.push_back(h[i].rhs.to_mpq());
            }
        auto x = solve_square(a, b);
        if (x && feasible(h, *x)) out.push_back(*x);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace oracle

// Random polytope: a box [-2, 2]^d cut by extra halfspaces through small
// integer normals, all keeping the origin strictly inside.
inline HRep random_polytope(std::mt19937& rng, std::size_t dim, std::size_t extra) {
    HRep h(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        Vec lo(dim), hi(dim);
        lo[k] = -1;
        hi[k] = 1;
        h.add_unchecked({lo, Rational(2)});
        h.add_unchecked({hi, Rational(2)});
    }
    for (std::size_t i = 0; i < extra; ++i) {
        Vec a(dim);
        bool nonzero = false;
        for (auto& e : a) {
            e = Rational(static_cast<long>(rng() % 5) - 2);
            nonzero = nonzero || !e.is_zero();
        }
        if (!nonzero) a[0] = 1;
        h.add_unchecked({a, Rational(static_cast<long>(rng() % 4) + 1, 2)});
    }
    return h;
}

// Random coherence instance: a gamble set and a lower prevision that is either
// random on the 1/12 grid, vacuous relative to an event, a lower envelope of
// a few mass functions, or such an envelope nudged by 1/12.
struct RandomInstance {
    GambleSet gambles;
    LowerPrevision prevision;
    const char* origin;
};

// |Omega| = 3: the singleton indicators plus up to two gambles in L on the
// 1/12 grid.
inline RandomInstance random_instance(std::mt19937& rng) {
    const PossibilitySpace space = PossibilitySpace::of_size(3);
    std::vector<std::string> names{"I_a", "I_b", "I_c"};
    std::vector<Gamble> gambles{vec({"1", "0", "0"}), vec({"0", "1", "0"}), vec({"0", "0", "1"})};
    const std::size_t extra = rng() % 3;
    while (names.size() < 3 + extra) {
        Gamble g(3);
        for (auto& x : g) x = Rational(static_cast<long>(rng() % 13), 12);
        if (!in_L(g) || std::find(gambles.begin(), gambles.end(), g) != gambles.end()) continue;
        names.push_back("g" + std::to_string(names.size() - 2));
        gambles.push_back(std::move(g));
    }
    RandomInstance inst{GambleSet(space, names, gambles), {}, ""};
    const std::size_t n = gambles.size();
    auto envelope = [&] {
        LowerPrevision p(n);
        const std::size_t count = 1 + rng() % 3;
        for (std::size_t m = 0; m < count; ++m) {
            // mass function on the 1/12 grid
            const long a = static_cast<long>(rng() % 13);
            const long b = static_cast<long>(rng() % static_cast<unsigned>(13 - a));
            const Vec mass{Rational(a, 12), Rational(b, 12), Rational(12 - a - b, 12)};
            for (std::size_t i = 0; i < n; ++i) {
                const Rational v = dot(mass, gambles[i]);
                if (m == 0 || v < p[i]) p[i] = v;
            }
        }
        return p;
    };
    switch (rng() % 4) {
        case 0:
            inst.origin = "grid";
            inst.prevision.resize(n);
            for (auto& v : inst.prevision) v = Rational(static_cast<long>(rng() % 13), 12);
            break;
        case 1: {
            inst.origin = "vacuous";
            Event a(3);
            while (a.none())
                for (std::size_t w = 0; w < 3; ++w)
                    if (rng() % 2) a.set(w);
            for (const auto& g : gambles) {
                std::optional<Rational> lo;
                for (auto w : a.indices())
                    if (!lo || g[w] < *lo) lo = g[w];
                inst.prevision.push_back(*lo);
            }
            break;
        }
        case 2:
            inst.origin = "envelope";
            inst.prevision = envelope();
            break;
        default:
            inst.origin = "nudged";
            inst.prevision = envelope();
            inst.prevision[rng() % n] += Rational(rng() % 2 ? 1 : -1, 12);
            break;
    }
    return inst;
}

}  // namespace lprev::testing
