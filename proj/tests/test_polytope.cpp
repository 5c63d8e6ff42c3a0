#include "lprev/polytope.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lprev;
using namespace lprev::testing;

namespace {

std::vector<oracle::QVec> as_q(const std::vector<Vec>& vs) {
    std::vector<oracle::QVec> out;
    for (const auto& v : vs) out.push_back(oracle::to_q(v));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("halfspaces are stored as primitive integer rows") {
    Halfspace c = canonical(le({"1/2", "-1/3"}, "1/6"));
    CHECK(c.coeffs == vec({"3", "-2"}));
    CHECK(c.rhs == 1);
    HRep h(2);
    h.add(le({"1", "1"}, "1"));
    h.add(le({"2", "2"}, "2"));
    CHECK(h.size() == 1);
}

TEST_CASE("contains tests every constraint") {
    HRep t = toy_polytope();
    CHECK(contains(t, vec({"1/2", "2/3"})));
    CHECK(contains(t, vec({"0", "0"})));
    CHECK_FALSE(contains(t, vec({"1", "1"})));
    CHECK_FALSE(contains(t, vec({"-1/100", "0"})));
    CHECK_THROWS(contains(t, vec({"0"})));
}

TEST_CASE("redundant copies of the toy polytope are removed") {
    HRep h = toy_polytope();
    h.add_unchecked(le({"1", "0"}, "1"));
    h.add_unchecked(le({"0", "1"}, "1"));
    h.add_unchecked(le({"1", "1"}, "2"));
    h.add_unchecked(le({"-2", "0"}, "0"));
    HRep r = remove_redundant(h);
    CHECK(r.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(r[i] == toy_polytope()[i]);
}

TEST_CASE("a loose diagonal cut of the unit square is redundant") {
    HRep h = unit_cube(2);
    h.add_unchecked(le({"1", "1"}, "3"));
    h.add_unchecked(le({"1", "1"}, "2"));  // touches only the corner (1,1)
    CHECK(remove_redundant(h).size() == 4);
}

TEST_CASE("redundancy removal without interior keeps a minimal description") {
    // Segment {x + y = 1, 0 <= x <= 1} described with extras.
    HRep h = make_hrep(2, {le({"1", "1"}, "1"), le({"-1", "-1"}, "-1"), le({"-1", "0"}, "0"), le({"1", "0"}, "1"),
                           le({"0", "-1"}, "0"), le({"2", "1"}, "2")});
    HRep r = remove_redundant(h);
    CHECK(r.size() == 4);
    CHECK(enumerate_vertices(r).vrep.vertices == enumerate_vertices(h).vrep.vertices);
}

TEST_CASE("empty polytopes are reported") {
    HRep h = make_hrep(1, {le({"1"}, "0"), le({"-1"}, "-1")});
    CHECK_THROWS_AS(remove_redundant(h), InfeasibleError);
    CHECK_THROWS_AS(enumerate_vertices(h), InfeasibleError);
    HRep open = make_hrep(2, {le({"-1", "0"}, "0"), le({"0", "-1"}, "0")});
    CHECK_THROWS_AS(enumerate_vertices(open), UnboundedError);
}

TEST_CASE("toy polytope vertices and adjacency") {
    HRep t = toy_polytope();
    auto ve = enumerate_vertices(t);
    CHECK(ve.vrep.vertices ==
          std::vector<Vec>{vec({"0", "0"}), vec({"0", "1"}), vec({"1/2", "2/3"}), vec({"1", "0"})});
    auto g = adjacency(t, ve);
    CHECK(g.edges.size() == 4);
    for (std::size_t v = 0; v < 4; ++v) CHECK(g.degree(v) == 2);
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(1, 3));
}

TEST_CASE("cube has eight vertices of degree three") {
    HRep c = unit_cube(3);
    auto ve = enumerate_vertices(c);
    CHECK(ve.vrep.vertices.size() == 8);
    auto g = adjacency(c, ve);
    CHECK(g.edges.size() == 12);
    for (std::size_t v = 0; v < 8; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("fourier-motzkin projects the cube onto a square") {
    HRep c = unit_cube(3);
    std::vector<std::size_t> keep{2, 0};
    HRep s = fm_project(c, keep);
    CHECK(s.dim() == 2);
    CHECK(s.names() == std::vector<std::string>{"x3", "x1"});
    CHECK(s.size() == 4);
    CHECK(enumerate_vertices(s).vrep.vertices.size() == 4);
}

TEST_CASE("fourier-motzkin shadow of a tetrahedron") {
    // conv{0, e1, e2, e3} projected onto (x1, x2) is the standard triangle.
    HRep t = make_hrep(3, {le({"-1", "0", "0"}, "0"), le({"0", "-1", "0"}, "0"), le({"0", "0", "-1"}, "0"),
                           le({"1", "1", "1"}, "1")});
    std::vector<std::string> keep{"x1", "x2"};
    HRep s = fm_project(t, keep);
    CHECK(s.size() == 3);
    CHECK(enumerate_vertices(s).vrep.vertices ==
          std::vector<Vec>{vec({"0", "0"}), vec({"0", "1"}), vec({"1", "0"})});
}

TEST_CASE("property: vertex enumeration matches the brute-force oracle") {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 60; ++iter) {
        const std::size_t d = 2 + rng() % 3;
        HRep h = random_polytope(rng, d, 2 + rng() % 5);
        auto ve = enumerate_vertices(h);
        CHECK(as_q(ve.vrep.vertices) == oracle::vertices(h));
        // Redundancy removal keeps the same vertex set.
        HRep r = remove_redundant(h);
        CHECK(r.size() <= h.size());
        CHECK(enumerate_vertices(r).vrep.vertices == ve.vrep.vertices);
        // Each kept constraint is a facet: dropping it changes the polytope.
        for (std::size_t i = 0; i < r.size(); ++i) {
            HRep without(d);
            for (std::size_t j = 0; j < r.size(); ++j)
                if (j != i) without.add_unchecked(r[j]);
            bool changed = true;
            try {
                changed = enumerate_vertices(without).vrep.vertices != ve.vrep.vertices;
            } catch (const UnboundedError&) {
            }
            CHECK(changed);
        }
    }
}

TEST_CASE("property: insertion order does not change the vertex set") {
    std::mt19937 rng(17);
    for (int iter = 0; iter < 30; ++iter) {
        HRep h = random_polytope(rng, 3, 4);
        auto base = enumerate_vertices(h);
        std::vector<std::size_t> perm(h.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        EnumerationOptions opts;
        opts.insertion_order = perm;
        auto shuffled = enumerate_vertices(h, opts);
        CHECK(shuffled.vrep.vertices == base.vrep.vertices);
        CHECK(adjacency(h, shuffled).edges == adjacency(h, base).edges);
    }
}

TEST_CASE("property: projection vertices are the extreme shadows of the vertices") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 30; ++iter) {
        HRep h = random_polytope(rng, 3, 3 + rng() % 3);
        auto verts = enumerate_vertices(h).vrep.vertices;
        std::vector<Vec> shadows;
        for (const auto& v : verts) shadows.push_back({v[0], v[1]});
        std::vector<std::size_t> keep{0, 1};
        HRep s = fm_project(h, keep);
        CHECK(enumerate_vertices(s).vrep.vertices == extreme_points(shadows));
    }
}

TEST_CASE("budgets stop enumeration") {
    EnumerationOptions opts;
    opts.budget.max_vertices = 7;
    CHECK_THROWS_AS(enumerate_vertices(unit_cube(3), opts), BudgetExceeded);
    opts.budget.max_vertices = 8;
    CHECK_NOTHROW(enumerate_vertices(unit_cube(3), opts));
}
