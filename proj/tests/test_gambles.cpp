#include "lprev/gambles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace lprev;
using namespace lprev::testing;

namespace {

const PossibilitySpace abc = PossibilitySpace::of_size(3);

GambleSet toy_set() { return GambleSet(abc, {"f", "g"}, {vec({"1", "1/2", "0"}), vec({"0", "2/3", "1"})}); }

}  // namespace

TEST_CASE("indicators of events") {
    CHECK(indicator(make_event(abc, {"a"}), abc) == vec({"1", "0", "0"}));
    CHECK(indicator(make_event(abc, {"a", "b", "c"}), abc) == vec({"1", "1", "1"}));
    CHECK(indicator(make_event(abc, {}), abc) == vec({"0", "0", "0"}));
    CHECK_THROWS(make_event(abc, {"d"}));
    CHECK_FALSE(in_L(indicator(make_event(abc, {"a", "b", "c"}), abc)));
}

TEST_CASE("supports") {
    CHECK(support(vec({"1", "1/2", "0"})).indices() == std::vector<std::size_t>{0, 1});
    CHECK(support(vec({"0", "0", "0"})).none());
    CHECK(support(vec({"0", "1", "0"})).indices() == std::vector<std::size_t>{1});
}

TEST_CASE("normalization into L") {
    auto n = normalize(vec({"2", "1", "0"}));
    REQUIRE(n);
    CHECK(n->first == vec({"1", "1/2", "0"}));
    CHECK(n->second.scale == 2);
    CHECK(n->second.shift == 0);
    CHECK_FALSE(normalize(vec({"3", "3", "3"})));
    auto same = normalize(vec({"1", "1/2", "0"}));
    CHECK(same->first == vec({"1", "1/2", "0"}));
    CHECK(same->second.scale == 1);
}

TEST_CASE("denormalized values") {
    CHECK(denormalize_value(q("1/2"), {q("2"), q("0"), ""}) == 1);
    CHECK(denormalize_value(q("0"), {q("5"), q("-3"), ""}) == -3);
    CHECK(denormalize_value(q("2/3"), {q("3"), q("1"), ""}) == 3);
}

TEST_CASE("complements") {
    CHECK(complement_gamble(vec({"1", "1/2", "0"})) == vec({"0", "1/2", "1"}));
    CHECK(complement_gamble(vec({"1", "0", "0"})) == vec({"0", "1", "1"}));
    CHECK_THROWS(complement_gamble(vec({"2", "0", "0"})));
}

TEST_CASE("gamble sets reject duplicate names and vectors") {
    CHECK_THROWS(GambleSet(abc, {"f", "f"}, {vec({"1", "0", "0"}), vec({"0", "1", "0"})}));
    CHECK_THROWS(GambleSet(abc, {"f", "g"}, {vec({"1", "0", "0"}), vec({"1", "0", "0"})}));
    CHECK_THROWS(GambleSet(abc, {"f"}, {vec({"1", "0"})}));
    CHECK(toy_set().in_L());
    CHECK_FALSE(GambleSet(abc, {"f"}, {vec({"2", "0", "0"})}).in_L());
    CHECK_THROWS(PossibilitySpace({"a", "a"}));
}

TEST_CASE("augmentation appends the missing singleton indicators") {
    Augmentation aug = augment_with_indicators(toy_set());
    CHECK(aug.set.size() == 5);
    CHECK(aug.set.names() == std::vector<std::string>{"f", "g", "I_a", "I_b", "I_c"});
    CHECK(aug.added == std::vector<std::string>{"I_a", "I_b", "I_c"});
    CHECK(aug.original == std::vector<std::size_t>{0, 1});

    GambleSet full(abc, {"x", "y", "z"}, {vec({"1", "0", "0"}), vec({"0", "1", "0"}), vec({"0", "0", "1"})});
    CHECK(augment_with_indicators(full).added.empty());

    GambleSet partial(abc, {"ia", "f"}, {vec({"1", "0", "0"}), vec({"1", "1/2", "0"})});
    CHECK(augment_with_indicators(partial).added == std::vector<std::string>{"I_b", "I_c"});
}

TEST_CASE("property: normalization, complements and augmentation laws") {
    std::mt19937 rng(41);
    for (int iter = 0; iter < 300; ++iter) {
        Gamble g(3 + rng() % 3);
        for (auto& x : g) x = Rational(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 4) + 1);
        auto n = normalize(g);
        if (!n) {
            CHECK(std::all_of(g.begin(), g.end(), [&](const Rational& x) { return x == g[0]; }));
            continue;
        }
        CHECK(in_L(n->first));
        for (std::size_t i = 0; i < g.size(); ++i) CHECK(denormalize_value(n->first[i], n->second) == g[i]);
        CHECK(normalize(n->first)->first == n->first);
        const Gamble c = complement_gamble(n->first);
        CHECK(in_L(c));
        CHECK(complement_gamble(c) == n->first);

        const PossibilitySpace space = PossibilitySpace::of_size(g.size());
        GambleSet k(space, {"g"}, {n->first});
        Augmentation once = augment_with_indicators(k);
        Augmentation twice = augment_with_indicators(once.set);
        CHECK(twice.set == once.set);
        CHECK(twice.added.empty());
        CHECK(once.set.has_all_indicators());
    }
}
