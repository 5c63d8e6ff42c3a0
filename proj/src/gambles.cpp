#include "lprev/gambles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lprev {

PossibilitySpace::PossibilitySpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw std::invalid_argument("possibility space: empty element label");
        if (!seen.insert(l).second) throw std::invalid_argument("possibility space: duplicate label '" + l + "'");
    }
}

PossibilitySpace PossibilitySpace::of_size(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "w" + std::to_string(i + 1));
    return PossibilitySpace(std::move(labels));
}

std::optional<std::size_t> PossibilitySpace::index_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

Event make_event(const PossibilitySpace& space, const std::vector<std::string>& labels) {
    Event e(space.size());
    for (const auto& l : labels) {
        auto i = space.index_of(l);
        if (!i) throw std::invalid_argument("event: '" + l + "' is not an element of the space");
        e.set(*i);
    }
    return e;
}

Gamble indicator(const Event& a, const PossibilitySpace& space) {
    if (a.size() != space.size()) throw std::invalid_argument("indicator: event is over a different space");
    Gamble g(space.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        if (a.test(i)) g[i] = 1;
    return g;
}

Event support(const Gamble& g) {
    Event e(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        if (!g[i].is_zero()) e.set(i);
    return e;
}

bool in_L(const Gamble& g) {
    if (g.empty()) return false;
    auto [lo, hi] = std::minmax_element(g.begin(), g.end());
    return lo->is_zero() && *hi == 1;
}

std::optional<std::pair<Gamble, AffineRecord>> normalize(const Gamble& g, std::string source) {
    if (g.empty()) return std::nullopt;
    auto [lo, hi] = std::minmax_element(g.begin(), g.end());
    if (*lo == *hi) return std::nullopt;
    AffineRecord rec{*hi - *lo, *lo, std::move(source)};
    const Rational inv = rec.scale.inverse();
    Gamble out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = (g[i] - rec.shift) * inv;
    return std::make_pair(std::move(out), std::move(rec));
}

Rational denormalize_value(const Rational& v, const AffineRecord& rec) { return rec.scale * v + rec.shift; }

Gamble complement_gamble(const Gamble& g) {
    if (!in_L(g)) throw std::invalid_argument("complement_gamble: gamble is not in L");
    Gamble out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = Rational(1) - g[i];
    return out;
}

GambleSet::GambleSet(PossibilitySpace space, std::vector<std::string> names, std::vector<Gamble> gambles)
    : space_(std::move(space)), names_(std::move(names)), gambles_(std::move(gambles)) {
    if (names_.size() != gambles_.size()) throw std::invalid_argument("gamble set: name count does not match gamble count");
    std::set<std::string> seen_names;
    std::set<Gamble> seen_vectors;
    in_L_ = true;
    for (std::size_t i = 0; i < gambles_.size(); ++i) {
        if (names_[i].empty()) throw std::invalid_argument("gamble set: empty gamble name");
        if (gambles_[i].size() != space_.size())
            throw std::invalid_argument("gamble set: gamble '" + names_[i] + "' has the wrong length");
        if (!seen_names.insert(names_[i]).second) throw std::invalid_argument("gamble set: duplicate name '" + names_[i] + "'");
        if (!seen_vectors.insert(gambles_[i]).second)
            throw std::invalid_argument("gamble set: gamble '" + names_[i] + "' duplicates an earlier gamble");
        in_L_ = in_L_ && lprev::in_L(gambles_[i]);
    }
}

std::optional<std::size_t> GambleSet::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::optional<std::size_t> GambleSet::index_of(const Gamble& g) const {
    auto it = std::find(gambles_.begin(), gambles_.end(), g);
    if (it == gambles_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - gambles_.begin());
}

bool GambleSet::has_all_indicators() const {
    for (std::size_t w = 0; w < space_.size(); ++w) {
        Event e(space_.size());
        e.set(w);
        if (!index_of(indicator(e, space_))) return false;
    }
    return true;
}

Augmentation augment_with_indicators(const GambleSet& k) {
    if (!k.in_L()) throw std::invalid_argument("augment_with_indicators: gamble set is not in L");
    std::vector<std::string> names = k.names();
    std::vector<Gamble> gambles = k.gambles();
    Augmentation out;
    for (std::size_t i = 0; i < k.size(); ++i) out.original.push_back(i);
    const auto& space = k.space();
    for (std::size_t w = 0; w < space.size(); ++w) {
        Event e(space.size());
        e.set(w);
        Gamble ind = indicator(e, space);
        if (k.index_of(ind)) continue;
        std::string name = "I_" + space.label(w);
        while (std::find(names.begin(), names.end(), name) != names.end()) name = "_" + name;
        names.push_back(name);
        gambles.push_back(std::move(ind));
        out.added.push_back(name);
    }
    out.set = GambleSet(space, std::move(names), std::move(gambles));
    return out;
}

std::pair<GambleSet, std::vector<AffineRecord>> normalize_set(const GambleSet& k) {
    std::vector<Gamble> gambles;
    std::vector<AffineRecord> records;
    for (std::size_t i = 0; i < k.size(); ++i) {
        auto n = normalize(k.gamble(i), k.name(i));
        if (!n) throw std::invalid_argument("gamble '" + k.name(i) + "' is constant and cannot be normalized");
        gambles.push_back(std::move(n->first));
        records.push_back(std::move(n->second));
    }
    return {GambleSet(k.space(), k.names(), std::move(gambles)), std::move(records)};
}

}  // namespace lprev
