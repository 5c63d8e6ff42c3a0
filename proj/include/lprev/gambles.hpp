#pragma once

#include "lprev/bitset.hpp"
#include "lprev/linalg.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lprev {

/// Finite possibility space with ordered, distinct element labels.
class PossibilitySpace {
public:
    PossibilitySpace() = default;
    explicit PossibilitySpace(std::vector<std::string> labels);
    /// Labels a, b, c, ... (w27, w28, ... past the alphabet).
    static PossibilitySpace of_size(std::size_t n);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::optional<std::size_t> index_of(std::string_view label) const;

    friend bool operator==(const PossibilitySpace&, const PossibilitySpace&) = default;

private:
    std::vector<std::string> labels_;
};

using Event = Bitset;
using Gamble = Vec;
/// Values indexed like the gambles of the set they are defined on.
using LowerPrevision = Vec;

/// Event from element labels; throws on labels outside the space.
Event make_event(const PossibilitySpace& space, const std::vector<std::string>& labels);
Gamble indicator(const Event& a, const PossibilitySpace& space);
Event support(const Gamble& g);

/// min g = 0 and max g = 1 exactly.
bool in_L(const Gamble& g);

/// Maps a normalized value back: scale * v + shift.
struct AffineRecord {
    Rational scale{1};
    Rational shift;
    std::string source;
};

/// (g - min g) / (max g - min g), or nothing for constant gambles.
std::optional<std::pair<Gamble, AffineRecord>> normalize(const Gamble& g, std::string source = {});
Rational denormalize_value(const Rational& v, const AffineRecord& rec);

/// 1 - g; requires g in L.
Gamble complement_gamble(const Gamble& g);

/// Named, ordered gambles over one space; names and vectors are distinct.
class GambleSet {
public:
    GambleSet() = default;
    GambleSet(PossibilitySpace space, std::vector<std::string> names, std::vector<Gamble> gambles);

    const PossibilitySpace& space() const noexcept { return space_; }
    std::size_t size() const noexcept { return gambles_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<Gamble>& gambles() const noexcept { return gambles_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const Gamble& gamble(std::size_t i) const { return gambles_.at(i); }
    std::optional<std::size_t> index_of(std::string_view name) const;
    std::optional<std::size_t> index_of(const Gamble& g) const;

    bool in_L() const noexcept { return in_L_; }
    bool has_all_indicators() const;

    friend bool operator==(const GambleSet& a, const GambleSet& b) {
        return a.space_ == b.space_ && a.names_ == b.names_ && a.gambles_ == b.gambles_;
    }

private:
    PossibilitySpace space_;
    std::vector<std::string> names_;
    std::vector<Gamble> gambles_;
    bool in_L_ = false;
};

struct Augmentation {
    GambleSet set;
    std::vector<std::string> added;        // names of the indicators appended
    std::vector<std::size_t> original;     // positions of the input gambles in set
};

/// Appends the singleton indicators missing from k, in the order of the space.
Augmentation augment_with_indicators(const GambleSet& k);

/// Normalizes every gamble of k into L. Constant gambles are rejected.
std::pair<GambleSet, std::vector<AffineRecord>> normalize_set(const GambleSet& k);

}  // namespace lprev
