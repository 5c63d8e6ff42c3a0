#include "lprev/hrep.hpp"

#include <algorithm>
#include <set>

namespace lprev {

Halfspace canonical(Halfspace h) {
    std::vector<Rational> all(h.coeffs.begin(), h.coeffs.end());
    all.push_back(h.rhs);
    bool zero_lhs = std::all_of(h.coeffs.begin(), h.coeffs.end(), [](const Rational& r) { return r.is_zero(); });
    if (zero_lhs) {
        h.rhs = Rational(h.rhs.sign());
        return h;
    }
    make_primitive(all);
    std::copy(all.begin(), all.end() - 1, h.coeffs.begin());
    h.rhs = all.back();
    return h;
}

HRep::HRep(std::size_t dim) : dim_(dim), names_(default_names(dim)) {}

HRep::HRep(std::size_t dim, std::vector<std::string> names) : dim_(dim), names_(std::move(names)) {
    if (names_.size() != dim_) throw std::invalid_argument("HRep: name count does not match dimension");
}

bool HRep::add(Halfspace h) {
    if (h.coeffs.size() != dim_) throw std::invalid_argument("HRep: constraint length does not match dimension");
    h = canonical(std::move(h));
    if (std::find(constraints_.begin(), constraints_.end(), h) != constraints_.end()) return false;
    constraints_.push_back(std::move(h));
    return true;
}

void HRep::add_unchecked(Halfspace h) {
    if (h.coeffs.size() != dim_) throw std::invalid_argument("HRep: constraint length does not match dimension");
    constraints_.push_back(canonical(std::move(h)));
}

void HRep::deduplicate() {
    std::set<Halfspace> seen;
    std::vector<Halfspace> kept;
    for (auto& c : constraints_)
        if (seen.insert(c).second) kept.push_back(std::move(c));
    constraints_ = std::move(kept);
}

std::size_t AdjacencyGraph::degree(std::size_t v) const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [v](const auto& e) { return e.first == v || e.second == v; }));
}

bool AdjacencyGraph::adjacent(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::string> default_names(std::size_t dim) {
    std::vector<std::string> out;
    out.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) out.push_back("x" + std::to_string(i + 1));
    return out;
}

Budget Budget::with_time_limit(double seconds) {
    Budget b;
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
    return b;
}

void Budget::check_time() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline) throw BudgetExceeded("time limit exceeded");
}

}  // namespace lprev
