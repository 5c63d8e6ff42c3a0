#include "lprev/polytope.hpp"

#include <algorithm>

namespace lprev {

namespace {

// One elimination step on coordinate e; the result drops that coordinate.
HRep eliminate(const HRep& h, std::size_t e) {
    std::vector<std::string> names = h.names();
    names.erase(names.begin() + static_cast<std::ptrdiff_t>(e));
    HRep out(h.dim() - 1, std::move(names));
    auto drop = [e](const Vec& v) {
        Vec w;
        w.reserve(v.size() - 1);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (k != e) w.push_back(v[k]);
        return w;
    };
    std::vector<const Halfspace*> pos, neg;
    for (const auto& c : h.constraints()) {
        const int s = c.coeffs[e].sign();
        if (s > 0)
            pos.push_back(&c);
        else if (s < 0)
            neg.push_back(&c);
        else
            out.add_unchecked(Halfspace{drop(c.coeffs), c.rhs});
    }
    for (const auto* p : pos) {
        for (const auto* q : neg) {
            const Rational wp = -q->coeffs[e];  // > 0
            const Rational wq = p->coeffs[e];   // > 0
            Halfspace combined;
            combined.coeffs.resize(h.dim());
            for (std::size_t k = 0; k < h.dim(); ++k) combined.coeffs[k] = wp * p->coeffs[k] + wq * q->coeffs[k];
            combined.rhs = wp * p->rhs + wq * q->rhs;
            out.add_unchecked(Halfspace{drop(combined.coeffs), combined.rhs});
        }
    }
    out.deduplicate();
    return out;
}

std::size_t fill_cost(const HRep& h, std::size_t e) {
    std::size_t p = 0, n = 0;
    for (const auto& c : h.constraints()) {
        const int s = c.coeffs[e].sign();
        p += s > 0;
        n += s < 0;
    }
    return p * n + (h.size() - p - n);
}

}  // namespace

HRep fm_project(const HRep& h, std::span<const std::size_t> keep, const Budget* budget) {
    std::vector<bool> kept(h.dim(), false);
    for (auto k : keep) {
        if (k >= h.dim()) throw std::invalid_argument("fm_project: coordinate index out of range");
        if (kept[k]) throw std::invalid_argument("fm_project: coordinate listed twice");
        kept[k] = true;
    }
    HRep current = remove_redundant(h, budget);
    // Track which original coordinate each current column is.
    std::vector<std::size_t> columns(h.dim());
    for (std::size_t k = 0; k < h.dim(); ++k) columns[k] = k;

    while (current.dim() > keep.size()) {
        std::optional<std::size_t> best;
        std::size_t best_cost = 0;
        for (std::size_t c = 0; c < current.dim(); ++c) {
            if (kept[columns[c]]) continue;
            const std::size_t cost = fill_cost(current, c);
            if (!best || cost < best_cost) {
                best = c;
                best_cost = cost;
            }
        }
        current = remove_redundant(eliminate(current, *best), budget);
        columns.erase(columns.begin() + static_cast<std::ptrdiff_t>(*best));
    }

    // Reorder the surviving columns to the requested order.
    std::vector<std::string> names;
    for (auto k : keep) names.push_back(h.names()[k]);
    HRep out(keep.size(), std::move(names));
    for (const auto& c : current.constraints()) {
        Halfspace reordered{Vec(keep.size()), c.rhs};
        for (std::size_t j = 0; j < keep.size(); ++j) {
            auto pos = std::find(columns.begin(), columns.end(), keep[j]) - columns.begin();
            reordered.coeffs[j] = c.coeffs[static_cast<std::size_t>(pos)];
        }
        out.add(std::move(reordered));
    }
    return out;
}

HRep fm_project(const HRep& h, std::span<const std::string> keep, const Budget* budget) {
    std::vector<std::size_t> indices;
    for (const auto& name : keep) {
        auto it = std::find(h.names().begin(), h.names().end(), name);
        if (it == h.names().end()) throw std::invalid_argument("fm_project: unknown coordinate '" + name + "'");
        indices.push_back(static_cast<std::size_t>(it - h.names().begin()));
    }
    return fm_project(h, indices, budget);
}

}  // namespace lprev
