#include "lprev/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>

namespace lprev {

Family parse_family(const std::string& name) {
    static const std::map<std::string, Family> names{
        {"single", Family::single}, {"custom", Family::custom},     {"l", Family::lmass},
        {"lmass", Family::lmass},   {"u", Family::umass},           {"umass", Family::umass},
        {"lu", Family::lumass},     {"lumass", Family::lumass},     {"pset", Family::pset},
        {"vb", Family::values_based}, {"values_based", Family::values_based}};
    auto it = names.find(name);
    if (it == names.end()) throw std::invalid_argument("unknown family '" + name + "'");
    return it->second;
}

const char* to_string(Family family) {
    switch (family) {
        case Family::single: return "single";
        case Family::custom: return "custom";
        case Family::lmass: return "l";
        case Family::umass: return "u";
        case Family::lumass: return "lu";
        case Family::pset: return "pset";
        case Family::values_based: return "vb";
    }
    return "custom";
}

namespace {

std::string event_name(const PossibilitySpace& space, const Event& e) {
    const bool short_labels =
        std::all_of(space.labels().begin(), space.labels().end(), [](const std::string& l) { return l.size() == 1; });
    std::string name = "I_";
    bool first = true;
    for (auto i : e.indices()) {
        if (!first && !short_labels) name += '_';
        name += space.label(i);
        first = false;
    }
    return name;
}

struct Builder {
    PossibilitySpace space;
    std::vector<std::string> names;
    std::vector<Gamble> gambles;

    void add_event(const Event& e) {
        Gamble g = indicator(e, space);
        if (std::find(gambles.begin(), gambles.end(), g) != gambles.end()) return;
        names.push_back(event_name(space, e));
        gambles.push_back(std::move(g));
    }
    GambleSet build() { return GambleSet(space, std::move(names), std::move(gambles)); }
};

Event singleton(std::size_t n, std::size_t w) {
    Event e(n);
    e.set(w);
    return e;
}

Event complement_of(std::size_t n, std::size_t w) {
    Event e(n);
    for (std::size_t i = 0; i < n; ++i)
        if (i != w) e.set(i);
    return e;
}

GambleSet make(std::vector<std::string> names, std::vector<Gamble> gambles) {
    const std::size_t n = gambles.front().size();
    return GambleSet(PossibilitySpace::of_size(n), std::move(names), std::move(gambles));
}

Rational r(long p, long q = 1) { return Rational(p, q); }

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

GambleSet family_gambles(const FamilySpec& spec) {
    const std::size_t n = spec.omega_size;
    if (spec.family == Family::single || spec.family == Family::custom) {
        if (!spec.gambles) throw std::invalid_argument("family_gambles: explicit gambles required");
        if (spec.family == Family::single && spec.gambles->size() != 1)
            throw std::invalid_argument("family_gambles: single family takes exactly one gamble");
        return *spec.gambles;
    }
    if (n < 2) throw std::invalid_argument("family_gambles: the possibility space needs at least two elements");
    Builder b{PossibilitySpace::of_size(n), {}, {}};
    switch (spec.family) {
        case Family::lmass:
            for (std::size_t w = 0; w < n; ++w) b.add_event(singleton(n, w));
            break;
        case Family::umass:
            for (std::size_t w = 0; w < n; ++w) b.add_event(complement_of(n, w));
            break;
        case Family::lumass:
            for (std::size_t w = 0; w < n; ++w) b.add_event(singleton(n, w));
            for (std::size_t w = 0; w < n; ++w) b.add_event(complement_of(n, w));
            break;
        case Family::pset: {
            if (n > 20) throw std::invalid_argument("family_gambles: pset is limited to 20 elements");
            std::vector<Event> events;
            for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
                Event e(n);
                for (std::size_t i = 0; i < n; ++i)
                    if (mask >> i & 1U) e.set(i);
                events.push_back(std::move(e));
            }
            std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) {
                if (x.count() != y.count()) return x.count() < y.count();
                return x.indices() < y.indices();
            });
            for (const auto& e : events) b.add_event(e);
            break;
        }
        case Family::values_based: {
            if (spec.k < 1) throw std::invalid_argument("family_gambles: values_based needs k >= 1");
            std::vector<std::size_t> ell(n, 0);
            while (true) {
                const auto [lo, hi] = std::minmax_element(ell.begin(), ell.end());
                if (*lo == 0 && *hi == spec.k) {
                    Gamble g(n);
                    std::string name = "v";
                    for (std::size_t i = 0; i < n; ++i) {
                        g[i] = Rational(static_cast<long>(ell[i]), static_cast<long>(spec.k));
                        name += (i ? "_" : "") + std::to_string(ell[i]);
                    }
                    b.names.push_back(std::move(name));
                    b.gambles.push_back(std::move(g));
                }
                std::size_t pos = n;
                while (pos > 0 && ell[pos - 1] == spec.k) ell[--pos] = 0;
                if (pos == 0) break;
                ++ell[pos - 1];
            }
            break;
        }
        default:
            break;
    }
    return b.build();
}

GambleSet preset(const std::string& name) {
    const Gamble f{r(1), r(1, 2), r(0)};
    if (name == "toy") return make({"f", "g"}, {f, {r(0), r(2, 3), r(1)}});
    if (name == "1on3") return make({"f"}, {f});
    if (name == "1on3_lu") return make({"f", "1-f"}, {f, complement_gamble(f)});
    if (name == "2on3") return make({"f", "g"}, {f, {r(0), r(1), r(1, 2)}});
    if (name == "3on3") return make({"f", "g", "h"}, {{r(1), r(0), r(1, 2)}, {r(0), r(1, 2), r(1)}, {r(1, 2), r(1), r(0)}});
    throw std::invalid_argument("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() { return {"toy", "1on3", "1on3_lu", "2on3", "3on3"}; }

PipelineSummary run_pipeline(const GambleSet& k, const PipelineOptions& options) {
    if (k.space().size() < 2) throw std::invalid_argument("pipeline: the possibility space needs at least two elements");
    if (!k.in_L()) throw std::invalid_argument("pipeline: gamble set is not in L");
    const Budget* budget = &options.budget;
    PipelineSummary s;
    s.gambles = k;
    std::vector<std::size_t> original(k.size());
    std::iota(original.begin(), original.end(), 0);
    bool project = false;
    if (options.augment) {
        Augmentation aug = augment_with_indicators(k);
        s.augmented = std::move(aug.set);
        project = !aug.added.empty();
    } else {
        if (!k.has_all_indicators())
            throw std::invalid_argument("pipeline: without augmentation the gamble set must contain all singleton indicators");
        s.augmented = k;
    }

    auto t = std::chrono::steady_clock::now();
    GenerateOptions gen;
    gen.jobs = options.jobs;
    ConstraintSet cs = generate_constraints(s.augmented, gen);
    s.raw_generated = cs.raw_generated;
    s.deduplicated = cs.constraints.size();
    s.timings.generate = seconds_since(t);

    t = std::chrono::steady_clock::now();
    HRep reduced = remove_redundant(cs.to_hrep(), budget);
    s.augmented_irredundant = reduced.size();
    s.timings.reduce = seconds_since(t);

    t = std::chrono::steady_clock::now();
    s.constraints = project ? remove_redundant(fm_project(reduced, original, budget), budget) : std::move(reduced);
    s.timings.project = seconds_since(t);

    if (!options.enumerate) {
        s.status = PipelineStatus::vertices_skipped;
        s.note = "vertex enumeration not requested";
        return s;
    }
    t = std::chrono::steady_clock::now();
    try {
        EnumerationOptions eo;
        eo.budget = options.budget;
        s.vertices = enumerate_vertices(s.constraints, eo);
        s.graph = adjacency(s.constraints, *s.vertices);
    } catch (const BudgetExceeded& e) {
        s.vertices.reset();
        s.graph.reset();
        s.status = PipelineStatus::vertices_skipped;
        s.note = e.what();
    }
    s.timings.enumerate = seconds_since(t);
    return s;
}

PipelineSummary run_pipeline(const FamilySpec& spec, const PipelineOptions& options) {
    return run_pipeline(family_gambles(spec), options);
}

std::vector<TableRow> reproduce_table(const FamilySpec& base, std::size_t from, std::size_t to,
                                      const PipelineOptions& options) {
    std::vector<TableRow> rows;
    for (std::size_t param = from; param <= to; ++param) {
        FamilySpec spec = base;
        if (spec.family == Family::values_based)
            spec.k = param;
        else
            spec.omega_size = param;
        TableRow row;
        row.parameter = param;
        try {
            const GambleSet k = family_gambles(spec);
            row.gamble_count = k.size();
            PipelineSummary s = run_pipeline(k, options);
            row.raw_generated = s.raw_generated;
            row.irredundant = s.irredundant();
            if (s.vertices) {
                row.vertex_count = s.vertices->vrep.vertices.size();
            } else {
                row.skipped = true;
                row.note = s.note;
            }
        } catch (const BudgetExceeded& e) {
            row.skipped = true;
            row.note = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace lprev
