#include "lprev/cli.hpp"

#include "lprev/catalog.hpp"
#include "lprev/coherence.hpp"
#include "lprev/credal.hpp"
#include "lprev/io.hpp"
#include "lprev/polytope.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace lprev::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Limits {
    unsigned jobs = 1;
    std::size_t max_vertices = 0;
    double time_limit = 0;

    Budget budget() const {
        Budget b = time_limit > 0 ? Budget::with_time_limit(time_limit) : Budget{};
        b.max_vertices = max_vertices;
        return b;
    }
};

struct Source {
    std::string gambles_path;
    std::string preset_name;
    std::string family;
    std::size_t omega = 3;
    std::size_t k = 1;

    GambleSet load() const {
        const int given = !gambles_path.empty() + !preset_name.empty() + !family.empty();
        if (given != 1) throw UsageError("give exactly one of --gambles, --preset, --family");
        if (!gambles_path.empty()) {
            std::ifstream in(gambles_path);
            if (!in) throw io::FormatError("cannot open " + gambles_path);
            return io::read_gambles(in);
        }
        try {
            if (!preset_name.empty()) return preset(preset_name);
            FamilySpec spec;
            spec.family = parse_family(family);
            spec.omega_size = omega;
            spec.k = k;
            if (spec.family == Family::single || spec.family == Family::custom)
                throw UsageError("--family " + family + " needs explicit gambles; use --gambles");
            return family_gambles(spec);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }

    std::string describe() const {
        if (!gambles_path.empty()) return "gambles " + gambles_path;
        if (!preset_name.empty()) return "preset " + preset_name;
        std::string s = "family " + family + " omega " + std::to_string(omega);
        if (family == "vb" || family == "values_based") s += " k " + std::to_string(k);
        return s;
    }
};

void add_source(CLI::App* cmd, Source& s) {
    cmd->add_option("--gambles", s.gambles_path, "Gamble set file (.gmb)");
    cmd->add_option("--preset", s.preset_name, "Named example: toy, 1on3, 1on3_lu, 2on3, 3on3");
    cmd->add_option("--family", s.family, "Family: l, u, lu, pset, vb");
    cmd->add_option("--omega", s.omega, "Size of the possibility space for --family")->check(CLI::Range(2, 64));
    cmd->add_option("--k", s.k, "Grid parameter for --family vb")->check(CLI::Range(1, 1000));
}

void add_limits(CLI::App* cmd, Limits& l) {
    cmd->add_option("--jobs", l.jobs, "Worker threads for constraint generation")->check(CLI::Range(1, 256));
    cmd->add_option("--max-vertices", l.max_vertices, "Abort enumeration beyond this many vertices (0: no limit)");
    cmd->add_option("--time-limit", l.time_limit, "Wall-clock limit in seconds (0: none)")->check(CLI::NonNegativeNumber);
}

HRep read_hrep_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io::FormatError("cannot open " + path);
    return io::read_hrep(in);
}

std::map<std::string, Rational> read_prevision_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io::FormatError("cannot open " + path);
    return io::read_prevision(in);
}

// Writes through `write` to the file, or to `out` when the path is empty or "-".
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& write) {
    if (path.empty() || path == "-") {
        write(out);
        return;
    }
    std::ofstream f(path);
    if (!f) throw io::FormatError("cannot write " + path);
    write(f);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    for (char c : s) {
        if (c == ',' || c == ' ') {
            if (!item.empty()) out.push_back(item);
            item.clear();
        } else {
            item += c;
        }
    }
    if (!item.empty()) out.push_back(item);
    return out;
}

std::string describe_constraint(const Halfspace& c, const std::vector<std::string>& names) {
    std::ostringstream s;
    bool first = true;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
        const Rational& a = c.coeffs[i];
        if (a.is_zero()) continue;
        if (!first) s << (a.sign() > 0 ? " + " : " - ");
        else if (a.sign() < 0) s << '-';
        const Rational m = a.abs();
        if (m != 1) s << m << '*';
        s << names[i];
        first = false;
    }
    s << " <= " << c.rhs;
    return s.str();
}

// Values of the prevision file on k; gambles outside L are brought into L
// together with their values.
struct PreparedPrevision {
    GambleSet gambles;
    LowerPrevision values;
};

PreparedPrevision prepare(const GambleSet& k, const std::map<std::string, Rational>& raw) {
    LowerPrevision p = io::prevision_for(raw, k);
    if (k.in_L()) return {k, p};
    auto [normalized, records] = normalize_set(k);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = (p[i] - records[i].shift) / records[i].scale;
    return {normalized, p};
}

void write_summary(std::ostream& out, const PipelineSummary& s, const std::string& source) {
    out << "source " << source << '\n';
    out << "omega " << s.gambles.space().size() << '\n';
    out << "gambles " << s.gambles.size() << '\n';
    out << "augmented_gambles " << s.augmented.size() << '\n';
    out << "raw_generated " << s.raw_generated << '\n';
    out << "deduplicated " << s.deduplicated << '\n';
    out << "augmented_irredundant " << s.augmented_irredundant << '\n';
    out << "irredundant " << s.irredundant() << '\n';
    if (s.vertices) {
        out << "vertices " << s.vertices->vrep.vertices.size() << '\n';
        out << "edges " << s.graph->edges.size() << '\n';
        out << "status complete\n";
    } else {
        out << "vertices skipped\n";
        out << "status vertices_skipped (" << s.note << ")\n";
    }
}

void report_timings(std::ostream& err, const PipelineSummary& s) {
    err << std::fixed << std::setprecision(3) << "time generate " << s.timings.generate << "s, reduce "
        << s.timings.reduce << "s, project " << s.timings.project << "s, enumerate " << s.timings.enumerate << "s\n";
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coherent lower previsions over exact rationals", "lprev"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    Source src;
    Limits limits;
    std::string in_path, out_path, prevision_path, adj_path, keep, target;
    bool no_augment = false, direct = false, envelope = false;
    std::size_t from = 0, to = 0;
    int status = 0;

    auto* gen = app.add_subcommand("gen", "Generate the coherence constraints in the augmented space");
    add_source(gen, src);
    add_limits(gen, limits);
    gen->add_option("--out", out_path, "Output H-representation (default stdout)");
    gen->add_flag("--no-augment", no_augment, "The gamble set already contains all singleton indicators");
    gen->callback([&] {
        const GambleSet k = src.load();
        const GambleSet ambient = no_augment ? k : augment_with_indicators(k).set;
        GenerateOptions opts;
        opts.jobs = limits.jobs;
        ConstraintSet cs = generate_constraints(ambient, opts);
        emit(out_path, out, [&](std::ostream& o) { io::write_hrep(o, cs.to_hrep()); });
        err << "generated " << cs.raw_generated << " constraints, " << cs.constraints.size() << " after deduplication\n";
    });

    auto* reduce = app.add_subcommand("reduce", "Remove redundant constraints");
    reduce->add_option("--in", in_path, "Input H-representation")->required();
    reduce->add_option("--out", out_path, "Output H-representation (default stdout)");
    add_limits(reduce, limits);
    reduce->callback([&] {
        const HRep h = read_hrep_file(in_path);
        const Budget b = limits.budget();
        HRep r = remove_redundant(h, &b);
        emit(out_path, out, [&](std::ostream& o) { io::write_hrep(o, r); });
        err << "kept " << r.size() << " of " << h.size() << " constraints\n";
    });

    auto* project = app.add_subcommand("project", "Fourier-Motzkin projection onto named coordinates");
    project->add_option("--in", in_path, "Input H-representation")->required();
    project->add_option("--keep", keep, "Comma-separated coordinates to keep")->required();
    project->add_option("--out", out_path, "Output H-representation (default stdout)");
    add_limits(project, limits);
    project->callback([&] {
        const HRep h = read_hrep_file(in_path);
        const auto names = split_list(keep);
        for (const auto& n : names)
            if (std::find(h.names().begin(), h.names().end(), n) == h.names().end())
                throw UsageError("unknown coordinate '" + n + "' in --keep");
        const Budget b = limits.budget();
        HRep p = fm_project(h, names, &b);
        emit(out_path, out, [&](std::ostream& o) { io::write_hrep(o, p); });
    });

    auto* vertices = app.add_subcommand("vertices", "Enumerate vertices and their adjacency");
    vertices->add_option("--in", in_path, "Input H-representation")->required();
    vertices->add_option("--out", out_path, "Output V-representation (default stdout)");
    vertices->add_option("--adj", adj_path, "Output adjacency list");
    add_limits(vertices, limits);
    vertices->callback([&] {
        const HRep h = read_hrep_file(in_path);
        EnumerationOptions eo;
        eo.budget = limits.budget();
        auto ve = enumerate_vertices(h, eo);
        emit(out_path, out, [&](std::ostream& o) { io::write_vrep(o, ve.vrep); });
        if (!adj_path.empty()) {
            auto g = adjacency(h, ve);
            emit(adj_path, out, [&](std::ostream& o) { io::write_adjacency(o, g); });
        }
    });

    auto* check = app.add_subcommand("check", "Decide whether a lower prevision is coherent");
    add_source(check, src);
    add_limits(check, limits);
    check->add_option("--prevision", prevision_path, "Lower prevision file (.lpv)")->required();
    auto* direct_flag = check->add_flag("--direct", direct, "Decide from the definition instead of the constraints");
    check->add_flag("--envelope", envelope, "Decide by comparing with the lower envelope of the credal set")
        ->excludes(direct_flag);
    check->add_flag("--no-augment", no_augment, "The gamble set already contains all singleton indicators");
    check->callback([&] {
        const auto raw = read_prevision_file(prevision_path);
        const auto [k, p] = prepare(src.load(), raw);
        if (envelope) {
            const bool ok = is_lower_envelope(p, k);
            out << (ok ? "coherent\n" : "incoherent\n");
            status = ok ? 0 : 1;
            return;
        }
        if (direct) {
            Augmentation aug = no_augment ? Augmentation{k, {}, {}} : augment_with_indicators(k);
            if (no_augment && !k.has_all_indicators())
                throw UsageError("--no-augment requires all singleton indicators in the gamble set");
            LowerPrevision full = p;
            for (std::size_t i = k.size(); i < aug.set.size(); ++i) {
                // Indicator values absent from the input are taken from the
                // natural extension; without one the prevision incurs sure loss.
                try {
                    full.push_back(natural_extension(p, k, aug.set.gamble(i)));
                } catch (const InfeasibleError&) {
                    out << "incoherent\nincurs sure loss: the credal set is empty\n";
                    status = 1;
                    return;
                }
            }
            DirectResult r = check_direct(full, aug.set);
            if (r.coherent()) {
                out << "coherent\n";
                return;
            }
            status = 1;
            out << "incoherent\nwitness gamma " << r.witness->gamma << ':';
            for (std::size_t j = 0; j < r.witness->subset.size(); ++j)
                out << ' ' << r.witness->lambda[j] << '*' << aug.set.name(r.witness->subset[j]);
            out << '\n';
            return;
        }
        PipelineOptions opts;
        opts.jobs = limits.jobs;
        opts.budget = limits.budget();
        opts.augment = !no_augment;
        opts.enumerate = false;
        PipelineSummary s = run_pipeline(k, opts);
        CheckResult r = check_against(p, s.constraints);
        if (r.coherent()) {
            out << "coherent\n";
            return;
        }
        status = 1;
        out << "incoherent\n";
        for (const auto& v : r.violations)
            out << "violated " << describe_constraint(s.constraints[v.index], k.names()) << " by " << v.excess << '\n';
    });

    auto* credal = app.add_subcommand("credal", "Vertices of the credal set of a lower prevision");
    add_source(credal, src);
    credal->add_option("--prevision", prevision_path, "Lower prevision file (.lpv)")->required();
    credal->add_option("--out", out_path, "Output V-representation (default stdout)");
    credal->callback([&] {
        const auto [k, p] = prepare(src.load(), read_prevision_file(prevision_path));
        CredalSet c = credal_vertices(p, k);
        if (c.vertices.empty()) {
            err << "the credal set is empty: the lower prevision incurs sure loss\n";
            status = 1;
            return;
        }
        VRep v{k.space().size(), c.constraints.names(), c.vertices};
        emit(out_path, out, [&](std::ostream& o) { io::write_vrep(o, v); });
    });

    auto* extend = app.add_subcommand("extend", "Natural extension to a further gamble");
    add_source(extend, src);
    extend->add_option("--prevision", prevision_path, "Lower prevision file (.lpv)")->required();
    extend->add_option("--target", target, "Payoffs of the gamble, comma-separated")->required();
    extend->callback([&] {
        const GambleSet k = src.load();
        const LowerPrevision p = io::prevision_for(read_prevision_file(prevision_path), k);
        Gamble f;
        for (const auto& t : split_list(target)) {
            try {
                f.push_back(Rational::parse(t));
            } catch (const std::exception&) {
                throw UsageError("--target: '" + t + "' is not a rational number");
            }
        }
        if (f.size() != k.space().size())
            throw UsageError("--target needs " + std::to_string(k.space().size()) + " values");
        out << natural_extension(p, k, f) << '\n';
    });

    auto* pipeline = app.add_subcommand("pipeline", "Constraints, projection, vertices and adjacency in one run");
    add_source(pipeline, src);
    add_limits(pipeline, limits);
    pipeline->add_option("--out", out_path, "Output directory")->required();
    pipeline->add_flag("--no-augment", no_augment, "The gamble set already contains all singleton indicators");
    pipeline->callback([&] {
        const GambleSet k = src.load();
        PipelineOptions opts;
        opts.jobs = limits.jobs;
        opts.budget = limits.budget();
        opts.augment = !no_augment;
        PipelineSummary s = run_pipeline(k, opts);
        std::filesystem::create_directories(out_path);
        const std::filesystem::path dir(out_path);
        emit((dir / "constraints.hrep").string(), out, [&](std::ostream& o) { io::write_hrep(o, s.constraints); });
        if (s.vertices) {
            emit((dir / "vertices.vrep").string(), out, [&](std::ostream& o) { io::write_vrep(o, s.vertices->vrep); });
            emit((dir / "adjacency.adj").string(), out, [&](std::ostream& o) { io::write_adjacency(o, *s.graph); });
        }
        emit((dir / "summary.txt").string(), out, [&](std::ostream& o) { write_summary(o, s, src.describe()); });
        write_summary(out, s, src.describe());
        report_timings(err, s);
    });

    auto* table = app.add_subcommand("table", "Counts for a range of family parameters");
    table->add_option("--family", src.family, "Family: l, u, lu, pset, vb")->required();
    table->add_option("--from", from, "First |Omega| (k for vb)")->required();
    table->add_option("--to", to, "Last |Omega| (k for vb)")->required();
    table->add_option("--omega", src.omega, "Size of the possibility space for vb")->check(CLI::Range(2, 64));
    add_limits(table, limits);
    table->callback([&] {
        if (from > to) throw UsageError("--from must not exceed --to");
        FamilySpec spec;
        try {
            spec.family = parse_family(src.family);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (spec.family == Family::single || spec.family == Family::custom)
            throw UsageError("table needs a generated family");
        spec.omega_size = src.omega;
        if (spec.family != Family::values_based && from < 2) throw UsageError("--from must be at least 2");
        PipelineOptions opts;
        opts.jobs = limits.jobs;
        opts.budget = limits.budget();
        out << (spec.family == Family::values_based ? "k" : "omega") << "\tgambles\traw\tirredundant\tvertices\n";
        for (const auto& row : reproduce_table(spec, from, to, opts)) {
            out << row.parameter << '\t' << row.gamble_count << '\t';
            if (row.irredundant == 0 && row.skipped) {
                out << "-\t-\tskipped (" << row.note << ")\n";
                continue;
            }
            out << row.raw_generated << '\t' << row.irredundant << '\t';
            if (row.vertex_count)
                out << *row.vertex_count << '\n';
            else
                out << "skipped (" << row.note << ")\n";
        }
    });

    auto* plot = app.add_subcommand("plotdata", "Credal-set vertices of every extreme lower prevision, as a flat table");
    add_source(plot, src);
    add_limits(plot, limits);
    plot->add_option("--out", out_path, "Output table (default stdout)");
    plot->callback([&] {
        const GambleSet k = src.load();
        PipelineOptions opts;
        opts.jobs = limits.jobs;
        opts.budget = limits.budget();
        PipelineSummary s = run_pipeline(k, opts);
        if (!s.vertices) throw BudgetExceeded(s.note);
        emit(out_path, out, [&](std::ostream& o) {
            o << "vertex";
            for (const auto& l : k.space().labels()) o << "\tp_" << l;
            o << '\n';
            const auto& verts = s.vertices->vrep.vertices;
            for (std::size_t v = 0; v < verts.size(); ++v)
                for (const auto& m : credal_vertices(verts[v], k).vertices) {
                    o << v;
                    for (const auto& x : m) o << '\t' << x;
                    o << '\n';
                }
        });
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }
    return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace lprev::cli
