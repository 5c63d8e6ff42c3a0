#include "lprev/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lprev::io {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<std::string> split(const std::string& s) {
    std::istringstream ss(s);
    std::vector<std::string> out;
    for (std::string t; ss >> t;) out.push_back(t);
    return out;
}

// Non-empty lines; comment lines are dropped unless they start with one of
// the given directives (kept with the '#').
std::vector<Line> content_lines(std::istream& in, std::initializer_list<const char*> directives = {}) {
    std::vector<Line> out;
    std::string text;
    for (std::size_t n = 1; std::getline(in, text); ++n) {
        auto tokens = split(text);
        if (tokens.empty()) continue;
        if (tokens[0][0] == '#') {
            bool keep = std::any_of(directives.begin(), directives.end(), [&](const char* d) { return tokens[0] == d; });
            if (!keep) continue;
        }
        out.push_back({n, std::move(tokens)});
    }
    return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
    throw FormatError("line " + std::to_string(line.number) + ": " + what);
}

Rational number(const Line& line, const std::string& token) {
    try {
        return Rational::parse(token);
    } catch (const std::exception&) {
        fail(line, "'" + token + "' is not a rational number");
    }
}

std::size_t count(const Line& line, const std::string& token) {
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
        fail(line, "'" + token + "' is not a count");
    return std::stoul(token);
}

// Shared reader for the "H m d" / "V n d" layouts.
struct Table {
    std::size_t dim = 0;
    std::vector<std::string> names;
    std::vector<Vec> rows;
};

Table read_table(std::istream& in, const char* tag, std::size_t extra_columns) {
    auto lines = content_lines(in, {"#names"});
    if (lines.empty()) throw FormatError(std::string("empty input, expected '") + tag + " <rows> <dim>' header");
    const Line& header = lines[0];
    if (header.tokens.size() != 3 || header.tokens[0] != tag)
        fail(header, std::string("expected header '") + tag + " <rows> <dim>'");
    Table t;
    const std::size_t rows = count(header, header.tokens[1]);
    t.dim = count(header, header.tokens[2]);
    std::size_t i = 1;
    if (i < lines.size() && lines[i].tokens[0] == "#names") {
        t.names.assign(lines[i].tokens.begin() + 1, lines[i].tokens.end());
        if (t.names.size() != t.dim) fail(lines[i], "name count does not match the dimension");
        ++i;
    } else {
        t.names = default_names(t.dim);
    }
    for (; i < lines.size(); ++i) {
        if (lines[i].tokens[0] == "#names") fail(lines[i], "#names must directly follow the header");
        if (lines[i].tokens.size() != t.dim + extra_columns)
            fail(lines[i], "expected " + std::to_string(t.dim + extra_columns) + " numbers");
        Vec row;
        for (const auto& tok : lines[i].tokens) row.push_back(number(lines[i], tok));
        t.rows.push_back(std::move(row));
    }
    if (t.rows.size() != rows)
        throw FormatError("header announces " + std::to_string(rows) + " rows but " + std::to_string(t.rows.size()) +
                          " were found");
    return t;
}

void write_names(std::ostream& out, const std::vector<std::string>& names) {
    if (names == default_names(names.size())) return;
    out << "#names";
    for (const auto& n : names) out << ' ' << n;
    out << '\n';
}

}  // namespace

GambleSet read_gambles(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.empty() || lines[0].tokens[0] != "omega") throw FormatError("gamble file must start with 'omega <labels>'");
    PossibilitySpace space(std::vector<std::string>(lines[0].tokens.begin() + 1, lines[0].tokens.end()));
    if (space.size() == 0) fail(lines[0], "the possibility space is empty");
    std::vector<std::string> names;
    std::vector<Gamble> gambles;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& tokens = lines[i].tokens;
        if (tokens.size() != space.size() + 1)
            fail(lines[i], "expected a name and " + std::to_string(space.size()) + " values");
        Gamble g;
        for (std::size_t k = 1; k < tokens.size(); ++k) g.push_back(number(lines[i], tokens[k]));
        names.push_back(tokens[0]);
        gambles.push_back(std::move(g));
    }
    if (gambles.empty()) throw FormatError("gamble file contains no gambles");
    try {
        return GambleSet(std::move(space), std::move(names), std::move(gambles));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

void write_gambles(std::ostream& out, const GambleSet& k) {
    out << "omega";
    for (const auto& l : k.space().labels()) out << ' ' << l;
    out << '\n';
    for (std::size_t i = 0; i < k.size(); ++i) {
        out << k.name(i);
        for (const auto& v : k.gamble(i)) out << ' ' << v;
        out << '\n';
    }
}

std::map<std::string, Rational> read_prevision(std::istream& in) {
    std::map<std::string, Rational> out;
    for (const auto& line : content_lines(in)) {
        if (line.tokens.size() != 2) fail(line, "expected '<gamble name> <value>'");
        if (!out.emplace(line.tokens[0], number(line, line.tokens[1])).second)
            fail(line, "gamble '" + line.tokens[0] + "' assigned twice");
    }
    return out;
}

void write_prevision(std::ostream& out, const GambleSet& k, const LowerPrevision& p) {
    for (std::size_t i = 0; i < k.size(); ++i) out << k.name(i) << ' ' << p.at(i) << '\n';
}

LowerPrevision prevision_for(const std::map<std::string, Rational>& values, const GambleSet& k) {
    LowerPrevision p;
    for (const auto& name : k.names()) {
        auto it = values.find(name);
        if (it == values.end()) throw FormatError("no value given for gamble '" + name + "'");
        p.push_back(it->second);
    }
    for (const auto& [name, v] : values)
        if (!k.index_of(name)) throw FormatError("value given for unknown gamble '" + name + "'");
    return p;
}

HRep read_hrep(std::istream& in) {
    Table t = read_table(in, "H", 1);
    HRep h(t.dim, std::move(t.names));
    for (auto& row : t.rows) {
        Rational rhs = row.front();
        row.erase(row.begin());
        h.add_unchecked({std::move(row), std::move(rhs)});
    }
    return h;
}

void write_hrep(std::ostream& out, const HRep& h) {
    out << "H " << h.size() << ' ' << h.dim() << '\n';
    write_names(out, h.names());
    for (const auto& c : h.constraints()) {
        out << c.rhs;
        for (const auto& a : c.coeffs) out << ' ' << a;
        out << '\n';
    }
}

VRep read_vrep(std::istream& in) {
    Table t = read_table(in, "V", 0);
    VRep v{t.dim, std::move(t.names), std::move(t.rows)};
    std::set<Vec> seen;
    for (const auto& x : v.vertices)
        if (!seen.insert(x).second) throw FormatError("duplicate vertex in V-representation");
    return v;
}

void write_vrep(std::ostream& out, const VRep& v) {
    out << "V " << v.vertices.size() << ' ' << v.dim << '\n';
    write_names(out, v.names);
    for (const auto& x : v.vertices) {
        for (std::size_t k = 0; k < x.size(); ++k) out << (k ? " " : "") << x[k];
        out << '\n';
    }
}

AdjacencyGraph read_adjacency(std::istream& in, std::size_t vertex_count) {
    AdjacencyGraph g;
    g.vertex_count = vertex_count;
    for (const auto& line : content_lines(in)) {
        if (line.tokens.size() != 2) fail(line, "expected '<u> <v>'");
        const std::size_t u = count(line, line.tokens[0]), v = count(line, line.tokens[1]);
        if (u >= v) fail(line, "edges must satisfy u < v");
        if (v >= vertex_count) fail(line, "vertex index out of range");
        g.edges.emplace_back(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end()) throw FormatError("duplicate edge");
    return g;
}

void write_adjacency(std::ostream& out, const AdjacencyGraph& g) {
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
}

}  // namespace lprev::io
