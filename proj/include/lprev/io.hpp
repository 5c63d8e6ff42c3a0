#pragma once

#include "lprev/gambles.hpp"
#include "lprev/hrep.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <string>

namespace lprev::io {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Gamble sets (.gmb):
//   omega a b c
//   f 1 1/2 0
// Blank lines and lines starting with '#' are ignored.
GambleSet read_gambles(std::istream& in);
void write_gambles(std::ostream& out, const GambleSet& k);

// Lower previsions (.lpv): one "name value" pair per line.
std::map<std::string, Rational> read_prevision(std::istream& in);
void write_prevision(std::ostream& out, const GambleSet& k, const LowerPrevision& p);
/// Values in the order of k; every gamble must be assigned and no others.
LowerPrevision prevision_for(const std::map<std::string, Rational>& values, const GambleSet& k);

// H-representations (.hrep): "H m d", an optional "#names ..." line, then
// one "rhs c_1 ... c_d" row per constraint <c, x> <= rhs.
HRep read_hrep(std::istream& in);
void write_hrep(std::ostream& out, const HRep& h);

// V-representations (.vrep): "V n d", optional "#names ...", vertex rows.
VRep read_vrep(std::istream& in);
void write_vrep(std::ostream& out, const VRep& v);

// Adjacency (.adj): "u v" per edge, 0-based, u < v.
AdjacencyGraph read_adjacency(std::istream& in, std::size_t vertex_count);
void write_adjacency(std::ostream& out, const AdjacencyGraph& g);

}  // namespace lprev::io
