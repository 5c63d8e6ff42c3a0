#pragma once

#include "lprev/coherence.hpp"
#include "lprev/gambles.hpp"
#include "lprev/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lprev {

enum class Family { single, custom, lmass, umass, lumass, pset, values_based };

/// Accepts the short names l, u, lu, vb as well as the long ones.
Family parse_family(const std::string& name);
const char* to_string(Family family);

struct FamilySpec {
    Family family = Family::custom;
    std::size_t omega_size = 3;
    std::size_t k = 1;                 // grid denominator for values_based
    std::optional<GambleSet> gambles;  // single and custom
};

GambleSet family_gambles(const FamilySpec& spec);

/// Named small examples: toy, 1on3, 1on3_lu, 2on3, 3on3.
GambleSet preset(const std::string& name);
std::vector<std::string> preset_names();

struct PipelineOptions {
    Budget budget;
    unsigned jobs = 1;
    bool augment = true;      // false: the input must already contain the indicators
    bool enumerate = true;    // false: stop after the projected constraints
};

enum class PipelineStatus { complete, vertices_skipped };

struct StageTimings {
    double generate = 0, reduce = 0, project = 0, enumerate = 0;
};

struct PipelineSummary {
    GambleSet gambles;             // original coordinates
    GambleSet augmented;           // coordinates the constraints were generated in
    std::size_t raw_generated = 0;
    std::size_t deduplicated = 0;
    std::size_t augmented_irredundant = 0;
    HRep constraints;              // irredundant, in original coordinates
    std::optional<VertexEnumeration> vertices;
    std::optional<AdjacencyGraph> graph;
    PipelineStatus status = PipelineStatus::complete;
    std::string note;              // why vertices were skipped
    StageTimings timings;

    std::size_t irredundant() const { return constraints.size(); }
};

PipelineSummary run_pipeline(const GambleSet& k, const PipelineOptions& options = {});
PipelineSummary run_pipeline(const FamilySpec& spec, const PipelineOptions& options = {});

struct TableRow {
    std::size_t parameter = 0;     // |Omega|, or k for values_based
    std::size_t gamble_count = 0;
    std::size_t raw_generated = 0;
    std::size_t irredundant = 0;
    std::optional<std::size_t> vertex_count;
    bool skipped = false;
    std::string note;
};

/// One pipeline run per parameter value; budget exhaustion marks the row
/// skipped. values_based rows vary k on a space of size base.omega_size.
std::vector<TableRow> reproduce_table(const FamilySpec& base, std::size_t from, std::size_t to,
                                      const PipelineOptions& options = {});

}  // namespace lprev
