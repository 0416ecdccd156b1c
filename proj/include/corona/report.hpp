#pragma once

#include <string>
#include <vector>

#include "corona/config.hpp"
#include "corona/formulas.hpp"
#include "corona/graph_spec.hpp"

#include "json.hpp"

namespace corona {

/// CLI-facing run configuration: oracle caps/field plus output shaping.
struct RunConfig {
    OracleConfig oracle;
    enum class Format { Text, Json, Csv };
    Format format = Format::Text;
    bool show_timing = false;
};

const char* to_string(CmStatus status);  // "yes" | "no" | "not-covered"

struct InvariantReport {
    std::string spec_text;
    long long n_vertices = 0;
    long long depth = 0;
    SdepthBound sdepth;
    long long reg = 0;
    long long pdim = 0;
    long long krull_dim = 0;
    CmStatus cohen_macaulay = CmStatus::NotCovered;
    std::vector<std::string> provenance;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// Parses and evaluates one spec: closed-form route when the spec is a corona
/// with a covered spine, ground-truth oracles otherwise (subject to caps).
InvariantReport cmd_invariants(const std::string& spec_text, const RunConfig& config);

struct ComparisonRecord {
    std::string spec;
    std::string invariant;
    long long formula_value = 0;
    bool formula_exact = true;  // false marks a lower bound (sdepth)
    long long oracle_value = 0;
    bool match = false;
    std::string rule;
    double ms = 0.0;
};

struct CompareOutcome {
    std::vector<ComparisonRecord> records;
    int mismatches = 0;

    std::string to_text(bool show_timing) const;
};

/// Formula-vs-oracle comparison over a spec or a range grid. Every instance
/// must be a corona/bristle product; the sdepth record is emitted only within
/// the sdepth cap.
CompareOutcome cmd_compare(const std::string& expr, const RunConfig& config);

/// Inclusive parameter range; lo > hi encodes an empty range.
struct ParamRange {
    int lo = 1, hi = 0;
    bool empty() const { return lo > hi; }
};

struct TableRequest {
    std::string pair;  // "<xfam>-<hfam>", families path|cycle|complete|star|kbip, hfam also null
    ParamRange n;      // spine size (non-kbip spines)
    ParamRange u, v;   // spine sides (kbip spine)
    ParamRange m;      // inner size (non-kbip inner), first side for kbip inner
    ParamRange q;      // second side (kbip inner)
    ParamRange s;      // bristle count (null inner)
};

/// One row per parameter tuple, every invariant column filled from the closed
/// forms. CSV column order: spec,n_vertices,depth,sdepth,sdepth_exact,reg,
/// pdim,dim,cm,provenance.
std::string cmd_table(const TableRequest& request, const RunConfig& config);

/// Tri-state Cohen-Macaulay answer for one spec: the characterization for
/// covered coronas, the oracle otherwise, "not-covered" when the oracle is
/// out of reach.
CmStatus cmd_cm(const std::string& spec_text, const RunConfig& config);

}  // namespace corona
