#pragma once

#include <qdrg/antipodal_cover.hpp>
#include <qdrg/diameter3.hpp>
#include <qdrg/qdistance.hpp>

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qdrg {

/// `{"value": float, "value_exact": string | null}`.
nlohmann::json number_json(const Number & x);
Number number_from_json(const nlohmann::json & j);

struct AnalysisOptions {
    std::optional<std::string> graph;  ///< atlas name for the oracle route
    bool oracle = false;
};

struct AnalysisReport {
    std::string array;
    std::string q;
    int diameter = 0;
    std::int64_t n = 0;
    std::optional<QSpectrum> spectrum;
    int distinct = 0;
    std::optional<std::string> count_case;  ///< "i".."iv", diameter 3 only
    std::optional<std::array<Number, 3>> critical_q;
    bool q2_degenerate = false;
    /// Named results: antipodal, bipartite, feasibility, witness, zero_multiplicity, ...
    nlohmann::json classifications = nlohmann::json::object();
    /// Sections that do not apply to this array.
    std::vector<std::string> skipped;
    std::optional<bool> oracle_match;

    friend bool operator==(const AnalysisReport &, const AnalysisReport &) = default;
};

/// Throws ParseError for bad input, OutOfRange for an unknown graph.
AnalysisReport analyze(std::string_view array_text, std::string_view q_text, const AnalysisOptions & options = {});

nlohmann::json to_json(const AnalysisReport & report);
AnalysisReport report_from_json(const nlohmann::json & j);
std::string to_text(const AnalysisReport & report);

nlohmann::json witness_json(const TwoDistinctWitness & w);

struct ScanRow {
    int l = 0;
    Number q;
    bool usable = true;
    std::string region;
    std::optional<int> distinct;
    std::optional<std::string> count_case;
};

struct ScanReport {
    std::string array;
    std::vector<ScanRow> rows;
    std::optional<TwoDistinctWitness> witness;
    /// Bipartite arrays: the three-distinct q values and the count at each usable one.
    std::vector<BipartiteQ> bipartite_q;
    std::vector<std::optional<int>> bipartite_distinct;
};

/// Throws ParseError, WrongDiameter.
ScanReport scan(std::string_view array_text);
nlohmann::json to_json(const ScanReport & report);
std::string to_text(const ScanReport & report);

nlohmann::json to_json(const std::vector<AntipodalCandidate> & rows);
std::string to_text(const std::vector<AntipodalCandidate> & rows);

struct CheckResult {
    std::string tag;      ///< drg, formula, antipodal, diameter3, regression, fixture
    std::string subject;  ///< graph or array
    std::string name;     ///< invariant checked
    bool passed = false;
    std::string detail;
};

struct VerifySummary {
    std::vector<CheckResult> checks;
    std::size_t failed() const;
    bool ok() const { return failed() == 0; }
};

/// Runs the invariant suite on the bundled atlas plus extra fixture files
/// (adjacency lists with a `# array: {...}` comment line).
/// An empty filter runs every tag.
VerifySummary verify_atlas(const std::string & filter = {}, const std::vector<std::string> & fixtures = {});
nlohmann::json to_json(const VerifySummary & summary);
std::string to_text(const VerifySummary & summary);

/// The q values every oracle comparison runs on.
const std::vector<RationalQ> & q_grid();

} // namespace qdrg
