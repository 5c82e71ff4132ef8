#include <qdrg/error.hpp>
#include <qdrg/graph_atlas.hpp>
#include <qdrg/report.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

void emit(const nlohmann::json & j, const std::string & text, bool as_json)
{
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"q-distance spectra of distance-regular graphs from intersection arrays"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "JSON output");

    std::string array_text, q_text = "1", graph_name, filter;
    bool oracle = false;
    std::int64_t r = 0;
    std::vector<std::string> fixtures;

    auto * analyze = app.add_subcommand("analyze", "spectrum, case analysis and classifications at one q");
    analyze->add_option("array", array_text, "intersection array, e.g. {9,4,1;1,4,9}")->required();
    analyze->add_option("--q", q_text, "rational q, e.g. -1/2")->capture_default_str();
    analyze->add_option("--graph", graph_name, "atlas graph for the oracle route, e.g. J(6,3)");
    analyze->add_flag("--oracle", oracle, "cross-check against a dense eigensolve of --graph");
    analyze->add_flag("--json", as_json, "JSON output");

    auto * scan = app.add_subcommand("scan", "critical q values of a diameter-3 array");
    scan->add_option("array", array_text, "intersection array")->required();
    scan->add_flag("--json", as_json, "JSON output");

    auto * enumerate = app.add_subcommand("enumerate", "feasible antipodal r-cover arrays of diameter 3");
    enumerate->add_option("r", r, "cover index, 2..20")->required();
    enumerate->add_flag("--json", as_json, "JSON output");

    auto * verify = app.add_subcommand("verify-atlas", "run the invariant suite over the bundled graphs");
    verify->add_option("--filter", filter, "comma-separated tags: drg, formula, antipodal, diameter3, regression");
    verify->add_option("--fixture", fixtures, "extra adjacency-list file with a '# array: {...}' line");
    verify->add_flag("--json", as_json, "JSON output");

    auto * list = app.add_subcommand("atlas", "list the bundled graph names");
    list->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*analyze) {
            qdrg::AnalysisOptions options;
            if (! graph_name.empty())
                options.graph = graph_name;
            options.oracle = oracle;
            auto report = qdrg::analyze(array_text, q_text, options);
            emit(qdrg::to_json(report), qdrg::to_text(report), as_json);
            return report.oracle_match.value_or(true) ? exit_ok : exit_failure;
        }
        if (*scan) {
            auto report = qdrg::scan(array_text);
            emit(qdrg::to_json(report), qdrg::to_text(report), as_json);
            return exit_ok;
        }
        if (*enumerate) {
            auto rows = qdrg::enumerate_antipodal_r(r);
            emit(qdrg::to_json(rows), qdrg::to_text(rows), as_json);
            return exit_ok;
        }
        if (*verify) {
            auto summary = qdrg::verify_atlas(filter, fixtures);
            emit(qdrg::to_json(summary), qdrg::to_text(summary), as_json);
            return summary.ok() ? exit_ok : exit_failure;
        }
        if (*list) {
            nlohmann::json names = nlohmann::json::array();
            std::string text;
            for (const auto & entry : qdrg::atlas()) {
                names.push_back(entry.name);
                text += entry.name + "\n";
            }
            emit(names, text, as_json);
            return exit_ok;
        }
    } catch (const qdrg::Error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == qdrg::Errc::ParseError ? exit_usage : exit_failure;
    } catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}
