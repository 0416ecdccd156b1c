// corona: closed-form and oracle invariants of edge-ideal quotients of
// corona-product graphs.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "corona/errors.hpp"
#include "corona/report.hpp"

namespace {

corona::ParamRange parse_range(const std::string& text) {
    corona::ParamRange range;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            range.lo = range.hi = std::stoi(text);
        } else {
            range.lo = std::stoi(text.substr(0, dots));
            range.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected N or LO..HI, got '" + text + "'");
    }
    return range;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of edge ideals of corona-product graphs"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    corona::RunConfig config;
    app.add_option("--char", config.oracle.characteristic,
                   "field characteristic for the homology oracle (0 or a prime)")
        ->envname("CORONA_CHAR");
    app.add_option("--max-oracle-vertices", config.oracle.max_oracle_vertices,
                   "vertex cap for the Betti-table oracle")
        ->envname("CORONA_MAX_ORACLE");
    app.add_option("--max-sdepth-vertices", config.oracle.max_sdepth_vertices,
                   "vertex cap for the Stanley-depth search")
        ->envname("CORONA_MAX_SDEPTH");
    app.add_option("--workers", config.oracle.workers, "worker threads (0 = hardware)");

    std::string spec_text, format = "text";

    auto* invariants = app.add_subcommand("invariants", "report all invariants for one spec");
    invariants->add_option("spec", spec_text, "graph DSL spec")->required();
    invariants->add_option("--format", format, "text | json");

    auto* compare = app.add_subcommand("compare", "formula vs oracle over a spec or grid");
    compare->add_option("expr", spec_text, "spec or grid 'spine x {h1, h2,...}'")->required();
    compare->add_flag("--timing", config.show_timing, "append per-record timings");

    corona::TableRequest table_request;
    std::string range_n = "", range_m = "", range_u = "", range_v = "", range_q = "", range_s = "";
    auto* table = app.add_subcommand("table", "closed-form invariant table for a family pair");
    table->add_option("pair", table_request.pair, "e.g. path-path, cycle-cycle, kbip-kbip, path-null")
        ->required();
    table->add_option("--n", range_n, "spine size range (N or LO..HI)");
    table->add_option("--m", range_m, "inner size range");
    table->add_option("--u", range_u, "spine bipartite side u");
    table->add_option("--v", range_v, "spine bipartite side v");
    table->add_option("--q", range_q, "inner bipartite second side");
    table->add_option("--s", range_s, "bristle count range (null inner graph)");
    table->add_option("--format", format, "csv | json");

    auto* cm = app.add_subcommand("cm", "Cohen-Macaulay yes/no/not-covered for one spec");
    cm->add_option("spec", spec_text, "graph DSL spec")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (invariants->parsed()) {
            config.format = (format == "json") ? corona::RunConfig::Format::Json
                                               : corona::RunConfig::Format::Text;
            const auto report = corona::cmd_invariants(spec_text, config);
            if (config.format == corona::RunConfig::Format::Json)
                std::cout << report.to_json().dump(2) << "\n";
            else
                std::cout << report.to_text();
            return 0;
        }
        if (compare->parsed()) {
            const auto outcome = corona::cmd_compare(spec_text, config);
            std::cout << outcome.to_text(config.show_timing);
            return outcome.mismatches == 0 ? 0 : 1;
        }
        if (table->parsed()) {
            config.format = (format == "json") ? corona::RunConfig::Format::Json
                                               : corona::RunConfig::Format::Csv;
            if (!range_n.empty()) table_request.n = parse_range(range_n);
            if (!range_m.empty()) table_request.m = parse_range(range_m);
            if (!range_u.empty()) table_request.u = parse_range(range_u);
            if (!range_v.empty()) table_request.v = parse_range(range_v);
            if (!range_q.empty()) table_request.q = parse_range(range_q);
            if (!range_s.empty()) table_request.s = parse_range(range_s);
            std::cout << corona::cmd_table(table_request, config);
            return 0;
        }
        if (cm->parsed()) {
            std::cout << corona::to_string(corona::cmd_cm(spec_text, config)) << "\n";
            return 0;
        }
    } catch (const corona::ParseError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    } catch (const corona::CapacityError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 3;
    } catch (const corona::NeedsOracleError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
    return 0;
}
