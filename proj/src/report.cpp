#include "corona/report.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>
#include <sstream>

#include "corona/betti.hpp"
#include "corona/combinatorics.hpp"
#include "corona/errors.hpp"
#include "corona/oracle.hpp"
#include "corona/sdepth.hpp"
#include "corona/spec_parser.hpp"

namespace corona {

const char* to_string(CmStatus status) {
    switch (status) {
        case CmStatus::Yes: return "yes";
        case CmStatus::No: return "no";
        case CmStatus::NotCovered: return "not-covered";
    }
    return "not-covered";
}

nlohmann::json InvariantReport::to_json() const {
    nlohmann::json json;
    json["depth"] = depth;
    json["sdepth"] = {{"value", sdepth.value}, {"exact", sdepth.exact}};
    json["reg"] = reg;
    json["pdim"] = pdim;
    json["dim"] = krull_dim;
    json["cohen_macaulay"] = to_string(cohen_macaulay);
    json["provenance"] = provenance;
    return json;
}

std::string InvariantReport::to_text() const {
    std::ostringstream out;
    out << "spec: " << spec_text << "\n";
    out << "vertices: " << n_vertices << "\n";
    out << "depth: " << depth << "\n";
    out << "sdepth: " << (sdepth.exact ? "" : ">= ") << sdepth.value
        << (sdepth.exact ? " (exact)" : " (lower bound)") << "\n";
    out << "reg: " << reg << "\n";
    out << "pdim: " << pdim << "\n";
    out << "dim: " << krull_dim << "\n";
    out << "cohen-macaulay: " << to_string(cohen_macaulay) << "\n";
    out << "provenance:";
    for (const auto& note : provenance) out << " [" << note << "]";
    out << "\n";
    return out.str();
}

namespace {

std::string spine_name(const Spine& spine) {
    std::string name;
    for (std::size_t i = 0; i < spine.size(); ++i) {
        if (i) name += "+";
        name += spine[i].name();
    }
    return name;
}

std::string base_note(const BaseInvariants& b) {
    std::string note = "base:";
    for (std::size_t i = 0; i < b.sources.size(); ++i) {
        if (i) note += "+";
        note += b.sources[i];
    }
    return note;
}

std::string depth_rule(const Spine& spine) {
    if (spine.size() > 1) return "depth adds over spine components";
    switch (spine.front().kind) {
        case SpineFamily::Kind::Path: return "depth=ceil(n/2)+ceil((n-1)/2)*(t+i)";
        case SpineFamily::Kind::Cycle: return "depth=ceil((n-1)/2)+ceil(n/2)*(t+i)";
        case SpineFamily::Kind::Complete: return "depth=1+(n-1)*(t+i)";
        case SpineFamily::Kind::Star: return "depth=n+t+i";
        case SpineFamily::Kind::CompleteBipartite: return "depth=min(u,v)*(t+i)+max(u,v)";
    }
    return "";
}

std::string sdepth_rule(const Spine& spine, bool exact) {
    std::string rule;
    if (spine.size() > 1) {
        rule = "sdepth bound adds over spine components";
    } else {
        switch (spine.front().kind) {
            case SpineFamily::Kind::Path: rule = "sdepth=ceil(n/2)+ceil((n-1)/2)*(s+i)"; break;
            case SpineFamily::Kind::Cycle: rule = "sdepth=ceil((n-1)/2)+ceil(n/2)*(s+i)"; break;
            case SpineFamily::Kind::Complete: rule = "sdepth=1+(n-1)*(s+i)"; break;
            case SpineFamily::Kind::Star: rule = "sdepth=n+s+i"; break;
            case SpineFamily::Kind::CompleteBipartite:
                rule = "sdepth=min(u,v)*(s+i)+max(u,v)";
                break;
        }
    }
    return rule + (exact ? " (exact, null H)" : " (lower bound)");
}

std::string reg_rule(const Spine& spine, bool null_h) {
    if (spine.size() > 1) return "reg adds over spine components";
    if (null_h) {
        switch (spine.front().kind) {
            case SpineFamily::Kind::Path: return "reg=ceil(n/2) (null H)";
            case SpineFamily::Kind::Cycle: return "reg=ceil((n-1)/2) (null H)";
            case SpineFamily::Kind::Complete: return "reg=1 (null H)";
            case SpineFamily::Kind::Star: return "reg=n (null H)";
            case SpineFamily::Kind::CompleteBipartite: return "reg=max(u,v) (null H)";
        }
    }
    switch (spine.front().kind) {
        case SpineFamily::Kind::Path:
        case SpineFamily::Kind::Cycle:
        case SpineFamily::Kind::Complete: return "reg=n*r";
        case SpineFamily::Kind::Star: return "reg=(n+1)*r";
        case SpineFamily::Kind::CompleteBipartite: return "reg=(u+v)*r";
    }
    return "";
}

InvariantReport formula_report(std::string spec_text, const Graph& x, const Graph& h,
                               const Spine& spine, const RunConfig& config) {
    const BaseInvariants b = base_invariants(h, /*oracle_allowed=*/true, config.oracle);
    InvariantReport report;
    report.spec_text = std::move(spec_text);
    report.n_vertices = static_cast<long long>(x.vertex_count()) * (h.vertex_count() + 1);
    report.depth = depth_formula(spine, b);
    report.sdepth = sdepth_formula(spine, b);
    report.reg = reg_formula(spine, b);
    report.pdim = pdim_formula(spine, b);
    report.krull_dim = krull_dim_formula(x, b);
    report.cohen_macaulay = is_cm_formula(x, h);
    report.provenance = {"spine:" + spine_name(spine), base_note(b), depth_rule(spine),
                         sdepth_rule(spine, report.sdepth.exact), reg_rule(spine, b.is_null),
                         "pdim=n(m+1)-depth", "dim=|V(X)|*(dim_H+i)", "cm iff H complete"};
    return report;
}

InvariantReport oracle_report(std::string spec_text, const Graph& g, const RunConfig& config) {
    const BettiTable table = betti_table(g, config.oracle);
    const int dim = dim_oracle(g, config.oracle);
    InvariantReport report;
    report.spec_text = std::move(spec_text);
    report.n_vertices = g.vertex_count();
    report.depth = table.depth();
    report.reg = table.reg();
    report.pdim = table.pdim();
    report.krull_dim = dim;
    report.provenance = {"depth/reg/pdim: Hochster Betti table", "dim: maximum independent set"};

    if (g.vertex_count() == 0) {
        report.sdepth = {0, true};
        report.provenance.push_back("sdepth: empty ring");
    } else if (g.vertex_count() <= config.oracle.max_sdepth_vertices) {
        report.sdepth = {sdepth_oracle(g, config.oracle).value, true};
        report.provenance.push_back("sdepth: interval partition search");
    } else if (is_null(g)) {
        // One interval [empty, V] covers the whole face poset.
        report.sdepth = {g.vertex_count(), true};
        report.provenance.push_back("sdepth: full interval on a null graph");
    } else {
        report.sdepth = {1, false};
        report.provenance.push_back("sdepth: trivial lower bound");
    }
    report.cohen_macaulay = (report.depth == report.krull_dim) ? CmStatus::Yes : CmStatus::No;
    report.provenance.push_back("cm: oracle depth=dim");
    return report;
}

// Spine/inner pair of a corona or bristle spec, when the spec is one.
struct CoronaParts {
    Graph x, h;
};

std::optional<CoronaParts> corona_parts(const GraphSpec& spec) {
    if (spec.kind == GraphSpec::Kind::Corona)
        return CoronaParts{spec.children[0].build(), spec.children[1].build()};
    if (spec.kind == GraphSpec::Kind::Bristle)
        return CoronaParts{spec.children[0].build(), null_graph(spec.a)};
    return std::nullopt;
}

}  // namespace

InvariantReport cmd_invariants(const std::string& spec_text, const RunConfig& config) {
    const GraphSpec spec = parse_spec(spec_text);
    const Graph g = spec.build();
    if (auto parts = corona_parts(spec)) {
        if (parts->h.vertex_count() >= 1) {
            if (auto spine = recognize_spine(parts->x))
                return formula_report(spec.to_string(), parts->x, parts->h, *spine, config);
        }
    }
    return oracle_report(spec.to_string(), g, config);
}

std::string CompareOutcome::to_text(bool show_timing) const {
    std::ostringstream out;
    for (const auto& record : records) {
        out << record.spec << " " << record.invariant
            << " formula" << (record.formula_exact ? "=" : ">=") << record.formula_value
            << " oracle=" << record.oracle_value << (record.match ? " MATCH" : " MISMATCH");
        if (!record.match) out << " rule=[" << record.rule << "]";
        if (show_timing) out << " time=" << record.ms << "ms";
        out << "\n";
    }
    out << "summary: " << records.size() << " records, " << mismatches << " mismatches\n";
    return out.str();
}

namespace {

std::vector<ComparisonRecord> compare_one(const GraphSpec& spec, const OracleConfig& oracle) {
    auto parts = corona_parts(spec);
    if (!parts)
        throw std::invalid_argument("compare: instance " + spec.to_string() +
                                    " is not a corona/bristle product");
    const Graph g = spec.build();
    const std::string name = spec.to_string();
    const auto started = std::chrono::steady_clock::now();

    const BaseInvariants b = base_invariants(parts->h, /*oracle_allowed=*/true, oracle);
    const auto spine = recognize_spine(parts->x);
    const BettiTable table = betti_table(g, oracle);
    const int dim = dim_oracle(g, oracle);

    std::vector<ComparisonRecord> records;
    auto push = [&](const std::string& invariant, long long formula, bool exact, long long truth,
                    bool match, std::string rule) {
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
                .count();
        records.push_back({name, invariant, formula, exact, truth, match, std::move(rule), ms});
    };

    if (spine) {
        const long long f_depth = depth_formula(*spine, b);
        const long long f_reg = reg_formula(*spine, b);
        const long long f_pdim = pdim_formula(*spine, b);
        push("depth", f_depth, true, table.depth(), f_depth == table.depth(), depth_rule(*spine));
        push("reg", f_reg, true, table.reg(), f_reg == table.reg(), reg_rule(*spine, b.is_null));
        push("pdim", f_pdim, true, table.pdim(), f_pdim == table.pdim(), "pdim=n(m+1)-depth");
    }
    const long long f_dim = krull_dim_formula(parts->x, b);
    push("dim", f_dim, true, dim, f_dim == dim, "dim=|V(X)|*(dim_H+i)");

    if (spine && g.vertex_count() <= oracle.max_sdepth_vertices) {
        const SdepthBound f_sdepth = sdepth_formula(*spine, b);
        const int hvz = sdepth_oracle(g, oracle).value;
        const bool ok = f_sdepth.exact ? f_sdepth.value == hvz : f_sdepth.value <= hvz;
        push("sdepth", f_sdepth.value, f_sdepth.exact, hvz, ok,
             sdepth_rule(*spine, f_sdepth.exact));
    }
    return records;
}

}  // namespace

CompareOutcome cmd_compare(const std::string& expr, const RunConfig& config) {
    const auto instances = parse_compare_instances(expr);

    // Grid cells run in a worker pool (each cell single-threaded inside);
    // results are gathered in input order, so output is order-stable.
    int workers = config.oracle.workers > 0
                      ? config.oracle.workers
                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = std::min<int>(workers, std::max<std::size_t>(instances.size(), 1));

    std::vector<std::vector<ComparisonRecord>> cells(instances.size());
    std::exception_ptr first_error;
    std::mutex error_lock;
    std::atomic<std::size_t> cursor{0};

    auto run_cells = [&] {
        OracleConfig cell_config = config.oracle;
        cell_config.workers = 1;
        while (true) {
            const std::size_t index = cursor.fetch_add(1);
            if (index >= instances.size()) return;
            try {
                cells[index] = compare_one(instances[index], cell_config);
            } catch (...) {
                std::lock_guard<std::mutex> hold(error_lock);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

    if (workers <= 1) {
        OracleConfig cell_config = config.oracle;
        for (std::size_t i = 0; i < instances.size(); ++i)
            cells[i] = compare_one(instances[i], cell_config);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(run_cells);
        for (auto& thread : pool) thread.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    CompareOutcome outcome;
    for (const auto& cell : cells)
        for (const auto& record : cell) {
            outcome.records.push_back(record);
            if (!record.match) ++outcome.mismatches;
        }
    return outcome;
}

CmStatus cmd_cm(const std::string& spec_text, const RunConfig& config) {
    const GraphSpec spec = parse_spec(spec_text);
    if (auto parts = corona_parts(spec)) {
        if (parts->h.vertex_count() >= 1 && recognize_spine(parts->x))
            return is_cm_formula(parts->x, parts->h);
    }
    try {
        return is_cm_oracle(spec.build(), config.oracle) ? CmStatus::Yes : CmStatus::No;
    } catch (const CapacityError&) {
        return CmStatus::NotCovered;
    }
}

}  // namespace corona
