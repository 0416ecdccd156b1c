#include <sstream>
#include <stdexcept>

#include "corona/report.hpp"

#include "json.hpp"

namespace corona {

namespace {

struct FamilyAxis {
    std::string name;  // path | cycle | complete | star | kbip | null
    bool two_params = false;
};

FamilyAxis parse_axis(const std::string& name, bool inner) {
    if (name == "path" || name == "cycle" || name == "complete" || name == "star")
        return {name, false};
    if (name == "kbip") return {name, true};
    if (inner && name == "null") return {name, false};
    throw std::invalid_argument("table: unknown family '" + name + "'");
}

GraphSpec family_spec(const std::string& name, int a, int b) {
    if (name == "path") return GraphSpec::path(a);
    if (name == "cycle") return GraphSpec::cycle(a);
    if (name == "complete") return GraphSpec::complete(a);
    if (name == "star") return GraphSpec::star(a);
    if (name == "kbip") return GraphSpec::kbip(a, b);
    if (name == "null") return GraphSpec::null(a);
    throw std::invalid_argument("table: unknown family '" + name + "'");
}

struct Row {
    std::string spec;
    long long n_vertices, depth, reg, pdim, dim;
    SdepthBound sdepth;
    CmStatus cm;
    std::string provenance;
};

Row make_row(const GraphSpec& x_spec, const GraphSpec& h_spec, bool as_bristle,
             const RunConfig& config) {
    const Graph x = x_spec.build();
    const Graph h = h_spec.build();
    const auto spine = recognize_spine(x);
    if (!spine) throw std::logic_error("table: spine family not recognized");
    const BaseInvariants b = base_invariants(h, /*oracle_allowed=*/true, config.oracle);

    Row row;
    row.spec = as_bristle ? GraphSpec::bristle_of(x_spec, h_spec.a).to_string()
                          : GraphSpec::corona_of(x_spec, h_spec).to_string();
    row.n_vertices = static_cast<long long>(x.vertex_count()) * (h.vertex_count() + 1);
    row.depth = depth_formula(*spine, b);
    row.sdepth = sdepth_formula(*spine, b);
    row.reg = reg_formula(*spine, b);
    row.pdim = pdim_formula(*spine, b);
    row.dim = krull_dim_formula(x, b);
    row.cm = is_cm_formula(x, h);
    std::string base = "base:";
    for (std::size_t i = 0; i < b.sources.size(); ++i) {
        if (i) base += "+";
        base += b.sources[i];
    }
    std::string spine_text = "spine:";
    for (std::size_t i = 0; i < spine->size(); ++i) {
        if (i) spine_text += "+";
        spine_text += (*spine)[i].name();
    }
    row.provenance = spine_text + " " + base;
    return row;
}

template <typename F>
void for_range(const ParamRange& range, F&& f) {
    for (int value = range.lo; value <= range.hi; ++value) f(value);
}

// Minimal CSV quoting: needed because spec strings contain commas.
std::string csv_cell(const std::string& text) {
    if (text.find_first_of(",\"") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

}  // namespace

std::string cmd_table(const TableRequest& request, const RunConfig& config) {
    const auto dash = request.pair.find('-');
    if (dash == std::string::npos)
        throw std::invalid_argument("table: family pair must look like path-path");
    const FamilyAxis x_axis = parse_axis(request.pair.substr(0, dash), /*inner=*/false);
    const FamilyAxis h_axis = parse_axis(request.pair.substr(dash + 1), /*inner=*/true);
    const bool as_bristle = h_axis.name == "null";

    std::vector<std::pair<int, int>> x_params;
    if (x_axis.two_params)
        for_range(request.u, [&](int u) { for_range(request.v, [&](int v) { x_params.emplace_back(u, v); }); });
    else
        for_range(request.n, [&](int n) { x_params.emplace_back(n, 0); });

    std::vector<std::pair<int, int>> h_params;
    if (h_axis.two_params)
        for_range(request.m, [&](int m) { for_range(request.q, [&](int q) { h_params.emplace_back(m, q); }); });
    else if (as_bristle)
        for_range(request.s, [&](int s) { h_params.emplace_back(s, 0); });
    else
        for_range(request.m, [&](int m) { h_params.emplace_back(m, 0); });

    std::vector<Row> rows;
    for (auto [xa, xb] : x_params)
        for (auto [ha, hb] : h_params)
            rows.push_back(make_row(family_spec(x_axis.name, xa, xb),
                                    family_spec(h_axis.name, ha, hb), as_bristle, config));

    if (config.format == RunConfig::Format::Json) {
        nlohmann::json json = nlohmann::json::array();
        for (const auto& row : rows) {
            json.push_back({{"spec", row.spec},
                            {"n_vertices", row.n_vertices},
                            {"depth", row.depth},
                            {"sdepth", {{"value", row.sdepth.value}, {"exact", row.sdepth.exact}}},
                            {"reg", row.reg},
                            {"pdim", row.pdim},
                            {"dim", row.dim},
                            {"cohen_macaulay", to_string(row.cm)},
                            {"provenance", row.provenance}});
        }
        return json.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "spec,n_vertices,depth,sdepth,sdepth_exact,reg,pdim,dim,cm,provenance\n";
    for (const auto& row : rows) {
        out << csv_cell(row.spec) << "," << row.n_vertices << "," << row.depth << ","
            << row.sdepth.value << "," << (row.sdepth.exact ? "true" : "false") << "," << row.reg
            << "," << row.pdim << "," << row.dim << "," << to_string(row.cm) << ","
            << csv_cell(row.provenance) << "\n";
    }
    return out.str();
}

}  // namespace corona
