#include "corona/base_invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "corona/betti.hpp"
#include "corona/combinatorics.hpp"
#include "corona/errors.hpp"
#include "corona/families.hpp"
#include "corona/sdepth.hpp"

namespace corona {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct ComponentInvariants {
    int depth = 0, reg = 0, dim = 0;
    int sdepth_lower = 0;
    bool sdepth_exact = false;
    std::string source;
};

// depth(S/I(P_m)) = ceil(m/3), reg = ceil((m-1)/3), dim = ceil(m/2);
// depth(S/I(C_q)) = ceil((q-1)/3), reg = floor((q+1)/3), dim = ceil((q-1)/2);
// complete, star and complete bipartite quotients all have depth 1 and a
// linear resolution (reg 1); dimensions are 1, k and max(u,v).
std::optional<ComponentInvariants> closed_form(const SpineFamily& family) {
    ComponentInvariants inv;
    inv.source = family.name();
    switch (family.kind) {
        case SpineFamily::Kind::Path:
            inv.depth = ceil_div(family.a, 3);
            inv.reg = ceil_div(family.a - 1, 3);
            inv.dim = ceil_div(family.a, 2);
            return inv;
        case SpineFamily::Kind::Cycle:
            inv.depth = ceil_div(family.a - 1, 3);
            inv.reg = (family.a + 1) / 3;
            inv.dim = ceil_div(family.a - 1, 2);
            return inv;
        case SpineFamily::Kind::Complete:
            inv.depth = 1;
            inv.reg = 1;
            inv.dim = 1;
            return inv;
        case SpineFamily::Kind::Star:
            inv.depth = 1;
            inv.reg = 1;
            inv.dim = family.a;
            return inv;
        case SpineFamily::Kind::CompleteBipartite:
            inv.depth = 1;
            inv.reg = 1;
            inv.dim = std::max(family.a, family.b);
            return inv;
    }
    return std::nullopt;
}

ComponentInvariants component_invariants(const Graph& comp, bool oracle_allowed,
                                         const OracleConfig& config) {
    ComponentInvariants inv;
    if (auto family = detect_family(comp)) {
        inv = *closed_form(*family);
    } else {
        if (!oracle_allowed)
            throw NeedsOracleError(
                "base_invariants: component outside the known families needs the oracle");
        const BettiTable table = betti_table(comp, config);
        inv.depth = table.depth();
        inv.reg = table.reg();
        inv.dim = independence_number(comp, config.max_mis_vertices).size;
        inv.source = "oracle";
    }

    if (is_star_shaped(comp)) {
        inv.sdepth_lower = 1;  // star quotients have depth = sdepth = 1
        inv.sdepth_exact = true;
    } else if (oracle_allowed && comp.vertex_count() <= config.max_sdepth_vertices) {
        inv.sdepth_lower = sdepth_oracle(comp, config).value;
        inv.sdepth_exact = true;
        if (inv.source != "oracle") inv.source += "+sdepth-oracle";
    } else {
        // Any non-empty quotient admits a partition with tops of size >= 1.
        inv.sdepth_lower = 1;
        inv.sdepth_exact = false;
    }
    return inv;
}

}  // namespace

BaseInvariants base_invariants(const Graph& h, bool oracle_allowed, const OracleConfig& config) {
    if (h.vertex_count() == 0)
        throw std::invalid_argument("base_invariants: inner graph must have at least one vertex");

    BaseInvariants result;
    result.vertex_count = h.vertex_count();
    result.iso_count = static_cast<int>(isolated_vertices(h).size());
    result.is_null = is_null(h);
    result.is_complete = is_complete(h);

    if (result.is_null) {
        // K[V(H)]/I(H) is the field: every invariant vanishes.
        result.sdepth_exact = true;
        result.sources.push_back("null");
        return result;
    }

    std::vector<int> support;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) > 0) support.push_back(v);
    const Graph core = induced_subgraph(h, support);

    const auto components = connected_components(core);
    std::vector<ComponentInvariants> parts;
    parts.reserve(components.size());
    for (const auto& members : components)
        parts.push_back(component_invariants(induced_subgraph(core, members), oracle_allowed, config));
    for (const auto& inv : parts) {
        result.depth_h += inv.depth;
        result.reg_h += inv.reg;
        result.dim_h += inv.dim;
        result.sdepth_h_lower += inv.sdepth_lower;  // superadditive over components
        result.sources.push_back(inv.source);
    }
    // Exactness survives only the single-component case; across a union
    // superadditivity gives a bound, not a value.
    result.sdepth_exact = parts.size() == 1 && parts.front().sdepth_exact;
    return result;
}

}  // namespace corona
