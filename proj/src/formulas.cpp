#include "corona/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace corona {

namespace {

long long ceil_half(long long a) { return (a + 1) / 2; }

void require_inner(const BaseInvariants& b) {
    if (b.vertex_count < 1)
        throw std::invalid_argument("formula engine: inner graph must have at least one vertex");
}

void validate_range(const SpineFamily& x, int path_min) {
    switch (x.kind) {
        case SpineFamily::Kind::Path:
            if (x.a < path_min)
                throw std::invalid_argument("path spine: n out of range");
            return;
        case SpineFamily::Kind::Cycle:
            if (x.a < 3) throw std::invalid_argument("cycle spine: needs n >= 3");
            return;
        case SpineFamily::Kind::Complete:
            if (x.a < 1) throw std::invalid_argument("complete spine: needs n >= 1");
            return;
        case SpineFamily::Kind::Star:
            if (x.a < 1) throw std::invalid_argument("star spine: needs n >= 1");
            return;
        case SpineFamily::Kind::CompleteBipartite:
            if (x.a < 1 || x.b < 1)
                throw std::invalid_argument("bipartite spine: needs u, v >= 1");
            return;
    }
}

long long depth_shape(const SpineFamily& x, long long base) {
    const long long n = x.a;
    switch (x.kind) {
        case SpineFamily::Kind::Path: return ceil_half(n) + ceil_half(n - 1) * base;
        case SpineFamily::Kind::Cycle: return ceil_half(n - 1) + ceil_half(n) * base;
        case SpineFamily::Kind::Complete: return 1 + (n - 1) * base;
        case SpineFamily::Kind::Star: return n + base;
        case SpineFamily::Kind::CompleteBipartite:
            return std::min(x.a, x.b) * base + std::max(x.a, x.b);
    }
    throw std::logic_error("SpineFamily: unknown kind");
}

}  // namespace

long long depth_formula(const SpineFamily& x, const BaseInvariants& b) {
    require_inner(b);
    validate_range(x, 1);
    return depth_shape(x, static_cast<long long>(b.depth_h) + b.iso_count);
}

long long depth_formula(const Spine& x, const BaseInvariants& b) {
    if (x.empty()) throw std::invalid_argument("depth_formula: empty spine");
    long long total = 0;
    for (const auto& part : x) total += depth_formula(part, b);
    return total;
}

SdepthBound sdepth_formula(const SpineFamily& x, const BaseInvariants& b) {
    require_inner(b);
    validate_range(x, 1);
    const long long value = depth_shape(x, static_cast<long long>(b.sdepth_h_lower) + b.iso_count);
    return SdepthBound{value, b.is_null};
}

SdepthBound sdepth_formula(const Spine& x, const BaseInvariants& b) {
    if (x.empty()) throw std::invalid_argument("sdepth_formula: empty spine");
    SdepthBound total{0, b.is_null && x.size() == 1};
    for (const auto& part : x) total.value += sdepth_formula(part, b).value;
    return total;
}

long long reg_formula(const SpineFamily& x, const BaseInvariants& b) {
    require_inner(b);
    validate_range(x, 0);  // reg of an empty path spine is defined as 0
    const long long n = x.a;
    if (b.is_null) {
        switch (x.kind) {
            case SpineFamily::Kind::Path: return ceil_half(n);
            case SpineFamily::Kind::Cycle: return ceil_half(n - 1);
            case SpineFamily::Kind::Complete: return 1;
            case SpineFamily::Kind::Star: return n;
            case SpineFamily::Kind::CompleteBipartite: return std::max(x.a, x.b);
        }
        throw std::logic_error("SpineFamily: unknown kind");
    }
    const long long r = b.reg_h;
    switch (x.kind) {
        case SpineFamily::Kind::Path:
        case SpineFamily::Kind::Cycle:
        case SpineFamily::Kind::Complete: return n * r;
        case SpineFamily::Kind::Star: return (n + 1) * r;
        case SpineFamily::Kind::CompleteBipartite: return (static_cast<long long>(x.a) + x.b) * r;
    }
    throw std::logic_error("SpineFamily: unknown kind");
}

long long reg_formula(const Spine& x, const BaseInvariants& b) {
    if (x.empty()) throw std::invalid_argument("reg_formula: empty spine");
    long long total = 0;
    for (const auto& part : x) total += reg_formula(part, b);
    return total;
}

long long pdim_formula(const SpineFamily& x, const BaseInvariants& b) {
    return static_cast<long long>(x.vertex_count()) * (b.vertex_count + 1) - depth_formula(x, b);
}

long long pdim_formula(const Spine& x, const BaseInvariants& b) {
    if (x.empty()) throw std::invalid_argument("pdim_formula: empty spine");
    long long total = 0;
    for (const auto& part : x) total += pdim_formula(part, b);
    return total;
}

long long krull_dim_formula(const Graph& x, const BaseInvariants& b) {
    require_inner(b);
    if (x.vertex_count() < 1)
        throw std::invalid_argument("krull_dim_formula: spine must have at least one vertex");
    return static_cast<long long>(x.vertex_count()) * (static_cast<long long>(b.dim_h) + b.iso_count);
}

CmStatus is_cm_formula(const Graph& x, const Graph& h) {
    if (h.vertex_count() == 0) return CmStatus::NotCovered;
    if (!recognize_spine(x)) return CmStatus::NotCovered;
    return is_complete(h) ? CmStatus::Yes : CmStatus::No;
}

}  // namespace corona
