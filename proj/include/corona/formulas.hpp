#pragma once

#include "corona/base_invariants.hpp"
#include "corona/families.hpp"
#include "corona/graph.hpp"

namespace corona {

/// A Stanley depth statement: exact value for bristled graphs (null inner
/// graph, single spine family), lower bound otherwise.
struct SdepthBound {
    long long value = 0;
    bool exact = false;

    bool operator==(const SdepthBound& other) const = default;
};

enum class CmStatus { Yes, No, NotCovered };

// Closed forms for depth(S/I(X (.) H)) with base = depth_h + |i(H)|:
//   path(n):     ceil(n/2) + ceil((n-1)/2) * base      (n >= 1)
//   cycle(n):    ceil((n-1)/2) + ceil(n/2) * base      (n >= 3)
//   complete(n): 1 + (n-1) * base                      (n >= 1)
//   star(n):     n + base                              (n >= 1)
//   kbip(u,v):   min(u,v) * base + max(u,v)            (u, v >= 1)
// Disjoint-union spines add componentwise. Out-of-range parameters throw
// std::invalid_argument.
long long depth_formula(const SpineFamily& x, const BaseInvariants& b);
long long depth_formula(const Spine& x, const BaseInvariants& b);

/// Same shapes with the sdepth lower bound in place of depth_h; exact exactly
/// when H is null and the spine is a single family.
SdepthBound sdepth_formula(const SpineFamily& x, const BaseInvariants& b);
SdepthBound sdepth_formula(const Spine& x, const BaseInvariants& b);

// Regularity: for null H the values are ceil(n/2) / ceil((n-1)/2) / 1 / n /
// max(u,v) per family; otherwise n, n, n, n+1, u+v times reg_h. path(0) is
// admitted with regularity 0.
long long reg_formula(const SpineFamily& x, const BaseInvariants& b);
long long reg_formula(const Spine& x, const BaseInvariants& b);

/// |V(X (.) H)| - depth: the Auslander-Buchsbaum complement.
long long pdim_formula(const SpineFamily& x, const BaseInvariants& b);
long long pdim_formula(const Spine& x, const BaseInvariants& b);

/// Krull dimension |V(X)| * (dim_h + |i(H)|); X is arbitrary (any graph,
/// disconnected and isolated vertices allowed), |V(X)| >= 1.
long long krull_dim_formula(const Graph& x, const BaseInvariants& b);

/// Cohen-Macaulay characterization: for spines recognized as covered families
/// (or disjoint unions of them), X (.) H is Cohen-Macaulay iff H is complete.
/// Uncovered spines report NotCovered, never a guess.
CmStatus is_cm_formula(const Graph& x, const Graph& h);

}  // namespace corona
