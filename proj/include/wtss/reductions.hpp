#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wtss/instance.hpp"

namespace wtss {

/// Output of an instance transformation, with the vertex correspondence made
/// explicit so callers never re-derive it.
struct ReductionReceipt {
    std::string name;
    Instance source;
    Instance image;
    /// correspondence[v - 1] is the image vertex of source vertex v.
    std::vector<Vertex> correspondence;
    /// Image vertex with no source counterpart, if any.
    std::optional<Vertex> added_vertex;
    std::string weight_scheme;
    /// A degeneracy ordering of the image, when the construction guarantees one.
    std::optional<std::vector<Vertex>> image_ordering;
};

/// Unit-weight graph with integer thresholds 1 <= tau(v) <= deg(v), n >= 2, to
/// the complete graph on the same vertices: thresholds n * tau, weight n on the
/// original edges and 1 on the added ones. Target sets are preserved exactly.
ReductionReceipt tss_to_complete(const Instance& source);

/// Degenerate unit-weight graph (same threshold range, n >= 2) to the complete
/// graph on n + 1 vertices: old vertices get n * tau + n, the new vertex n^2,
/// edges to the new vertex and original edges weigh n, the rest 1. The image
/// is degenerate and its minimum target set is exactly one larger.
ReductionReceipt degenerate_to_complete(const Instance& source);

/// Each undirected edge becomes two opposite arcs of the same weight.
ReductionReceipt to_bidirected(const Instance& source);

}  // namespace wtss
