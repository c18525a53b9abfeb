#pragma once

#include <cstdint>
#include <vector>

#include "wtss/activation.hpp"
#include "wtss/instance.hpp"

namespace wtss {

/// Default enumeration limits. These are parameters of the oracle calls, not
/// hard caps; callers (and the CLI's --limit-n) may raise or lower them.
struct OracleLimits {
    int target_set = 20;
    int target_vector = 9;
    int vertex_cover = 20;
};

struct SetOracleResult {
    int optimum = 0;
    /// Lexicographically smallest optimal set.
    VertexSet witness;
    std::uint64_t explored = 0;
};

struct VectorOracleResult {
    Rational optimum;
    IncentiveVector witness;
    /// Activation order realizing the optimum; witness[v] is v's deficit in it.
    std::vector<Vertex> order;
    std::uint64_t explored = 0;
};

/// Smallest seed that activates every vertex, by subsets of increasing size.
/// Works for directed instances too.
SetOracleResult exact_min_target_set(const Instance& instance, int limit = OracleLimits{}.target_set);

/// Optimal target vector: the minimum over vertex orders of the summed deficits
/// max(0, tau(u) - weight from earlier vertices). Every order cost is
/// realizable by paying those deficits, and every target vector pays at least
/// the cost of its own activation order, so the minimum is the optimum.
///
/// The minimum is taken by dynamic programming over the set of already
/// activated vertices, which is exactly the permutation minimum; ties resolve
/// to the lexicographically smallest order.
VectorOracleResult exact_target_vector(const Instance& instance, int limit = OracleLimits{}.target_vector);

SetOracleResult exact_min_vertex_cover(const Instance& instance, int limit = OracleLimits{}.vertex_cover);

}  // namespace wtss
