#pragma once

#include <variant>
#include <vector>

#include "wtss/instance.hpp"

namespace wtss {

/// An order u_1..u_n in which every vertex's threshold covers the weight of
/// its edges to earlier vertices. slack(u_i) = tau(u_i) - that weight >= 0.
struct DegeneracyOrdering {
    std::vector<Vertex> order;
    /// Indexed by vertex - 1.
    std::vector<Rational> slacks;

    [[nodiscard]] const Rational& slack(Vertex v) const { return slacks.at(v - 1); }
};

/// A nonempty vertex set whose induced subgraph has no vertex with threshold
/// at least its incident weight inside the set.
struct NotDegenerate {
    VertexSet stuck;
};

using PeelResult = std::variant<DegeneracyOrdering, NotDegenerate>;

/// Greedy reverse peeling. Repeatedly deletes the largest-id vertex x of the
/// remaining set H with tau(x) >= incident weight of x inside H; the reversed
/// deletion order is the ordering, so ties come out in ascending id order.
/// Undirected instances only.
///
/// Deleting a vertex only lowers the others' sums, so the choice among
/// qualifying vertices never decides success. Runs in O((n + m) log n).
PeelResult peel_ordering(const Instance& instance);

/// Convenience: the ordering, or PreconditionError naming the stuck set.
DegeneracyOrdering require_degeneracy_ordering(const Instance& instance);

/// Exhaustive check over all 2^n - 1 nonempty induced subgraphs.
/// Throws OracleLimitError when n > limit.
bool brute_degeneracy_check(const Instance& instance, int limit = 16);

enum class NearFullOutcome { holds, hypothesis_failed };

/// Sufficient condition for degeneracy on a connected graph with at least one
/// edge: every u has tau(u) >= full(u) - mu and some x has tau(x) >= full(x),
/// where full is the total incident weight and mu the minimum edge weight.
/// Throws PreconditionError on disconnected or edgeless input.
NearFullOutcome near_full_threshold_check(const Instance& instance);

/// Unit weights, integer thresholds with 1 <= tau(v) <= deg(v). Decides whether
/// V \ D can be ordered v_1..v_k with deg_{G[v_1..v_i]}(v_i) <= deg(v_i) - tau(v_i).
/// This holds exactly when D is a target set.
bool kappa_complement_check(const Instance& instance, const VertexSet& target);

}  // namespace wtss
