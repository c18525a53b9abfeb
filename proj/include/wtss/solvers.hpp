#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wtss/activation.hpp"
#include "wtss/degeneracy.hpp"
#include "wtss/instance.hpp"

namespace wtss {

/// Target set built from a degeneracy ordering: every vertex with positive
/// slack is selected, the rest are activated along the ordering.
struct SlackTargetSet {
    VertexSet set;
    Rational tau_max;
    /// Minimum positive slack over the selected vertices; empty when the set is empty.
    std::optional<Rational> min_positive_slack;
    /// tau_max / min_positive_slack: |set| <= claimed_ratio * OPT.
    std::optional<Rational> claimed_ratio;
    DegeneracyOrdering ordering;
};

/// Requires degenerate thresholds (PreconditionError otherwise).
SlackTargetSet slack_target_set(const Instance& instance);

enum class Method { degenerate, two_level, min_or_full };

std::string to_string(Method method);

struct OrderingCertificate {
    std::vector<Vertex> order;
};

struct TwoLevelCertificate {
    /// Empty when some vertex already had a full threshold and the degenerate
    /// solver was applied directly.
    std::optional<Edge> removed_edge;
    /// Components after the removal, each solved along its own ordering.
    std::vector<std::vector<Vertex>> components;
    std::vector<Vertex> order;
};

/// Summary of the auxiliary graph built by the min-or-full solver.
struct MinOrFullCertificate {
    /// Connected components of the vertices whose threshold is the minimum edge weight.
    std::vector<std::vector<Vertex>> low_components;
    std::vector<Vertex> full_vertices;
    int multigraph_edges = 0;
    /// Activation order on the auxiliary graph: "c<rep>" for contracted
    /// components, "s<u>-<v>" for subdivision vertices, "v<id>" for the rest.
    std::vector<std::string> auxiliary_order;
    Rational auxiliary_cost;
};

using Certificate = std::variant<OrderingCertificate, TwoLevelCertificate, MinOrFullCertificate>;

/// An engine-verified target vector with its cost.
class SolveReport {
public:
    /// Throws std::logic_error if `incentives` does not activate the instance.
    static SolveReport make(const Instance& instance, IncentiveVector incentives, Method method,
                            Certificate certificate);

    [[nodiscard]] const IncentiveVector& incentives() const { return incentives_; }
    [[nodiscard]] const Rational& cost() const { return cost_; }
    [[nodiscard]] Method method() const { return method_; }
    [[nodiscard]] const Certificate& certificate() const { return certificate_; }

private:
    SolveReport(IncentiveVector incentives, Rational cost, Method method, Certificate certificate)
        : incentives_(std::move(incentives)), cost_(cost), method_(method), certificate_(std::move(certificate)) {}

    IncentiveVector incentives_;
    Rational cost_;
    Method method_;
    Certificate certificate_;
};

/// Optimal target vector for degenerate thresholds: each vertex pays its slack
/// along a degeneracy ordering, for a total of sum(tau) - sum(weights).
SolveReport degenerate_target_vector(const Instance& instance);

/// max(0, sum(tau) - sum(weights)); no target vector costs less.
Rational target_vector_lower_bound(const Instance& instance);

bool matches_two_level_pattern(const Instance& instance);
bool matches_min_or_full_pattern(const Instance& instance);

/// Connected instance whose thresholds are all full(u) or full(u) - mu. If no
/// vertex is full, the smallest minimum-weight edge is removed and each
/// remaining component is solved as degenerate.
SolveReport two_level_target_vector(const Instance& instance);
/// Same, removing the given minimum-weight edge.
SolveReport two_level_target_vector(const Instance& instance, const Edge& removed);

/// Thresholds all equal to mu or to full(u). Contracts the mu-components,
/// subdivides every remaining edge and solves the result along the order
/// components, subdivision vertices, full vertices; then maps the incentives
/// back onto the input graph.
SolveReport min_or_full_target_vector(const Instance& instance);

/// Greedy 2-approximate vertex cover, verified as a target set. Requires
/// tau(v) <= full(v) for every vertex.
VertexSet vertex_cover_target_set(const Instance& instance);

/// Degenerate first, then two-level, then min-or-full; nullopt otherwise.
std::optional<SolveReport> classify_and_solve(const Instance& instance);

}  // namespace wtss
