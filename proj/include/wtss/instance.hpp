#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "wtss/rational.hpp"

namespace wtss {

/// Vertices are dense ids 1..n.
using Vertex = int;
using VertexSet = std::set<Vertex>;

enum class Mode { undirected, directed };

std::string to_string(Mode mode);

/// An undirected edge {u, v} or a directed arc u -> v carrying influence `weight`.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Rational weight;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
    Vertex vertex = 0;
    Rational weight;
};

struct Violation {
    enum class Kind {
        empty_vertex_set,
        negative_threshold,
        unknown_vertex,
        self_loop,
        negative_weight,
        duplicate_edge,
    };
    Kind kind;
    std::string message;
};

/// An edge-weighted graph with thresholds: the triple (G, weights, thresholds).
///
/// Construction never throws on bad data; the first violated invariant is
/// recorded and reported by validate(). Every algorithm calls require_valid()
/// before touching the graph. Undirected edges are stored with u < v and the
/// edge list is kept sorted, so equal instances compare equal structurally.
class Instance {
public:
    Instance(Mode mode, std::vector<Rational> thresholds, std::vector<Edge> edges);

    static Instance undirected(std::vector<Rational> thresholds, std::vector<Edge> edges) {
        return {Mode::undirected, std::move(thresholds), std::move(edges)};
    }
    static Instance directed(std::vector<Rational> thresholds, std::vector<Edge> edges) {
        return {Mode::directed, std::move(thresholds), std::move(edges)};
    }

    [[nodiscard]] Mode mode() const { return mode_; }
    [[nodiscard]] bool is_directed() const { return mode_ == Mode::directed; }
    [[nodiscard]] int n() const { return static_cast<int>(thresholds_.size()); }
    [[nodiscard]] bool has_vertex(Vertex v) const { return v >= 1 && v <= n(); }

    [[nodiscard]] const Rational& threshold(Vertex v) const { return thresholds_.at(v - 1); }
    /// Indexed by vertex - 1.
    [[nodiscard]] std::span<const Rational> thresholds() const { return thresholds_; }
    [[nodiscard]] std::span<const Edge> edges() const { return edges_; }

    /// Sources of arcs into v (undirected: all neighbors).
    [[nodiscard]] std::span<const Neighbor> in_neighbors(Vertex v) const { return in_.at(v - 1); }
    /// Targets of arcs out of v (undirected: all neighbors).
    [[nodiscard]] std::span<const Neighbor> out_neighbors(Vertex v) const { return out_.at(v - 1); }

    /// Weight of edge {u,v} (directed: arc u -> v), if present.
    [[nodiscard]] std::optional<Rational> weight(Vertex u, Vertex v) const;

    [[nodiscard]] bool valid() const { return !violation_.has_value(); }
    [[nodiscard]] const std::optional<Violation>& violation() const { return violation_; }
    /// Throws InvalidInput carrying the violation message.
    void require_valid() const;

    /// Same graph with a new threshold vector.
    [[nodiscard]] Instance with_thresholds(std::vector<Rational> thresholds) const;

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.mode_ == b.mode_ && a.thresholds_ == b.thresholds_ && a.edges_ == b.edges_;
    }

private:
    Mode mode_;
    std::vector<Rational> thresholds_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> in_;
    std::vector<std::vector<Neighbor>> out_;
    std::optional<Violation> violation_;
};

/// Returns the first violated invariant, or nullopt when the instance is well formed.
std::optional<Violation> validate(const Instance& instance);

/// Sum of weights on edges joining v to other members of `within`
/// (directed: arcs into v from `within`). Requires v in `within`.
Rational incident_weight_sum(const Instance& instance, Vertex v, const VertexSet& within);

/// Same sum with `within` as a membership mask indexed by vertex id.
Rational incident_weight_sum(const Instance& instance, Vertex v, std::span<const char> within);

/// Sum over all edges at v, i.e. incident_weight_sum(v, V).
Rational full_incident_sum(const Instance& instance, Vertex v);

struct InducedSubinstance {
    Instance instance;
    /// original_ids[i] is the source vertex renumbered to i + 1.
    std::vector<Vertex> original_ids;
};

/// Restriction to `keep`, renumbered 1..|keep| in ascending id order.
InducedSubinstance induced_subinstance(const Instance& instance, const VertexSet& keep);

/// The minimum edge weight. Throws PreconditionError on an edgeless instance.
Rational min_edge_weight(const Instance& instance);

Rational total_threshold(const Instance& instance);
Rational total_edge_weight(const Instance& instance);

/// Number of neighbors (directed: in-degree).
int degree(const Instance& instance, Vertex v);

/// Weakly connected components, each sorted ascending, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Instance& instance);
bool is_connected(const Instance& instance);

bool has_unit_weights(const Instance& instance);
bool has_integer_thresholds(const Instance& instance);

VertexSet all_vertices(const Instance& instance);

}  // namespace wtss
