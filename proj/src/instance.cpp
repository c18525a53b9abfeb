#include "wtss/instance.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "wtss/error.hpp"

namespace wtss {

std::string to_string(Mode mode) { return mode == Mode::directed ? "directed" : "undirected"; }

namespace {

std::optional<Violation> find_violation(Mode mode, const std::vector<Rational>& thresholds,
                                        const std::vector<Edge>& edges) {
    using Kind = Violation::Kind;
    const int n = static_cast<int>(thresholds.size());
    if (n == 0) return Violation{Kind::empty_vertex_set, "instance has no vertices"};
    for (int i = 0; i < n; ++i) {
        if (thresholds[i].is_negative()) {
            return Violation{Kind::negative_threshold,
                             "negative threshold " + thresholds[i].to_string() + " at vertex " +
                                 std::to_string(i + 1)};
        }
    }
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const auto& e : edges) {
        const std::string where = "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
            return Violation{Kind::unknown_vertex, where + " references an unknown vertex"};
        }
        if (e.u == e.v) return Violation{Kind::self_loop, "self-loop " + where};
        if (e.weight.is_negative()) {
            return Violation{Kind::negative_weight,
                             "negative weight " + e.weight.to_string() + " on " + where};
        }
        std::pair<Vertex, Vertex> key{e.u, e.v};
        if (mode == Mode::undirected && key.first > key.second) std::swap(key.first, key.second);
        if (!seen.insert(key).second) return Violation{Kind::duplicate_edge, "duplicate " + where};
    }
    return std::nullopt;
}

}  // namespace

Instance::Instance(Mode mode, std::vector<Rational> thresholds, std::vector<Edge> edges)
    : mode_(mode), thresholds_(std::move(thresholds)), edges_(std::move(edges)) {
    violation_ = find_violation(mode_, thresholds_, edges_);
    if (mode_ == Mode::undirected) {
        for (auto& e : edges_) {
            if (e.u > e.v) std::swap(e.u, e.v);
        }
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return std::pair{a.u, a.v} < std::pair{b.u, b.v};
    });
    const auto size = static_cast<std::size_t>(n());
    in_.assign(size, {});
    out_.assign(size, {});
    if (!valid()) return;
    for (const auto& e : edges_) {
        in_[e.v - 1].push_back({e.u, e.weight});
        out_[e.u - 1].push_back({e.v, e.weight});
        if (mode_ == Mode::undirected) {
            in_[e.u - 1].push_back({e.v, e.weight});
            out_[e.v - 1].push_back({e.u, e.weight});
        }
    }
}

std::optional<Rational> Instance::weight(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v)) return std::nullopt;
    for (const auto& nb : out_[u - 1]) {
        if (nb.vertex == v) return nb.weight;
    }
    return std::nullopt;
}

void Instance::require_valid() const {
    if (violation_) throw InvalidInput("invalid instance: " + violation_->message);
}

Instance Instance::with_thresholds(std::vector<Rational> thresholds) const {
    return {mode_, std::move(thresholds), edges_};
}

std::optional<Violation> validate(const Instance& instance) { return instance.violation(); }

Rational incident_weight_sum(const Instance& instance, Vertex v, const VertexSet& within) {
    instance.require_valid();
    if (!instance.has_vertex(v)) throw InvalidInput("unknown vertex " + std::to_string(v));
    if (!within.contains(v)) {
        throw InvalidInput("vertex " + std::to_string(v) + " is not in the given vertex set");
    }
    Rational sum;
    for (const auto& nb : instance.in_neighbors(v)) {
        if (within.contains(nb.vertex)) sum += nb.weight;
    }
    return sum;
}

Rational incident_weight_sum(const Instance& instance, Vertex v, std::span<const char> within) {
    Rational sum;
    for (const auto& nb : instance.in_neighbors(v)) {
        if (within[nb.vertex]) sum += nb.weight;
    }
    return sum;
}

Rational full_incident_sum(const Instance& instance, Vertex v) {
    Rational sum;
    for (const auto& nb : instance.in_neighbors(v)) sum += nb.weight;
    return sum;
}

InducedSubinstance induced_subinstance(const Instance& instance, const VertexSet& keep) {
    instance.require_valid();
    if (keep.empty()) throw InvalidInput("induced_subinstance: empty vertex set");
    std::vector<Vertex> relabel(static_cast<std::size_t>(instance.n()) + 1, 0);
    std::vector<Vertex> original;
    std::vector<Rational> thresholds;
    for (Vertex v : keep) {
        if (!instance.has_vertex(v)) throw InvalidInput("unknown vertex " + std::to_string(v));
        original.push_back(v);
        relabel[v] = static_cast<Vertex>(original.size());
        thresholds.push_back(instance.threshold(v));
    }
    std::vector<Edge> edges;
    for (const auto& e : instance.edges()) {
        if (relabel[e.u] != 0 && relabel[e.v] != 0) edges.push_back({relabel[e.u], relabel[e.v], e.weight});
    }
    return {Instance(instance.mode(), std::move(thresholds), std::move(edges)), std::move(original)};
}

Rational min_edge_weight(const Instance& instance) {
    instance.require_valid();
    auto edges = instance.edges();
    if (edges.empty()) throw PreconditionError("min_edge_weight: instance has no edges");
    Rational best = edges.front().weight;
    for (const auto& e : edges) best = min(best, e.weight);
    return best;
}

Rational total_threshold(const Instance& instance) {
    Rational sum;
    for (const auto& t : instance.thresholds()) sum += t;
    return sum;
}

Rational total_edge_weight(const Instance& instance) {
    Rational sum;
    for (const auto& e : instance.edges()) sum += e.weight;
    return sum;
}

int degree(const Instance& instance, Vertex v) {
    return static_cast<int>(instance.in_neighbors(v).size());
}

std::vector<std::vector<Vertex>> connected_components(const Instance& instance) {
    instance.require_valid();
    const int n = instance.n();
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& e : instance.edges()) {
        int a = find(e.u);
        int b = find(e.v);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::vector<Vertex>> components;
    std::vector<int> index(static_cast<std::size_t>(n) + 1, -1);
    for (Vertex v = 1; v <= n; ++v) {
        int root = find(v);
        if (index[root] < 0) {
            index[root] = static_cast<int>(components.size());
            components.emplace_back();
        }
        components[index[root]].push_back(v);
    }
    return components;
}

bool is_connected(const Instance& instance) { return connected_components(instance).size() == 1; }

bool has_unit_weights(const Instance& instance) {
    return std::all_of(instance.edges().begin(), instance.edges().end(),
                       [](const Edge& e) { return e.weight == Rational(1); });
}

bool has_integer_thresholds(const Instance& instance) {
    return std::all_of(instance.thresholds().begin(), instance.thresholds().end(),
                       [](const Rational& t) { return t.is_integer(); });
}

VertexSet all_vertices(const Instance& instance) {
    VertexSet all;
    for (Vertex v = 1; v <= instance.n(); ++v) all.insert(all.end(), v);
    return all;
}

}  // namespace wtss
