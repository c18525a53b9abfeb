#include "wtss/solvers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "wtss/error.hpp"

namespace wtss {

std::string to_string(Method method) {
    switch (method) {
        case Method::degenerate: return "degenerate";
        case Method::two_level: return "two-level";
        case Method::min_or_full: return "min-or-full";
    }
    return "unknown";
}

SolveReport SolveReport::make(const Instance& instance, IncentiveVector incentives, Method method,
                              Certificate certificate) {
    if (!is_target_vector(instance, incentives)) {
        throw std::logic_error(to_string(method) + " solver produced a vector that does not activate the graph");
    }
    Rational cost = incentive_cost(incentives);
    return {std::move(incentives), cost, method, std::move(certificate)};
}

namespace {

void require_undirected(const Instance& instance, const char* what) {
    instance.require_valid();
    if (instance.is_directed()) throw PreconditionError(std::string(what) + ": undirected instances only");
}

void require_connected_with_edges(const Instance& instance, const char* what) {
    if (instance.edges().empty()) throw PreconditionError(std::string(what) + ": instance has no edges");
    if (!is_connected(instance)) throw PreconditionError(std::string(what) + ": instance is disconnected");
}

std::vector<Rational> full_sums(const Instance& instance) {
    std::vector<Rational> full(static_cast<std::size_t>(instance.n()) + 1);
    for (Vertex v = 1; v <= instance.n(); ++v) full[v] = full_incident_sum(instance, v);
    return full;
}

bool two_level_pattern(const Instance& instance) {
    if (instance.is_directed() || instance.edges().empty()) return false;
    const Rational mu = min_edge_weight(instance);
    for (Vertex v = 1; v <= instance.n(); ++v) {
        const Rational full = full_incident_sum(instance, v);
        const Rational& t = instance.threshold(v);
        if (t != full && t != full - mu) return false;
    }
    return true;
}

}  // namespace

SlackTargetSet slack_target_set(const Instance& instance) {
    SlackTargetSet result;
    result.ordering = require_degeneracy_ordering(instance);
    for (const auto& t : instance.thresholds()) result.tau_max = max(result.tau_max, t);
    for (Vertex v : result.ordering.order) {
        const Rational& slack = result.ordering.slack(v);
        if (!slack.is_positive()) continue;
        result.set.insert(v);
        if (!result.min_positive_slack || slack < *result.min_positive_slack) result.min_positive_slack = slack;
    }
    if (result.min_positive_slack) result.claimed_ratio = result.tau_max / *result.min_positive_slack;
    return result;
}

SolveReport degenerate_target_vector(const Instance& instance) {
    auto ordering = require_degeneracy_ordering(instance);
    IncentiveVector p(std::vector<Rational>(ordering.slacks));
    return SolveReport::make(instance, std::move(p), Method::degenerate, OrderingCertificate{ordering.order});
}

Rational target_vector_lower_bound(const Instance& instance) {
    instance.require_valid();
    return max(Rational(0), total_threshold(instance) - total_edge_weight(instance));
}

bool matches_two_level_pattern(const Instance& instance) {
    instance.require_valid();
    return two_level_pattern(instance) && is_connected(instance);
}

bool matches_min_or_full_pattern(const Instance& instance) {
    instance.require_valid();
    if (instance.is_directed() || instance.edges().empty()) return false;
    const Rational mu = min_edge_weight(instance);
    for (Vertex v = 1; v <= instance.n(); ++v) {
        const Rational& t = instance.threshold(v);
        if (t != mu && t != full_incident_sum(instance, v)) return false;
    }
    return true;
}

SolveReport two_level_target_vector(const Instance& instance) {
    require_undirected(instance, "two_level_target_vector");
    require_connected_with_edges(instance, "two_level_target_vector");
    const Rational mu = min_edge_weight(instance);
    auto edges = instance.edges();
    auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.weight == mu; });
    return two_level_target_vector(instance, *it);
}

SolveReport two_level_target_vector(const Instance& instance, const Edge& removed) {
    require_undirected(instance, "two_level_target_vector");
    require_connected_with_edges(instance, "two_level_target_vector");
    if (!two_level_pattern(instance)) {
        throw PreconditionError("two_level_target_vector: every threshold must equal the full incident "
                                "weight or the full incident weight minus the minimum edge weight");
    }
    const Rational mu = min_edge_weight(instance);
    Edge key = removed;
    if (key.u > key.v) std::swap(key.u, key.v);
    auto w = instance.weight(key.u, key.v);
    if (!w || *w != key.weight) throw PreconditionError("two_level_target_vector: removed edge is not in the graph");
    if (*w != mu) throw PreconditionError("two_level_target_vector: removed edge must have minimum weight");

    const auto full = full_sums(instance);
    for (Vertex v = 1; v <= instance.n(); ++v) {
        if (instance.threshold(v) == full[v]) {
            // Some vertex is saturated, so the thresholds are degenerate as they stand.
            auto report = degenerate_target_vector(instance);
            TwoLevelCertificate cert;
            const auto all = all_vertices(instance);
            cert.components = {std::vector<Vertex>(all.begin(), all.end())};
            cert.order = std::get<OrderingCertificate>(report.certificate()).order;
            return SolveReport::make(instance, report.incentives(), Method::two_level, std::move(cert));
        }
    }


    std::vector<Edge> kept;
    for (const auto& e : instance.edges()) {
        if (!(e.u == key.u && e.v == key.v)) kept.push_back(e);
    }
    const Instance reduced(Mode::undirected, std::vector<Rational>(instance.thresholds().begin(),
                                                                   instance.thresholds().end()),
                           std::move(kept));

    IncentiveVector p(instance.n());
    TwoLevelCertificate cert;
    cert.removed_edge = key;
    for (const auto& component : connected_components(reduced)) {
        auto sub = induced_subinstance(reduced, VertexSet(component.begin(), component.end()));
        auto ordering = require_degeneracy_ordering(sub.instance);
        for (Vertex local : ordering.order) {
            const Vertex v = sub.original_ids[local - 1];
            p[v] = ordering.slack(local);
            cert.order.push_back(v);
        }
        cert.components.push_back(component);
    }
    return SolveReport::make(instance, std::move(p), Method::two_level, std::move(cert));
}

SolveReport min_or_full_target_vector(const Instance& instance) {
    require_undirected(instance, "min_or_full_target_vector");
    if (instance.edges().empty()) throw PreconditionError("min_or_full_target_vector: instance has no edges");
    if (!matches_min_or_full_pattern(instance)) {
        throw PreconditionError("min_or_full_target_vector: every threshold must equal the minimum edge "
                                "weight or the full incident weight");
    }
    const int n = instance.n();
    const Rational mu = min_edge_weight(instance);
    std::vector<char> low(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 1; v <= n; ++v) low[v] = static_cast<char>(instance.threshold(v) == mu);

    // Components of the low-threshold subgraph; representative = smallest id.
    std::vector<Vertex> rep(static_cast<std::size_t>(n) + 1);
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](Vertex x) {
        while (rep[x] != x) {
            rep[x] = rep[rep[x]];
            x = rep[x];
        }
        return x;
    };
    for (const auto& e : instance.edges()) {
        if (low[e.u] && low[e.v]) {
            Vertex a = find(e.u);
            Vertex b = find(e.v);
            if (a != b) rep[std::max(a, b)] = std::min(a, b);
        }
    }

    MinOrFullCertificate cert;
    // Auxiliary vertex numbering: contracted components, subdivision vertices, full vertices.
    std::map<Vertex, int> component_index;
    std::vector<Vertex> representatives;
    for (Vertex v = 1; v <= n; ++v) {
        if (!low[v]) continue;
        Vertex r = find(v);
        auto [pos, inserted] = component_index.try_emplace(r, static_cast<int>(representatives.size()));
        if (inserted) {
            representatives.push_back(r);
            cert.low_components.emplace_back();
        }
        cert.low_components[pos->second].push_back(v);
    }
    for (Vertex v = 1; v <= n; ++v) {
        if (!low[v]) cert.full_vertices.push_back(v);
    }

    struct MultiEdge {
        Vertex x;  // G endpoint in the full class, or the component representative
        Vertex y;  // G endpoint in the full class
        bool from_component;
        Rational weight;
    };
    std::vector<MultiEdge> multigraph;
    for (const auto& e : instance.edges()) {
        if (low[e.u] && low[e.v]) continue;
        if (low[e.u]) {
            multigraph.push_back({find(e.u), e.v, true, e.weight});
        } else if (low[e.v]) {
            multigraph.push_back({find(e.v), e.u, true, e.weight});
        } else {
            multigraph.push_back({e.u, e.v, false, e.weight});
        }
    }
    cert.multigraph_edges = static_cast<int>(multigraph.size());

    const int c = static_cast<int>(representatives.size());
    const int s = static_cast<int>(multigraph.size());
    std::vector<int> full_index(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Rational> aux_tau;
    for (int i = 0; i < c; ++i) aux_tau.push_back(mu);
    for (const auto& me : multigraph) aux_tau.push_back(me.weight);
    for (Vertex v : cert.full_vertices) {
        aux_tau.push_back(instance.threshold(v));
        full_index[v] = static_cast<int>(aux_tau.size());
    }
    auto aux_of = [&](Vertex g, bool component) {
        return component ? component_index.at(g) + 1 : full_index[g];
    };
    std::vector<Edge> aux_edges;
    for (int k = 0; k < s; ++k) {
        const auto& me = multigraph[k];
        const Vertex sub = c + k + 1;
        aux_edges.push_back({aux_of(me.x, me.from_component), sub, me.weight});
        aux_edges.push_back({sub, aux_of(me.y, false), me.weight});
    }
    const Instance aux(Mode::undirected, aux_tau, aux_edges);
    aux.require_valid();

    // Slacks along the order C', S, V2 (the auxiliary numbering itself).
    std::vector<char> earlier(static_cast<std::size_t>(aux.n()) + 1, 0);
    std::vector<Rational> aux_p(static_cast<std::size_t>(aux.n()) + 1);
    for (Vertex a = 1; a <= aux.n(); ++a) {
        aux_p[a] = aux.threshold(a) - incident_weight_sum(aux, a, earlier);
        if (aux_p[a].is_negative()) throw std::logic_error("min_or_full_target_vector: auxiliary order is not degenerate");
        earlier[a] = 1;
        cert.auxiliary_cost += aux_p[a];
    }
    for (Vertex r : representatives) cert.auxiliary_order.push_back("c" + std::to_string(r));
    for (const auto& me : multigraph) {
        const Vertex a = me.from_component ? me.x : std::min(me.x, me.y);
        const Vertex b = me.from_component ? me.y : std::max(me.x, me.y);
        cert.auxiliary_order.push_back("s" + std::to_string(a) + "-" + std::to_string(b));
    }
    for (Vertex v : cert.full_vertices) cert.auxiliary_order.push_back("v" + std::to_string(v));

    IncentiveVector p(n);
    for (int i = 0; i < c; ++i) p[representatives[i]] += aux_p[i + 1];
    for (int k = 0; k < s; ++k) {
        const auto& me = multigraph[k];
        const Vertex owner = me.from_component ? me.y : std::min(me.x, me.y);
        p[owner] += aux_p[c + k + 1];
    }
    for (Vertex v : cert.full_vertices) p[v] += aux_p[full_index[v]];
    return SolveReport::make(instance, std::move(p), Method::min_or_full, std::move(cert));
}

VertexSet vertex_cover_target_set(const Instance& instance) {
    instance.require_valid();
    for (Vertex v = 1; v <= instance.n(); ++v) {
        if (instance.threshold(v) > full_incident_sum(instance, v)) {
            throw PreconditionError("vertex_cover_target_set: threshold of vertex " + std::to_string(v) +
                                    " exceeds its incident weight");
        }
    }
    VertexSet cover;
    for (const auto& e : instance.edges()) {
        if (!cover.contains(e.u) && !cover.contains(e.v)) {
            cover.insert(e.u);
            cover.insert(e.v);
        }
    }
    if (!is_target_set(instance, cover)) throw std::logic_error("vertex cover failed to activate the graph");
    return cover;
}

std::optional<SolveReport> classify_and_solve(const Instance& instance) {
    instance.require_valid();
    if (instance.is_directed()) return std::nullopt;
    if (std::holds_alternative<DegeneracyOrdering>(peel_ordering(instance))) {
        return degenerate_target_vector(instance);
    }
    if (matches_two_level_pattern(instance)) return two_level_target_vector(instance);
    if (matches_min_or_full_pattern(instance)) return min_or_full_target_vector(instance);
    return std::nullopt;
}

}  // namespace wtss
