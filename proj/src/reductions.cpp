#include "wtss/reductions.hpp"

#include <numeric>
#include <stdexcept>

#include "wtss/degeneracy.hpp"
#include "wtss/error.hpp"

namespace wtss {

namespace {

void require_unit_source(const Instance& source, const char* what) {
    source.require_valid();
    const std::string name(what);
    if (source.is_directed()) throw PreconditionError(name + ": source must be undirected");
    if (source.n() < 2) throw PreconditionError(name + ": source needs at least 2 vertices");
    if (!has_unit_weights(source)) throw PreconditionError(name + ": source weights must all be 1");
    for (Vertex v = 1; v <= source.n(); ++v) {
        const Rational& t = source.threshold(v);
        if (!t.is_integer() || t.num() < 1 || t.num() > degree(source, v)) {
            throw PreconditionError(name + ": threshold of vertex " + std::to_string(v) +
                                    " must be an integer in [1, degree]");
        }
    }
}

std::vector<Vertex> identity(int n) {
    std::vector<Vertex> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 1);
    return ids;
}

// Complete graph on 1..n: `heavy` on source edges, 1 elsewhere.
std::vector<Edge> complete_edges(const Instance& source, const Rational& heavy) {
    const int n = source.n();
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            edges.push_back({u, v, source.weight(u, v) ? heavy : Rational(1)});
        }
    }
    return edges;
}

}  // namespace

ReductionReceipt tss_to_complete(const Instance& source) {
    require_unit_source(source, "tss_to_complete");
    const int n = source.n();
    std::vector<Rational> tau;
    for (Vertex v = 1; v <= n; ++v) tau.push_back(Rational(n) * source.threshold(v));
    Instance image(Mode::undirected, std::move(tau), complete_edges(source, Rational(n)));
    image.require_valid();
    return {"tss_to_complete", source, std::move(image), identity(n), std::nullopt,
            "n on source edges, 1 on added edges; thresholds n*tau", std::nullopt};
}

ReductionReceipt degenerate_to_complete(const Instance& source) {
    require_unit_source(source, "degenerate_to_complete");
    const int n = source.n();
    auto peeled = peel_ordering(source);
    auto* ordering = std::get_if<DegeneracyOrdering>(&peeled);
    if (!ordering) throw PreconditionError("degenerate_to_complete: source thresholds are not degenerate");

    const Rational big(n);
    std::vector<Rational> tau;
    for (Vertex v = 1; v <= n; ++v) tau.push_back(big * source.threshold(v) + big);
    tau.push_back(big * big);
    auto edges = complete_edges(source, big);
    const Vertex hub = n + 1;
    for (Vertex v = 1; v <= n; ++v) edges.push_back({v, hub, big});
    Instance image(Mode::undirected, std::move(tau), std::move(edges));
    image.require_valid();

    std::vector<Vertex> order = ordering->order;
    order.push_back(hub);
    std::vector<char> earlier(static_cast<std::size_t>(hub) + 1, 0);
    for (Vertex v : order) {
        if (image.threshold(v) < incident_weight_sum(image, v, earlier)) {
            throw std::logic_error("degenerate_to_complete: image ordering is not degenerate");
        }
        earlier[v] = 1;
    }
    return {"degenerate_to_complete", source, std::move(image), identity(n), hub,
            "n on source edges and hub edges, 1 on added edges; thresholds n*tau+n, hub n^2",
            std::move(order)};
}

ReductionReceipt to_bidirected(const Instance& source) {
    source.require_valid();
    if (source.is_directed()) throw PreconditionError("to_bidirected: source is already directed");
    std::vector<Edge> arcs;
    for (const auto& e : source.edges()) {
        arcs.push_back({e.u, e.v, e.weight});
        arcs.push_back({e.v, e.u, e.weight});
    }
    Instance image(Mode::directed, std::vector<Rational>(source.thresholds().begin(), source.thresholds().end()),
                   std::move(arcs));
    image.require_valid();
    return {"to_bidirected", source, std::move(image), identity(source.n()), std::nullopt,
            "each edge becomes two opposite arcs of equal weight", std::nullopt};
}

}  // namespace wtss
