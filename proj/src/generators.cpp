#include "wtss/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "wtss/error.hpp"

namespace wtss {

Family parse_family(const std::string& name) {
    if (name == "random") return Family::random_weighted;
    if (name == "degenerate") return Family::degenerate;
    if (name == "cubic") return Family::cubic_t12;
    if (name == "tournament") return Family::tournament;
    if (name == "two-level") return Family::two_level;
    if (name == "min-or-full") return Family::min_or_full;
    throw InvalidInput("unknown generator family '" + name + "'");
}

std::string to_string(Family family) {
    switch (family) {
        case Family::random_weighted: return "random";
        case Family::degenerate: return "degenerate";
        case Family::cubic_t12: return "cubic";
        case Family::tournament: return "tournament";
        case Family::two_level: return "two-level";
        case Family::min_or_full: return "min-or-full";
    }
    return "unknown";
}

WeightScheme parse_weight_scheme(const std::string& name) {
    if (name == "integers") return WeightScheme::integers;
    if (name == "halves") return WeightScheme::halves;
    if (name == "unit") return WeightScheme::unit;
    throw InvalidInput("unknown weight scheme '" + name + "'");
}

ThresholdPolicy parse_threshold_policy(const std::string& name) {
    if (name == "uniform") return ThresholdPolicy::uniform;
    if (name == "fixed") return ThresholdPolicy::fixed;
    if (name == "degree-range") return ThresholdPolicy::degree_range;
    throw InvalidInput("unknown threshold policy '" + name + "'");
}

namespace {

class Draw {
public:
    explicit Draw(const GenSpec& spec) : spec_(spec), rng_(spec.seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

    [[nodiscard]] Rational grid_step() const {
        return spec_.weights == WeightScheme::halves ? Rational(1, 2) : Rational(1);
    }

    Rational weight() {
        switch (spec_.weights) {
            case WeightScheme::unit: return Rational(1);
            case WeightScheme::halves: return Rational(integer(1, 2 * spec_.weight_max), 2);
            case WeightScheme::integers: break;
        }
        return Rational(integer(1, spec_.weight_max));
    }

    /// Uniform on the grid in [0, bound]; bound must lie on the grid.
    Rational up_to(const Rational& bound) {
        const Rational steps = bound / grid_step();
        return grid_step() * Rational(integer(0, steps.num() / steps.den()));
    }

    std::vector<Vertex> permutation(int n) {
        std::vector<Vertex> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 1);
        std::shuffle(order.begin(), order.end(), rng_);
        return order;
    }

    std::mt19937_64& rng() { return rng_; }

private:
    const GenSpec& spec_;
    std::mt19937_64 rng_;
};

void check_spec(const GenSpec& spec) {
    if (spec.n < 1) throw InvalidInput("generator: n must be at least 1");
    if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0)) {
        throw InvalidInput("generator: edge probability must lie in [0, 1]");
    }
    if (!(spec.full_probability >= 0.0 && spec.full_probability <= 1.0)) {
        throw InvalidInput("generator: full probability must lie in [0, 1]");
    }
    if (spec.weight_max < 1) throw InvalidInput("generator: weight_max must be at least 1");
    if (spec.slack_max < 0) throw InvalidInput("generator: slack_max must be non-negative");
    if (spec.fixed_threshold.is_negative()) throw InvalidInput("generator: fixed threshold must be non-negative");
}

// Random simple graph on 1..n: optional spanning tree, then each remaining pair with probability p.
std::vector<Edge> random_edges(const GenSpec& spec, Draw& draw) {
    std::set<std::pair<Vertex, Vertex>> pairs;
    if (spec.connected && spec.n > 1) {
        auto order = draw.permutation(spec.n);
        for (int i = 1; i < spec.n; ++i) {
            Vertex parent = order[draw.integer(0, i - 1)];
            pairs.insert(std::minmax(order[i], parent));
        }
    }
    for (Vertex u = 1; u <= spec.n; ++u) {
        for (Vertex v = u + 1; v <= spec.n; ++v) {
            if (pairs.contains({u, v})) continue;
            if (draw.chance(spec.edge_probability)) pairs.insert({u, v});
        }
    }
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.push_back({u, v, draw.weight()});
    return edges;
}

std::vector<Rational> draw_thresholds(const GenSpec& spec, Draw& draw, const Instance& graph) {
    std::vector<Rational> tau;
    for (Vertex v = 1; v <= graph.n(); ++v) {
        switch (spec.thresholds) {
            case ThresholdPolicy::fixed: tau.push_back(spec.fixed_threshold); break;
            case ThresholdPolicy::degree_range: {
                const int d = degree(graph, v);
                tau.push_back(d == 0 ? Rational(0) : Rational(draw.integer(1, d)));
                break;
            }
            case ThresholdPolicy::uniform: tau.push_back(draw.up_to(full_incident_sum(graph, v))); break;
        }
    }
    return tau;
}

Instance skeleton(const GenSpec& spec, Draw& draw) {
    return Instance(Mode::undirected, std::vector<Rational>(static_cast<std::size_t>(spec.n)), random_edges(spec, draw));
}

}  // namespace

Instance generate(const GenSpec& spec) {
    switch (spec.family) {
        case Family::random_weighted: return gen_random_weighted(spec);
        case Family::degenerate: return gen_degenerate(spec);
        case Family::cubic_t12: return gen_cubic_t12(spec);
        case Family::tournament: return gen_tournament(spec);
        case Family::two_level: return gen_two_level(spec);
        case Family::min_or_full: return gen_min_or_full(spec);
    }
    throw InvalidInput("unknown generator family");
}

Instance gen_random_weighted(const GenSpec& spec) {
    check_spec(spec);
    Draw draw(spec);
    const Instance graph = skeleton(spec, draw);
    return graph.with_thresholds(draw_thresholds(spec, draw, graph));
}

Instance gen_degenerate(const GenSpec& spec) {
    check_spec(spec);
    Draw draw(spec);
    const Instance graph = skeleton(spec, draw);
    const auto order = draw.permutation(spec.n);
    std::vector<char> earlier(static_cast<std::size_t>(spec.n) + 1, 0);
    std::vector<Rational> tau(static_cast<std::size_t>(spec.n));
    for (Vertex v : order) {
        tau[v - 1] = incident_weight_sum(graph, v, earlier) + draw.up_to(Rational(spec.slack_max));
        earlier[v] = 1;
    }
    return graph.with_thresholds(std::move(tau));
}

Instance gen_cubic_t12(const GenSpec& spec) {
    check_spec(spec);
    if (spec.n < 4 || spec.n % 2 != 0) throw InvalidInput("cubic generator: n must be even and at least 4");
    Draw draw(spec);
    std::vector<Vertex> points;
    for (Vertex v = 1; v <= spec.n; ++v) points.insert(points.end(), 3, v);
    while (true) {
        std::shuffle(points.begin(), points.end(), draw.rng());
        std::set<std::pair<Vertex, Vertex>> pairs;
        bool simple = true;
        for (std::size_t i = 0; i < points.size() && simple; i += 2) {
            auto key = std::minmax(points[i], points[i + 1]);
            simple = key.first != key.second && pairs.insert(key).second;
        }
        if (!simple) continue;
        std::vector<Edge> edges;
        for (auto [u, v] : pairs) edges.push_back({u, v, Rational(1)});
        std::vector<Rational> tau;
        for (int i = 0; i < spec.n; ++i) tau.push_back(Rational(draw.integer(1, 2)));
        return Instance(Mode::undirected, std::move(tau), std::move(edges));
    }
}

Instance gen_tournament(const GenSpec& spec) {
    check_spec(spec);
    if (spec.n < 2) throw InvalidInput("tournament generator: n must be at least 2");
    Draw draw(spec);
    std::vector<Edge> arcs;
    for (Vertex u = 1; u <= spec.n; ++u) {
        for (Vertex v = u + 1; v <= spec.n; ++v) {
            Rational w = draw.weight();
            if (draw.chance(0.5)) {
                arcs.push_back({u, v, w});
            } else {
                arcs.push_back({v, u, w});
            }
        }
    }
    const Instance graph(Mode::directed, std::vector<Rational>(static_cast<std::size_t>(spec.n)), std::move(arcs));
    return graph.with_thresholds(draw_thresholds(spec, draw, graph));
}

Instance gen_two_level(const GenSpec& spec) {
    check_spec(spec);
    GenSpec connected = spec;
    connected.connected = true;
    if (spec.n < 2) throw InvalidInput("two-level generator: n must be at least 2");
    Draw draw(connected);
    const Instance graph = skeleton(connected, draw);
    const Rational mu = min_edge_weight(graph);
    std::vector<Rational> tau;
    for (Vertex v = 1; v <= graph.n(); ++v) {
        const Rational full = full_incident_sum(graph, v);
        tau.push_back(draw.chance(spec.full_probability) ? full : full - mu);
    }
    return graph.with_thresholds(std::move(tau));
}

Instance gen_min_or_full(const GenSpec& spec) {
    check_spec(spec);
    if (spec.n < 2) throw InvalidInput("min-or-full generator: n must be at least 2");
    Draw draw(spec);
    std::vector<Edge> edges = random_edges(spec, draw);
    if (edges.empty()) edges.push_back({1, 2, draw.weight()});
    const Instance graph(Mode::undirected, std::vector<Rational>(static_cast<std::size_t>(spec.n)), std::move(edges));
    const Rational mu = min_edge_weight(graph);
    std::vector<Rational> tau;
    for (Vertex v = 1; v <= graph.n(); ++v) {
        tau.push_back(draw.chance(spec.full_probability) ? full_incident_sum(graph, v) : mu);
    }
    return graph.with_thresholds(std::move(tau));
}

}  // namespace wtss
