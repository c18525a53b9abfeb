#include "wtss/activation.hpp"

#include <algorithm>

#include "wtss/error.hpp"

namespace wtss {

namespace {

// Shared engine for seeds and incentives. `residual[v]` is the influence v
// still needs; `forced[v]` marks seed members. Incoming influence is
// accumulated incrementally, which equals summing over the whole active set
// each round. Returns the number of active vertices; fills `trace` if given.
int simulate(const Instance& instance, std::vector<Rational> residual, const std::vector<char>& forced,
             ActivationTrace* trace) {
    const int n = instance.n();
    std::vector<char> active(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Rational> gathered(static_cast<std::size_t>(n) + 1);
    std::vector<Vertex> frontier;
    for (Vertex v = 1; v <= n; ++v) {
        if (forced[v] || !residual[v].is_positive()) {
            active[v] = 1;
            frontier.push_back(v);
        }
    }
    int count = static_cast<int>(frontier.size());
    if (trace) trace->rounds.emplace_back(frontier.begin(), frontier.end());

    std::vector<Vertex> touched;
    std::vector<char> is_touched(static_cast<std::size_t>(n) + 1, 0);
    while (!frontier.empty()) {
        touched.clear();
        for (Vertex u : frontier) {
            for (const auto& nb : instance.out_neighbors(u)) {
                if (active[nb.vertex]) continue;
                gathered[nb.vertex] += nb.weight;
                if (!is_touched[nb.vertex]) {
                    is_touched[nb.vertex] = 1;
                    touched.push_back(nb.vertex);
                }
            }
        }
        frontier.clear();
        for (Vertex x : touched) {
            is_touched[x] = 0;
            if (gathered[x] >= residual[x]) frontier.push_back(x);
        }
        for (Vertex x : frontier) active[x] = 1;
        count += static_cast<int>(frontier.size());
        if (trace && !frontier.empty()) trace->rounds.emplace_back(frontier.begin(), frontier.end());
    }
    if (trace) {
        for (Vertex v = 1; v <= n; ++v) {
            if (active[v]) trace->final_active.insert(trace->final_active.end(), v);
        }
        trace->num_rounds = static_cast<int>(trace->rounds.size()) - 1;
    }
    return count;
}

std::vector<Rational> thresholds_by_vertex(const Instance& instance) {
    std::vector<Rational> residual(static_cast<std::size_t>(instance.n()) + 1);
    for (Vertex v = 1; v <= instance.n(); ++v) residual[v] = instance.threshold(v);
    return residual;
}

std::vector<char> seed_mask(const Instance& instance, const VertexSet& seed) {
    std::vector<char> forced(static_cast<std::size_t>(instance.n()) + 1, 0);
    for (Vertex v : seed) {
        if (!instance.has_vertex(v)) throw InvalidInput("seed contains unknown vertex " + std::to_string(v));
        forced[v] = 1;
    }
    return forced;
}

std::vector<Rational> residual_after_incentives(const Instance& instance, const IncentiveVector& p) {
    if (p.size() != instance.n()) {
        throw InvalidInput("incentive vector has " + std::to_string(p.size()) + " entries, instance has " +
                           std::to_string(instance.n()) + " vertices");
    }
    auto residual = thresholds_by_vertex(instance);
    for (Vertex v = 1; v <= instance.n(); ++v) {
        if (p[v].is_negative()) throw InvalidInput("negative incentive at vertex " + std::to_string(v));
        residual[v] -= p[v];
    }
    return residual;
}

}  // namespace

ActivationTrace run_activation(const Instance& instance, const VertexSet& seed) {
    instance.require_valid();
    auto forced = seed_mask(instance, seed);
    ActivationTrace trace;
    simulate(instance, thresholds_by_vertex(instance), forced, &trace);
    return trace;
}

ActivationTrace run_with_incentives(const Instance& instance, const IncentiveVector& incentives) {
    instance.require_valid();
    auto residual = residual_after_incentives(instance, incentives);
    std::vector<char> none(residual.size(), 0);
    ActivationTrace trace;
    simulate(instance, std::move(residual), none, &trace);
    return trace;
}

bool is_target_set(const Instance& instance, const VertexSet& seed) {
    instance.require_valid();
    auto forced = seed_mask(instance, seed);
    return simulate(instance, thresholds_by_vertex(instance), forced, nullptr) == instance.n();
}

bool is_target_vector(const Instance& instance, const IncentiveVector& incentives) {
    instance.require_valid();
    auto residual = residual_after_incentives(instance, incentives);
    std::vector<char> none(residual.size(), 0);
    return simulate(instance, std::move(residual), none, nullptr) == instance.n();
}

Rational incentive_cost(const IncentiveVector& incentives) {
    Rational sum;
    for (const auto& p : incentives.values()) sum += p;
    return sum;
}

bool activates_all_mask(const Instance& instance, std::uint64_t seed_mask) {
    std::vector<char> forced(static_cast<std::size_t>(instance.n()) + 1, 0);
    for (Vertex v = 1; v <= instance.n(); ++v) forced[v] = static_cast<char>((seed_mask >> (v - 1)) & 1U);
    return simulate(instance, thresholds_by_vertex(instance), forced, nullptr) == instance.n();
}

}  // namespace wtss
