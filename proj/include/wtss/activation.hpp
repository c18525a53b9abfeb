#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wtss/instance.hpp"

namespace wtss {

/// Per-vertex incentives p(v) >= 0.
class IncentiveVector {
public:
    IncentiveVector() = default;
    /// All-zero vector over n vertices.
    explicit IncentiveVector(int n) : values_(static_cast<std::size_t>(n)) {}
    /// values[i] is the incentive of vertex i + 1.
    explicit IncentiveVector(std::vector<Rational> values) : values_(std::move(values)) {}

    [[nodiscard]] int size() const { return static_cast<int>(values_.size()); }
    Rational& operator[](Vertex v) { return values_.at(v - 1); }
    const Rational& operator[](Vertex v) const { return values_.at(v - 1); }
    [[nodiscard]] std::span<const Rational> values() const { return values_; }

    friend bool operator==(const IncentiveVector&, const IncentiveVector&) = default;

private:
    std::vector<Rational> values_;
};

/// Rounds of an activation process. rounds[0] holds the seed plus every vertex
/// that is active without influence; rounds[t] holds the vertices that became
/// active in round t. Rounds are disjoint and every round after the first is
/// nonempty.
struct ActivationTrace {
    std::vector<VertexSet> rounds;
    VertexSet final_active;
    /// Index of the last round, rounds.size() - 1.
    int num_rounds = 0;

    friend bool operator==(const ActivationTrace&, const ActivationTrace&) = default;
};

/// Activation from a seed set. An inactive vertex x activates in round t+1 when
/// the weight of its edges (directed: incoming arcs) from active vertices is at
/// least its threshold. Vertices with threshold 0 are active in round 0.
ActivationTrace run_activation(const Instance& instance, const VertexSet& seed);

/// Activation driven by incentives: round 0 is {v : p(v) >= tau(v)}, then x
/// activates once active influence + p(x) >= tau(x).
ActivationTrace run_with_incentives(const Instance& instance, const IncentiveVector& incentives);

bool is_target_set(const Instance& instance, const VertexSet& seed);
bool is_target_vector(const Instance& instance, const IncentiveVector& incentives);

Rational incentive_cost(const IncentiveVector& incentives);

/// Unchecked fast path for enumeration: does the seed given as a bitmask
/// (bit v-1 set for vertex v) activate every vertex? Requires a valid instance
/// with n <= 64.
bool activates_all_mask(const Instance& instance, std::uint64_t seed_mask);

}  // namespace wtss
