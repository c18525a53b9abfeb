#pragma once

#include <cstdint>
#include <string>

#include "wtss/instance.hpp"

namespace wtss {

enum class Family {
    random_weighted,
    degenerate,
    cubic_t12,
    tournament,
    /// Connected, thresholds full(u) or full(u) - mu.
    two_level,
    /// Thresholds mu or full(u).
    min_or_full,
};

enum class WeightScheme {
    /// Integers 1..weight_max.
    integers,
    /// Multiples of 1/2 in [1/2, weight_max].
    halves,
    unit,
};

enum class ThresholdPolicy {
    /// Uniform on the weight grid in [0, incident weight].
    uniform,
    /// Every threshold equals fixed_threshold.
    fixed,
    /// Integer uniform in [1, degree]; isolated vertices get 0.
    degree_range,
};

/// Everything needed to reproduce a generated instance. Equal specs give equal instances.
struct GenSpec {
    Family family = Family::random_weighted;
    int n = 8;
    double edge_probability = 0.5;
    WeightScheme weights = WeightScheme::integers;
    int weight_max = 10;
    ThresholdPolicy thresholds = ThresholdPolicy::uniform;
    Rational fixed_threshold{1};
    /// Degenerate family: slack drawn uniformly from the weight grid in [0, slack_max].
    int slack_max = 2;
    /// Two-level and min-or-full families: probability that a vertex gets the full threshold.
    double full_probability = 0.5;
    /// Build a random spanning tree before adding the random edges.
    bool connected = false;
    std::uint64_t seed = 1;
};

Family parse_family(const std::string& name);
std::string to_string(Family family);
WeightScheme parse_weight_scheme(const std::string& name);
ThresholdPolicy parse_threshold_policy(const std::string& name);

/// Dispatches on spec.family.
Instance generate(const GenSpec& spec);

Instance gen_random_weighted(const GenSpec& spec);
/// Draws an order first and sets each threshold to the weight towards earlier
/// vertices plus a random slack, so the result is degenerate by construction.
Instance gen_degenerate(const GenSpec& spec);
/// Random simple 3-regular graph (pairing model with rejection), unit
/// weights, thresholds in {1, 2}. Requires even n >= 4.
Instance gen_cubic_t12(const GenSpec& spec);
/// Random orientation of K_n with positive weights and thresholds at most the
/// incoming weight.
Instance gen_tournament(const GenSpec& spec);
Instance gen_two_level(const GenSpec& spec);
Instance gen_min_or_full(const GenSpec& spec);

}  // namespace wtss
