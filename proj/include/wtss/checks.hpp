#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wtss::checks {

/// Outcome of a seeded property sweep. A sweep stops at its first failure and
/// records a reproducible description of the offending instance.
struct SweepResult {
    std::string name;
    int instances = 0;
    bool passed = true;
    std::string failure;
    double seconds = 0.0;
    /// Named counters describing the mix that was exercised.
    std::map<std::string, long> tallies;
};

struct SweepOptions {
    /// Number of instances; 0 selects the sweep's default.
    int count = 0;
    std::uint64_t seed = 20240601;
};

/// degeneracy, slack-set, degenerate-optimal, two-level, min-or-full,
/// complete-reduction, hub-reduction, bounds, bidirected, kappa, grid-oracle,
/// roundtrip.
const std::vector<std::string>& sweep_names();

int default_count(const std::string& name);

/// Throws std::invalid_argument for an unknown name.
SweepResult run_sweep(const std::string& name, const SweepOptions& options = {});

SweepResult sweep_degeneracy(const SweepOptions& options);
SweepResult sweep_slack_set(const SweepOptions& options);
SweepResult sweep_degenerate_optimal(const SweepOptions& options);
SweepResult sweep_two_level(const SweepOptions& options);
SweepResult sweep_min_or_full(const SweepOptions& options);
SweepResult sweep_complete_reduction(const SweepOptions& options);
SweepResult sweep_hub_reduction(const SweepOptions& options);
SweepResult sweep_bounds(const SweepOptions& options);
SweepResult sweep_bidirected(const SweepOptions& options);
SweepResult sweep_kappa(const SweepOptions& options);
/// Every instance on at most 4 vertices with edge weights in {1,2,3} (or no
/// edge) and thresholds in {0,...,3}: the order-cost oracle against a brute
/// search over integer incentive vectors. `count` is ignored.
SweepResult sweep_grid_oracle(const SweepOptions& options);
SweepResult sweep_roundtrip(const SweepOptions& options);

}  // namespace wtss::checks
