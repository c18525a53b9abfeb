#include "wtss/oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "wtss/error.hpp"

namespace wtss {

namespace {

constexpr int kMaskBits = 30;
// The order-cost table holds 2^n entries.
constexpr int kTableBits = 22;

void check_limit(const Instance& instance, const char* oracle, int limit, int cap = kMaskBits) {
    instance.require_valid();
    const int effective = std::min(limit, cap);
    if (instance.n() > effective) throw OracleLimitError(oracle, instance.n(), effective);
}

/// Visits the k-subsets of {1..n} in lexicographic order until `accept` returns true.
bool first_subset_of_size(int n, int k, std::uint64_t& explored,
                          const std::function<bool(std::uint64_t)>& accept, std::uint64_t& found) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= std::uint64_t{1} << i;
        ++explored;
        if (accept(mask)) {
            found = mask;
            return true;
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

VertexSet mask_to_set(std::uint64_t mask, int n) {
    VertexSet set;
    for (Vertex v = 1; v <= n; ++v) {
        if ((mask >> (v - 1)) & 1U) set.insert(set.end(), v);
    }
    return set;
}

SetOracleResult smallest_accepted(int n, const std::function<bool(std::uint64_t)>& accept) {
    SetOracleResult result;
    for (int k = 0; k <= n; ++k) {
        std::uint64_t found = 0;
        if (first_subset_of_size(n, k, result.explored, accept, found)) {
            result.optimum = k;
            result.witness = mask_to_set(found, n);
            return result;
        }
    }
    throw std::logic_error("no accepted subset; the full set must always qualify");
}

}  // namespace

SetOracleResult exact_min_target_set(const Instance& instance, int limit) {
    check_limit(instance, "exact_min_target_set", limit);
    auto result = smallest_accepted(instance.n(),
                                    [&](std::uint64_t mask) { return activates_all_mask(instance, mask); });
    if (!is_target_set(instance, result.witness)) throw std::logic_error("target-set oracle witness failed");
    return result;
}

SetOracleResult exact_min_vertex_cover(const Instance& instance, int limit) {
    check_limit(instance, "exact_min_vertex_cover", limit);
    std::vector<std::uint64_t> edge_masks;
    for (const auto& e : instance.edges()) {
        edge_masks.push_back((std::uint64_t{1} << (e.u - 1)) | (std::uint64_t{1} << (e.v - 1)));
    }
    auto covers = [&](std::uint64_t mask) {
        return std::all_of(edge_masks.begin(), edge_masks.end(), [&](std::uint64_t em) { return (em & mask) != 0; });
    };
    auto result = smallest_accepted(instance.n(), covers);
    std::uint64_t witness_mask = 0;
    for (Vertex v : result.witness) witness_mask |= std::uint64_t{1} << (v - 1);
    if (!covers(witness_mask)) throw std::logic_error("vertex-cover oracle witness failed");
    return result;
}

VectorOracleResult exact_target_vector(const Instance& instance, int limit) {
    check_limit(instance, "exact_target_vector", limit, kTableBits);
    const int n = instance.n();
    const std::uint32_t full = (1U << n) - 1U;
    VectorOracleResult result;

    auto deficit = [&](Vertex u, std::uint32_t active) {
        Rational gathered;
        for (const auto& nb : instance.in_neighbors(u)) {
            if ((active >> (nb.vertex - 1)) & 1U) gathered += nb.weight;
        }
        return max(Rational(0), instance.threshold(u) - gathered);
    };

    // remaining[S]: cheapest way to activate everything outside S once S is active.
    std::vector<Rational> remaining(static_cast<std::size_t>(full) + 1);
    for (std::uint32_t s = full; s-- > 0;) {
        bool first = true;
        for (Vertex u = 1; u <= n; ++u) {
            const std::uint32_t bit = 1U << (u - 1);
            if (s & bit) continue;
            ++result.explored;
            Rational cost = deficit(u, s) + remaining[s | bit];
            if (first || cost < remaining[s]) remaining[s] = cost;
            first = false;
        }
    }

    result.optimum = remaining[0];
    result.witness = IncentiveVector(n);
    std::uint32_t active = 0;
    while (active != full) {
        for (Vertex u = 1; u <= n; ++u) {
            const std::uint32_t bit = 1U << (u - 1);
            if (active & bit) continue;
            Rational pay = deficit(u, active);
            if (pay + remaining[active | bit] == remaining[active]) {
                result.witness[u] = pay;
                result.order.push_back(u);
                active |= bit;
                break;
            }
        }
    }
    if (!is_target_vector(instance, result.witness) || incentive_cost(result.witness) != result.optimum) {
        throw std::logic_error("target-vector oracle witness failed");
    }
    return result;
}

}  // namespace wtss
