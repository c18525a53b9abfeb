#include "wtss/degeneracy.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>

#include "wtss/error.hpp"

namespace wtss {

namespace {

void require_undirected(const Instance& instance, const char* what) {
    instance.require_valid();
    if (instance.is_directed()) {
        throw PreconditionError(std::string(what) + ": degeneracy is defined for undirected instances only");
    }
}

std::string describe(const VertexSet& set) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Vertex v : set) {
        os << (first ? "" : ",") << v;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace

PeelResult peel_ordering(const Instance& instance) {
    require_undirected(instance, "peel_ordering");
    const int n = instance.n();
    std::vector<Rational> residual(static_cast<std::size_t>(n) + 1);
    std::vector<char> present(static_cast<std::size_t>(n) + 1, 1);
    std::vector<char> queued(static_cast<std::size_t>(n) + 1, 0);
    std::set<Vertex, std::greater<>> ready;
    for (Vertex v = 1; v <= n; ++v) {
        residual[v] = full_incident_sum(instance, v);
        if (instance.threshold(v) >= residual[v]) {
            ready.insert(v);
            queued[v] = 1;
        }
    }

    DegeneracyOrdering result;
    result.slacks.resize(static_cast<std::size_t>(n));
    std::vector<Vertex> deleted;
    deleted.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        Vertex x = *ready.begin();
        ready.erase(ready.begin());
        present[x] = 0;
        deleted.push_back(x);
        result.slacks[x - 1] = instance.threshold(x) - residual[x];
        for (const auto& nb : instance.in_neighbors(x)) {
            Vertex y = nb.vertex;
            if (!present[y]) continue;
            residual[y] -= nb.weight;
            if (!queued[y] && instance.threshold(y) >= residual[y]) {
                ready.insert(y);
                queued[y] = 1;
            }
        }
    }

    if (static_cast<int>(deleted.size()) < n) {
        NotDegenerate witness;
        for (Vertex v = 1; v <= n; ++v) {
            if (present[v]) witness.stuck.insert(witness.stuck.end(), v);
        }
        return witness;
    }
    result.order.assign(deleted.rbegin(), deleted.rend());
    return result;
}

DegeneracyOrdering require_degeneracy_ordering(const Instance& instance) {
    auto peeled = peel_ordering(instance);
    if (auto* stuck = std::get_if<NotDegenerate>(&peeled)) {
        throw PreconditionError("thresholds are not degenerate; stuck set " + describe(stuck->stuck));
    }
    return std::get<DegeneracyOrdering>(std::move(peeled));
}

bool brute_degeneracy_check(const Instance& instance, int limit) {
    require_undirected(instance, "brute_degeneracy_check");
    const int n = instance.n();
    if (n > limit || n > 30) throw OracleLimitError("brute_degeneracy_check", n, std::min(limit, 30));
    std::vector<char> member(static_cast<std::size_t>(n) + 1, 0);
    const std::uint32_t full = (1U << n) - 1U;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        for (Vertex v = 1; v <= n; ++v) member[v] = static_cast<char>((mask >> (v - 1)) & 1U);
        bool found = false;
        for (Vertex x = 1; x <= n && !found; ++x) {
            if (member[x] && instance.threshold(x) >= incident_weight_sum(instance, x, member)) found = true;
        }
        if (!found) return false;
    }
    return true;
}

NearFullOutcome near_full_threshold_check(const Instance& instance) {
    require_undirected(instance, "near_full_threshold_check");
    if (instance.edges().empty()) throw PreconditionError("near_full_threshold_check: instance has no edges");
    if (!is_connected(instance)) throw PreconditionError("near_full_threshold_check: instance is disconnected");
    const Rational mu = min_edge_weight(instance);
    bool some_full = false;
    for (Vertex v = 1; v <= instance.n(); ++v) {
        const Rational full = full_incident_sum(instance, v);
        if (instance.threshold(v) < full - mu) return NearFullOutcome::hypothesis_failed;
        if (instance.threshold(v) >= full) some_full = true;
    }
    return some_full ? NearFullOutcome::holds : NearFullOutcome::hypothesis_failed;
}

bool kappa_complement_check(const Instance& instance, const VertexSet& target) {
    require_undirected(instance, "kappa_complement_check");
    if (!has_unit_weights(instance)) throw PreconditionError("kappa_complement_check: weights must all be 1");
    const int n = instance.n();
    std::vector<std::int64_t> kappa(static_cast<std::size_t>(n) + 1);
    for (Vertex v = 1; v <= n; ++v) {
        const Rational& t = instance.threshold(v);
        const int d = degree(instance, v);
        if (!t.is_integer() || t.num() < 1 || t.num() > d) {
            throw PreconditionError("kappa_complement_check: threshold of vertex " + std::to_string(v) +
                                    " must be an integer in [1, " + std::to_string(d) + "]");
        }
        kappa[v] = d - t.num();
    }
    std::vector<char> remaining(static_cast<std::size_t>(n) + 1, 1);
    for (Vertex v : target) {
        if (!instance.has_vertex(v)) throw InvalidInput("unknown vertex " + std::to_string(v));
        remaining[v] = 0;
    }
    // Peel the complement from the back: a vertex whose degree inside the
    // remaining set is within kappa may be placed last.
    std::vector<std::int64_t> inner(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Vertex> ready;
    int left = 0;
    for (Vertex v = 1; v <= n; ++v) {
        if (!remaining[v]) continue;
        ++left;
        for (const auto& nb : instance.in_neighbors(v)) inner[v] += remaining[nb.vertex];
        if (inner[v] <= kappa[v]) ready.push_back(v);
    }
    std::vector<char> placed(static_cast<std::size_t>(n) + 1, 0);
    while (!ready.empty()) {
        Vertex v = ready.back();
        ready.pop_back();
        if (placed[v]) continue;
        placed[v] = 1;
        remaining[v] = 0;
        --left;
        for (const auto& nb : instance.in_neighbors(v)) {
            Vertex y = nb.vertex;
            if (!remaining[y]) continue;
            if (--inner[y] == kappa[y]) ready.push_back(y);
        }
    }
    return left == 0;
}

}  // namespace wtss
