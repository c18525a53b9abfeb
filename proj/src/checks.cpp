#include "wtss/checks.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wtss/activation.hpp"
#include "wtss/degeneracy.hpp"
#include "wtss/generators.hpp"
#include "wtss/oracles.hpp"
#include "wtss/reductions.hpp"
#include "wtss/solvers.hpp"
#include "wtss/wtg.hpp"

namespace wtss::checks {

namespace {

struct Failure {
    std::string message;
};

/// Runs `body(i, rng)` for i in [0, count) and converts the first failed
/// expectation or unexpected exception into a failed result.
SweepResult sweep(const std::string& name, const SweepOptions& options,
                  const std::function<void(int, std::mt19937_64&, SweepResult&)>& body) {
    SweepResult result;
    result.name = name;
    const int count = options.count > 0 ? options.count : default_count(name);
    std::mt19937_64 rng(options.seed);
    const auto start = std::chrono::steady_clock::now();
    int i = 0;
    try {
        for (; i < count; ++i) {
            body(i, rng, result);
            ++result.instances;
        }
    } catch (const Failure& f) {
        result.passed = false;
        result.failure = "instance #" + std::to_string(i) + ": " + f.message;
    } catch (const std::exception& e) {
        result.passed = false;
        result.failure = "instance #" + std::to_string(i) + ": unexpected exception: " + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

void expect(bool condition, const std::string& what, const Instance& instance) {
    if (!condition) throw Failure{what + "\n" + serialize_wtg(instance)};
}

std::string str(const Rational& r) { return r.to_string(); }

std::uint64_t next_seed(std::mt19937_64& rng) { return rng(); }

double pick_probability(std::mt19937_64& rng) {
    static constexpr std::array<double, 5> choices{0.2, 0.35, 0.5, 0.65, 0.8};
    return choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
}

WeightScheme pick_weights(std::mt19937_64& rng) {
    return std::bernoulli_distribution(0.5)(rng) ? WeightScheme::integers : WeightScheme::halves;
}

/// Slacks recomputed from the order alone, independent of the peeling bookkeeping.
bool ordering_is_certified(const Instance& instance, const DegeneracyOrdering& ordering) {
    std::vector<char> earlier(static_cast<std::size_t>(instance.n()) + 1, 0);
    Rational covered;
    for (Vertex v : ordering.order) {
        const Rational into_prefix = incident_weight_sum(instance, v, earlier);
        if (ordering.slack(v) != instance.threshold(v) - into_prefix) return false;
        if (ordering.slack(v).is_negative()) return false;
        covered += into_prefix;
        earlier[v] = 1;
    }
    return covered == total_edge_weight(instance);
}

/// Unit-weight graph with 1 <= tau(v) <= deg(v) that is degenerate by
/// construction: along a random order, tau(u_i) is at least the number of
/// earlier neighbors.
Instance degenerate_unit_source(int n, std::mt19937_64& rng) {
    GenSpec spec;
    spec.n = n;
    spec.edge_probability = pick_probability(rng);
    spec.weights = WeightScheme::unit;
    spec.connected = true;
    spec.seed = next_seed(rng);
    const Instance graph = gen_random_weighted(spec);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> earlier(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Rational> tau(static_cast<std::size_t>(n));
    for (Vertex v : order) {
        const auto back = incident_weight_sum(graph, v, earlier).num();
        const auto lo = std::max<std::int64_t>(1, back);
        const auto hi = degree(graph, v);
        tau[v - 1] = Rational(std::uniform_int_distribution<std::int64_t>(lo, hi)(rng));
        earlier[v] = 1;
    }
    return graph.with_thresholds(std::move(tau));
}

Instance unit_degree_range(int n, std::mt19937_64& rng) {
    GenSpec spec;
    spec.n = n;
    spec.edge_probability = pick_probability(rng);
    spec.weights = WeightScheme::unit;
    spec.thresholds = ThresholdPolicy::degree_range;
    spec.connected = true;
    spec.seed = next_seed(rng);
    return gen_random_weighted(spec);
}

}  // namespace

const std::vector<std::string>& sweep_names() {
    static const std::vector<std::string> names{
        "degeneracy", "slack-set", "degenerate-optimal", "two-level", "min-or-full", "complete-reduction",
        "hub-reduction",      "bounds",        "bidirected",         "kappa",     "grid-oracle", "roundtrip"};
    return names;
}

int default_count(const std::string& name) {
    static const std::map<std::string, int> counts{
        {"degeneracy", 500}, {"slack-set", 300}, {"degenerate-optimal", 300}, {"two-level", 200},
        {"min-or-full", 200}, {"complete-reduction", 100},        {"hub-reduction", 100},              {"bounds", 300},
        {"bidirected", 100}, {"kappa", 200},         {"grid-oracle", 1},          {"roundtrip", 200}};
    auto it = counts.find(name);
    if (it == counts.end()) throw std::invalid_argument("unknown check '" + name + "'");
    return it->second;
}

SweepResult run_sweep(const std::string& name, const SweepOptions& options) {
    static const std::map<std::string, SweepResult (*)(const SweepOptions&)> table{
        {"degeneracy", sweep_degeneracy},   {"slack-set", sweep_slack_set},
        {"degenerate-optimal", sweep_degenerate_optimal},
        {"two-level", sweep_two_level},     {"min-or-full", sweep_min_or_full},
        {"complete-reduction", sweep_complete_reduction},             {"hub-reduction", sweep_hub_reduction},
        {"bounds", sweep_bounds},           {"bidirected", sweep_bidirected},
        {"kappa", sweep_kappa},             {"grid-oracle", sweep_grid_oracle},
        {"roundtrip", sweep_roundtrip}};
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown check '" + name + "'");
    return it->second(options);
}

SweepResult sweep_degeneracy(const SweepOptions& options) {
    return sweep("degeneracy", options, [](int i, std::mt19937_64& rng, SweepResult& result) {
        GenSpec spec;
        spec.n = 1 + i % 12;
        spec.edge_probability = pick_probability(rng);
        spec.weights = pick_weights(rng);
        spec.weight_max = 4;
        spec.seed = next_seed(rng);
        const Instance instance = (i % 3 == 2) ? gen_degenerate(spec) : gen_random_weighted(spec);
        const auto peeled = peel_ordering(instance);
        const bool brute = brute_degeneracy_check(instance);
        const auto* ordering = std::get_if<DegeneracyOrdering>(&peeled);
        expect((ordering != nullptr) == brute,
               std::string("peeling says ") + (ordering ? "degenerate" : "not degenerate") +
                   ", exhaustive check disagrees",
               instance);
        if (ordering) {
            expect(ordering_is_certified(instance, *ordering), "ordering slacks are not certified", instance);
            ++result.tallies["degenerate"];
        } else {
            const auto& stuck = std::get<NotDegenerate>(peeled).stuck;
            for (Vertex x : stuck) {
                expect(instance.threshold(x) < incident_weight_sum(instance, x, stuck),
                       "stuck set contains a removable vertex", instance);
            }
            ++result.tallies["not_degenerate"];
        }
    });
}

SweepResult sweep_slack_set(const SweepOptions& options) {
    return sweep("slack-set", options, [](int i, std::mt19937_64& rng, SweepResult& result) {
        GenSpec spec;
        spec.n = 1 + i % 10;
        spec.edge_probability = pick_probability(rng);
        spec.weights = pick_weights(rng);
        spec.weight_max = 4;
        spec.slack_max = i % 4;
        spec.seed = next_seed(rng);
        const Instance instance = gen_degenerate(spec);
        const auto approx = slack_target_set(instance);
        expect(is_target_set(instance, approx.set), "selected set does not activate the graph", instance);
        const auto opt = exact_min_target_set(instance);
        if (approx.set.empty()) {
            expect(is_target_set(instance, {}), "empty selection but the empty seed fails", instance);
            ++result.tallies["empty_selection"];
            return;
        }
        expect(approx.claimed_ratio.has_value() && *approx.claimed_ratio >= Rational(1),
               "ratio tau_max/c is missing or below 1", instance);
        const Rational bound = *approx.claimed_ratio * Rational(opt.optimum);
        expect(Rational(static_cast<std::int64_t>(approx.set.size())) <= bound,
               "|S|=" + std::to_string(approx.set.size()) + " exceeds (tau_max/c)*OPT=" + str(bound), instance);
        if (static_cast<int>(approx.set.size()) == opt.optimum) ++result.tallies["optimal"];
    });
}

SweepResult sweep_degenerate_optimal(const SweepOptions& options) {
    return sweep("degenerate-optimal", options, [](int i, std::mt19937_64& rng, SweepResult&) {
        GenSpec spec;
        spec.n = 1 + i % 9;
        spec.edge_probability = pick_probability(rng);
        spec.weights = pick_weights(rng);
        spec.weight_max = 5;
        spec.slack_max = 1 + i % 3;
        spec.seed = next_seed(rng);
        const Instance instance = gen_degenerate(spec);
        const auto report = degenerate_target_vector(instance);
        const auto oracle = exact_target_vector(instance);
        const Rational closed_form = total_threshold(instance) - total_edge_weight(instance);
        expect(report.cost() == oracle.optimum,
               "solver cost " + str(report.cost()) + " != oracle optimum " + str(oracle.optimum), instance);
        expect(report.cost() == closed_form, "solver cost differs from sum(tau) - sum(w)", instance);
    });
}

SweepResult sweep_two_level(const SweepOptions& options) {
    return sweep("two-level", options, [](int i, std::mt19937_64& rng, SweepResult& result) {
        GenSpec spec;
        spec.n = 2 + i % 8;
        spec.edge_probability = pick_probability(rng);
        spec.weights = pick_weights(rng);
        spec.weight_max = 3;
        spec.full_probability = (i % 3 == 0) ? 0.0 : 0.3;
        spec.seed = next_seed(rng);
        const Instance instance = gen_two_level(spec);
        const Rational mu = min_edge_weight(instance);
        bool any_full = false;
        for (Vertex v = 1; v <= instance.n(); ++v) any_full |= instance.threshold(v) == full_incident_sum(instance, v);
        const Rational expected =
            total_threshold(instance) - total_edge_weight(instance) + (any_full ? Rational(0) : mu);

        const auto report = two_level_target_vector(instance);
        const auto oracle = exact_target_vector(instance);
        expect(report.cost() == oracle.optimum,
               "solver cost " + str(report.cost()) + " != oracle optimum " + str(oracle.optimum), instance);
        expect(report.cost() == expected, "solver cost " + str(report.cost()) + " != closed form " + str(expected),
               instance);
        if (any_full) {
            ++result.tallies["degenerate_branch"];
            return;
        }
        ++result.tallies["edge_removal_branch"];
        for (const auto& e : instance.edges()) {
            if (e.weight != mu) continue;
            const auto alt = two_level_target_vector(instance, e);
            expect(alt.cost() == report.cost(),
                   "removing edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") changes the cost",
                   instance);
            ++result.tallies["edge_choices"];
        }
    });
}

SweepResult sweep_min_or_full(const SweepOptions& options) {
    return sweep("min-or-full", options, [](int i, std::mt19937_64& rng, SweepResult& result) {
        GenSpec spec;
        spec.n = 2 + i % 8;
        spec.edge_probability = pick_probability(rng);
        spec.weights = pick_weights(rng);
        spec.weight_max = 3;
        spec.full_probability = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
        spec.connected = (i % 2 == 0);
        spec.seed = next_seed(rng);
        const Instance instance = gen_min_or_full(spec);
        const auto report = min_or_full_target_vector(instance);
        expect(is_target_vector(instance, report.incentives()), "mapped-back vector does not activate G", instance);
        const auto oracle = exact_target_vector(instance);
        expect(report.cost() == oracle.optimum,
               "solver cost " + str(report.cost()) + " != oracle optimum " + str(oracle.optimum), instance);
        const auto& cert = std::get<MinOrFullCertificate>(report.certificate());
        expect(cert.auxiliary_cost == report.cost(), "auxiliary optimum differs from mapped cost", instance);
        result.tallies["low_components"] += static_cast<long>(cert.low_components.size());
        result.tallies["multigraph_edges"] += cert.multigraph_edges;
    });
}

SweepResult sweep_complete_reduction(const SweepOptions& options) {
    return sweep("complete-reduction", options, [](int i, std::mt19937_64& rng, SweepResult& result) {
        Instance source = [&] {
            if (i % 5 == 0) {
                GenSpec spec;
                spec.n = (i % 10 == 0) ? 4 : 6;
                spec.seed = next_seed(rng);
                ++result.tallies["cubic"];
                return gen_cubic_t12(spec);
            }
            return unit_degree_range(2 + i % 6, rng);
        }();
        const auto receipt = tss_to_complete(source);
        const Instance& image = receipt.image;
        expect(validate(image) == std::nullopt, "image fails validation", source);
        for (const auto& e : image.edges()) expect(e.weight.is_positive(), "image has a non-positive weight", source);
        const std::uint64_t subsets = std::uint64_t{1} << source.n();
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            expect(activates_all_mask(source, mask) == activates_all_mask(image, mask),
                   "target-set status differs on seed mask " + std::to_string(mask), source);
        }
        result.tallies["seeds"] += static_cast<long>(subsets);
        expect(exact_min_target_set(source).optimum == exact_min_target_set(image).optimum, "dyn differs", source);
    });
}

SweepResult sweep_hub_reduction(const SweepOptions& options) {
    return sweep("hub-reduction", options, [](int i, std::mt19937_64& rng, SweepResult&) {
        const Instance source = degenerate_unit_source(2 + i % 5, rng);
        const auto receipt = degenerate_to_complete(source);
        expect(std::holds_alternative<DegeneracyOrdering>(peel_ordering(receipt.image)), "image is not degenerate",
               source);
        const int dyn_source = exact_min_target_set(source).optimum;
        const int dyn_image = exact_min_target_set(receipt.image).optimum;
        expect(dyn_image == dyn_source + 1,
               "dyn(image)=" + std::to_string(dyn_image) + " but dyn(source)+1=" + std::to_string(dyn_source + 1),
               source);
    });
}

SweepResult sweep_bounds(const SweepOptions& options) {
    return sweep("bounds", options, [](int i, std::mt19937_64& rng, SweepResult& result) {
        GenSpec spec;
        spec.n = 1 + i % 8;
        spec.edge_probability = pick_probability(rng);
        spec.weights = pick_weights(rng);
        spec.weight_max = 4;
        spec.seed = next_seed(rng);
        Instance instance = [&] {
            switch (i % 5) {
                case 0: return gen_degenerate(spec);
                case 1: return spec.n >= 2 ? gen_tournament(spec) : gen_random_weighted(spec);
                case 2: return spec.n >= 2 ? gen_two_level(spec) : gen_random_weighted(spec);
                case 3: return spec.n >= 2 ? gen_min_or_full(spec) : gen_random_weighted(spec);
                default: return gen_random_weighted(spec);
            }
        }();
        const auto oracle = exact_target_vector(instance);
        const Rational lower = target_vector_lower_bound(instance);
        expect(lower <= oracle.optimum, "lower bound " + str(lower) + " exceeds optimum " + str(oracle.optimum),
               instance);
        expect(oracle.optimum <= total_threshold(instance), "optimum exceeds sum of thresholds", instance);

        bool coverable = true;
        for (Vertex v = 1; v <= instance.n(); ++v) coverable &= instance.threshold(v) <= full_incident_sum(instance, v);
        if (!coverable) {
            ++result.tallies["vc_precondition_unmet"];
            return;
        }
        const int dyn = exact_min_target_set(instance).optimum;
        const int beta = exact_min_vertex_cover(instance).optimum;
        expect(dyn <= beta, "dyn=" + std::to_string(dyn) + " exceeds beta=" + std::to_string(beta), instance);
        const auto cover = vertex_cover_target_set(instance);
        expect(is_target_set(instance, cover), "greedy cover is not a target set", instance);
        expect(static_cast<int>(cover.size()) >= beta, "greedy cover smaller than the minimum cover", instance);
        ++result.tallies["vc_checked"];
    });
}

SweepResult sweep_bidirected(const SweepOptions& options) {
    return sweep("bidirected", options, [](int i, std::mt19937_64& rng, SweepResult& result) {
        GenSpec spec;
        spec.n = 1 + i % 8;
        spec.edge_probability = pick_probability(rng);
        spec.weights = pick_weights(rng);
        spec.weight_max = 4;
        spec.seed = next_seed(rng);
        const Instance source = gen_random_weighted(spec);
        const Instance image = to_bidirected(source).image;
        std::vector<VertexSet> seeds{{}};
        for (Vertex v = 1; v <= source.n(); ++v) seeds.push_back({v});
        for (int k = 0; k < 3; ++k) {
            VertexSet s;
            for (Vertex v = 1; v <= source.n(); ++v) {
                if (std::bernoulli_distribution(0.3)(rng)) s.insert(v);
            }
            seeds.push_back(std::move(s));
        }
        for (const auto& seed : seeds) {
            expect(run_activation(source, seed) == run_activation(image, seed), "traces differ", source);
        }
        result.tallies["seeds"] += static_cast<long>(seeds.size());
        const auto a = exact_min_target_set(source);
        const auto b = exact_min_target_set(image);
        expect(a.optimum == b.optimum && a.witness == b.witness, "directed and undirected dyn differ", source);
    });
}

SweepResult sweep_kappa(const SweepOptions& options) {
    return sweep("kappa", options, [](int i, std::mt19937_64& rng, SweepResult& result) {
        const Instance instance = unit_degree_range(2 + i % 9, rng);
        std::vector<VertexSet> sets{{}, all_vertices(instance)};
        for (int k = 0; k < 6; ++k) {
            const double density = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
            VertexSet d;
            for (Vertex v = 1; v <= instance.n(); ++v) {
                if (std::bernoulli_distribution(density)(rng)) d.insert(v);
            }
            sets.push_back(std::move(d));
        }
        for (const auto& d : sets) {
            const bool kappa = kappa_complement_check(instance, d);
            expect(kappa == is_target_set(instance, d), "kappa-degeneracy and activation disagree", instance);
            ++result.tallies[kappa ? "target_sets" : "non_target_sets"];
        }
    });
}

namespace {

// Small integer activation process for the grid oracle; deliberately shares
// nothing with the library engine.
struct TinyInstance {
    int n = 0;
    std::array<std::array<int, 4>, 4> w{};
    std::array<int, 4> tau{};
};

bool tiny_activates_all(const TinyInstance& g, const std::array<int, 4>& p) {
    std::array<bool, 4> active{};
    for (int v = 0; v < g.n; ++v) active[v] = p[v] >= g.tau[v];
    bool changed = true;
    while (changed) {
        changed = false;
        std::array<bool, 4> next = active;
        for (int x = 0; x < g.n; ++x) {
            if (active[x]) continue;
            int gathered = 0;
            for (int y = 0; y < g.n; ++y) {
                if (active[y]) gathered += g.w[x][y];
            }
            if (gathered + p[x] >= g.tau[x]) {
                next[x] = true;
                changed = true;
            }
        }
        active = next;
    }
    for (int v = 0; v < g.n; ++v) {
        if (!active[v]) return false;
    }
    return true;
}

int tiny_grid_optimum(const TinyInstance& g) {
    int best = 0;
    for (int v = 0; v < g.n; ++v) best += g.tau[v];
    std::array<int, 4> p{};
    std::function<void(int, int)> search = [&](int v, int spent) {
        if (spent >= best) return;
        if (v == g.n) {
            if (tiny_activates_all(g, p)) best = spent;
            return;
        }
        for (int value = 0; value <= g.tau[v]; ++value) {
            p[v] = value;
            search(v + 1, spent + value);
        }
        p[v] = 0;
    };
    search(0, 0);
    return best;
}

}  // namespace

SweepResult sweep_grid_oracle(const SweepOptions& options) {
    SweepOptions once = options;
    once.count = 1;
    long enumerated = 0;
    SweepResult result = sweep("grid-oracle", once, [&enumerated](int, std::mt19937_64&, SweepResult& result) {
        for (int n = 1; n <= 4; ++n) {
            std::vector<std::pair<int, int>> pairs;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
            }
            long graphs = 1;
            for (std::size_t k = 0; k < pairs.size(); ++k) graphs *= 4;
            long threshold_vectors = 1;
            for (int k = 0; k < n; ++k) threshold_vectors *= 4;
            for (long g = 0; g < graphs; ++g) {
                TinyInstance tiny;
                tiny.n = n;
                std::vector<Edge> edges;
                long code = g;
                for (auto [u, v] : pairs) {
                    const int w = static_cast<int>(code % 4);  // 0 = no edge
                    code /= 4;
                    if (w == 0) continue;
                    tiny.w[u][v] = tiny.w[v][u] = w;
                    edges.push_back({u + 1, v + 1, Rational(w)});
                }
                for (long t = 0; t < threshold_vectors; ++t) {
                    std::vector<Rational> tau;
                    long tcode = t;
                    for (int v = 0; v < n; ++v) {
                        tiny.tau[v] = static_cast<int>(tcode % 4);
                        tcode /= 4;
                        tau.emplace_back(tiny.tau[v]);
                    }
                    const Instance instance(Mode::undirected, std::move(tau), edges);
                    const auto oracle = exact_target_vector(instance);
                    const int grid = tiny_grid_optimum(tiny);
                    expect(oracle.optimum == Rational(grid),
                           "order-cost optimum " + str(oracle.optimum) + " != grid optimum " + std::to_string(grid),
                           instance);
                    ++result.tallies["instances_n" + std::to_string(n)];
                    ++enumerated;
                }
            }
        }
    });
    // One sweep step covers the whole enumeration; report the real count.
    result.instances = static_cast<int>(enumerated);
    return result;
}

SweepResult sweep_roundtrip(const SweepOptions& options) {
    return sweep("roundtrip", options, [](int i, std::mt19937_64& rng, SweepResult&) {
        GenSpec spec;
        spec.n = 1 + i % 12;
        spec.edge_probability = pick_probability(rng);
        spec.weights = pick_weights(rng);
        spec.seed = next_seed(rng);
        const Instance instance = (i % 2 == 0 || spec.n < 2) ? gen_random_weighted(spec) : gen_tournament(spec);
        IncentiveVector p(instance.n());
        for (Vertex v = 1; v <= instance.n(); ++v) p[v] = Rational(static_cast<std::int64_t>(rng() % 7), 1 + static_cast<std::int64_t>(rng() % 3));
        const std::string text = serialize_wtg(instance, &p);
        const auto doc = parse_wtg(text);
        expect(doc.instance == instance, "parsed instance differs", instance);
        expect(doc.incentives.has_value() && *doc.incentives == p, "parsed incentives differ", instance);
        expect(serialize_wtg(doc.instance, &*doc.incentives) == text, "serialization is not a fixed point", instance);
    });
}

}  // namespace wtss::checks
