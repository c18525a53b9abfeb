#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "wtss/error.hpp"
#include "wtss/generators.hpp"

using namespace wtss;
using namespace testing;

namespace {

// Image of P3 under the complete-graph construction.
Instance weighted_k3() { return Instance::undirected({3, 3, 3}, {{a, b, 3}, {b, c, 3}, {a, c, 1}}); }

std::vector<VertexSet> rounds(std::initializer_list<VertexSet> r) { return r; }

}  // namespace

TEST_SUITE("activation") {
    TEST_CASE("run_activation: examples") {
        const auto chain = run_activation(path3(), {a});
        CHECK(chain.rounds == rounds({{a}, {b}, {c}}));
        CHECK(chain.final_active == VertexSet{a, b, c});
        CHECK(chain.num_rounds == 2);

        const auto idle = run_activation(triangle(1), {});
        CHECK(idle.final_active.empty());
        CHECK(idle.rounds == rounds({{}}));
        CHECK(idle.num_rounds == 0);

        CHECK(run_activation(weighted_k3(), {a}).rounds == rounds({{a}, {b}, {c}}));
    }

    TEST_CASE("zero thresholds join round zero") {
        const auto g = Instance::undirected({0, 1, 2}, {{a, b, 1}, {b, c, 1}});
        const auto trace = run_activation(g, {});
        CHECK(trace.rounds == rounds({{a}, {b}}));
        CHECK(trace.final_active == VertexSet{a, b});
    }

    TEST_CASE("activation within a round is simultaneous") {
        // b and c both need a alone; d needs both b and c.
        const auto g = Instance::undirected({1, 1, 1, 2}, {{a, b, 1}, {a, c, 1}, {b, d, 1}, {c, d, 1}});
        CHECK(run_activation(g, {a}).rounds == rounds({{a}, {b, c}, {d}}));
    }

    TEST_CASE("unknown seed vertex is rejected") { CHECK_THROWS_AS(run_activation(path3(), {7}), InvalidInput); }

    TEST_CASE("directed mode uses incoming arcs") {
        const auto g = Instance::directed({1, 1}, {{a, b, 1}});
        CHECK(run_activation(g, {a}).final_active == VertexSet{a, b});
        CHECK(run_activation(g, {b}).final_active == VertexSet{b});
    }

    TEST_CASE("run_with_incentives: examples") {
        const auto tri = triangle(2);
        CHECK(run_with_incentives(tri, incentives({2, 1, 0})).rounds == rounds({{a}, {b}, {c}}));
        CHECK(run_with_incentives(tri, incentives({2, 2, 2})).rounds == rounds({{a, b, c}}));
        CHECK(run_with_incentives(tri, IncentiveVector(3)).final_active.empty());
    }

    TEST_CASE("run_with_incentives rejects malformed vectors") {
        CHECK_THROWS_AS(run_with_incentives(path3(), IncentiveVector(2)), InvalidInput);
        CHECK_THROWS_AS(run_with_incentives(path3(), incentives({1, -1, 0})), InvalidInput);
    }

    TEST_CASE("is_target_set / is_target_vector: examples") {
        CHECK(is_target_set(path3(), {a}));
        CHECK(is_target_set(triangle(2), {a, b, c}));
        CHECK(is_target_set(Instance::undirected({9, 9}, {}), {a, b}));
        const auto p = incentives({1, 0, 0});
        CHECK(is_target_vector(triangle(1), p));
        CHECK(incentive_cost(p) == Rational(1));
        CHECK_FALSE(is_target_set(triangle(2), {a}));
    }

    TEST_CASE("incentive_cost: examples") {
        CHECK(incentive_cost(IncentiveVector(4)) == Rational(0));
        CHECK(incentive_cost(incentives({1, 0, 0})) == Rational(1));
        CHECK(incentive_cost(incentives({2, 2, 2})) == Rational(6));
        CHECK(incentive_cost(incentives({Rational(1, 2), Rational(1, 3)})) == Rational(5, 6));
    }

    TEST_CASE("mask fast path agrees with the checked engine") {
        GenSpec spec;
        spec.n = 7;
        spec.weights = WeightScheme::halves;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            spec.seed = seed;
            const auto g = gen_random_weighted(spec);
            for (std::uint64_t mask = 0; mask < (1U << g.n()); ++mask) {
                VertexSet s;
                for (Vertex v = 1; v <= g.n(); ++v) {
                    if ((mask >> (v - 1)) & 1U) s.insert(v);
                }
                REQUIRE(activates_all_mask(g, mask) == is_target_set(g, s));
            }
        }
    }
}

TEST_SUITE("activation-properties") {
    TEST_CASE("monotone in the seed, partitioned rounds, bounded round count") {
        std::mt19937_64 rng(7);
        for (int i = 0; i < 200; ++i) {
            GenSpec spec;
            spec.n = 1 + i % 10;
            spec.weights = i % 2 ? WeightScheme::halves : WeightScheme::integers;
            spec.weight_max = 4;
            spec.seed = rng();
            const auto g = gen_random_weighted(spec);
            VertexSet small, large;
            for (Vertex v = 1; v <= g.n(); ++v) {
                const auto r = rng() % 4;
                if (r == 0) small.insert(v);
                if (r <= 1) large.insert(v);
            }
            const auto t1 = run_activation(g, small);
            const auto t2 = run_activation(g, large);
            CHECK(std::includes(t2.final_active.begin(), t2.final_active.end(), t1.final_active.begin(),
                                t1.final_active.end()));
            CHECK(t1.num_rounds <= g.n());
            VertexSet seen;
            for (std::size_t k = 0; k < t1.rounds.size(); ++k) {
                if (k > 0) CHECK_FALSE(t1.rounds[k].empty());
                for (Vertex v : t1.rounds[k]) CHECK(seen.insert(v).second);
            }
            CHECK(seen == t1.final_active);
            CHECK(run_activation(g, small) == t1);
        }
    }

    TEST_CASE("pointwise larger incentives activate a superset") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 200; ++i) {
            GenSpec spec;
            spec.n = 1 + i % 9;
            spec.seed = rng();
            const auto g = gen_random_weighted(spec);
            IncentiveVector p(g.n()), q(g.n());
            for (Vertex v = 1; v <= g.n(); ++v) {
                p[v] = Rational(static_cast<std::int64_t>(rng() % 4));
                q[v] = p[v] + Rational(static_cast<std::int64_t>(rng() % 3), 2);
            }
            const auto small = run_with_incentives(g, p).final_active;
            const auto large = run_with_incentives(g, q).final_active;
            CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
        }
    }

    TEST_CASE("deleting an edge never enlarges the active set") {
        std::mt19937_64 rng(13);
        for (int i = 0; i < 200; ++i) {
            GenSpec spec;
            spec.n = 2 + i % 8;
            spec.seed = rng();
            const auto g = gen_random_weighted(spec);
            if (g.edges().empty()) continue;
            std::vector<Edge> kept(g.edges().begin(), g.edges().end());
            kept.erase(kept.begin() + static_cast<long>(rng() % kept.size()));
            const auto h = Instance::undirected(std::vector<Rational>(g.thresholds().begin(), g.thresholds().end()), kept);
            VertexSet seed;
            for (Vertex v = 1; v <= g.n(); ++v) {
                if (rng() % 3 == 0) seed.insert(v);
            }
            const auto with = run_activation(g, seed).final_active;
            const auto without = run_activation(h, seed).final_active;
            CHECK(std::includes(with.begin(), with.end(), without.begin(), without.end()));
        }
    }
}
