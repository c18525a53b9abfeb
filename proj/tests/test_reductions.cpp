#include <doctest.h>

#include "support.hpp"
#include "wtss/degeneracy.hpp"
#include "wtss/error.hpp"
#include "wtss/generators.hpp"
#include "wtss/oracles.hpp"
#include "wtss/reductions.hpp"

using namespace wtss;
using namespace testing;

TEST_SUITE("reductions") {
    TEST_CASE("complete-graph image of P3") {
        const auto r = tss_to_complete(path3());
        const auto& img = r.image;
        CHECK_FALSE(validate(img).has_value());
        CHECK(img == Instance::undirected({3, 3, 3}, {{a, b, 3}, {a, c, 1}, {b, c, 3}}));
        CHECK(min_edge_weight(img) == Rational(1));
        CHECK(r.correspondence == std::vector<Vertex>{a, b, c});
        CHECK_FALSE(r.added_vertex.has_value());
        CHECK(exact_min_target_set(img).optimum == exact_min_target_set(path3()).optimum);
    }

    TEST_CASE("complete-graph image of K2") {
        CHECK(tss_to_complete(single_edge(1, 1)).image == single_edge(2, 2, 2));
    }

    TEST_CASE("complete-graph image of C4") {
        const auto img = tss_to_complete(cycle4({1, 2, 1, 2})).image;
        CHECK(img == Instance::undirected({4, 8, 4, 8},
                                          {{a, b, 4}, {a, c, 1}, {a, d, 4}, {b, c, 4}, {b, d, 1}, {c, d, 4}}));
    }

    TEST_CASE("complete-graph construction: preconditions") {
        CHECK_THROWS_AS(tss_to_complete(edgeless({1})), PreconditionError);
        CHECK_THROWS_AS(tss_to_complete(triangle(1, 1, 1, 2)), PreconditionError);
        CHECK_THROWS_AS(tss_to_complete(path3(0)), PreconditionError);
        CHECK_THROWS_AS(tss_to_complete(path3(2)), PreconditionError);
        CHECK_THROWS_AS(tss_to_complete(Instance::directed({1, 1}, {{a, b, 1}, {b, a, 1}})), PreconditionError);
    }

    TEST_CASE("hub image of P2") {
        const auto r = degenerate_to_complete(single_edge(1, 1));
        CHECK(r.image == triangle(4, 4, 4, 2));
        CHECK(r.added_vertex == 3);
        CHECK(exact_min_target_set(single_edge(1, 1)).optimum == 1);
        CHECK(exact_min_target_set(r.image).optimum == 2);
    }

    TEST_CASE("hub image of P3") {
        const auto r = degenerate_to_complete(path3());
        CHECK(r.image == Instance::undirected({6, 6, 6, 9}, {{a, b, 3}, {a, c, 1}, {a, d, 3}, {b, c, 3}, {b, d, 3}, {c, d, 3}}));
        REQUIRE(r.image_ordering.has_value());
        CHECK(r.image_ordering->back() == 4);
        CHECK(std::holds_alternative<DegeneracyOrdering>(peel_ordering(r.image)));
    }

    TEST_CASE("hub construction: preconditions") {
        CHECK_THROWS_AS(degenerate_to_complete(triangle(1)), PreconditionError);
        CHECK_THROWS_AS(degenerate_to_complete(edgeless({1})), PreconditionError);
    }

    TEST_CASE("bidirected image") {
        const auto edge = to_bidirected(single_edge(1, 1, Rational(1, 2))).image;
        CHECK(edge == Instance::directed({1, 1}, {{a, b, Rational(1, 2)}, {b, a, Rational(1, 2)}}));
        CHECK(to_bidirected(triangle(1)).image.edges().size() == 6);
        CHECK_THROWS_AS(to_bidirected(edge), PreconditionError);
    }

    TEST_CASE("bidirected image replays every seed identically") {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            GenSpec spec;
            spec.n = 6;
            spec.weights = WeightScheme::halves;
            spec.seed = seed;
            const auto g = gen_random_weighted(spec);
            const auto img = to_bidirected(g).image;
            for (std::uint64_t mask = 0; mask < 64; ++mask) {
                VertexSet s;
                for (Vertex v = 1; v <= 6; ++v) {
                    if ((mask >> (v - 1)) & 1U) s.insert(v);
                }
                REQUIRE(run_activation(g, s) == run_activation(img, s));
            }
        }
    }
}
