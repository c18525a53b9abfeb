#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "wtss/activation.hpp"
#include "wtss/instance.hpp"

namespace testing {

using wtss::Edge;
using wtss::Instance;
using wtss::IncentiveVector;
using wtss::Rational;

// Vertex names used throughout: a = 1, b = 2, c = 3, d = 4.
inline constexpr int a = 1, b = 2, c = 3, d = 4;

inline std::vector<Rational> taus(std::initializer_list<Rational> values) { return values; }

inline IncentiveVector incentives(std::initializer_list<Rational> values) {
    return IncentiveVector(std::vector<Rational>(values));
}

inline Instance path3(Rational t = 1) {
    return Instance::undirected({t, t, t}, {{a, b, 1}, {b, c, 1}});
}

inline Instance triangle(Rational ta, Rational tb, Rational tc, Rational w = 1) {
    return Instance::undirected({ta, tb, tc}, {{a, b, w}, {a, c, w}, {b, c, w}});
}

inline Instance triangle(Rational t) { return triangle(t, t, t); }

inline Instance single_edge(Rational tu, Rational tv, Rational w = 1) {
    return Instance::undirected({tu, tv}, {{a, b, w}});
}

inline Instance edgeless(std::vector<Rational> t) { return Instance::undirected(std::move(t), {}); }

inline Instance cycle4(std::vector<Rational> t) {
    return Instance::undirected(std::move(t), {{a, b, 1}, {b, c, 1}, {c, d, 1}, {a, d, 1}});
}

inline std::string fixture_path(const std::string& name) { return std::string(WTSS_FIXTURE_DIR) + "/" + name; }

std::string read_file(const std::string& path);

}  // namespace testing
