#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "wtss/activation.hpp"
#include "wtss/degeneracy.hpp"
#include "wtss/oracles.hpp"
#include "wtss/reductions.hpp"
#include "wtss/solvers.hpp"

namespace wtss {

/// Reports are JSON objects with a leading "kind" field. Keys keep insertion
/// order, rationals are exact strings ("3/2"), vertex lists are ascending
/// unless they are orders.
using Json = nlohmann::ordered_json;

Json rational_json(const Rational& value);
Json vertex_set_json(const VertexSet& set);
Json incentives_json(const IncentiveVector& incentives);

Json trace_report(const Instance& instance, const ActivationTrace& trace);
Json solve_report(const SolveReport& report);
Json slack_target_set_report(const SlackTargetSet& result);
Json vertex_cover_report(const VertexSet& cover);
Json peel_report(const PeelResult& result);
Json set_oracle_report(const std::string& oracle, const SetOracleResult& result);
Json vector_oracle_report(const VectorOracleResult& result);
Json receipt_report(const ReductionReceipt& receipt);

/// Pretty-printed report with a trailing newline. `wall_time_ms` is appended
/// when given; pass nullopt for byte-reproducible output.
std::string emit_report(Json report, std::optional<double> wall_time_ms);

}  // namespace wtss
