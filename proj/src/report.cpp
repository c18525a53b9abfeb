#include "wtss/report.hpp"

#include <cmath>

namespace wtss {

Json rational_json(const Rational& value) { return value.to_string(); }

Json vertex_set_json(const VertexSet& set) {
    Json out = Json::array();
    for (Vertex v : set) out.push_back(v);
    return out;
}

Json incentives_json(const IncentiveVector& incentives) {
    Json out = Json::array();
    for (const auto& p : incentives.values()) out.push_back(p.to_string());
    return out;
}

namespace {

Json order_json(const std::vector<Vertex>& order) {
    Json out = Json::array();
    for (Vertex v : order) out.push_back(v);
    return out;
}

Json edge_json(const Edge& e) { return Json{{"u", e.u}, {"v", e.v}, {"weight", e.weight.to_string()}}; }

struct CertificateJson {
    Json operator()(const OrderingCertificate& c) const {
        return Json{{"type", "ordering"}, {"order", order_json(c.order)}};
    }
    Json operator()(const TwoLevelCertificate& c) const {
        Json out{{"type", "two-level"}};
        out["removed_edge"] = c.removed_edge ? edge_json(*c.removed_edge) : Json(nullptr);
        Json components = Json::array();
        for (const auto& comp : c.components) components.push_back(order_json(comp));
        out["components"] = components;
        out["order"] = order_json(c.order);
        return out;
    }
    Json operator()(const MinOrFullCertificate& c) const {
        Json out{{"type", "min-or-full"}};
        Json components = Json::array();
        for (const auto& comp : c.low_components) components.push_back(order_json(comp));
        out["low_components"] = components;
        out["full_vertices"] = order_json(c.full_vertices);
        out["multigraph_edges"] = c.multigraph_edges;
        out["auxiliary_order"] = c.auxiliary_order;
        out["auxiliary_cost"] = c.auxiliary_cost.to_string();
        return out;
    }
};

}  // namespace

Json trace_report(const Instance& instance, const ActivationTrace& trace) {
    Json rounds = Json::array();
    for (const auto& round : trace.rounds) rounds.push_back(vertex_set_json(round));
    return Json{{"kind", "trace"},
                {"n", instance.n()},
                {"num_rounds", trace.num_rounds},
                {"rounds", rounds},
                {"final_active", vertex_set_json(trace.final_active)},
                {"activates_all", static_cast<int>(trace.final_active.size()) == instance.n()}};
}

Json solve_report(const SolveReport& report) {
    return Json{{"kind", "solve"},
                {"method", to_string(report.method())},
                {"cost", report.cost().to_string()},
                {"incentives", incentives_json(report.incentives())},
                {"certificate", std::visit(CertificateJson{}, report.certificate())}};
}

Json slack_target_set_report(const SlackTargetSet& result) {
    Json slacks = Json::array();
    for (Vertex v : result.ordering.order) slacks.push_back(result.ordering.slack(v).to_string());
    return Json{{"kind", "solve"},
                {"method", "slack-set"},
                {"size", result.set.size()},
                {"target_set", vertex_set_json(result.set)},
                {"tau_max", result.tau_max.to_string()},
                {"c", result.min_positive_slack ? Json(result.min_positive_slack->to_string()) : Json(nullptr)},
                {"claimed_ratio", result.claimed_ratio ? Json(result.claimed_ratio->to_string()) : Json(nullptr)},
                {"certificate", Json{{"type", "ordering"}, {"order", order_json(result.ordering.order)}, {"slacks", slacks}}}};
}

Json vertex_cover_report(const VertexSet& cover) {
    return Json{{"kind", "solve"}, {"method", "vc-bound"}, {"size", cover.size()}, {"target_set", vertex_set_json(cover)}};
}

Json peel_report(const PeelResult& result) {
    if (const auto* ordering = std::get_if<DegeneracyOrdering>(&result)) {
        Json slacks = Json::array();
        for (Vertex v : ordering->order) slacks.push_back(ordering->slack(v).to_string());
        return Json{{"kind", "degeneracy"}, {"degenerate", true}, {"order", order_json(ordering->order)}, {"slacks", slacks}};
    }
    const auto& stuck = std::get<NotDegenerate>(result);
    return Json{{"kind", "degeneracy"}, {"degenerate", false}, {"witness", vertex_set_json(stuck.stuck)}};
}

Json set_oracle_report(const std::string& oracle, const SetOracleResult& result) {
    return Json{{"kind", "oracle"},
                {"oracle", oracle},
                {"optimum", result.optimum},
                {"witness", vertex_set_json(result.witness)},
                {"explored", result.explored}};
}

Json vector_oracle_report(const VectorOracleResult& result) {
    return Json{{"kind", "oracle"},
                {"oracle", "target-vector"},
                {"optimum", result.optimum.to_string()},
                {"witness", incentives_json(result.witness)},
                {"order", order_json(result.order)},
                {"explored", result.explored}};
}

Json receipt_report(const ReductionReceipt& receipt) {
    Json out{{"kind", "reduction"},
             {"reduction", receipt.name},
             {"source_n", receipt.source.n()},
             {"image_n", receipt.image.n()},
             {"image_mode", to_string(receipt.image.mode())},
             {"correspondence", order_json(receipt.correspondence)},
             {"added_vertex", receipt.added_vertex ? Json(*receipt.added_vertex) : Json(nullptr)},
             {"weight_scheme", receipt.weight_scheme}};
    out["image_ordering"] = receipt.image_ordering ? order_json(*receipt.image_ordering) : Json(nullptr);
    return out;
}

std::string emit_report(Json report, std::optional<double> wall_time_ms) {
    if (wall_time_ms) report["wall_time_ms"] = std::round(*wall_time_ms * 1000.0) / 1000.0;
    return report.dump(2) + "\n";
}

}  // namespace wtss
