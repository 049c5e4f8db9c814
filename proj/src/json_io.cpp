#include "turan/json_io.hpp"

namespace turan {

Json to_json(const PentagonalSpec& spec) {
  Json j;
  j["r"] = spec.r;
  j["x"] = spec.x;
  j["y"] = spec.y;
  j["z"] = spec.z;
  return j;
}

Json to_json(const Partition& p) {
  Json j;
  j["classes"] = p.classes;
  j["internal"] = p.internal;
  return j;
}

Json to_json(const DrResult& res) {
  Json j;
  j["value"] = res.value;
  j["exact"] = res.exact;
  j["partition"] = res.partition.classes;
  return j;
}

Json to_json(const DominationResult& dom) {
  Json j;
  j["spec"] = to_json(dom.spec);
  j["e_g"] = dom.e_g;
  j["e_spec"] = dom.e_spec;
  j["dr_g"] = dom.dr_g;
  j["dr_spec"] = dom.dr_spec;
  j["dominates"] = dom.dominates;
  return j;
}

Json to_json(const VerificationReport& rep) {
  Json j;
  j["statement"] = rep.statement;
  j["grid"] = rep.grid;
  j["instances"] = rep.instances;
  j["pass"] = rep.pass();
  Json cexs = Json::array();
  for (const auto& c : rep.counterexamples) {
    Json cj;
    cj["graph6"] = c.graph6;
    cj["detail"] = c.detail;
    cexs.push_back(std::move(cj));
  }
  j["counterexamples"] = std::move(cexs);
  j["stats"] = rep.stats;  // std::map, so key order is already fixed
  return j;
}

Json to_json(const FrontierRecord& rec) {
  Json j;
  j["f"] = rec.f;
  j["witness"] = rec.witness_g6;
  return j;
}

Json to_json(const PtgOptimum& opt) {
  Json j;
  j["spec"] = to_json(opt.spec);
  j["dr"] = opt.dr;
  j["edges"] = opt.edges;
  j["asymptotic"] = opt.asymptotic;
  return j;
}

const char* to_string(DenseStatus s) {
  return s == DenseStatus::ok ? "ok" : "inapplicable";
}

const char* to_string(GeneralStatus s) {
  switch (s) {
    case GeneralStatus::ok: return "ok";
    case GeneralStatus::residual_not_r_partite: return "residual_not_r_partite";
    case GeneralStatus::p_infeasible: return "p_infeasible";
    case GeneralStatus::no_k_matching: return "no_k_matching";
    case GeneralStatus::negative_part: return "negative_part";
  }
  return "unknown";
}

Json to_json(const DenseReduceResult& res) {
  Json j;
  j["status"] = to_string(res.status);
  j["witness"] = res.witness ? Json(*res.witness) : Json(nullptr);
  j["part_sizes"] = res.part_sizes;
  j["a"] = res.a;
  j["spec"] = to_json(res.spec);
  j["dom"] = res.dom ? to_json(*res.dom) : Json(nullptr);
  return j;
}

Json to_json(const GeneralReduceResult& res) {
  const ReductionState& st = res.state;
  Json j;
  j["status"] = to_string(res.status);
  j["peeled"] = st.peeled;
  j["extra_peeled"] = st.extra_peeled;
  j["theta_hypothesis_held"] = st.theta_hypothesis_held;
  j["u_classes"] = st.u_classes;
  j["v_classes"] = st.v_classes;
  j["delta"] = st.delta;
  j["u"] = st.u_vertex ? Json(*st.u_vertex) : Json(nullptr);
  j["u_in_peeled"] = st.u_in_s;
  j["p_sets"] = st.p_sets;
  Json m = Json::array();
  for (auto [a, b] : st.matching) m.push_back(Json::array({a, b}));
  j["matching"] = std::move(m);
  j["k"] = st.k;
  j["a"] = st.a;
  j["b"] = st.b;
  j["c"] = st.c;
  j["kappa"] = st.kappa;
  j["class_order"] = st.class_order;
  j["spec"] = to_json(st.spec);
  j["dom"] = res.dom ? to_json(*res.dom) : Json(nullptr);
  return j;
}

Json to_json(const IngestStats& stats) {
  Json j;
  j["yielded"] = stats.yielded;
  j["bad_lines"] = stats.bad_lines;
  j["filtered"] = stats.filtered;
  return j;
}

}  // namespace turan
