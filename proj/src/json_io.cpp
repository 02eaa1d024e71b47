#include "mpg/json_io.hpp"

namespace mpg {

using nlohmann::json;

namespace {

json vertex_json(VertexRef v) {
  return {{"side", v.side == Side::A ? "A" : "A'"}, {"index", v.index}};
}

std::string_view twin_kind_name(TwinKind k) { return k == TwinKind::True ? "true" : "false"; }

struct StepToJson {
  json operator()(const C4ReduceStep& s) const {
    return {{"step", "C4Reduce"}, {"m", s.m}, {"a", s.a}, {"z", s.z}};
  }
  json operator()(const TwinContractStep& s) const {
    return {{"step", "TwinContract"},
            {"m", s.m},
            {"a", s.a},
            {"x", s.x},
            {"y", s.y},
            {"twins", twin_kind_name(s.kind)},
            {"q", {{"from", s.q.from}, {"to", s.q.to}}}};
  }
  json operator()(const P4FoundStep& s) const {
    return {{"step", "P4Found"}, {"m", s.m}, {"a", s.a}, {"path", s.path.vertices}};
  }
};

}  // namespace

json to_json(const FourCycle& c) { return json::array({c.i, c.j}); }

json to_json(const PetersenWitness& w) { return w.edges; }

json to_json(const ReductionTrace& t) {
  json out = json::array();
  for (const auto& s : t.steps) out.push_back(std::visit(StepToJson{}, s));
  return out;
}

json to_json(const WitnessResult& r) {
  return {{"edges", to_json(r.witness)}, {"trace", to_json(r.trace)}};
}

json to_json(const CensusReport& r) {
  json c4 = json::array();
  for (const auto& c : r.c4) c4.push_back(to_json(c));
  json p10 = json::array();
  for (const auto& w : r.p10) p10.push_back(to_json(w));
  return {{"instance", r.instance_id},
          {"m", r.m},
          {"c4", c4},
          {"c4_count", r.c4.size()},
          {"p10", p10},
          {"p10_count", r.p10.size()},
          {"per_edge", r.per_edge},
          {"zhang_ok", r.zhang_ok},
          {"lower_bound_applicable", r.lower_bound_applicable},
          {"lower_bound_ok", r.lower_bound_ok}};
}

json to_json(const ScanReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"instance_index", v.instance_index},
                          {"instance", v.instance_id},
                          {"edge", v.edge},
                          {"what", v.what}});
  }
  std::int64_t c4_total = 0;
  std::int64_t p10_total = 0;
  for (const auto& row : r.rows) {
    c4_total += row.c4_count;
    p10_total += row.p10_count;
  }
  return {{"m", r.m},
          {"instances", r.instances},
          {"witness_runs", r.witness_runs},
          {"zhang_ok", r.zhang_ok},
          {"c4_total", c4_total},
          {"p10_total", p10_total},
          {"violation_count", r.violations.size()},
          {"violations", violations}};
}

json to_json(const ZhangVerdict& v) {
  return {{"lemma", "zhang"}, {"ok", v.ok}, {"c4_count", v.c4_count}, {"p10_count", v.p10_count}};
}

json to_json(const LowerBoundVerdict& v) {
  return {{"lemma", "lower"},     {"ok", v.ok},         {"applicable", v.applicable},
          {"n", v.n},             {"bound", v.bound},   {"c4_count", v.c4_count},
          {"p10_count", v.p10_count}};
}

json to_json(const ReplaceVerdict& v) {
  json out = {{"lemma", "replace"}, {"ok", v.ok}};
  switch (v.branch) {
    case ReplaceBranch::SharedWitness: out["branch"] = "shared_witness"; break;
    case ReplaceBranch::SwapEquivalence: out["branch"] = "swap_equivalence"; break;
    case ReplaceBranch::None: out["branch"] = nullptr; break;
  }
  if (v.shared) out["witness"] = to_json(*v.shared);
  if (v.counterexample) out["certificate"] = {{"F", *v.counterexample}};
  return out;
}

json to_json(const RedrawingVerdict& v) {
  json out = {{"lemma", "redrawing"}, {"ok", v.ok}};
  if (!v.ok) out["certificate"] = {{"clause", v.clause}, {"x", v.x}, {"y", v.y}};
  return out;
}

json to_json(const GkInstance& g) {
  json classes = json::array();
  for (const auto& c : g.classes) {
    json entry = {{"class", class_name(c.cls)}};
    if (c.cls == EdgeClass::Special) entry["group"] = c.group;
    classes.push_back(entry);
  }
  return {{"k", g.k},
          {"m", g.graph.m()},
          {"n", g.graph.order()},
          {"sigma", g.graph.sigma()},
          {"classification", classes}};
}

json to_json(const GkVerdict& v) {
  return {{"ok", v.ok},
          {"k", v.k},
          {"c4_count", v.c4_count},
          {"p10_count", v.p10_count},
          {"expected_p10", v.expected_p10},
          {"discrepancies", v.discrepancies}};
}

json to_json(const GraphEdge& e) { return json::array({vertex_json(e.u), vertex_json(e.v)}); }

json stamped(json report) {
  report["schema"] = kSchemaVersion;
  report["version"] = kToolVersion;
  return report;
}

void write_scan_csv(std::ostream& os, const ScanReport& r) {
  os << "m,instance_index,c4_count,p10_count,violations\n";
  for (const auto& row : r.rows) {
    os << r.m << ',' << row.instance_index << ',' << row.c4_count << ',' << row.p10_count << ','
       << row.violations << '\n';
  }
}

}  // namespace mpg
