#include "cdv/report.hpp"

#include <algorithm>
#include <sstream>

namespace cdv {

namespace {

Json opt_verdict(const std::optional<Verdict>& v) { return v ? Json(to_string(*v)) : Json(nullptr); }

Json monomials(const std::vector<Exponent>& es) {
  Json out = Json::array();
  for (const auto& e : es) out.push_back(monomial_string(e));
  return out;
}

Json points(const std::vector<LatticePoint>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back({p[0], p[1]});
  return out;
}

Json strings(const std::vector<std::string>& v) { return Json(v); }

Json weights(const std::vector<Weight>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(weight_json(w));
  return out;
}

Json certificate_json(const NormalFormCertificate& c) {
  Json j;
  j["type"] = c.type.to_string();
  j["reduced"] = c.reduced.to_string();
  j["truncation_degree"] = c.truncation_degree;
  j["changes"] = c.applied_changes.size();
  Json subs = Json::array();
  for (const auto& s : c.applied_changes) subs.push_back(s.to_string());
  j["substitutions"] = subs;
  Json checks = Json::array();
  for (const auto& k : c.satisfied_constraints) checks.push_back({{"statement", k.statement}, {"holds", k.holds}});
  j["constraints"] = checks;
  j["notes"] = strings(c.notes);
  return j;
}

Json rationality_json(const RationalityResult& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["rule"] = r.rule;
  j["face_dimension"] = r.face_dimension;
  if (r.cone) {
    Json base = Json::array();
    for (int v : r.cone->base_variables) base.push_back(std::string(1, kVarNames[v]));
    j["cone"] = {{"missing_variable", std::string(1, kVarNames[r.cone->missing_variable])},
                 {"base_variables", base},
                 {"base_weights", r.cone->base_weights}};
  } else {
    j["cone"] = nullptr;
  }
  j["chart"] = r.chart ? Json(r.chart->to_string()) : Json(nullptr);
  if (r.genus) {
    j["genus"] = r.genus->genus;
    j["polygon_vertices"] = points(r.genus->polygon.vertices);
    j["interior_points"] = points(r.genus->polygon.interior_points);
  } else {
    j["genus"] = nullptr;
  }
  j["hyperelliptic"] = r.hyperelliptic ? Json(*r.hyperelliptic) : Json(nullptr);
  j["hyperelliptic_by_convention"] = r.hyperelliptic_by_convention;
  j["chart_check"] = opt_verdict(r.chart_check);
  j["notes"] = strings(r.notes);
  return j;
}

}  // namespace

Json weight_json(const Weight& w) { return Json(w.values()); }

Json classify_json(const Polynomial& f, const SingularityType& type) {
  return {{"input", f.to_string()}, {"type", type.to_string()}};
}

Json diagram_json(const NewtonDiagram& d, const std::vector<NondegeneracyResult>& checks) {
  Json j;
  j["input"] = d.source.to_string();
  j["vertices"] = monomials(d.vertices);
  Json faces = Json::array();
  Verdict overall = Verdict::nondegenerate_certified;
  for (std::size_t i = 0; i < d.faces.size(); ++i) {
    const auto& f = d.faces[i];
    Json face{{"dimension", f.dimension}, {"points", monomials(f.lattice_points)}, {"witness", weight_json(f.witness)}};
    if (i < checks.size()) {
      face["verdict"] = to_string(checks[i].verdict);
      face["method"] = checks[i].method;
      if (checks[i].verdict == Verdict::degenerate) {
        overall = Verdict::degenerate;
      } else if (checks[i].verdict == Verdict::nondegenerate_probable && overall != Verdict::degenerate) {
        overall = Verdict::nondegenerate_probable;
      }
    }
    faces.push_back(face);
  }
  j["faces"] = faces;
  j["nondegeneracy"] = checks.empty() ? Json(nullptr) : Json(to_string(overall));
  return j;
}

Json weights_json(const NewtonDiagram& d, int max_coord, const std::vector<Weight>& ws) {
  Json rows = Json::array();
  for (const auto& w : ws) {
    rows.push_back({{"weight", weight_json(w)}, {"w_f", support_value(d, w)}, {"discrepancy", discrepancy(d, w, 1)}});
  }
  return {{"input", d.source.to_string()},
          {"max_coord", max_coord},
          {"boundary_touched", touches_boundary(ws, max_coord)},
          {"weights", rows}};
}

Json analysis_json(const Analysis& a) {
  Json j;
  j["input"] = a.input.to_string();
  j["type"] = a.type.to_string();
  j["certificate"] = a.certificate ? certificate_json(*a.certificate) : Json(nullptr);
  j["analyzed"] = a.analyzed.to_string();
  std::array<int, 4> by_dim{};
  for (const auto& f : a.diagram.faces) ++by_dim[std::clamp(f.dimension, 0, 3)];
  j["diagram"] = {{"vertices", monomials(a.diagram.vertices)},
                  {"faces_by_dimension", by_dim},
                  {"nondegeneracy", opt_verdict(a.diagram_check)}};
  j["max_coord"] = a.max_coord;
  j["boundary_touched"] = a.boundary_touched;
  j["weights"] = weights(a.weights);
  Json reports = Json::array();
  for (const auto& r : a.reports) {
    Json e;
    e["weight"] = weight_json(r.weight);
    e["face_polynomial"] = r.face_polynomial.to_string();
    e["component"] = r.component.to_string();
    e["multiplicity"] = r.multiplicity;
    e["multiplicity_source"] = "factor multiplicity in the face polynomial";
    e["discrepancy"] = r.discrepancy;
    e["coordinate_hyperplane"] = r.coordinate_hyperplane;
    e["in_catalog"] = r.in_catalog;
    e["rationality"] = rationality_json(r.rationality);
    e["warnings"] = strings(r.warnings);
    reports.push_back(e);
  }
  j["reports"] = reports;
  Json catalog = Json::array();
  for (const auto& c : a.summary.catalog) {
    catalog.push_back({{"weight", weight_json(c.weight)}, {"status", c.realized ? "realized" : "not realized for this input"}});
  }
  j["summary"] = {{"discrepancy_one_components", a.summary.discrepancy_one_components},
                  {"non_rational", a.summary.non_rational},
                  {"undecided", a.summary.undecided},
                  {"violation", a.summary.violation},
                  {"catalog", catalog}};
  j["warnings"] = strings(a.warnings);
  return j;
}

Json lemmas_json(const SingularityType& type, int max_m) {
  const auto catalog = candidate_weights(type);
  const auto cmp = compare_with_catalog(type, max_m);
  Json qs = Json::array();
  for (const auto& q : lemma_quadruples(type, max_m)) {
    const Weight& w = q.derived_weight;
    std::string status = "not in catalog";
    if (is_plt_weight(type, w)) {
      status = "plt";
    } else if (std::find(catalog.begin(), catalog.end(), w) != catalog.end()) {
      status = "catalog";
    }
    qs.push_back({{"quadruple", {q.a.get_str(), q.b.get_str(), q.c.get_str(), q.d.get_str()}},
                  {"m", q.m},
                  {"weight", weight_json(w)},
                  {"face_dimension", q.face_dimension},
                  {"status", status}});
  }
  return {{"type", type.to_string()},  {"max_m", max_m},
          {"quadruples", qs},          {"catalog", weights(catalog)},
          {"catalog_only", weights(cmp.catalog_only)}, {"flags", strings(cmp.flags)}};
}

Json corpus_json(const std::vector<CorpusOutcome>& outcomes) {
  Json rows = Json::array();
  int violations = 0, max_nr = 0, mismatched = 0;
  for (const auto& o : outcomes) {
    violations += o.violation ? 1 : 0;
    max_nr = std::max(max_nr, o.non_rational);
    mismatched += o.classified != o.instance.intended ? 1 : 0;
    rows.push_back({{"label", o.instance.label},
                    {"polynomial", o.instance.polynomial.to_string()},
                    {"classified", o.classified.to_string()},
                    {"non_rational", o.non_rational},
                    {"undecided", o.undecided},
                    {"violation", o.violation},
                    {"non_rational_weights", weights(o.non_rational_weights)}});
  }
  return {{"instances", outcomes.size()},
          {"violations", violations},
          {"max_non_rational", max_nr},
          {"type_mismatches", mismatched},
          {"uniqueness_holds", violations == 0 && max_nr <= 1},
          {"rows", rows}};
}

Json make_document(const std::string& command, const Json& config, const Json& body) {
  Json doc{{"schema", kSchemaVersion}, {"command", command}, {"config", config}};
  for (const auto& [k, v] : body.items()) doc[k] = v;
  return doc;
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar(const Json& j) {
  if (j.is_null()) return "none";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool inline_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) {
           return is_scalar(e) || (e.is_array() && std::all_of(e.begin(), e.end(), is_scalar));
         });
}

std::string inline_text(const Json& j) {
  if (is_scalar(j)) return scalar(j);
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + inline_text(j[i]);
  return s + "]";
}

void emit(std::ostringstream& out, const Json& j, int indent);

void emit_value(std::ostringstream& out, const std::string& head, const Json& v, int indent) {
  const std::string pad(indent, ' ');
  if (is_scalar(v) || (inline_array(v) && !v.empty() && v.size() <= 12) || (v.is_array() && v.empty())) {
    out << pad << head << inline_text(v) << "\n";
  } else {
    out << pad << head.substr(0, head.find_last_not_of(' ') + 1) << "\n";
    emit(out, v, indent + 2);
  }
}

void emit(std::ostringstream& out, const Json& j, int indent) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) emit_value(out, k + ": ", v, indent);
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_object()) {
        out << std::string(indent, ' ') << "-\n";
        emit(out, e, indent + 2);
      } else {
        emit_value(out, "- ", e, indent);
      }
    }
  } else {
    out << std::string(indent, ' ') << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream out;
  emit(out, doc, 0);
  return out.str();
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace cdv
