#include "mubkit/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mubkit/error.hpp"

namespace mubkit::io {

namespace {

using nlohmann::json;

json amp_json(cplx z) { return json::array({z.real(), z.imag()}); }

json vec_json(const CVec& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(amp_json(z));
  return out;
}

CVec vec_from(const json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) throw Error(Errc::DimMismatch, "vector length differs from dim");
  CVec v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto& z = j[i];
    if (!z.is_array() || z.size() != 2) throw Error(Errc::Parse, "amplitude must be [re, im]");
    v[i] = cplx(z[0].get<double>(), z[1].get<double>());
  }
  return v;
}

json mat_json(const CMat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(amp_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

std::string finish(const json& j) { return j.dump() + "\n"; }

json mubset_json(const MubSet& s) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["dim"] = s.dim;
  j["method"] = std::string(method_name(s.method));
  if (s.field) {
    j["field"] = {{"p", s.field->characteristic()}, {"m", s.field->degree()}, {"modulus", s.field->modulus()}};
  }
  json labels = json::array();
  json bases = json::array();
  for (const auto& b : s.bases) {
    labels.push_back(b.label);
    json vecs = json::array();
    for (const auto& v : b.vectors) vecs.push_back(vec_json(v));
    bases.push_back(std::move(vecs));
  }
  j["labels"] = std::move(labels);
  j["bases"] = std::move(bases);
  return j;
}

}  // namespace

std::string mubset_to_json(const MubSet& s) { return finish(mubset_json(s)); }

MubSet mubset_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded([&] {
    if (j.value("schema_version", 0) != kSchemaVersion) throw Error(Errc::Parse, "unsupported schema_version");
    MubSet s;
    s.dim = j.at("dim").get<std::size_t>();
    s.method = method_from_name(j.at("method").get<std::string>());
    if (j.contains("field")) {
      const auto& f = j["field"];
      s.field = Field::create(f.at("p").get<int>(), f.at("m").get<int>(), f.at("modulus").get<std::vector<int>>());
    }
    const auto& bases = j.at("bases");
    const json labels = j.value("labels", json::array());
    for (std::size_t i = 0; i < bases.size(); ++i) {
      Basis b;
      if (i < labels.size()) b.label = labels[i].get<std::string>();
      for (const auto& v : bases[i]) b.vectors.push_back(vec_from(v, s.dim));
      s.bases.push_back(std::move(b));
    }
    return s;
  });
}

std::string report_to_json(const MubReport& r) {
  json j;
  j["dim"] = r.dim;
  j["bases"] = r.basis_count;
  j["max_deviation"] = r.max_deviation;
  j["tolerance"] = r.tolerance;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["exceeds_bound"] = r.exceeds_bound;
  json ortho = json::array();
  for (std::size_t k = 0; k < r.ortho.size(); ++k) ortho.push_back({{"basis", k}, {"dev", r.ortho[k].deviation}});
  j["ortho"] = std::move(ortho);
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"i", p.i}, {"j", p.j}, {"dev", p.deviation}, {"a", p.worst_a}, {"b", p.worst_b}});
  }
  j["pairs"] = std::move(pairs);
  return finish(j);
}

std::string sic_to_json(const std::vector<CVec>& vectors) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["dim"] = vectors.empty() ? 0 : vectors.front().dim();
  json vecs = json::array();
  for (const auto& v : vectors) vecs.push_back(vec_json(v));
  j["vectors"] = std::move(vecs);
  return finish(j);
}

std::vector<CVec> sic_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded([&] {
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<CVec> out;
    for (const auto& v : j.at("vectors")) out.push_back(vec_from(v, dim));
    return out;
  });
}

std::string sic_report_to_json(const SicReport& r) {
  json j;
  j["dim"] = r.dim;
  j["count"] = r.count;
  j["norm_deviation"] = r.norm_deviation;
  j["overlap_deviation"] = r.overlap_deviation;
  j["worst_pair"] = {r.worst_pair.first, r.worst_pair.second};
  j["frame_deviation"] = r.frame_deviation;
  j["max_deviation"] = r.max_deviation;
  j["tolerance"] = r.tolerance;
  j["verdict"] = r.pass ? "pass" : "fail";
  return finish(j);
}

std::string plane_to_json(const IncidenceStructure& s) {
  json j;
  j["kind"] = std::string(plane_kind_name(s.kind));
  j["order"] = s.order;
  j["points"] = s.num_points;
  j["lines"] = s.lines;
  if (!s.parallel_classes.empty()) j["parallel_classes"] = s.parallel_classes;
  if (!s.point_labels.empty()) j["point_labels"] = s.point_labels;
  return finish(j);
}

IncidenceStructure plane_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded([&] {
    IncidenceStructure s;
    s.kind = plane_kind_from_name(j.value("kind", std::string("raw")));
    s.order = j.at("order").get<int>();
    s.num_points = j.at("points").get<std::size_t>();
    s.lines = j.at("lines").get<std::vector<std::vector<int>>>();
    if (j.contains("parallel_classes")) s.parallel_classes = j["parallel_classes"].get<std::vector<std::vector<int>>>();
    if (j.contains("point_labels")) s.point_labels = j["point_labels"].get<std::vector<std::string>>();
    return s;
  });
}

std::string axiom_report_to_json(const AxiomReport& r) {
  json j;
  j["kind"] = std::string(plane_kind_name(r.kind));
  j["verdict"] = r.pass() ? "pass" : "fail";
  j["parallel_classes"] = r.parallel_class_count;
  json v = json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"axiom", x.axiom}, {"first", x.first}, {"second", x.second}, {"detail", x.detail}});
  }
  j["violations"] = std::move(v);
  return finish(j);
}

namespace {

json operator_json(const PhaseOperator& op) {
  return {{"dim", op.dim}, {"spectrum", op.spectrum}, {"source", op.source_label}, {"matrix", mat_json(op.matrix)}};
}

}  // namespace

std::string operator_to_json(const PhaseOperator& op) { return finish(operator_json(op)); }

std::string operators_to_json(const std::vector<PhaseOperator>& ops) {
  json arr = json::array();
  for (const auto& op : ops) arr.push_back(operator_json(op));
  json j;
  j["schema_version"] = kSchemaVersion;
  j["operators"] = std::move(arr);
  return finish(j);
}

std::string field_to_json(const Field& f) {
  std::vector<int> traces;
  for (int n = 0; n < f.order(); ++n) traces.push_back(f.trace_at(n));
  json j;
  j["p"] = f.characteristic();
  j["m"] = f.degree();
  j["modulus"] = f.modulus();
  j["trace"] = traces;
  return finish(j);
}

std::string search_report_to_json(const SearchReport& r, const SearchConfig& cfg) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["dim"] = cfg.dim;
  j["bases"] = cfg.target_bases;
  j["restarts"] = cfg.restarts;
  j["max_iters"] = cfg.max_iters;
  j["seed"] = r.seed;
  j["tolerance"] = cfg.tolerance;
  j["best_residual"] = r.best_residual;
  j["best_restart"] = r.best_restart;
  j["success"] = r.success;
  j["residual_history"] = r.residual_history;
  j["iterations"] = r.iterations;
  j["note"] = "best residual found by local search; a nonzero value is not a proof of nonexistence";
  j["best_set"] = mubset_json(r.best_set);
  return finish(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Parse, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace mubkit::io
