#include "matroidlab/io.hpp"

#include "matroidlab/error.hpp"

namespace matroidlab {

using nlohmann::json;

namespace {

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error(Errc::Parse, "matrix entries must be integers or strings");
}

std::vector<std::string> label_list(const json& j, const char* key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  for (const auto& l : j.at(key)) out.push_back(scalar_text(l));
  return out;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

Matroid parse_body(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  std::vector<std::string> labels = label_list(j, "labels");
  if (type == "column") {
    FieldTag field = FieldTag::parse(j.value("field", std::string("gf2")));
    const json& rows = j.at("matrix");
    std::size_t cols = rows.empty() ? labels.size() : rows.at(0).size();
    Matrix a(rows.size(), cols, field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw Error(Errc::Parse, "ragged matrix");
      for (std::size_t c = 0; c < cols; ++c) a.set(r, c, field.parse_scalar(scalar_text(rows[r][c])));
    }
    a.set_col_labels(labels.empty() ? default_labels(cols) : labels);
    return Matroid::from_matrix(std::move(a));
  }
  if (type == "graphic") {
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
      if (e.size() != 2) throw Error(Errc::Parse, "edges are [u, v] pairs");
      edges.emplace_back(scalar_text(e[0]), scalar_text(e[1]));
    }
    return Matroid::from_graph(edges, labels);
  }
  if (type == "uniform") {
    std::size_t r = j.at("rank").get<std::size_t>();
    if (labels.empty()) labels = default_labels(j.at("size").get<std::size_t>());
    return Matroid::uniform(r, labels.size(), labels);
  }
  if (type == "circuits") {
    std::vector<ElementSet> circuits;
    Matroid probe = Matroid::uniform(0, labels.size(), labels);  // label lookup only
    for (const auto& c : j.at("circuits")) {
      ElementSet s;
      for (const auto& l : c) s = s.with(probe.index_of(scalar_text(l)));
      circuits.push_back(s);
    }
    return Matroid::from_circuits(labels, circuits);
  }
  throw Error(Errc::Parse, "unknown matroid type '" + type + "'");
}

}  // namespace

MatroidDocument matroid_from_json(const json& j) {
  try {
    Matroid m = parse_body(j);
    std::optional<Ordering> ord;
    if (j.contains("ordering") && !j["ordering"].is_null())
      ord = Ordering::from_labels(m, j["ordering"].get<std::vector<std::string>>());
    return {std::move(m), std::move(ord)};
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("matroid document: ") + e.what());
  }
}

MatroidDocument read_matroid(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("not JSON: ") + e.what());
  }
  return matroid_from_json(j);
}

json matroid_to_json(const Matroid& m, const std::optional<Ordering>& ordering) {
  json j;
  std::visit(
      [&](const auto& b) {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, ColumnBackend>) {
          j["type"] = "column";
          j["field"] = b.matrix.field().name();
          j["labels"] = m.labels();
          json rows = json::array();
          for (std::size_t r = 0; r < b.matrix.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < b.matrix.cols(); ++c) row.push_back(format_scalar(b.matrix.at(r, c)));
            rows.push_back(row);
          }
          j["matrix"] = rows;
        } else if constexpr (std::is_same_v<B, GraphicBackend>) {
          j["type"] = "graphic";
          j["labels"] = m.labels();
          json edges = json::array();
          for (auto [u, v] : b.edges) edges.push_back({b.vertices[u], b.vertices[v]});
          j["edges"] = edges;
        } else if constexpr (std::is_same_v<B, UniformBackend>) {
          j["type"] = "uniform";
          j["labels"] = m.labels();
          j["rank"] = b.r;
        } else {
          j["type"] = "circuits";
          j["labels"] = m.labels();
          json cs = json::array();
          for (ElementSet c : b.circuits) {
            json one = json::array();
            c.for_each([&](std::size_t e) { one.push_back(m.label(e)); });
            cs.push_back(one);
          }
          j["circuits"] = cs;
        }
      },
      m.backend());
  if (ordering) j["ordering"] = ordering->labels(m);
  return j;
}

json to_json(const FhVectors& fh) { return {{"f", fh.f}, {"h", fh.h}, {"facets", fh.facets}}; }

json to_json(const NbcReport& rep, bool timing) {
  json j;
  j["ordering"] = rep.ordering;
  j["field"] = rep.field;
  j["h"] = rep.h;
  j["h_sum"] = rep.h_sum;
  j["lower_size"] = rep.infinite_lower ? json(nullptr) : json(rep.lower_size);
  j["quotient_dim"] = rep.quotient_dim;
  j["cardinality_ok"] = rep.cardinality_ok;
  j["independent"] = rep.independent;
  j["verdict"] = rep.basis ? "Basis" : std::string("NotBasis:") + verdict_name(rep.verdict);
  j["witness"] = rep.witness ? json(rep.witness->to_string()) : json(nullptr);
  j["components"] = rep.components;
  json lower = json::array();
  for (const auto& m : rep.lower) lower.push_back(m.to_string());
  j["lower"] = lower;
  if (timing) j["millis"] = rep.millis;
  return j;
}

json to_json(const SearchReport& rep, bool timing) {
  json j;
  j["policy"] = rep.policy;
  j["field"] = rep.field;
  j["shard"] = rep.shard;
  j["total_orderings"] = rep.total_orderings;
  j["planned"] = rep.planned;
  j["examined"] = rep.examined;
  j["basis"] = rep.basis;
  j["not_basis"] = rep.not_basis;
  j["complete"] = rep.complete;
  j["first_witness_index"] = rep.first_witness_index ? json(*rep.first_witness_index) : json(nullptr);
  j["first_witness"] = rep.first_witness ? json(*rep.first_witness) : json(nullptr);
  if (timing) j["seconds"] = rep.seconds;
  return j;
}

json to_json(const Matroid& m, const ThetaSystem& theta, const LsopValidation& check) {
  json j;
  j["ordering"] = theta.so.ordering.labels(m);
  j["field"] = theta.field.name();
  json rows = json::array();
  for (std::size_t r = 0; r < theta.coefficients.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < theta.coefficients.cols(); ++c) row.push_back(format_scalar(theta.coefficients.at(r, c)));
    rows.push_back(row);
  }
  j["coefficients"] = rows;
  json forms = json::object();
  const std::size_t v = m.size() - m.rank();
  for (std::size_t r = 0; r < theta.forms.size(); ++r)
    forms[m.label(theta.so.ordering.element_at(v + r))] = theta.forms[r].to_string();
  j["forms"] = forms;
  j["facets_checked"] = check.facets_checked;
  j["facets_full_rank"] = check.facets_full_rank;
  j["represents_matroid"] = check.represents_matroid;
  return j;
}

}  // namespace matroidlab
