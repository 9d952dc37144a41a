#include "cauchykit/document.hpp"

#include "json.hpp"

namespace cauchykit {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { raise(ErrorCode::Parse, what); }

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) parse_error(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_error(where + ": missing key '" + key + "'");
  return *it;
}

std::size_t positive(const json& v, const std::string& where) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
    parse_error(where + ": expected a positive integer, got " + v.dump());
  return v.get<std::size_t>();
}

std::vector<Scalar> scalars(const json& arr, const Field& f, const std::string& where) {
  if (!arr.is_array()) parse_error(where + ": expected an array of scalar strings");
  std::vector<Scalar> out;
  out.reserve(arr.size());
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto& v = arr[k];
    const std::string at = where + "[" + std::to_string(k) + "]";
    std::string text;
    if (v.is_string())
      text = v.get<std::string>();
    else if (v.is_number_integer())
      text = v.dump();
    else
      parse_error(at + ": expected a scalar string, got " + v.dump());
    try {
      out.push_back(f.parse_scalar(text));
    } catch (const Error& e) {
      parse_error(at + ": " + e.what());
    }
  }
  return out;
}

DenseMatrix matrix_from(const json& obj, const Field& f, const std::string& where) {
  std::size_t rows = positive(member(obj, "n_rows", where), where + ".n_rows");
  std::size_t cols = positive(member(obj, "n_cols", where), where + ".n_cols");
  auto entries = scalars(member(obj, "entries", where), f, where + ".entries");
  if (entries.size() != rows * cols)
    parse_error(where + ".entries: " + std::to_string(entries.size()) + " entries for a " + std::to_string(rows) +
                "x" + std::to_string(cols) + " matrix");
  return DenseMatrix(f, rows, cols, std::move(entries));
}

json strings(const std::vector<Scalar>& v) {
  json arr = json::array();
  for (const auto& s : v) arr.push_back(s.to_string());
  return arr;
}

json matrix_body(const DenseMatrix& m) {
  return json{{"n_rows", m.n_rows()}, {"n_cols", m.n_cols()}, {"entries", strings(m.entries())}};
}

json matrix_doc(const DenseMatrix& m) {
  json j{{"field", m.field().to_string()}, {"kind", "matrix"}};
  j.update(matrix_body(m));
  return j;
}

json data_doc(const CauchyData& d) {
  return json{{"field", d.field().to_string()}, {"kind", "cauchy_data"}, {"x", strings(d.x())},
              {"x_tilde", strings(d.x_tilde())}};
}

json pair_doc(const CauchyPair& p) {
  return json{{"field", p.field().to_string()},
              {"kind", "pair"},
              {"X", matrix_body(p.X)},
              {"X_tilde", matrix_body(p.X_tilde)},
              {"note", p.note}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

DocumentValue parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) parse_error("document: expected a JSON object");
  const json& fj = member(root, "field", "document");
  if (!fj.is_string()) parse_error("document.field: expected a string, got " + fj.dump());
  Field f;
  try {
    f = Field::parse(fj.get<std::string>());
  } catch (const Error& e) {
    parse_error(std::string("document.field: ") + e.what());
  }
  const json& kj = member(root, "kind", "document");
  const std::string kind = kj.is_string() ? kj.get<std::string>() : kj.dump();
  try {
    if (kind == "matrix") return matrix_from(root, f, "matrix");
    if (kind == "cauchy_data") {
      auto x = scalars(member(root, "x", "cauchy_data"), f, "x");
      auto xt = scalars(member(root, "x_tilde", "cauchy_data"), f, "x_tilde");
      return CauchyData(std::move(x), std::move(xt));
    }
    if (kind == "pair") {
      auto x = matrix_from(member(root, "X", "pair"), f, "X");
      auto xt = matrix_from(member(root, "X_tilde", "pair"), f, "X_tilde");
      std::string note;
      if (auto it = root.find("note"); it != root.end() && it->is_string()) note = it->get<std::string>();
      return CauchyPair(std::move(x), std::move(xt), std::move(note));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    // Structural violations (duplicate data scalars, mismatched shapes) are
    // input errors too.
    parse_error(kind + ": " + e.what());
  }
  parse_error("document.kind: unknown kind '" + kind + "'");
}

const char* document_kind(const DocumentValue& doc) {
  switch (doc.index()) {
    case 0: return "matrix";
    case 1: return "cauchy_data";
    default: return "pair";
  }
}

std::string to_json(const DenseMatrix& m) { return dump(matrix_doc(m)); }
std::string to_json(const CauchyData& d) { return dump(data_doc(d)); }
std::string to_json(const CauchyPair& p) { return dump(pair_doc(p)); }
std::string to_json(const DocumentValue& doc) {
  return std::visit([](const auto& v) { return to_json(v); }, doc);
}

std::string report_json(const VerificationReport& r) {
  json j{{"kind", "verification_report"},
         {"verdict", r.verdict},
         {"diagonalizable_X", r.diagonalizable_X},
         {"diagonalizable_X_tilde", r.diagonalizable_Xt},
         {"rank_delta", r.rank_delta},
         {"spectra_in_field", r.spectra_in_field},
         {"spectra_disjoint", r.spectra_disjoint},
         {"multiplicity_free", r.multiplicity_free},
         {"irreducible", r.irreducible},
         {"irreducible_cross_check", r.irreducible_cross_check},
         {"spectrum_X", strings(r.spectrum_X)},
         {"spectrum_X_tilde", strings(r.spectrum_Xt)}};
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  return dump(j);
}

std::string recognize_json(const std::variant<CauchyData, NotCauchy>& r) {
  if (const auto* d = std::get_if<CauchyData>(&r)) {
    json j{{"kind", "recognition"}, {"cauchy", true}, {"data", data_doc(*d)}};
    return dump(j);
  }
  const auto& nc = std::get<NotCauchy>(r);
  json j{{"kind", "recognition"},
         {"cauchy", false},
         {"witness", {{"category", kind_name(nc.kind)}, {"row", nc.row}, {"col", nc.col}, {"description", nc.description}}}};
  return dump(j);
}

std::string identities_json(const CauchyData& d, const std::vector<IdentityCheck>& checks) {
  json arr = json::array();
  bool all = true;
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    all = all && c.passed;
  }
  json j{{"kind", "identities"}, {"field", d.field().to_string()}, {"n", d.n()}, {"all_passed", all}, {"checks", arr}};
  return dump(j);
}

std::string equivalence_json(const std::optional<Equivalence>& e) {
  json j{{"kind", "equivalence"}, {"equivalent", e.has_value()}};
  if (e) {
    j["zeta"] = e->zeta.to_string();
    j["convention"] = "second pair + zeta*I is isomorphic to first pair";
    j["phi"] = matrix_doc(e->phi);
  }
  return dump(j);
}

std::string classes_json(const std::vector<EquivalenceClass>& classes) {
  json arr = json::array();
  for (const auto& c : classes)
    arr.push_back({{"label", data_doc(c.label)}, {"canonical", c.canonical}, {"members", c.members}});
  json j{{"kind", "classification"}, {"n_classes", classes.size()}, {"classes", arr}};
  return dump(j);
}

std::string alphas_json(const CauchyData& d, const std::vector<Scalar>& alpha, const std::vector<Scalar>& alpha_tilde) {
  json j{{"kind", "alphas"}, {"field", d.field().to_string()}, {"alpha", strings(alpha)},
         {"alpha_tilde", strings(alpha_tilde)}};
  return dump(j);
}

std::string perm_equivalence_json(const std::optional<Scalar>& zeta) {
  json j{{"kind", "perm_equivalence"}, {"equivalent", zeta.has_value()}};
  if (zeta) j["zeta"] = zeta->to_string();
  return dump(j);
}

}  // namespace cauchykit
