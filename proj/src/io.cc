#include "peirce/io.h"

#include <algorithm>

namespace peirce {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw FormatError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(where + ": missing field '" + key + "'");
  return *it;
}

std::string string_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_string()) throw FormatError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

unsigned unsigned_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_unsigned()) {
    throw FormatError(where + "." + key + ": expected a nonnegative integer");
  }
  return v.get<unsigned>();
}

Vector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError(where + ": expected an array");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return v;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Weight weight_from_json(const Json& j, const std::string& where) {
  const std::string kind = string_field(j, "kind", where);
  if (kind == "constant") return Weight::constant();
  if (kind == "baric") return Weight::baric_power(unsigned_field(j, "k", where));
  if (kind == "bilinear") {
    return Weight::bilinear_with(parse_monomial(string_field(j, "monomial", where)));
  }
  if (kind == "product") {
    Weight w;
    if (j.contains("k")) w.baric = unsigned_field(j, "k", where);
    const Json& list = field(j, "bilinear", where);
    if (!list.is_array()) throw FormatError(where + ".bilinear: expected an array");
    for (const auto& m : list) {
      if (!m.is_string()) throw FormatError(where + ".bilinear: expected strings");
      w.bilinear.push_back(parse_monomial(m.get<std::string>()));
    }
    std::sort(w.bilinear.begin(), w.bilinear.end());
    return w;
  }
  throw FormatError(where + ".kind: unknown weight kind '" + kind + "'");
}

Json weight_to_json(const Weight& w) {
  const std::string kind = w.kind();
  Json out = {{"kind", kind}};
  if (kind == "baric") out["k"] = w.baric;
  if (kind == "bilinear") out["monomial"] = format_monomial(w.bilinear.front());
  if (kind == "product") {
    out["k"] = w.baric;
    Json list = Json::array();
    for (const auto& m : w.bilinear) list.push_back(format_monomial(m));
    out["bilinear"] = list;
  }
  return out;
}

Json roots_to_json(const std::vector<RootMultiplicity>& roots) {
  Json out = Json::array();
  for (const auto& r : roots) {
    out.push_back({{"root", to_json(r.root)}, {"multiplicity", r.multiplicity}});
  }
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw FormatError(where + ": expected a rational string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(where + ": " + e.what());
  }
}

Json to_json(const Poly1& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coefficients()) coeffs.push_back(to_json(c));
  return {{"text", f.str()}, {"coefficients", coeffs}};
}

Json to_json(const Poly3& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    terms.push_back({{"a", e[0]}, {"b", e[1]}, {"p", e[2]}, {"coeff", to_json(c)}});
  }
  return {{"text", f.str()}, {"terms", terms}};
}

WeightedIdentity identity_from_json(const Json& j) {
  const Json& terms = field(j, "terms", "identity");
  if (!terms.is_array()) throw FormatError("identity.terms: expected an array");
  std::vector<IdentityTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "identity.terms[" + std::to_string(i) + "]";
    const Json& t = terms[i];
    IdentityTerm term{rational_from_json(field(t, "coeff", where), where + ".coeff"),
                      parse_monomial(string_field(t, "monomial", where)),
                      Weight::constant()};
    if (t.contains("weight")) term.weight = weight_from_json(t["weight"], where + ".weight");
    out.push_back(std::move(term));
  }
  std::optional<std::string> name;
  if (j.contains("name")) name = string_field(j, "name", "identity");
  return WeightedIdentity::make(std::move(out), std::move(name));
}

Json to_json(const WeightedIdentity& identity) {
  Json out = Json::object();
  if (identity.name()) out["name"] = *identity.name();
  Json terms = Json::array();
  for (const auto& t : identity.terms()) {
    terms.push_back({{"coeff", to_json(t.coeff)},
                     {"monomial", format_monomial(t.monomial)},
                     {"weight", weight_to_json(t.weight)}});
  }
  out["terms"] = terms;
  out["text"] = identity.str();
  return out;
}

StructureAlgebra algebra_from_json(const Json& j) {
  const unsigned dim = unsigned_field(j, "dim", "algebra");
  if (dim == 0) throw FormatError("algebra.dim: must be positive");
  const Json& s = field(j, "structure", "algebra");
  if (!s.is_array() || s.size() != dim) {
    throw FormatError("algebra.structure: expected dim x dim x dim nested arrays");
  }
  StructureConstants constants(dim);
  for (unsigned i = 0; i < dim; ++i) {
    if (!s[i].is_array() || s[i].size() != dim) {
      throw FormatError("algebra.structure[" + std::to_string(i) + "]: expected dim rows");
    }
    for (unsigned j2 = 0; j2 < dim; ++j2) {
      const std::string where =
          "algebra.structure[" + std::to_string(i) + "][" + std::to_string(j2) + "]";
      Vector v = vector_from_json(s[i][j2], where);
      if (v.size() != dim) throw FormatError(where + ": expected dim entries");
      constants[i].push_back(std::move(v));
    }
  }
  std::optional<Matrix> form;
  if (j.contains("bilinear_form") && !j["bilinear_form"].is_null()) {
    const Json& b = j["bilinear_form"];
    if (!b.is_array() || b.size() != dim) throw FormatError("algebra.bilinear_form: expected dim rows");
    Matrix m(dim, dim);
    for (unsigned r = 0; r < dim; ++r) {
      Vector row = vector_from_json(b[r], "algebra.bilinear_form[" + std::to_string(r) + "]");
      if (row.size() != dim) throw FormatError("algebra.bilinear_form: expected dim columns");
      for (unsigned c = 0; c < dim; ++c) m(r, c) = row[c];
    }
    form = std::move(m);
  }
  std::optional<Vector> weight;
  if (j.contains("weight") && !j["weight"].is_null()) {
    weight = vector_from_json(j["weight"], "algebra.weight");
  }
  std::vector<Vector> idempotents;
  if (j.contains("idempotents")) {
    const Json& list = j["idempotents"];
    if (!list.is_array()) throw FormatError("algebra.idempotents: expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      idempotents.push_back(
          vector_from_json(list[i], "algebra.idempotents[" + std::to_string(i) + "]"));
    }
  }
  std::string name = j.contains("name") ? string_field(j, "name", "algebra") : "";
  return StructureAlgebra::make(std::move(constants), std::move(form), std::move(weight),
                                std::move(idempotents), std::move(name));
}

Json to_json(const StructureAlgebra& alg) {
  Json out = Json::object();
  if (!alg.name().empty()) out["name"] = alg.name();
  out["dim"] = alg.dim();
  Json s = Json::array();
  for (const auto& row : alg.constants()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(vector_to_json(v));
    s.push_back(r);
  }
  out["structure"] = s;
  if (alg.bilinear_form()) {
    Json b = Json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < alg.dim(); ++k) row.push_back(to_json((*alg.bilinear_form())(i, k)));
      b.push_back(row);
    }
    out["bilinear_form"] = b;
  }
  if (alg.weight()) out["weight"] = vector_to_json(*alg.weight());
  Json idem = Json::array();
  for (const auto& c : alg.idempotents()) idem.push_back(vector_to_json(c));
  out["idempotents"] = idem;
  return out;
}

Json to_json(const SpectrumReport& report) {
  return {{"peirce_poly", to_json(report.peirce_poly)},
          {"degenerate", report.degenerate},
          {"roots", roots_to_json(report.roots)},
          {"residual", to_json(report.residual)},
          {"rational", report.rational()}};
}

Json to_json(const FusionTable& table) {
  Json eigen = Json::array();
  for (const auto& e : table.eigenvalues) eigen.push_back(to_json(e));
  Json entries = Json::array();
  for (const auto& lambda : table.eigenvalues) {
    for (const auto& mu : table.eigenvalues) {
      Json allowed = Json::array();
      for (const auto& nu : table.allowed(lambda, mu)) allowed.push_back(to_json(nu));
      entries.push_back({{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"allowed", allowed}});
    }
  }
  return {{"mode", to_string(table.mode)},
          {"eigenvalues", eigen},
          {"entries", entries},
          {"refinements_applied", table.refinements_applied}};
}

Json to_json(const PeirceDecomposition& decomp) {
  Json spaces = Json::array();
  for (const auto& r : decomp.eigenvalues) {
    Json basis = Json::array();
    for (const auto& v : decomp.eigenbases.at(r.root)) basis.push_back(vector_to_json(v));
    spaces.push_back({{"eigenvalue", to_json(r.root)},
                      {"algebraic_multiplicity", r.multiplicity},
                      {"basis", basis}});
  }
  return {{"idempotent", vector_to_json(decomp.idempotent)},
          {"char_poly", to_json(decomp.char_poly)},
          {"eigenspaces", spaces},
          {"residual", to_json(decomp.residual)},
          {"semisimple", decomp.semisimple}};
}

}  // namespace peirce
