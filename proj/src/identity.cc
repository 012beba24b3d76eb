#include "peirce/identity.h"

#include <algorithm>
#include <sstream>

#include "peirce/peirce.h"

namespace peirce {

// ---------------------------------------------------------------------------
// Weight

std::string Weight::kind() const {
  if (is_constant()) return "constant";
  if (bilinear.empty()) return "baric";
  if (baric == 0 && bilinear.size() == 1) return "bilinear";
  return "product";
}

std::string Weight::str() const {
  std::string out;
  if (baric == 1) out = "w(z)";
  if (baric > 1) out = "w(z)^" + std::to_string(baric);
  for (const auto& m : bilinear) {
    if (!out.empty()) out += "*";
    std::string f = format_monomial(m);
    out += "b(z, " + (f.find('*') != std::string::npos ? "(" + f + ")" : f) + ")";
  }
  return out;
}

Weight operator*(const Weight& x, const Weight& y) {
  Weight w;
  w.baric = x.baric + y.baric;
  w.bilinear = x.bilinear;
  w.bilinear.insert(w.bilinear.end(), y.bilinear.begin(), y.bilinear.end());
  std::sort(w.bilinear.begin(), w.bilinear.end());
  return w;
}

std::strong_ordering operator<=>(const Weight& x, const Weight& y) {
  if (auto c = x.baric <=> y.baric; c != 0) return c;
  return std::lexicographical_compare_three_way(
      x.bilinear.begin(), x.bilinear.end(), y.bilinear.begin(),
      y.bilinear.end());
}

// ---------------------------------------------------------------------------
// Term lists

std::vector<IdentityTerm> merge_terms(std::vector<IdentityTerm> terms) {
  for (auto& t : terms) std::sort(t.weight.bilinear.begin(), t.weight.bilinear.end());
  // Highest degree first; canonical order within a degree.
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    if (x.monomial.degree() != y.monomial.degree()) {
      return x.monomial.degree() > y.monomial.degree();
    }
    if (auto c = x.monomial <=> y.monomial; c != 0) return c < 0;
    return x.weight < y.weight;
  });
  std::vector<IdentityTerm> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial &&
        out.back().weight == t.weight) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const IdentityTerm& t) { return t.coeff.is_zero(); });
  return out;
}

Poly1 terms_peirce_poly(std::span<const IdentityTerm> terms) {
  Poly1 rho;
  for (const auto& t : terms) rho += peirce_poly(t.monomial) * t.coeff;
  return rho;
}

std::vector<IdentityTerm> multiply_terms(std::span<const IdentityTerm> x,
                                         std::span<const IdentityTerm> y) {
  std::vector<IdentityTerm> out;
  out.reserve(x.size() * y.size());
  for (const auto& s : x) {
    for (const auto& t : y) {
      out.push_back({s.coeff * t.coeff, Monomial::product(s.monomial, t.monomial),
                     s.weight * t.weight});
    }
  }
  return merge_terms(std::move(out));
}

// ---------------------------------------------------------------------------
// WeightedIdentity

WeightedIdentity WeightedIdentity::make(std::vector<IdentityTerm> terms,
                                        std::optional<std::string> name) {
  WeightedIdentity id;
  id.terms_ = merge_terms(std::move(terms));
  if (id.terms_.empty()) throw EmptyIdentity();
  Rational sum;
  for (const auto& t : id.terms_) sum += t.coeff;
  if (!sum.is_zero()) throw ZeroSumViolation(sum);
  id.name_ = std::move(name);
  return id;
}

unsigned WeightedIdentity::max_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool WeightedIdentity::uses_baric() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.weight.baric > 0; });
}

bool WeightedIdentity::uses_bilinear() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return !t.weight.bilinear.empty(); });
}

std::string WeightedIdentity::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = abs(t.coeff);
    if (first) {
      if (t.coeff.sign() < 0) out << "-";
    } else {
      out << (t.coeff.sign() < 0 ? " - " : " + ");
    }
    std::string prefix;
    if (mag != Rational(1)) prefix = mag.str() + "*";
    if (!t.weight.is_constant()) prefix += t.weight.str() + "*";
    std::string body = format_monomial(t.monomial);
    if (!prefix.empty() && body.find('*') != std::string::npos) {
      body = "(" + body + ")";
    }
    out << prefix << body;
    first = false;
  }
  return out.str();
}

Poly1 identity_peirce_poly(const WeightedIdentity& identity) {
  return terms_peirce_poly(identity.terms());
}

Poly3 identity_symbol(const WeightedIdentity& identity) {
  Poly3 y;
  for (const auto& t : identity.terms()) y += peirce_symbol(t.monomial) * t.coeff;
  return y;
}

bool SpectrumReport::contains(const Rational& value) const {
  return multiplicity(value).has_value();
}

std::optional<unsigned> SpectrumReport::multiplicity(const Rational& value) const {
  for (const auto& r : roots) {
    if (r.root == value) return r.multiplicity;
  }
  return std::nullopt;
}

SpectrumReport spectrum(const WeightedIdentity& identity) {
  SpectrumReport report;
  report.peirce_poly = identity_peirce_poly(identity);
  if (report.peirce_poly.is_zero()) {
    report.degenerate = true;
    return report;
  }
  if (!report.peirce_poly.eval(Rational(1, 2)).is_zero()) {
    throw InternalHalfRootMissing("Peirce polynomial " + report.peirce_poly.str() +
                                  " does not vanish at 1/2");
  }
  auto rr = rational_roots(report.peirce_poly);
  report.roots = std::move(rr.roots);
  report.residual = std::move(rr.residual);
  return report;
}

WeightedIdentity multiply_identities(const WeightedIdentity& x,
                                     const WeightedIdentity& y) {
  std::optional<std::string> name;
  if (x.name() && y.name()) name = "(" + *x.name() + ")*(" + *y.name() + ")";
  return WeightedIdentity::make(multiply_terms(x.terms(), y.terms()), name);
}

// ---------------------------------------------------------------------------
// Fusion

std::string to_string(FusionMode mode) {
  return mode == FusionMode::kGeneric ? "generic" : "metrized_orthogonal";
}

FusionMode parse_fusion_mode(const std::string& text) {
  if (text == "generic") return FusionMode::kGeneric;
  if (text == "metrized" || text == "metrized_orthogonal") {
    return FusionMode::kMetrizedOrthogonal;
  }
  throw std::invalid_argument("unknown fusion mode '" + text + "'");
}

namespace {

FusionTable::Key ordered_key(const std::vector<Rational>& eigenvalues,
                             const Rational& lambda, const Rational& mu) {
  auto pos = [&](const Rational& v) {
    auto it = std::find(eigenvalues.begin(), eigenvalues.end(), v);
    if (it == eigenvalues.end()) {
      throw std::out_of_range("eigenvalue " + v.str() + " not in fusion table");
    }
    return it - eigenvalues.begin();
  };
  return pos(lambda) <= pos(mu) ? FusionTable::Key{lambda, mu}
                                : FusionTable::Key{mu, lambda};
}

}  // namespace

const std::set<Rational>& FusionTable::allowed(const Rational& lambda,
                                               const Rational& mu) const {
  return entries.at(ordered_key(eigenvalues, lambda, mu));
}

bool FusionTable::has_eigenvalue(const Rational& value) const {
  return std::find(eigenvalues.begin(), eigenvalues.end(), value) !=
         eigenvalues.end();
}

FusionTable fusion_table(const WeightedIdentity& identity, FusionMode mode) {
  const SpectrumReport spec = spectrum(identity);
  if (spec.degenerate) throw DegenerateIdentity();
  if (!spec.rational()) throw IrrationalSpectrum(spec.residual);

  const Rational one(1);
  const Rational half(1, 2);
  FusionTable table;
  table.mode = mode;
  table.eigenvalues.push_back(one);
  for (const auto& r : spec.roots) {
    if (r.root != one) table.eigenvalues.push_back(r.root);
  }

  const Poly3 y = identity_symbol(identity);
  const auto& ev = table.eigenvalues;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    for (std::size_t j = i; j < ev.size(); ++j) {
      const Rational& lambda = ev[i];
      const Rational& mu = ev[j];
      std::set<Rational> cell;
      if (mode == FusionMode::kGeneric) {
        for (const auto& nu : ev) {
          if (y.eval(lambda, mu, nu).is_zero()) cell.insert(nu);
        }
        cell.insert(one);
        cell.insert(lambda);
        cell.insert(mu);
      } else if (lambda == one) {
        cell.insert(mu);
      } else if (lambda != mu) {
        for (const auto& nu : ev) {
          if (y.eval(lambda, mu, nu).is_zero()) cell.insert(nu);
        }
      } else {
        for (const auto& nu : ev) {
          if (nu != one && y.eval(lambda, lambda, nu).is_zero()) cell.insert(nu);
        }
        cell.insert(one);
      }
      table.entries.emplace(FusionTable::Key{lambda, mu}, std::move(cell));
    }
  }

  if (mode == FusionMode::kGeneric) {
    bool removed = false;
    for (const auto& r : spec.roots) {
      if (r.multiplicity != 1 || r.root == one) continue;
      auto& cell = table.entries.at(ordered_key(table.eigenvalues, r.root, half));
      removed |= cell.erase(r.root) > 0;
    }
    if (removed) table.refinements_applied.push_back("simple_root_half_exclusion");
  } else {
    table.refinements_applied = {"b_orthogonal_peirce_components",
                                 "tau1_vanishes_on_peirce_components",
                                 "rhs_proportional_to_b(u,v)c"};
  }
  return table;
}

}  // namespace peirce
