#include <functional>
#include <set>
#include <sstream>

#include "peirce/identity.h"
#include "peirce/peirce.h"

namespace peirce {

namespace {

const Monomial kZ = Monomial::atom();
const Monomial kZ2 = Monomial::principal_power(2);
const Monomial kZ3 = Monomial::principal_power(3);
const Monomial kZ4 = Monomial::principal_power(4);
const Monomial kZ2Z2 = Monomial::plenary_power(3);

IdentityTerm term(const Rational& coeff, const Monomial& m,
                  Weight w = Weight::constant()) {
  return {coeff, m, std::move(w)};
}

class ParamReader {
 public:
  ParamReader(const std::string& family, const CatalogParams& params)
      : family_(family), params_(params) {}

  Rational rational(const std::string& key, const std::string& fallback) {
    used_.insert(key);
    auto it = params_.find(key);
    const std::string& text = it == params_.end() ? fallback : it->second;
    try {
      return Rational::parse(text);
    } catch (const std::exception&) {
      throw CatalogError(family_ + ": parameter " + key + "='" + text +
                         "' is not a rational");
    }
  }

  std::vector<Rational> list(const std::string& key, const std::string& fallback) {
    used_.insert(key);
    auto it = params_.find(key);
    const std::string& text = it == params_.end() ? fallback : it->second;
    try {
      return parse_rational_list(text);
    } catch (const CatalogError&) {
      throw;
    } catch (const std::exception&) {
      throw CatalogError(family_ + ": parameter " + key + "='" + text +
                         "' is not a ':'-separated rational list");
    }
  }

  std::string text(const std::string& key, const std::string& fallback) {
    used_.insert(key);
    auto it = params_.find(key);
    return it == params_.end() ? fallback : it->second;
  }

  void finish() const {
    for (const auto& [k, v] : params_) {
      if (!used_.count(k)) {
        throw CatalogError(family_ + ": unknown parameter '" + k + "'");
      }
    }
  }

 private:
  std::string family_;
  const CatalogParams& params_;
  std::set<std::string> used_;
};

WeightedIdentity named(std::vector<IdentityTerm> terms, const std::string& name) {
  return WeightedIdentity::make(std::move(terms), name);
}

void require_zero_sum(const std::string& family, const std::string& equation,
                      const Rational& sum) {
  if (!sum.is_zero()) {
    throw CatalogError(family + ": " + equation + " violated (sum is " +
                       sum.str() + ")");
  }
}

void check_train(std::span<const Rational> gamma, const std::string& family) {
  if (gamma.size() < 2) throw CatalogError(family + ": rank must be at least 2");
  if (gamma[0] != Rational(1)) {
    throw CatalogError(family + ": leading coefficient gamma_0 must be 1");
  }
  Rational sum;
  for (const auto& g : gamma) sum += g;
  require_zero_sum(family, "sum(gamma) = 0", sum);
}

}  // namespace

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ':')) out.push_back(Rational::parse(item));
  if (out.empty()) throw CatalogError("empty rational list");
  return out;
}

CatalogParams parse_catalog_params(const std::string& text) {
  CatalogParams params;
  std::stringstream in(text);
  std::string item;
  auto trim = [](const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return std::string();
    return s.substr(first, s.find_last_not_of(" \t") - first + 1);
  };
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    auto eq = item.find('=');
    const std::string key = eq == std::string::npos ? "" : trim(item.substr(0, eq));
    if (key.empty()) {
      throw CatalogError("malformed parameter '" + item + "', expected key=value");
    }
    params[key] = trim(item.substr(eq + 1));
  }
  return params;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> kEntries = {
      {"jordan_power_assoc", "z * z^3 - z^2 * z^2 = 0 (Jordan power associativity)", ""},
      {"bernstein", "z^2 * z^2 - w(z)^2 z^2 = 0 (Bernstein algebras)", ""},
      {"pseudo_composition", "z^3 - b(z, z) z = 0", ""},
      {"walcher", "z^3 - a w(z) z^2 - b w(z)^2 z = 0, a + b = 1 (rank three)",
       "a=1/2, b=1/2"},
      {"hsiang", "4 z * z^3 + z^2 * z^2 - 3 b(z, z) z^2 - 2 b(z, z^2) z = 0", ""},
      {"principal_train",
       "sum_k gamma_(n-k) w(z)^(n-k) z^k = 0, gamma_0 = 1, sum gamma = 0",
       "gamma=1:-1"},
      {"plenary_train",
       "sum_k gamma_(n-k) w(z)^(2^(n-1) - 2^(k-1)) z^[k] = 0, gamma_0 = 1, "
       "sum gamma = 0",
       "gamma=1:-1:0"},
      {"nourigat_varro",
       "a1 z^4 + a2 z^2 * z^2 - b1 g(z, z) z^2 - b2 g(z, z^2) z = 0 with "
       "g = w(x)w(y) (form=baric) or g = b (form=bilinear), a1 + a2 = b1 + b2",
       "a1=4, a2=1, b1=3, b2=2, form=baric"},
      {"elduque_labra", "z^2 * z^2 - 2 w(z) z^3 + w(z)^2 z^2 = 0 (degenerate)", ""},
  };
  return kEntries;
}

WeightedIdentity catalog(const std::string& name, const CatalogParams& params) {
  ParamReader reader(name, params);
  auto finish = [&](WeightedIdentity id) {
    reader.finish();
    return id;
  };

  if (name == "jordan_power_assoc") {
    return finish(named({term(1, kZ4), term(-1, kZ2Z2)}, name));
  }
  if (name == "bernstein") {
    return finish(named({term(1, kZ2Z2), term(-1, kZ2, Weight::baric_power(2))}, name));
  }
  if (name == "pseudo_composition") {
    return finish(named({term(1, kZ3), term(-1, kZ, Weight::bilinear_with(kZ))}, name));
  }
  if (name == "walcher") {
    Rational a = reader.rational("a", "1/2");
    Rational b = reader.rational("b", "1/2");
    require_zero_sum(name, "a(c) + b(c) = 1", Rational(1) - a - b);
    std::vector<IdentityTerm> terms{term(1, kZ3)};
    if (!a.is_zero()) terms.push_back(term(-a, kZ2, Weight::baric_power(1)));
    if (!b.is_zero()) terms.push_back(term(-b, kZ, Weight::baric_power(2)));
    return finish(named(std::move(terms), name));
  }
  if (name == "hsiang") {
    return finish(named({term(4, kZ4), term(1, kZ2Z2),
                         term(-3, kZ2, Weight::bilinear_with(kZ)),
                         term(-2, kZ, Weight::bilinear_with(kZ2))},
                        name));
  }
  if (name == "principal_train" || name == "plenary_train") {
    auto gamma = reader.list("gamma", name == "principal_train" ? "1:-1" : "1:-1:0");
    auto family = name == "principal_train" ? TrainFamily::kPrincipal
                                            : TrainFamily::kPlenary;
    return finish(train_identity(family, gamma));
  }
  if (name == "nourigat_varro") {
    Rational a1 = reader.rational("a1", "4");
    Rational a2 = reader.rational("a2", "1");
    Rational b1 = reader.rational("b1", "3");
    Rational b2 = reader.rational("b2", "2");
    std::string form = reader.text("form", "baric");
    require_zero_sum(name, "a1 + a2 = b1 + b2", a1 + a2 - b1 - b2);
    Weight g_zz;
    Weight g_zz2;
    if (form == "baric") {
      g_zz = Weight::baric_power(2);
      g_zz2 = Weight::baric_power(3);
    } else if (form == "bilinear") {
      g_zz = Weight::bilinear_with(kZ);
      g_zz2 = Weight::bilinear_with(kZ2);
    } else {
      throw CatalogError(name + ": form must be 'baric' or 'bilinear'");
    }
    std::vector<IdentityTerm> terms;
    if (!a1.is_zero()) terms.push_back(term(a1, kZ4));
    if (!a2.is_zero()) terms.push_back(term(a2, kZ2Z2));
    if (!b1.is_zero()) terms.push_back(term(-b1, kZ2, g_zz));
    if (!b2.is_zero()) terms.push_back(term(-b2, kZ, g_zz2));
    return finish(named(std::move(terms), name));
  }
  if (name == "elduque_labra") {
    return finish(named({term(1, kZ2Z2), term(-2, kZ3, Weight::baric_power(1)),
                         term(1, kZ2, Weight::baric_power(2))},
                        name));
  }
  throw std::out_of_range("unknown catalog identity '" + name + "'");
}

WeightedIdentity train_identity(TrainFamily family,
                                std::span<const Rational> gamma) {
  const bool principal = family == TrainFamily::kPrincipal;
  const std::string fname = principal ? "principal_train" : "plenary_train";
  check_train(gamma, fname);
  const unsigned n = static_cast<unsigned>(gamma.size());
  if (!principal && n > 16) throw CatalogError(fname + ": rank above 16");
  std::vector<IdentityTerm> terms;
  for (unsigned k = 1; k <= n; ++k) {
    const Rational& g = gamma[n - k];
    if (g.is_zero()) continue;
    if (principal) {
      terms.push_back(term(g, Monomial::principal_power(k), Weight::baric_power(n - k)));
    } else {
      unsigned w = (1U << (n - 1)) - (1U << (k - 1));
      terms.push_back(term(g, Monomial::plenary_power(k), Weight::baric_power(w)));
    }
  }
  return WeightedIdentity::make(std::move(terms), fname);
}

TrainClosedForm train_closed_forms(TrainFamily family,
                                   std::span<const Rational> gamma) {
  const bool principal = family == TrainFamily::kPrincipal;
  check_train(gamma, principal ? "principal_train" : "plenary_train");
  const unsigned n = static_cast<unsigned>(gamma.size());
  TrainClosedForm out;
  if (principal) {
    Poly1 numerator;
    for (unsigned k = 1; k <= n; ++k) {
      numerator += Poly1::monomial(gamma[n - k], k - 1);
    }
    Poly1 cofactor = divide_exact(numerator, Poly1::linear_factor(Rational(1)));
    out.peirce_poly = Poly1({Rational(-1), Rational(2)}) * cofactor;
    out.cofactor = std::move(cofactor);
    const Rational half(1, 2);
    const Poly1& rho = out.peirce_poly;
    Poly3 at_half = divide_exact(Poly3::from_poly1(rho, Var::kP) - Poly3(rho.eval(half)),
                                 Poly3::var(Var::kP) - Poly3(half));
    out.symbol = divided_difference(rho, Var::kP, Var::kA) +
                 divided_difference(rho, Var::kP, Var::kB) - at_half;
  } else {
    const Poly1 two_t = Poly1::monomial(Rational(2), 1);
    for (unsigned k = 1; k <= n; ++k) {
      out.peirce_poly += pow(two_t, k - 1) * gamma[n - k];
    }
    const Poly3 two_ab = Poly3(2) * Poly3::var(Var::kA) * Poly3::var(Var::kB);
    out.symbol = divide_exact(
        Poly3::from_poly1(out.peirce_poly, Var::kP) - compose(out.peirce_poly, two_ab),
        Poly3::var(Var::kP) - two_ab);
  }
  return out;
}

}  // namespace peirce
