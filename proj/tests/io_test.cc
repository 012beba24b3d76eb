#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "peirce/builders.h"
#include "peirce/io.h"

namespace peirce {
namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

void ExpectSameIdentity(const WeightedIdentity& x, const WeightedIdentity& y) {
  EXPECT_EQ(x.terms(), y.terms());
  EXPECT_EQ(x.name(), y.name());
  EXPECT_EQ(x.str(), y.str());
}

TEST(JsonRationalTest, StringsAndIntegers) {
  EXPECT_EQ(to_json(R(-3, 4)), Json("-3/4"));
  EXPECT_EQ(rational_from_json(Json("6/8"), "x"), R(3, 4));
  EXPECT_EQ(rational_from_json(Json(5), "x"), R(5));
  EXPECT_THROW(rational_from_json(Json("1/0"), "x"), FormatError);
  EXPECT_THROW(rational_from_json(Json(0.5), "x"), FormatError);
  EXPECT_THROW(rational_from_json(Json::array(), "x"), FormatError);
}

TEST(JsonPolyTest, Shapes) {
  Json f = to_json(Poly1({R(0), R(1), R(-3), R(2)}));
  EXPECT_EQ(f["text"], "2*t^3 - 3*t^2 + t");
  EXPECT_EQ(f["coefficients"], Json::parse(R"(["0", "1", "-3", "2"])"));
  Json g = to_json(Poly3::var(Var::kP) * Poly3::var(Var::kA) * R(2, 3));
  EXPECT_EQ(g["terms"].size(), 1u);
  EXPECT_EQ(g["terms"][0]["a"], 1);
  EXPECT_EQ(g["terms"][0]["b"], 0);
  EXPECT_EQ(g["terms"][0]["p"], 1);
  EXPECT_EQ(g["terms"][0]["coeff"], "2/3");
}

TEST(JsonIdentityTest, CatalogRoundTrip) {
  for (const auto& entry : catalog_entries()) {
    auto id = catalog(entry.name);
    Json j = to_json(id);
    ExpectSameIdentity(identity_from_json(Json::parse(j.dump())), id);
  }
}

TEST(JsonIdentityTest, RandomAndProductRoundTrip) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 50; ++i) {
    auto p = oracle::random_identity(rng, 6);
    ExpectSameIdentity(identity_from_json(to_json(p)), p);
    auto q = oracle::random_identity(rng, 4);
    auto pq = multiply_identities(p, q);
    ExpectSameIdentity(identity_from_json(to_json(pq)), pq);
  }
}

TEST(JsonIdentityTest, MinimalInput) {
  auto id = identity_from_json(Json::parse(R"({
    "terms": [{"coeff": "1", "monomial": "z * z^3"},
              {"coeff": -1, "monomial": "z^2 * z^2", "weight": {"kind": "constant"}}]})"));
  EXPECT_EQ(identity_peirce_poly(id).str(), "2*t^3 - 3*t^2 + t");
  EXPECT_FALSE(id.name().has_value());
  auto baric = identity_from_json(Json::parse(R"({"name": "b", "terms": [
    {"coeff": "1", "monomial": "z^2", "weight": {"kind": "baric", "k": 1}},
    {"coeff": "-1", "monomial": "z", "weight": {"kind": "bilinear", "monomial": "z"}}]})"));
  EXPECT_TRUE(baric.uses_baric());
  EXPECT_TRUE(baric.uses_bilinear());
}

TEST(JsonIdentityTest, Errors) {
  EXPECT_THROW(identity_from_json(Json::parse("{}")), FormatError);
  EXPECT_THROW(identity_from_json(Json::parse(R"({"terms": 3})")), FormatError);
  EXPECT_THROW(identity_from_json(Json::parse(R"({"terms": [{"coeff": "1"}]})")), FormatError);
  EXPECT_THROW(identity_from_json(Json::parse(
                   R"({"terms": [{"coeff": "1", "monomial": "z", "weight": {"kind": "cubic"}}]})")),
               FormatError);
  EXPECT_THROW(identity_from_json(Json::parse(
                   R"({"terms": [{"coeff": "1", "monomial": "z", "weight": {"kind": "baric", "k": -1}}]})")),
               FormatError);
  EXPECT_THROW(identity_from_json(Json::parse(R"({"terms": [{"coeff": "1", "monomial": "z^"}]})")),
               ParseError);
  EXPECT_THROW(identity_from_json(Json::parse(
                   R"({"terms": [{"coeff": "1", "monomial": "z^2"}, {"coeff": "-2", "monomial": "z"}]})")),
               ZeroSumViolation);
}

TEST(JsonAlgebraTest, BuilderRoundTrip) {
  for (const auto& alg : {jordan_sym(2), jordan_sym(3), spin_factor(3), hsiang_tracefree_sym3()}) {
    Json j = to_json(alg);
    auto back = algebra_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.name(), alg.name());
    EXPECT_EQ(back.constants(), alg.constants());
    EXPECT_EQ(back.bilinear_form(), alg.bilinear_form());
    EXPECT_EQ(back.weight(), alg.weight());
    EXPECT_EQ(back.idempotents(), alg.idempotents());
    EXPECT_EQ(to_json(back), j);
  }
}

TEST(JsonAlgebraTest, WeightedAlgebra) {
  auto alg = algebra_from_json(Json::parse(R"({
    "dim": 2,
    "structure": [[["1", "0"], ["1/2", "1/2"]], [["1/2", "1/2"], ["0", "1"]]],
    "weight": ["1", "1"],
    "idempotents": [["1", "0"]]})"));
  EXPECT_EQ(alg.dim(), 2u);
  EXPECT_EQ(alg.omega({R(1), R(0)}), R(1));
  EXPECT_FALSE(alg.bilinear_form().has_value());
}

TEST(JsonAlgebraTest, Errors) {
  EXPECT_THROW(algebra_from_json(Json::parse(R"({"dim": 0, "structure": []})")), FormatError);
  EXPECT_THROW(algebra_from_json(Json::parse(R"({"dim": 1})")), FormatError);
  EXPECT_THROW(algebra_from_json(Json::parse(R"({"dim": 1, "structure": [[["1", "2"]]]})")),
               FormatError);
  EXPECT_THROW(algebra_from_json(Json::parse(R"({"dim": 1, "structure": [[["x"]]]})")),
               FormatError);
  EXPECT_THROW(algebra_from_json(Json::parse(
                   R"({"dim": 2, "structure": [[["0","0"],["1","0"]],[["0","0"],["0","0"]]]})")),
               AlgebraError);
  EXPECT_THROW(algebra_from_json(Json::parse(
                   R"({"dim": 1, "structure": [[["1"]]], "idempotents": [["2"]]})")),
               AlgebraError);
}

TEST(JsonReportTest, SpectrumFusionDecomposition) {
  Json s = to_json(spectrum(catalog("hsiang")));
  EXPECT_EQ(s["degenerate"], false);
  EXPECT_EQ(s["rational"], true);
  EXPECT_EQ(s["roots"].size(), 3u);
  EXPECT_EQ(s["roots"][0]["root"], "-1");
  EXPECT_EQ(s["roots"][0]["multiplicity"], 1);

  Json f = to_json(fusion_table(catalog("hsiang"), FusionMode::kMetrizedOrthogonal));
  EXPECT_EQ(f["mode"], "metrized_orthogonal");
  EXPECT_EQ(f["entries"].size(), 16u);

  auto alg = hsiang_tracefree_sym3();
  Json d = to_json(eigen_decomposition(alg, alg.idempotents()[0]));
  EXPECT_EQ(d["semisimple"], true);
  EXPECT_EQ(d["eigenspaces"].size(), 3u);
}

}  // namespace
}  // namespace peirce
