#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "affweyl/hecke.hpp"
#include "affweyl/reduction.hpp"

using namespace affweyl;

namespace affweyl {
doctest::String toString(const GroupElement& x) { return formatElement(x).c_str(); }
}  // namespace affweyl

namespace {

GroupElement randomBallElement(WeylType t, int n, long long maxlen, std::mt19937_64& rng) {
  const auto& gens = simple_reflections(t, n);
  auto seeds = integral_length_zero(t, n);
  GroupElement x = seeds[rng() % seeds.size()];
  for (int tries = 0; tries < 40; ++tries) {
    auto y = multiply(gens[rng() % gens.size()], x);
    if (length(y) <= maxlen) x = y;
  }
  return x;
}

const std::vector<std::pair<WeylType, int>> kGroups = {
    {WeylType::A, 2}, {WeylType::A, 3}, {WeylType::B, 2},
    {WeylType::C, 2}, {WeylType::D, 3}};

}  // namespace

TEST_CASE("xi polynomial ring axioms") {
  std::mt19937_64 rng(3);
  auto rnd = [&] {
    std::vector<long long> c(rng() % 5);
    for (auto& v : c) v = (long long)(rng() % 7) - 3;
    return XiPoly(c);
  };
  for (int k = 0; k < 300; ++k) {
    XiPoly a = rnd(), b = rnd(), c = rnd();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + XiPoly::zero() == a);
    CHECK(a * XiPoly::one() == a);
  }
  CHECK(XiPoly::zero().degree() == -1);
  CHECK(XiPoly::xi().degree() == 1);
}

TEST_CASE("quadratic relation, inverse and additivity in the regular action") {
  for (auto [t, n] : kGroups) {
    int ngens = (int)simple_reflections(t, n).size();
    for (int i = 0; i < ngens; ++i) CHECK(hecke_check_quadratic(t, n, i, 25));
  }
}

TEST_CASE("class polynomials of s1 s0 s1 in type A rank 2") {
  const auto& gens = simple_reflections(WeylType::A, 2);
  auto w = multiply(multiply(gens[1], gens[0]), gens[1]);
  auto table = class_polynomials(w);

  DPPair two, split;
  two.type = split.type = WeylType::A;
  two.lambda = {{2, 0}};
  split.lambda = {{1, 1}, {1, -1}};
  REQUIRE(table.entries.size() == 2);
  CHECK(table.entries.at(two) == XiPoly::one());
  CHECK(table.entries.at(split) == XiPoly::xi());
}

TEST_CASE("minimal elements have delta tables") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 40; ++k) {
    auto [t, n] = kGroups[rng() % kGroups.size()];
    auto w = randomBallElement(t, n, 8, rng);
    auto m = reduce_to_minimal(w).first;
    auto table = class_polynomials(m);
    REQUIRE(table.entries.size() == 1);
    CHECK(table.entries.begin()->first == classify(m));
    CHECK(table.entries.begin()->second == XiPoly::one());
  }
}

TEST_CASE("table invariants: specialization, parity, degree bound, mass") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    auto [t, n] = kGroups[rng() % kGroups.size()];
    auto w = randomBallElement(t, n, 8, rng);
    auto label = classify(w);
    auto table = class_polynomials(w);
    long long lw = length(w);
    long long mass = 0;
    for (const auto& [cls, poly] : table.entries) {
      CHECK(!poly.isZero());
      long long lO = class_min_length(cls);
      // specialization at ξ = 0 is the class indicator
      CHECK(poly.constantTerm() == (cls == label ? 1 : 0));
      mass += poly.constantTerm();
      // parity and nonnegativity of every coefficient
      for (int d = 0; d <= poly.degree(); ++d) {
        CHECK(poly.at(d) >= 0);
        if (poly.at(d) != 0) CHECK((lw - lO - d) % 2 == 0);
      }
      CHECK(lO <= lw);
    }
    CHECK(mass == 1);
    // degree bound on the own-class entry
    auto it = table.entries.find(label);
    REQUIRE(it != table.entries.end());
    CHECK(it->second.degree() <= lw - class_min_length(label));
  }
}

TEST_CASE("path independence probe") {
  auto id = GroupElement::identity(WeylType::C, 2);
  CHECK(path_independence_probe(id, 3));

  const auto& gens = simple_reflections(WeylType::A, 2);
  auto w = multiply(multiply(gens[1], gens[0]), gens[1]);
  CHECK(path_independence_probe(w, 5));

  std::mt19937_64 rng(13);
  for (int k = 0; k < 30; ++k) {
    auto [t, n] = kGroups[rng() % kGroups.size()];
    auto x = randomBallElement(t, n, 7, rng);
    CHECK(path_independence_probe(x, 3, 555 + k));
  }
}

TEST_CASE("tables are invariant under omega conjugation") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 25; ++k) {
    auto [t, n] = kGroups[rng() % kGroups.size()];
    auto w = randomBallElement(t, n, 7, rng);
    auto conjs = omega_conjugators(t, n);
    auto w2 = conjugate(conjs[rng() % conjs.size()], w);
    CHECK(class_polynomials(w).entries == class_polynomials(w2).entries);
  }
}
