#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

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

}  // namespace

TEST_CASE("conjugation steps change length by -2, 0 or 2") {
  // central translations are fixed points
  auto central = GroupElement::translation(WeylType::A, 3, {2, 2, 2});
  for (int i = 0; i < 3; ++i) {
    auto [w2, d] = conj_step(central, i);
    CHECK(w2 == central);
    CHECK(d == 0);
  }

  const auto& gens = simple_reflections(WeylType::A, 2);
  auto w = multiply(multiply(gens[1], gens[0]), gens[1]);
  auto [w2, d] = conj_step(w, 1);
  CHECK(w2 == gens[0]);
  CHECK(d == -2);

  std::mt19937_64 rng(3);
  const std::vector<std::pair<WeylType, int>> groups = {
      {WeylType::A, 3}, {WeylType::B, 2}, {WeylType::C, 3}, {WeylType::D, 3}};
  for (auto [t, n] : groups) {
    int ng = (int)simple_reflections(t, n).size();
    for (int k = 0; k < 125; ++k) {
      auto x = randomBallElement(t, n, 9, rng);
      auto [y, delta] = conj_step(x, (int)(rng() % ng));
      CHECK((delta == -2 || delta == 0 || delta == 2));
    }
  }
}

TEST_CASE("reduce_to_minimal: basics and path replay") {
  const auto& gens = simple_reflections(WeylType::A, 2);
  auto w = multiply(multiply(gens[1], gens[0]), gens[1]);
  auto [m, path] = reduce_to_minimal(w);
  CHECK(length(m) == 1);
  CHECK(path.steps.size() == 1);
  CHECK(replay(path) == m);
  CHECK(classify(m) == classify(w));

  // already minimal: empty path
  auto id = GroupElement::identity(WeylType::C, 2);
  auto [m2, path2] = reduce_to_minimal(id);
  CHECK(m2 == id);
  CHECK(path2.steps.empty());
}

TEST_CASE("reduction paths are non-increasing and class-preserving") {
  std::mt19937_64 rng(7);
  const std::vector<std::pair<WeylType, int>> groups = {
      {WeylType::A, 3}, {WeylType::B, 2}, {WeylType::C, 2}, {WeylType::D, 3}};
  for (auto [t, n] : groups) {
    for (int k = 0; k < 40; ++k) {
      auto w = randomBallElement(t, n, 8, rng);
      auto [m, path] = reduce_to_minimal(w);
      CHECK(replay(path) == m);
      CHECK(classify(m) == classify(w));
      long long prev = length(w);
      for (const auto& st : path.steps) {
        CHECK(st.len_before == prev);
        CHECK(st.len_after <= st.len_before);
        prev = st.len_after;
      }
      CHECK(prev == length(m));
    }
  }
}

TEST_CASE("fundamental elements of distinguished pairs are already minimal") {
  for (WeylType t : {WeylType::A, WeylType::B, WeylType::C}) {
    for (const auto& p : enumerate_classes(t, 3, 2)) {
      if (!is_distinguished(p)) continue;
      auto f = fundamental_element(p);
      auto bf = brute_force_min(f);
      CHECK(bf.min_length == length(f));
      auto [m, path] = reduce_to_minimal(f);
      for (const auto& st : path.steps) CHECK(st.len_after == st.len_before);
    }
  }
}

TEST_CASE("terminal detection") {
  for (const auto& om : omega_elements(WeylType::A, 3)) CHECK(is_terminal(om));
  const auto& gens = simple_reflections(WeylType::A, 2);
  auto w = multiply(multiply(gens[1], gens[0]), gens[1]);
  CHECK(!is_terminal(w));
}

TEST_CASE("terminal iff minimal on small balls") {
  for (auto [t, n] : std::vector<std::pair<WeylType, int>>{{WeylType::A, 2},
                                                           {WeylType::C, 2}}) {
    for (const auto& x : integral_ball(t, n, 6)) {
      bool term = is_terminal(x);
      bool minimal = (brute_force_min(x).min_length == length(x));
      CHECK(term == minimal);
    }
  }
}

TEST_CASE("brute force minimum agrees with reduction") {
  auto id = GroupElement::identity(WeylType::B, 2);
  auto bf = brute_force_min(id);
  CHECK(bf.min_length == 0);
  CHECK(bf.minimal_elements == std::vector<GroupElement>{id});

  const auto& gens = simple_reflections(WeylType::A, 2);
  auto s0 = gens[0];
  auto bf2 = brute_force_min(s0);
  CHECK(bf2.min_length == 1);
  bool hasS0 = false, hasS1 = false;
  for (const auto& m : bf2.minimal_elements) {
    if (m == normalize_central(gens[0])) hasS0 = true;
    if (m == normalize_central(gens[1])) hasS1 = true;
  }
  CHECK(hasS0);
  CHECK(hasS1);

  std::mt19937_64 rng(11);
  const std::vector<std::pair<WeylType, int>> groups = {
      {WeylType::A, 2}, {WeylType::A, 3}, {WeylType::B, 2},
      {WeylType::C, 2}, {WeylType::D, 3}};
  int trials = 0;
  while (trials < 150) {
    auto [t, n] = groups[rng() % groups.size()];
    auto w = randomBallElement(t, n, 8, rng);
    auto [m, path] = reduce_to_minimal(w);
    CHECK(length(m) == brute_force_min(w).min_length);
    ++trials;
  }
}

TEST_CASE("budget errors") {
  auto big = GroupElement::translation(WeylType::C, 3, {12, 8, 2});
  CHECK_THROWS_AS(brute_force_min(big, 10), BudgetError);
}

TEST_CASE("strong conjugation certificates") {
  CHECK(strong_conj_connected({GroupElement::identity(WeylType::A, 2)}, 2));
  const auto& gens = simple_reflections(WeylType::A, 2);
  CHECK(strong_conj_connected({normalize_central(gens[0]), normalize_central(gens[1])}, 2));
}

TEST_CASE("minimal elements of each class connect under strong conjugation (rank 2)") {
  for (auto [t, n] :
       std::vector<std::pair<WeylType, int>>{{WeylType::A, 2}, {WeylType::C, 2}}) {
    std::map<std::vector<long long>, std::pair<long long, std::vector<GroupElement>>> classes;
    for (const auto& x : integral_ball(t, n, 6)) {
      auto key = classify(x).encode();
      long long l = length(x);
      auto it = classes.find(key);
      if (it == classes.end()) {
        classes[key] = {l, {x}};
      } else if (l < it->second.first) {
        it->second = {l, {x}};
      } else if (l == it->second.first) {
        it->second.second.push_back(x);
      }
    }
    for (auto& [key, entry] : classes) CHECK(strong_conj_connected(entry.second, 6));
  }
}

TEST_CASE("length-preserving closure from a minimal element covers the minimal set") {
  // distinguished classes: closure of the fundamental element = minimal set
  for (WeylType t : {WeylType::A, WeylType::C}) {
    std::map<std::vector<long long>, std::vector<GroupElement>> minimals;
    std::map<std::vector<long long>, long long> minlen;
    for (const auto& x : integral_ball(t, 2, 6)) {
      auto key = classify(x).encode();
      long long l = length(x);
      if (!minlen.count(key) || l < minlen[key]) {
        minlen[key] = l;
        minimals[key] = {x};
      } else if (l == minlen[key]) {
        minimals[key].push_back(x);
      }
    }
    for (const auto& p : enumerate_classes(t, 2, 2)) {
      if (!is_distinguished(p)) continue;
      auto key = p.encode();
      if (!minimals.count(key)) continue;
      if (minlen[key] > 6) continue;
      auto closure = length_preserving_closure(fundamental_element(p));
      std::set<std::vector<long long>> got;
      for (const auto& m : closure) got.insert(canonicalKey(m));
      for (const auto& m : minimals[key]) CHECK(got.count(canonicalKey(m)));
    }
  }
}

TEST_CASE("reduce_to_fundamental") {
  // minimal element of a distinguished class: x = identity
  DPPair p;
  p.type = WeylType::A;
  p.lambda = {{1, 2}, {1, 1}, {1, 0}};
  auto f = fundamental_element(p);
  auto fr = reduce_to_fundamental(f);
  CHECK(fr.x == GroupElement::identity(WeylType::A, 3));
  CHECK(fr.f == f);
  CHECK(!fr.iota_twist);

  // class [(2,0)] in type A n=2: d-image is [(1,0),(1,0)], fundamental element
  // is the identity, and the reduction lands on a length-1 finite part
  const auto& gens = simple_reflections(WeylType::A, 2);
  auto fr2 = reduce_to_fundamental(gens[0]);
  CHECK(fr2.f == GroupElement::identity(WeylType::A, 2));
  CHECK(length(fr2.x) == 1);

  std::mt19937_64 rng(13);
  const std::vector<std::pair<WeylType, int>> groups = {
      {WeylType::A, 2}, {WeylType::A, 3}, {WeylType::B, 2},
      {WeylType::C, 2}, {WeylType::D, 3}};
  int trials = 0;
  while (trials < 60) {
    auto [t, n] = groups[rng() % groups.size()];
    auto w = randomBallElement(t, n, 7, rng);
    auto fr3 = reduce_to_fundamental(w);
    CHECK(classify(fr3.f) == d_map(classify(w)));
    // length additivity of the landing product
    GroupElement target = multiply(fr3.x, fr3.f);
    CHECK(length(target) == finiteLength(t, fr3.x.perm) + length(fr3.f));
    ++trials;
  }
}

TEST_CASE("theorem on reduction to fundamental elements holds exhaustively at rank 2") {
  // distinguished classes of types A, B, C: every element of length ≤ 6
  // reduces by plain simple conjugation (no omega moves) to the fundamental
  // element of its class
  for (WeylType t : {WeylType::A, WeylType::B, WeylType::C}) {
    std::map<std::vector<long long>, GroupElement> fund;
    for (const auto& p : enumerate_classes(t, 2, 2)) {
      if (!is_distinguished(p)) continue;
      // type C: a distinguished class needs both ∼-representatives
      // distinguished, which forces an empty mu
      if (t == WeylType::C && !p.mu.empty()) continue;
      fund[p.encode()] = fundamental_element(p);
    }
    const auto& gens = simple_reflections(t, 2);
    for (const auto& x : integral_ball(t, 2, 6)) {
      auto key = classify(x).encode();
      auto it = fund.find(key);
      if (it == fund.end()) continue;
      // BFS over non-increasing simple conjugations only
      std::set<std::vector<long long>> seen;
      std::vector<GroupElement> frontier = {x};
      seen.insert(canonicalKey(x));
      bool reached = false;
      auto targetKey = canonicalKey(it->second);
      while (!frontier.empty() && !reached) {
        std::vector<GroupElement> next;
        for (const auto& y : frontier) {
          if (canonicalKey(y) == targetKey) {
            reached = true;
            break;
          }
          long long ly = length(y);
          for (const auto& s : gens) {
            auto z = conjugate(s, y);
            if (length(z) > ly) continue;
            if (seen.insert(canonicalKey(z)).second) next.push_back(z);
          }
        }
        frontier = next;
      }
      CHECK(reached);
    }
  }
}

TEST_CASE("coxeter translations reduce to the finite coxeter element") {
  // w̃ = t^χ · (coxeter of W) inside W_a reduces to length = l(coxeter)
  std::mt19937_64 rng(17);
  const std::vector<std::pair<WeylType, int>> groups = {
      {WeylType::A, 3}, {WeylType::B, 2}, {WeylType::C, 2}, {WeylType::D, 3}};
  for (auto [t, n] : groups) {
    int finRank = (t == WeylType::A) ? n - 1 : n;
    // a coxeter element of the finite Weyl group
    GroupElement cox = GroupElement::identity(t, n);
    const auto& gens = simple_reflections(t, n);
    for (int j = 1; j <= finRank; ++j) cox = multiply(cox, gens[j]);
    for (int k = 0; k < 20; ++k) {
      GroupElement w = cox;
      for (int i = 0; i < n; ++i) w.trans2[i] = 2 * ((long long)(rng() % 5) - 2);
      // keep w inside the affine Weyl group
      if (cosetTag(w) != 0) continue;
      auto [m, path] = reduce_to_minimal(w);
      CHECK(length(m) == finRank);
    }
  }
}

TEST_CASE("integral balls are closed and correctly graded") {
  for (auto [t, n] : std::vector<std::pair<WeylType, int>>{
           {WeylType::A, 2}, {WeylType::B, 2}, {WeylType::C, 2}, {WeylType::D, 3}}) {
    auto ball = integral_ball(t, n, 5);
    std::set<std::vector<long long>> keys;
    for (const auto& x : ball) {
      CHECK(x.isIntegral());
      CHECK(length(x) <= 5);
      keys.insert(canonicalKey(x));
    }
    CHECK(keys.size() == ball.size());
    // downward closure: any element of length < 5 has all its s-neighbors of
    // length ≤ 5 in the ball
    const auto& gens = simple_reflections(t, n);
    for (const auto& x : ball) {
      if (length(x) >= 5) continue;
      for (const auto& s : gens) CHECK(keys.count(canonicalKey(multiply(s, x))));
    }
  }
}
