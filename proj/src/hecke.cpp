#include "affweyl/hecke.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "affweyl/reduction.hpp"

namespace affweyl {

XiPoly::XiPoly(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

XiPoly XiPoly::operator+(const XiPoly& o) const {
  std::vector<long long> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t k = 0; k < c.size(); ++k) c[k] = at((int)k) + o.at((int)k);
  return XiPoly(std::move(c));
}

XiPoly XiPoly::operator*(const XiPoly& o) const {
  if (isZero() || o.isZero()) return XiPoly();
  std::vector<long long> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return XiPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Pivot search over the length-preserving component

namespace {

// Smallest canonical key over the closure of conjugation by length-zero
// generators; class polynomial tables are constant on these orbits.
std::vector<long long> omegaNormalKey(const GroupElement& x) {
  auto conjs = omega_conjugators(x.type, x.n);
  std::set<std::vector<long long>> seen;
  std::vector<GroupElement> frontier = {x};
  seen.insert(canonicalKey(x));
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& y : frontier)
      for (const auto& om : conjs) {
        auto z = conjugate(om, y);
        if (seen.insert(canonicalKey(z)).second) next.push_back(z);
      }
    frontier = std::move(next);
  }
  return *seen.begin();
}

struct Pivot {
  GroupElement w1;
  int simple = -1;
};

// Breadth-first over length-preserving conjugations; the first strictly
// decreasing simple conjugation found is the pivot. Deterministic canonical
// order when rng is null, shuffled order otherwise.
std::optional<Pivot> findPivot(const GroupElement& w, std::mt19937_64* rng) {
  const auto& gens = simple_reflections(w.type, w.n);
  auto conjs = omega_conjugators(w.type, w.n);
  long long lw = length(w);
  std::set<std::vector<long long>> visited;
  visited.insert(canonicalKey(w));
  std::vector<GroupElement> level = {w};
  while (!level.empty()) {
    if (rng)
      std::shuffle(level.begin(), level.end(), *rng);
    else
      std::sort(level.begin(), level.end(), encodeLess);
    std::vector<GroupElement> next;
    for (const auto& x : level) {
      std::vector<int> order(gens.size());
      std::iota(order.begin(), order.end(), 0);
      if (rng) std::shuffle(order.begin(), order.end(), *rng);
      for (int i : order) {
        GroupElement y = conjugate(gens[i], x);
        long long ly = length(y);
        if (ly < lw) return Pivot{x, i};
        if (ly > lw) continue;
        if (visited.insert(canonicalKey(y)).second) next.push_back(y);
      }
      for (const auto& om : conjs) {
        GroupElement y = conjugate(om, x);
        if (visited.insert(canonicalKey(y)).second) next.push_back(y);
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

std::map<DPPair, XiPoly> tableFor(const GroupElement& w, std::mt19937_64* rng,
                                  std::map<std::vector<long long>, std::map<DPPair, XiPoly>>& memo) {
  auto key = omegaNormalKey(w);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::map<DPPair, XiPoly> table;
  auto pivot = findPivot(w, rng);
  if (!pivot) {
    table[classify(w)] = XiPoly::one();
  } else {
    const auto& gens = simple_reflections(w.type, w.n);
    GroupElement w1s = multiply(pivot->w1, gens[pivot->simple]);
    GroupElement sw1s = multiply(gens[pivot->simple], w1s);
    auto t1 = tableFor(w1s, rng, memo);
    auto t2 = tableFor(sw1s, rng, memo);
    for (auto& [cls, poly] : t1) table[cls] = table[cls] + XiPoly::xi() * poly;
    for (auto& [cls, poly] : t2) table[cls] = table[cls] + poly;
    for (auto itx = table.begin(); itx != table.end();)
      itx = itx->second.isZero() ? table.erase(itx) : std::next(itx);
  }
  memo.emplace(key, table);
  return table;
}

}  // namespace

ClassPolyTable class_polynomials(const GroupElement& w) {
  if (!w.isIntegral())
    throw std::invalid_argument("class polynomials require an integral element");
  ClassPolyTable res;
  res.element = w;
  std::map<std::vector<long long>, std::map<DPPair, XiPoly>> memo;
  res.entries = tableFor(w, nullptr, memo);
  return res;
}

bool path_independence_probe(const GroupElement& w, int trials, unsigned long long seed) {
  auto canonical = class_polynomials(w).entries;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed + (unsigned long long)t);
    std::map<std::vector<long long>, std::map<DPPair, XiPoly>> memo;
    if (tableFor(w, &rng, memo) != canonical) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Hecke relations in the left regular action

namespace {

using HeckeElt = std::map<std::vector<long long>, std::pair<GroupElement, XiPoly>>;

void addTerm(HeckeElt& h, const GroupElement& w, const XiPoly& p) {
  auto key = w.encode();
  auto it = h.find(key);
  if (it == h.end()) {
    if (!p.isZero()) h.emplace(key, std::make_pair(w, p));
    return;
  }
  it->second.second = it->second.second + p;
  if (it->second.second.isZero()) h.erase(it);
}

// T_{s_i} · h
HeckeElt leftMulGen(WeylType t, int n, int i, const HeckeElt& h) {
  const auto& gens = simple_reflections(t, n);
  HeckeElt out;
  for (const auto& [key, termPair] : h) {
    const auto& [w, p] = termPair;
    GroupElement sw = multiply(gens[i], w);
    if (length(sw) > length(w)) {
      addTerm(out, sw, p);
    } else {
      // T_s T_w = T_{sw} + ξ T_w when sw < w
      addTerm(out, sw, p);
      addTerm(out, w, XiPoly::xi() * p);
    }
  }
  return out;
}

HeckeElt basis(const GroupElement& w) {
  HeckeElt h;
  addTerm(h, w, XiPoly::one());
  return h;
}

}  // namespace

bool hecke_check_quadratic(WeylType t, int n, int i, int samples, unsigned long long seed) {
  const auto& gens = simple_reflections(t, n);
  if (i < 0 || i >= (int)gens.size()) throw std::invalid_argument("bad reflection index");
  std::mt19937_64 rng(seed);
  auto seeds = integral_length_zero(t, n);
  auto randomElt = [&](long long maxlen) {
    GroupElement x = seeds[rng() % seeds.size()];
    for (int s = 0; s < 24; ++s) {
      auto y = multiply(gens[rng() % gens.size()], x);
      if (length(y) <= maxlen) x = y;
    }
    return x;
  };
  for (int k = 0; k < samples; ++k) {
    GroupElement w = randomElt(6);
    HeckeElt tw = basis(w);
    // quadratic relation: T_s (T_s T_w) = T_w + ξ (T_s T_w)
    HeckeElt stw = leftMulGen(t, n, i, tw);
    HeckeElt lhs = leftMulGen(t, n, i, stw);
    HeckeElt rhs = tw;
    for (const auto& [key, termPair] : stw)
      addTerm(rhs, termPair.first, XiPoly::xi() * termPair.second);
    if (lhs != rhs) return false;
    // inverse: (T_s - ξ)(T_s T_w) = T_w
    HeckeElt inv = leftMulGen(t, n, i, stw);
    for (const auto& [key, termPair] : stw)
      addTerm(inv, termPair.first, XiPoly({-1}) * (XiPoly::xi() * termPair.second));
    if (inv != tw) return false;
    // additivity: T_x T_w = T_{xw} when lengths add
    GroupElement x = randomElt(4);
    if (length(multiply(x, w)) == length(x) + length(w)) {
      auto rw = reduced_word(x);
      HeckeElt prod = tw;
      for (auto itw = rw.word.rbegin(); itw != rw.word.rend(); ++itw)
        prod = leftMulGen(t, n, *itw, prod);
      // multiply by the length-zero part on the left
      HeckeElt shifted;
      for (const auto& [key, termPair] : prod)
        addTerm(shifted, multiply(rw.omega_part, termPair.first), termPair.second);
      if (shifted != basis(multiply(x, w))) return false;
    }
  }
  return true;
}

}  // namespace affweyl
