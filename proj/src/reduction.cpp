#include "affweyl/reduction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>

namespace affweyl {

GroupElement replay(const ReductionPath& path) {
  GroupElement cur = path.start;
  for (const auto& st : path.steps) {
    if (st.simple >= 0)
      cur = conjugate(simple_reflections(cur.type, cur.n)[st.simple], cur);
    else
      cur = conjugate(omega_conjugators(cur.type, cur.n)[st.omega], cur);
  }
  return cur;
}

std::pair<GroupElement, long long> conj_step(const GroupElement& w, int i) {
  const auto& gens = simple_reflections(w.type, w.n);
  if (i < 0 || i >= (int)gens.size()) throw std::invalid_argument("bad reflection index");
  GroupElement w2 = conjugate(gens[i], w);
  return {w2, length(w2) - length(w)};
}

std::vector<GroupElement> omega_conjugators(WeylType t, int n) {
  std::vector<GroupElement> out;
  const auto& omegas = omega_elements(t, n);
  const auto& names = omega_names(t, n);
  for (size_t k = 0; k < omegas.size(); ++k)
    if (names[k] != "t_one") out.push_back(omegas[k]);
  return out;
}

GroupElement normalize_central(const GroupElement& x) {
  if (x.type != WeylType::A) return x;
  long long sum2 = std::accumulate(x.trans2.begin(), x.trans2.end(), 0LL);
  long long sum = sum2 / 2;
  long long a = (sum >= 0) ? sum / x.n : -((-sum + x.n - 1) / x.n);
  GroupElement y = x;
  for (auto& v : y.trans2) v -= 2 * a;
  return y;
}

std::vector<long long> canonicalKey(const GroupElement& x) {
  return normalize_central(x).encode();
}

// ---------------------------------------------------------------------------
// Canonical component search shared by reduce_to_minimal, is_terminal and the
// class-polynomial pivot: breadth-first over length-preserving conjugations,
// levels processed in encoding order, neighbors by ascending simple index then
// omega order. The first strictly decreasing simple step found is reported.

namespace {

struct ComponentScan {
  bool foundDrop = false;
  GroupElement pivot;      // element with the decreasing step
  int pivotIndex = -1;     // simple reflection index
  std::vector<GroupElement> component;  // visited elements (unspecified order)
  std::map<std::vector<long long>, std::pair<std::vector<long long>, ReductionStep>>
      parent;  // child key -> (parent key, step)
};

ComponentScan scanComponent(const GroupElement& w, bool useOmega) {
  ComponentScan res;
  const auto& gens = simple_reflections(w.type, w.n);
  auto conjs = useOmega ? omega_conjugators(w.type, w.n) : std::vector<GroupElement>{};
  long long lw = length(w);
  std::map<std::vector<long long>, GroupElement> visited;
  visited[canonicalKey(w)] = w;
  std::vector<GroupElement> level = {w};
  while (!level.empty()) {
    std::sort(level.begin(), level.end(), encodeLess);
    std::vector<GroupElement> next;
    for (const auto& x : level) {
      for (int i = 0; i < (int)gens.size(); ++i) {
        GroupElement y = conjugate(gens[i], x);
        long long ly = length(y);
        if (ly < lw) {
          res.foundDrop = true;
          res.pivot = x;
          res.pivotIndex = i;
          for (auto& [k, v] : visited) res.component.push_back(v);
          return res;
        }
        if (ly > lw) continue;
        auto key = canonicalKey(y);
        if (visited.emplace(key, y).second) {
          res.parent[key] = {canonicalKey(x), ReductionStep{i, -1, lw, lw}};
          next.push_back(y);
        }
      }
      for (int k = 0; k < (int)conjs.size(); ++k) {
        GroupElement y = conjugate(conjs[k], x);
        auto key = canonicalKey(y);
        if (visited.emplace(key, y).second) {
          res.parent[key] = {canonicalKey(x), ReductionStep{-1, k, lw, lw}};
          next.push_back(y);
        }
      }
    }
    level = std::move(next);
  }
  for (auto& [k, v] : visited) res.component.push_back(v);
  return res;
}

void appendPathTo(const ComponentScan& scan, const GroupElement& start,
                  const GroupElement& target, ReductionPath& path) {
  std::vector<ReductionStep> chain;
  auto key = canonicalKey(target);
  auto startKey = canonicalKey(start);
  while (key != startKey) {
    auto it = scan.parent.find(key);
    if (it == scan.parent.end()) throw std::logic_error("broken parent chain");
    chain.push_back(it->second.second);
    key = it->second.first;
  }
  std::reverse(chain.begin(), chain.end());
  for (auto& st : chain) path.steps.push_back(st);
}

}  // namespace

std::pair<GroupElement, ReductionPath> reduce_to_minimal(const GroupElement& w) {
  if (!w.isIntegral())
    throw std::invalid_argument("reduction requires an integral element");
  ReductionPath path;
  path.start = w;
  GroupElement cur = w;
  while (true) {
    ComponentScan scan = scanComponent(cur, true);
    if (!scan.foundDrop) break;
    appendPathTo(scan, cur, scan.pivot, path);
    long long before = length(scan.pivot);
    cur = conjugate(simple_reflections(cur.type, cur.n)[scan.pivotIndex], scan.pivot);
    path.steps.push_back(ReductionStep{scan.pivotIndex, -1, before, length(cur)});
  }
  path.end = cur;
  return {cur, path};
}

bool is_terminal(const GroupElement& w) {
  return !scanComponent(w, false).foundDrop;
}

BruteForceResult brute_force_min(const GroupElement& w, size_t node_budget) {
  if (!w.isIntegral())
    throw std::invalid_argument("brute force search requires an integral element");
  const long long cap = length(w);
  const auto& gens = simple_reflections(w.type, w.n);
  auto conjs = omega_conjugators(w.type, w.n);
  std::map<std::vector<long long>, GroupElement> visited;
  std::queue<GroupElement> q;
  visited[canonicalKey(w)] = w;
  q.push(w);
  long long best = cap;
  while (!q.empty()) {
    GroupElement x = q.front();
    q.pop();
    auto expand = [&](const GroupElement& y) {
      if (length(y) > cap) return;
      auto key = canonicalKey(y);
      if (!visited.emplace(key, y).second) return;
      if (visited.size() > node_budget) throw BudgetError("brute_force_min node budget exceeded");
      q.push(y);
    };
    for (const auto& s : gens) expand(conjugate(s, x));
    for (const auto& om : conjs) expand(conjugate(om, x));
  }
  BruteForceResult res;
  for (auto& [k, v] : visited) best = std::min(best, length(v));
  res.min_length = best;
  for (auto& [k, v] : visited)
    if (length(v) == best) res.minimal_elements.push_back(v);
  std::sort(res.minimal_elements.begin(), res.minimal_elements.end(), encodeLess);
  return res;
}

// ---------------------------------------------------------------------------
// Ball enumeration

std::vector<GroupElement> integral_length_zero(WeylType t, int n) {
  checkRank(t, n);
  std::vector<GroupElement> seeds = {GroupElement::identity(t, n)};
  const auto& omegas = omega_elements(t, n);
  const auto& names = omega_names(t, n);
  switch (t) {
    case WeylType::A:
      for (size_t k = 0; k < omegas.size(); ++k)
        if (names[k] != "t_one") seeds.push_back(normalize_central(omegas[k]));
      break;
    case WeylType::B:
      seeds.push_back(omegas[0]);
      break;
    case WeylType::C:
      break;  // integral part of type C is the affine Weyl group itself
    case WeylType::D: {
      GroupElement tau1, iota;
      for (size_t k = 0; k < omegas.size(); ++k) {
        if (names[k] == "tau_1") tau1 = omegas[k];
        if (names[k] == "iota") iota = omegas[k];
      }
      seeds.push_back(tau1);
      seeds.push_back(iota);
      seeds.push_back(multiply(tau1, iota));
      break;
    }
  }
  std::sort(seeds.begin(), seeds.end(), encodeLess);
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  return seeds;
}

std::vector<GroupElement> integral_ball(WeylType t, int n, long long maxlen) {
  const auto& gens = simple_reflections(t, n);
  std::map<std::vector<long long>, GroupElement> visited;
  std::queue<GroupElement> q;
  for (const auto& s : integral_length_zero(t, n)) {
    visited[canonicalKey(s)] = s;
    q.push(s);
  }
  while (!q.empty()) {
    GroupElement x = q.front();
    q.pop();
    for (const auto& s : gens) {
      GroupElement y = normalize_central(multiply(s, x));
      if (length(y) > maxlen) continue;
      if (visited.emplace(canonicalKey(y), y).second) q.push(y);
    }
  }
  std::vector<GroupElement> out;
  out.reserve(visited.size());
  for (auto& [k, v] : visited) out.push_back(v);
  std::sort(out.begin(), out.end(), encodeLess);
  return out;
}

// ---------------------------------------------------------------------------
// Strong conjugation certificate search

bool strong_conj_connected(const std::vector<GroupElement>& ws, long long budget) {
  if (ws.size() <= 1) return true;
  const GroupElement& w0 = ws.front();
  for (const auto& w : ws)
    if (length(w) != length(w0)) throw std::invalid_argument("mixed lengths");
  std::map<std::vector<long long>, size_t> index;
  for (size_t i = 0; i < ws.size(); ++i) index[canonicalKey(ws[i])] = i;
  std::vector<size_t> uf(ws.size());
  std::iota(uf.begin(), uf.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t a) {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  };
  auto join = [&](size_t a, size_t b) { uf[find(a)] = find(b); };

  std::vector<GroupElement> conjugators = integral_ball(w0.type, w0.n, budget);
  // half-integral length-zero elements also witness strong conjugation
  for (const auto& om : omega_conjugators(w0.type, w0.n)) conjugators.push_back(om);

  for (size_t i = 0; i < ws.size(); ++i) {
    long long lw = length(ws[i]);
    for (const auto& x : conjugators) {
      long long lx = length(x);
      if (lx > budget) continue;
      bool additive = (length(multiply(x, ws[i])) == lx + lw) ||
                      (length(multiply(ws[i], inverse(x))) == lx + lw);
      if (!additive) continue;
      GroupElement y = conjugate(x, ws[i]);
      if (length(y) != lw) continue;
      auto it = index.find(canonicalKey(y));
      if (it != index.end()) join(i, it->second);
    }
  }
  size_t root = find(0);
  for (size_t i = 1; i < ws.size(); ++i)
    if (find(i) != root) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Reduction to fundamental elements

namespace {

// x ∈ W_J for the standard parabolic generated by {s_j : j ∈ J}?
bool inParabolic(const GroupElement& x, const std::vector<int>& J, WeylType t, int n) {
  if (std::any_of(x.trans2.begin(), x.trans2.end(), [](long long v) { return v != 0; }))
    return false;
  const auto& gens = simple_reflections(t, n);
  GroupElement cur = x;
  long long l = finiteLength(t, cur.perm);
  while (l > 0) {
    bool moved = false;
    for (int j : J) {
      GroupElement nxt = multiply(gens[j], cur);
      long long l2 = finiteLength(t, nxt.perm);
      if (l2 < l) {
        cur = nxt;
        l = l2;
        moved = true;
        break;
      }
    }
    if (!moved) return false;
  }
  return cur.perm.isIdentity();
}

}  // namespace

FundamentalReduction reduce_to_fundamental(const GroupElement& w) {
  if (!w.isIntegral())
    throw std::invalid_argument("reduction requires an integral element");
  DPPair label = classify(w);
  DPPair target = d_map(label);
  GroupElement f = fundamental_element(target);
  GroupElement fInv = inverse(f);
  std::vector<int> J = pairing_set(f);
  long long lf = length(f);

  GroupElement iota = GroupElement::identity(w.type, w.n);
  bool tryIota = false;
  if (w.type == WeylType::D && a_seq(f, w.n).isZero()) {
    iota.perm = SignedPerm::flip(w.n, w.n);
    tryIota = true;
  }

  auto tryTarget = [&](const GroupElement& y, FundamentalReduction& out) {
    GroupElement x = multiply(y, fInv);
    if (inParabolic(x, J, w.type, w.n) && length(y) == finiteLength(w.type, x.perm) + lf) {
      out.x = x;
      out.f = f;
      out.iota_twist = false;
      return true;
    }
    if (tryIota) {
      GroupElement x2 = multiply(multiply(y, iota), fInv);
      if (inParabolic(x2, J, w.type, w.n) &&
          length(y) == finiteLength(w.type, x2.perm) + lf) {
        out.x = x2;
        out.f = f;
        out.iota_twist = true;
        return true;
      }
    }
    return false;
  };

  // BFS over the non-increasing conjugation closure of w.
  std::map<std::vector<long long>, GroupElement> visited;
  std::vector<GroupElement> level = {w};
  visited[canonicalKey(w)] = w;
  const auto& gens = simple_reflections(w.type, w.n);
  auto conjs = omega_conjugators(w.type, w.n);
  FundamentalReduction out;
  while (!level.empty()) {
    std::sort(level.begin(), level.end(), encodeLess);
    std::vector<GroupElement> next;
    for (const auto& x : level) {
      if (tryTarget(x, out)) return out;
      long long lx = length(x);
      auto push = [&](const GroupElement& y) {
        if (length(y) > lx) return;
        if (visited.emplace(canonicalKey(y), y).second) next.push_back(y);
      };
      for (const auto& s : gens) push(conjugate(s, x));
      for (const auto& om : conjs) push(conjugate(om, x));
    }
    level = std::move(next);
  }
  throw std::logic_error("no fundamental target reached in non-increasing closure");
}

std::vector<GroupElement> length_preserving_closure(const GroupElement& w) {
  ComponentScan scan = scanComponent(w, true);
  std::vector<GroupElement> out = scan.component;
  std::sort(out.begin(), out.end(), encodeLess);
  return out;
}

long long class_min_length(const DPPair& p) {
  static std::map<std::vector<long long>, long long> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p.encode());
    if (it != cache.end()) return it->second;
  }
  long long v = length(reduce_to_minimal(standard_element(p)).first);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(p.encode(), v);
  return v;
}

}  // namespace affweyl
