#include "affweyl/conj_classes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace affweyl {

// ---------------------------------------------------------------------------
// PeriodicSeq

PeriodicSeq::PeriodicSeq(std::vector<long long> period) {
  if (period.empty()) throw std::invalid_argument("empty period");
  size_t len = period.size();
  for (size_t d = 1; d <= len; ++d) {
    if (len % d != 0) continue;
    bool ok = true;
    for (size_t k = d; k < len && ok; ++k) ok = (period[k] == period[k % d]);
    if (ok) {
      period.resize(d);
      break;
    }
  }
  period_ = std::move(period);
}

PeriodicSeq PeriodicSeq::negated() const {
  std::vector<long long> p(period_);
  for (auto& v : p) v = -v;
  return PeriodicSeq(p);
}

int PeriodicSeq::compare(const PeriodicSeq& o) const {
  size_t horizon = std::lcm(period_.size(), o.period_.size());
  for (size_t k = 0; k < horizon; ++k) {
    long long a = at(k), b = o.at(k);
    if (a != b) return a < b ? -1 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// DPPair

int DPPair::totalRank() const {
  int n = 0;
  for (auto& [b, c] : lambda) n += b;
  for (auto& [b, c] : mu) n += b;
  return n;
}

std::vector<long long> DPPair::encode() const {
  std::vector<long long> k;
  k.push_back((long long)type);
  k.push_back((long long)lambda.size());
  for (auto& [b, c] : lambda) {
    k.push_back(b);
    k.push_back(c);
  }
  for (auto& [b, c] : mu) {
    k.push_back(b);
    k.push_back(c);
  }
  return k;
}

void sortDP(DPPair& p) {
  auto desc = [](auto& a, auto& b) { return a > b; };
  std::sort(p.lambda.begin(), p.lambda.end(), desc);
  std::sort(p.mu.begin(), p.mu.end(), desc);
}

void checkDPPair(const DPPair& p, int n) {
  if (p.totalRank() != n) throw std::invalid_argument("double partition ranks do not sum to n");
  if (!std::is_sorted(p.lambda.begin(), p.lambda.end(), std::greater<>()) ||
      !std::is_sorted(p.mu.begin(), p.mu.end(), std::greater<>()))
    throw std::invalid_argument("double partition entries not sorted");
  for (auto& [b, c] : p.lambda) {
    if (b < 1) throw std::invalid_argument("lambda entry with b < 1");
    if (p.type != WeylType::A && c < 0)
      throw std::invalid_argument("lambda must be positive for types B, C, D");
  }
  if (p.type == WeylType::A && !p.mu.empty())
    throw std::invalid_argument("type A classes have empty mu");
  for (auto& [b, c] : p.mu) {
    if (b < 1 || (c != 0 && c != 1)) throw std::invalid_argument("mu must be special");
  }
}

std::vector<std::pair<int, int>> barMu(const std::vector<std::pair<int, int>>& mu) {
  std::vector<std::pair<int, int>> out(mu);
  for (auto& [b, c] : out) c = 1 - c;
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

DPPair canonicalDP(DPPair p) {
  sortDP(p);
  if (p.type == WeylType::C || p.type == WeylType::D) {
    auto other = barMu(p.mu);
    if (other > p.mu) p.mu = other;
  }
  return p;
}

// ---------------------------------------------------------------------------
// a-sequences and orbits

static long long transAt(const GroupElement& w, int j) {
  long long v = w.trans2[std::abs(j) - 1];
  if (v % 2 != 0) throw std::invalid_argument("a-sequence requires an integral element");
  return (j > 0) ? v / 2 : -v / 2;
}

PeriodicSeq a_seq(const GroupElement& w, int i) {
  if (i == 0 || std::abs(i) > w.n) throw std::invalid_argument("index out of range");
  if (!w.isIntegral()) throw std::invalid_argument("a-sequence requires an integral element");
  SignedPerm pinv = w.perm.inverse();
  std::vector<long long> seq;
  int j = i;
  do {
    seq.push_back(transAt(w, j));
    j = pinv.apply(j);
  } while (j != i);
  return PeriodicSeq(seq);
}

std::vector<SignedOrbit> signedOrbits(const SignedPerm& p) {
  std::vector<char> seen(p.n, 0);
  std::vector<SignedOrbit> out;
  for (int i = 1; i <= p.n; ++i) {
    if (seen[i - 1]) continue;
    SignedOrbit o;
    int j = i;
    do {
      o.walk.push_back(j);
      seen[std::abs(j) - 1] = 1;
      j = p.apply(j);
      if (j == -i) o.selfNegating = true;
    } while (j != i);
    out.push_back(std::move(o));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quasi-positivity and the subset of coset-minimal products

bool is_quasi_positive(const GroupElement& w) {
  if (!w.isIntegral()) throw std::invalid_argument("quasi-positivity requires integral element");
  for (int i = 1; i <= w.n; ++i)
    if (a_seq(w, i) < PeriodicSeq::constant(0)) return false;
  // zero orbits: sign flips may only enter the largest index of the orbit
  SignedPerm pinv = w.perm.inverse();
  for (const auto& o : signedOrbits(w.perm)) {
    int rep = std::abs(o.walk.front());
    if (!a_seq(w, rep).isZero()) continue;
    int maxAbs = 0;
    for (int j : o.walk) maxAbs = std::max(maxAbs, std::abs(j));
    for (int j : o.walk) {
      int aj = std::abs(j);
      if (aj < maxAbs && pinv.apply(aj) < 0) return false;
    }
  }
  return true;
}

bool is_in_W_set(const GroupElement& w) {
  SignedPerm pinv = w.perm.inverse();
  for (const Root& alpha : positiveRoots(w.type, w.n)) {
    Root beta = alpha;
    long long first = 0;
    do {
      long long v = pairingExact(w.trans2, beta);
      if (v != 0) {
        first = v;
        break;
      }
      beta = rootImage(pinv, beta);
    } while (beta != alpha);
    if (first < 0) return false;
  }
  return true;
}

bool isCosetMinimal(const GroupElement& w) {
  const auto& gens = simple_reflections(w.type, w.n);
  long long l = length(w);
  for (size_t j = 1; j < gens.size(); ++j)
    if (length(multiply(gens[j], w)) < l) return false;
  return true;
}

std::vector<int> I_of(const GroupElement& w) {
  if (!isCosetMinimal(w))
    throw std::invalid_argument("I(w) requires a minimal coset representative");
  return pairing_set(w);
}

std::vector<int> pairing_set(const GroupElement& w) {
  const auto& gens = simple_reflections(w.type, w.n);
  std::vector<int> J;
  for (size_t j = 1; j < gens.size(); ++j) J.push_back((int)j);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> keep;
    for (int j : J) {
      GroupElement sw = multiply(gens[j], w);
      bool paired = false;
      for (int jp : J) {
        if (sw == multiply(w, gens[jp])) {
          paired = true;
          break;
        }
      }
      if (paired)
        keep.push_back(j);
      else
        changed = true;
    }
    J = keep;
  }
  return J;
}

// ---------------------------------------------------------------------------
// χ_{n,m} and block elements

static long long ceilDiv(long long a, long long b) {
  // b > 0
  return (a >= 0) ? (a + b - 1) / b : -((-a) / b);
}

std::vector<long long> chi_nm(int n, long long m) {
  if (n < 1) throw std::invalid_argument("chi_nm requires n >= 1");
  std::vector<long long> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = ceilDiv((long long)i * m, n) - ceilDiv((long long)(i - 1) * m, n);
  return v;
}

std::vector<long long> chi_nm_rev(int n, long long m) {
  auto v = chi_nm(n, m);
  std::reverse(v.begin(), v.end());
  return v;
}

GroupElement block_element_plain(int n, long long m, WeylType t) {
  GroupElement x = GroupElement::identity(t, n);
  auto chi = chi_nm_rev(n, m);
  for (int i = 0; i < n; ++i) x.trans2[i] = 2 * chi[i];
  for (int i = 1; i < n; ++i) x.perm.img[i - 1] = i + 1;
  x.perm.img[n - 1] = 1;
  if (!x.isValid()) throw std::invalid_argument("invalid block element for type");
  return x;
}

std::pair<GroupElement, GroupElement> block_elements(int n, long long m, WeylType t) {
  if (t == WeylType::A) throw std::invalid_argument("sign-flipped block needs type B, C or D");
  if (m != 0 && (m < 0 || n % m != 0))
    throw std::invalid_argument("sign-flipped block requires m = 0 or m | n");
  GroupElement plain = block_element_plain(n, m, t);
  GroupElement primed = plain;
  std::set<int> flips;
  if (m == 0) {
    flips.insert(n);  // w̃'_{n,0} = (n,-n)(1 2 ⋯ n)
    std::fill(primed.trans2.begin(), primed.trans2.end(), 0);
  } else {
    for (long long k = 1; k <= m; ++k) flips.insert((int)(k * (n / m)));
  }
  for (int i = 0; i < n; ++i)
    if (flips.count(std::abs(primed.perm.img[i]))) primed.perm.img[i] = -primed.perm.img[i];
  return {plain, primed};
}

// ---------------------------------------------------------------------------
// classify / standard / fundamental

DPPair classify(const GroupElement& w) {
  if (!w.isIntegral()) throw std::invalid_argument("classify requires an integral element");
  DPPair p;
  p.type = w.type;
  for (const auto& o : signedOrbits(w.perm)) {
    long long s = 0;
    if (o.selfNegating) {
      int b = (int)o.walk.size() / 2;
      for (int k = 0; k < b; ++k) s += transAt(w, o.walk[k]);
      p.mu.push_back({b, (int)(((s % 2) + 2) % 2)});
    } else {
      for (int j : o.walk) s += transAt(w, j);
      if (w.type != WeylType::A) s = std::llabs(s);
      p.lambda.push_back({(int)o.walk.size(), s});
    }
  }
  return canonicalDP(p);
}

GroupElement standard_element(const DPPair& p) {
  int n = p.totalRank();
  checkDPPair(p, n);
  GroupElement x = GroupElement::identity(p.type, n);
  int pos = 0;  // 0-based block start
  auto placeBlock = [&](int b, long long c, bool negative) {
    auto chi = chi_nm_rev(b, c);
    for (int k = 0; k < b; ++k) x.trans2[pos + k] = 2 * chi[k];
    for (int k = 0; k + 1 < b; ++k) x.perm.img[pos + k] = pos + k + 2;
    x.perm.img[pos + b - 1] = pos + 1;
    if (negative) {
      // compose the flip (pos+b, -(pos+b)) after the cycle
      for (int k = 0; k < b; ++k)
        if (std::abs(x.perm.img[pos + k]) == pos + b) x.perm.img[pos + k] = -(pos + b);
    }
    pos += b;
  };
  for (auto& [b, c] : p.lambda) placeBlock(b, c, false);
  for (auto& [b, c] : p.mu) placeBlock(b, c, true);
  if (!x.isValid()) throw std::invalid_argument("invalid double-partition pair for type");
  return x;
}

bool is_distinguished(const DPPair& p) {
  for (auto& [b, c] : p.lambda)
    if (std::gcd((long long)b, std::llabs(c)) != 1) return false;
  for (auto& [b, c] : p.mu)
    if (c != 1) return false;
  return true;
}

GroupElement fundamental_element(const DPPair& p) {
  if (!is_distinguished(p))
    throw std::invalid_argument("fundamental element requires a distinguished pair");
  GroupElement st = standard_element(p);
  int n = st.n;
  std::vector<PeriodicSeq> seq;
  seq.reserve(n);
  for (int i = 1; i <= n; ++i) seq.push_back(a_seq(st, i));
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return seq[a] > seq[b]; });
  SignedPerm tau = SignedPerm::identity(n);
  for (int k = 0; k < n; ++k) tau.img[idx[k]] = k + 1;
  return conjugate(GroupElement::fromPerm(st.type, tau), st);
}

// ---------------------------------------------------------------------------
// e_θ and P-operators

std::vector<int> e_theta(const GroupElement& w, const PeriodicSeq& theta) {
  if (theta.at(0) <= 0) throw std::invalid_argument("theta needs a positive leading entry");
  if (!is_quasi_positive(w)) throw std::invalid_argument("e_theta requires a quasi-positive element");
  std::vector<int> e(w.n, 0);
  for (int i = 1; i <= w.n; ++i) e[i - 1] = (a_seq(w, i) >= theta) ? 1 : 0;
  return e;
}

GroupElement quasiPositiveRep(const GroupElement& y) {
  if (!y.isIntegral())
    throw std::invalid_argument("quasi-positive representative requires integral element");
  int n = y.n;
  std::vector<int> eps(n, 1);
  for (const auto& o : signedOrbits(y.perm)) {
    int rep = std::abs(o.walk.front());
    if (!a_seq(y, rep).isZero()) {
      for (int j : o.walk) {
        int aj = std::abs(j);
        eps[aj - 1] = (a_seq(y, aj) > PeriodicSeq::constant(0)) ? 1 : -1;
      }
      continue;
    }
    // zero orbit: arrange so that the conjugate walk from the largest index is
    // positive along a half-period (self-negating) or everywhere (paired)
    int maxAbs = 0;
    for (int j : o.walk) maxAbs = std::max(maxAbs, std::abs(j));
    std::vector<int> walk = o.walk;
    size_t start = 0;
    while (std::abs(walk[start]) != maxAbs) ++start;
    std::rotate(walk.begin(), walk.begin() + start, walk.end());
    if (walk[0] < 0)
      for (auto& j : walk) j = -j;
    size_t half = o.selfNegating ? walk.size() / 2 : walk.size();
    for (size_t k = 0; k < half; ++k) eps[std::abs(walk[k]) - 1] = (walk[k] > 0) ? 1 : -1;
  }
  SignedPerm e = SignedPerm::identity(n);
  for (int i = 0; i < n; ++i) e.img[i] = eps[i] * (i + 1);
  if (y.type == WeylType::A) {
    if (!e.isIdentity())
      throw std::invalid_argument("no quasi-positive representative inside type A");
    return y;
  }
  GroupElement r = conjugate(GroupElement::fromPerm(y.type, e), y);
  if (!is_quasi_positive(r))
    throw std::logic_error("quasi-positive normalization failed");
  return r;
}

GroupElement p_operator(const GroupElement& w, const PeriodicSeq& theta) {
  std::vector<int> e = e_theta(w, theta);
  std::vector<long long> e2(w.n);
  for (int i = 0; i < w.n; ++i) e2[i] = -2LL * e[i];
  GroupElement tNegE = GroupElement::translation(w.type, w.n, e2);
  return quasiPositiveRep(conjugate(tNegE, w));
}

std::vector<ThetaCandidate> extreme_theta_candidates(const GroupElement& w) {
  if (!is_quasi_positive(w))
    throw std::invalid_argument("extreme thetas require a quasi-positive element");
  long long mx = 1;
  for (long long v : w.trans2) mx = std::max(mx, v / 2);
  std::vector<ThetaCandidate> out;
  std::set<std::vector<long long>> seen;
  for (int i = 1; i <= w.n; ++i) {
    PeriodicSeq s = a_seq(w, i);
    if (s.at(0) == mx && seen.insert(s.period()).second) out.push_back({false, s});
  }
  std::sort(out.begin(), out.end(),
            [](const ThetaCandidate& a, const ThetaCandidate& b) {
              return a.theta.period() < b.theta.period();
            });
  out.push_back({true, PeriodicSeq({mx, -mx - 1})});
  return out;
}

GroupElement p_operator_extreme(const GroupElement& w, const ThetaCandidate& th) {
  if (!th.floor) return p_operator(w, th.theta);
  if (!is_quasi_positive(w))
    throw std::invalid_argument("P-operator requires a quasi-positive element");
  long long mx = 1;
  for (long long v : w.trans2) mx = std::max(mx, v / 2);
  std::vector<long long> e2(w.n, 0);
  for (int i = 0; i < w.n; ++i) e2[i] = (w.trans2[i] / 2 == mx) ? -2 : 0;
  GroupElement tNegE = GroupElement::translation(w.type, w.n, e2);
  return quasiPositiveRep(conjugate(tNegE, w));
}

// ---------------------------------------------------------------------------
// d-maps

DPPair d_map(const DPPair& p) {
  DPPair out;
  out.type = p.type;
  for (auto& [b, c] : p.lambda) {
    long long g = (c == 0) ? b : std::gcd((long long)b, std::llabs(c));
    for (long long k = 0; k < g; ++k) out.lambda.push_back({(int)(b / g), c / g});
  }
  for (auto& [b, c] : p.mu) {
    if (c == 0)
      for (int k = 0; k < b; ++k) out.lambda.push_back({1, 0});
    else
      out.mu.push_back({b, c});
  }
  sortDP(out);
  return out;
}

DPPair d_prime_map(const DPPair& p) {
  DPPair q = d_map(p);
  DPPair r;
  r.type = q.type;
  r.lambda = q.lambda;
  r.mu = barMu(q.mu);
  return d_map(r);
}

// ---------------------------------------------------------------------------
// minuscule test, ev statistics

bool is_minuscule_for(const std::vector<long long>& gamma2, const GroupElement& w) {
  const auto& pos = positiveRoots(w.type, w.n);
  for (const Root& alpha : pos) {
    if (pairingExact(gamma2, alpha) < 0)
      throw std::invalid_argument("gamma must be dominant");
    if (pairingExact(w.trans2, alpha) < 0)
      throw std::invalid_argument("w must have dominant translation part");
  }
  SignedPerm pinv = w.perm.inverse();
  for (const Root& alpha : pos) {
    if (pairingExact(gamma2, alpha) < 2) continue;
    long long diff = pairingExact(w.trans2, alpha) - pairingExact(gamma2, alpha);
    long long bound = rootPositive(rootImage(pinv, alpha)) ? -1 : 0;
    if (diff < bound) return false;
  }
  return true;
}

long long ev0(const GroupElement& w) {
  if (!is_quasi_positive(w)) throw std::invalid_argument("ev0 requires a quasi-positive element");
  long long s = 0;
  for (long long v : w.trans2) s += v / 2;
  return s;
}

std::pair<long long, long long> ev1(const GroupElement& w) {
  if (!is_quasi_positive(w)) throw std::invalid_argument("ev1 requires a quasi-positive element");
  long long mx = 0;
  for (long long v : w.trans2) mx = std::max(mx, v / 2);
  long long cnt = 0;
  for (long long v : w.trans2)
    if (v / 2 == mx) ++cnt;
  return {mx, cnt};
}

// ---------------------------------------------------------------------------
// class enumeration

std::vector<DPPair> enumerate_classes(WeylType t, int n, long long cmax) {
  std::vector<std::pair<int, long long>> lamEntries;
  long long lo = (t == WeylType::A) ? -cmax : 0;
  for (int b = 1; b <= n; ++b)
    for (long long c = lo; c <= cmax; ++c) lamEntries.push_back({b, c});
  std::sort(lamEntries.begin(), lamEntries.end(), std::greater<>());
  std::vector<std::pair<int, int>> muEntries;
  if (t != WeylType::A)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c >= 0; --c) muEntries.push_back({b, c});

  std::set<DPPair> out;
  std::vector<std::pair<int, long long>> lam;
  std::vector<std::pair<int, int>> mu;

  std::function<void(size_t, int)> genMu = [&](size_t i, int rem) {
    if (rem == 0) {
      DPPair p;
      p.type = t;
      p.lambda = lam;
      p.mu = mu;
      out.insert(canonicalDP(p));
      return;
    }
    for (size_t j = i; j < muEntries.size(); ++j) {
      if (muEntries[j].first > rem) continue;
      mu.push_back(muEntries[j]);
      genMu(j, rem - muEntries[j].first);
      mu.pop_back();
    }
  };
  std::function<void(size_t, int)> genLam = [&](size_t i, int rem) {
    genMu(0, rem);
    for (size_t j = i; j < lamEntries.size(); ++j) {
      if (lamEntries[j].first > rem) continue;
      lam.push_back(lamEntries[j]);
      genLam(j, rem - lamEntries[j].first);
      lam.pop_back();
    }
  };
  if (t == WeylType::A) {
    std::function<void(size_t, int)> genA = [&](size_t i, int rem) {
      if (rem == 0) {
        DPPair p;
        p.type = t;
        p.lambda = lam;
        out.insert(canonicalDP(p));
        return;
      }
      for (size_t j = i; j < lamEntries.size(); ++j) {
        if (lamEntries[j].first > rem) continue;
        lam.push_back(lamEntries[j]);
        genA(j, rem - lamEntries[j].first);
        lam.pop_back();
      }
    };
    genA(0, n);
  } else {
    genLam(0, n);
  }
  return std::vector<DPPair>(out.begin(), out.end());
}

}  // namespace affweyl
