#include "affweyl/weyl_core.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace affweyl {

char weylTypeChar(WeylType t) {
  switch (t) {
    case WeylType::A: return 'A';
    case WeylType::B: return 'B';
    case WeylType::C: return 'C';
    case WeylType::D: return 'D';
  }
  throw std::invalid_argument("bad WeylType");
}

WeylType weylTypeFromChar(char c) {
  switch (c) {
    case 'A': return WeylType::A;
    case 'B': return WeylType::B;
    case 'C': return WeylType::C;
    case 'D': return WeylType::D;
  }
  throw std::invalid_argument(std::string("bad Weyl type: ") + c);
}

void checkRank(WeylType t, int n) {
  int minRank = (t == WeylType::D) ? 3 : 2;
  if (n < minRank)
    throw std::invalid_argument("rank too small for type " + std::string(1, weylTypeChar(t)));
}

// ---------------------------------------------------------------------------
// SignedPerm

SignedPerm SignedPerm::identity(int n) {
  SignedPerm p;
  p.n = n;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 1);
  return p;
}

SignedPerm SignedPerm::transposition(int n, int i, int j) {
  SignedPerm p = identity(n);
  p.img[i - 1] = j;
  p.img[j - 1] = i;
  return p;
}

SignedPerm SignedPerm::flip(int n, int i) {
  SignedPerm p = identity(n);
  p.img[i - 1] = -i;
  return p;
}

int SignedPerm::apply(int i) const {
  if (i > 0) return img[i - 1];
  return -img[-i - 1];
}

bool SignedPerm::isValid() const {
  if ((int)img.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : img) {
    int a = std::abs(v);
    if (a < 1 || a > n || seen[a - 1]) return false;
    seen[a - 1] = 1;
  }
  return true;
}

bool SignedPerm::isUnsigned() const {
  return std::all_of(img.begin(), img.end(), [](int v) { return v > 0; });
}

int SignedPerm::signFlips() const {
  return (int)std::count_if(img.begin(), img.end(), [](int v) { return v < 0; });
}

bool SignedPerm::isIdentity() const {
  for (int i = 1; i <= n; ++i)
    if (img[i - 1] != i) return false;
  return true;
}

SignedPerm SignedPerm::compose(const SignedPerm& o) const {
  SignedPerm r;
  r.n = n;
  r.img.resize(n);
  for (int i = 1; i <= n; ++i) r.img[i - 1] = apply(o.apply(i));
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r;
  r.n = n;
  r.img.resize(n);
  for (int i = 1; i <= n; ++i) {
    int j = img[i - 1];
    r.img[std::abs(j) - 1] = (j > 0) ? i : -i;
  }
  return r;
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement GroupElement::identity(WeylType t, int n) {
  GroupElement x;
  x.type = t;
  x.n = n;
  x.trans2.assign(n, 0);
  x.perm = SignedPerm::identity(n);
  return x;
}

GroupElement GroupElement::translation(WeylType t, int n, const std::vector<long long>& trans2) {
  GroupElement x = identity(t, n);
  x.trans2 = trans2;
  if (!x.isValid()) throw std::invalid_argument("invalid translation for type");
  return x;
}

GroupElement GroupElement::fromPerm(WeylType t, const SignedPerm& p) {
  GroupElement x = identity(t, p.n);
  x.perm = p;
  if (!x.isValid()) throw std::invalid_argument("invalid permutation for type");
  return x;
}

bool GroupElement::isValid() const {
  if (n <= 0 || (int)trans2.size() != n || !perm.isValid() || perm.n != n) return false;
  auto even = [](long long v) { return v % 2 == 0; };
  switch (type) {
    case WeylType::A:
      return perm.isUnsigned() && std::all_of(trans2.begin(), trans2.end(), even);
    case WeylType::B:
      return std::all_of(trans2.begin(), trans2.end(), even);
    case WeylType::C:
    case WeylType::D: {
      bool par = ((trans2[0] % 2) + 2) % 2;
      for (long long v : trans2)
        if ((((v % 2) + 2) % 2) != (par ? 1 : 0)) return false;
      return true;
    }
  }
  return false;
}

bool GroupElement::isIntegral() const {
  return std::all_of(trans2.begin(), trans2.end(), [](long long v) { return v % 2 == 0; });
}

std::vector<long long> GroupElement::encode() const {
  std::vector<long long> k;
  k.reserve(2 + 2 * n);
  k.push_back((long long)type);
  k.push_back(n);
  for (long long v : trans2) k.push_back(v);
  for (int v : perm.img) k.push_back(v);
  return k;
}

bool encodeLess(const GroupElement& a, const GroupElement& b) {
  return a.encode() < b.encode();
}

void checkSameGroup(const GroupElement& x, const GroupElement& y) {
  if (x.type != y.type || x.n != y.n)
    throw std::invalid_argument("elements live in different groups");
}

std::vector<long long> permAct(const SignedPerm& p, const std::vector<long long>& v) {
  std::vector<long long> out(v.size(), 0);
  for (int i = 1; i <= p.n; ++i) {
    int j = p.img[i - 1];
    out[std::abs(j) - 1] = (j > 0) ? v[i - 1] : -v[i - 1];
  }
  return out;
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  checkSameGroup(x, y);
  GroupElement z;
  z.type = x.type;
  z.n = x.n;
  z.trans2 = permAct(x.perm, y.trans2);
  for (int i = 0; i < x.n; ++i) z.trans2[i] += x.trans2[i];
  z.perm = x.perm.compose(y.perm);
  return z;
}

GroupElement inverse(const GroupElement& x) {
  GroupElement z;
  z.type = x.type;
  z.n = x.n;
  SignedPerm pinv = x.perm.inverse();
  std::vector<long long> neg(x.trans2);
  for (auto& v : neg) v = -v;
  z.trans2 = permAct(pinv, neg);
  z.perm = pinv;
  return z;
}

GroupElement conjugate(const GroupElement& g, const GroupElement& x) {
  return multiply(multiply(g, x), inverse(g));
}

// ---------------------------------------------------------------------------
// Roots

static std::vector<Root> buildPositiveRoots(WeylType t, int n) {
  std::vector<Root> roots;
  auto root = [n](std::initializer_list<std::pair<int, int>> terms) {
    Root r(n, 0);
    for (auto [idx, c] : terms) r[idx] = c;
    return r;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) roots.push_back(root({{i, 1}, {j, -1}}));
  if (t == WeylType::A) return roots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) roots.push_back(root({{i, 1}, {j, 1}}));
  if (t == WeylType::B)
    for (int i = 0; i < n; ++i) roots.push_back(root({{i, 1}}));
  if (t == WeylType::C)
    for (int i = 0; i < n; ++i) roots.push_back(root({{i, 2}}));
  return roots;
}

const std::vector<Root>& positiveRoots(WeylType t, int n) {
  static std::map<std::pair<int, int>, std::vector<Root>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair((int)t, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, buildPositiveRoots(t, n)).first;
  return it->second;
}

std::vector<Root> simpleRoots(WeylType t, int n) {
  std::vector<Root> out;
  for (int i = 0; i + 1 < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    r[i + 1] = -1;
    out.push_back(r);
  }
  Root last(n, 0);
  switch (t) {
    case WeylType::A: return out;
    case WeylType::B: last[n - 1] = 1; break;
    case WeylType::C: last[n - 1] = 2; break;
    case WeylType::D:
      last[n - 2] = 1;
      last[n - 1] = 1;
      break;
  }
  out.push_back(last);
  return out;
}

Root highestRoot(WeylType t, int n) {
  Root r(n, 0);
  switch (t) {
    case WeylType::A: r[0] = 1; r[n - 1] = -1; break;
    case WeylType::B:
    case WeylType::D: r[0] = 1; r[1] = 1; break;
    case WeylType::C: r[0] = 2; break;
  }
  return r;
}

bool rootPositive(const Root& r) {
  for (int c : r) {
    if (c > 0) return true;
    if (c < 0) return false;
  }
  throw std::invalid_argument("zero root");
}

Root rootImage(const SignedPerm& p, const Root& r) {
  Root out(r.size(), 0);
  for (int i = 0; i < (int)r.size(); ++i) {
    if (r[i] == 0) continue;
    int j = p.apply(i + 1);
    out[std::abs(j) - 1] += (j > 0) ? r[i] : -r[i];
  }
  return out;
}

SignedPerm rootReflection(int n, const Root& r) {
  int i = -1, j = -1;
  for (int k = 0; k < n; ++k)
    if (r[k] != 0) (i < 0 ? i : j) = k;
  if (j < 0) return SignedPerm::flip(n, i + 1);  // e_i or 2e_i
  if (r[i] * r[j] < 0) return SignedPerm::transposition(n, i + 1, j + 1);
  // e_i + e_j: i ↦ -j, j ↦ -i
  SignedPerm p = SignedPerm::identity(n);
  p.img[i] = -(j + 1);
  p.img[j] = -(i + 1);
  return p;
}

long long pairing2(const std::vector<long long>& trans2, const Root& r) {
  long long s = 0;
  for (int i = 0; i < (int)r.size(); ++i) s += trans2[i] * r[i];
  return s;
}

long long pairingExact(const std::vector<long long>& trans2, const Root& r) {
  long long p2 = pairing2(trans2, r);
  if (p2 % 2 != 0) throw std::invalid_argument("non-integral coweight-root pairing");
  return p2 / 2;
}

// ---------------------------------------------------------------------------
// Length

static GroupElement iotaElement(int n) {
  GroupElement x = GroupElement::identity(WeylType::D, n);
  x.perm = SignedPerm::flip(n, n);
  return x;
}

static long long imLength(WeylType t, int n, const std::vector<long long>& trans2,
                          const SignedPerm& perm) {
  SignedPerm pinv = perm.inverse();
  long long total = 0;
  for (const Root& alpha : positiveRoots(t, n)) {
    long long h = pairingExact(trans2, alpha);
    if (rootPositive(rootImage(pinv, alpha)))
      total += std::llabs(h);
    else
      total += std::llabs(h - 1);
  }
  return total;
}

long long length(const GroupElement& x) {
  if (x.type == WeylType::D && x.perm.signFlips() % 2 != 0) {
    GroupElement y = multiply(x, iotaElement(x.n));
    return imLength(WeylType::D, x.n, y.trans2, y.perm);
  }
  return imLength(x.type, x.n, x.trans2, x.perm);
}

long long finiteLength(WeylType t, const SignedPerm& p) {
  std::vector<long long> zero(p.n, 0);
  return imLength(t, p.n, zero, p);
}

// ---------------------------------------------------------------------------
// Simple reflections and length-zero elements

static std::vector<GroupElement> buildSimpleReflections(WeylType t, int n) {
  checkRank(t, n);
  std::vector<GroupElement> out;
  Root theta = highestRoot(t, n);
  GroupElement s0 = GroupElement::identity(t, n);
  // θ∨ = 2θ/(θ,θ): types A, B, D have θ = e_1±e_j-shaped (θ∨ = θ); type C has
  // θ = 2e_1 with θ∨ = e_1.
  for (int i = 0; i < n; ++i)
    s0.trans2[i] = (t == WeylType::C) ? theta[i] : 2LL * theta[i];
  s0.perm = rootReflection(n, theta);
  out.push_back(s0);
  for (const Root& alpha : simpleRoots(t, n))
    out.push_back(GroupElement::fromPerm(t, rootReflection(n, alpha)));
  return out;
}

const std::vector<GroupElement>& simple_reflections(WeylType t, int n) {
  static std::map<std::pair<int, int>, std::vector<GroupElement>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair((int)t, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, buildSimpleReflections(t, n)).first;
  return it->second;
}

SignedPerm longestParabolic(WeylType t, int n, const std::vector<int>& gens) {
  std::vector<SignedPerm> refl;
  auto simples = simpleRoots(t, n);
  for (int j : gens) {
    if (j < 1 || j > (int)simples.size()) throw std::invalid_argument("bad generator index");
    refl.push_back(rootReflection(n, simples[j - 1]));
  }
  SignedPerm w = SignedPerm::identity(n);
  long long lw = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const SignedPerm& s : refl) {
      SignedPerm ws = w.compose(s);
      long long l2 = finiteLength(t, ws);
      if (l2 > lw) {
        w = ws;
        lw = l2;
        grew = true;
      }
    }
  }
  return w;
}

static std::vector<int> allFiniteGens(WeylType t, int n) {
  int rank = (t == WeylType::A) ? n - 1 : n;
  std::vector<int> g(rank);
  std::iota(g.begin(), g.end(), 1);
  return g;
}

// τ_r = t^{ω_r} w_{S-{r}} w_S for a minuscule fundamental coweight ω_r.
static GroupElement tauElement(WeylType t, int n, int r, const std::vector<long long>& omega2) {
  std::vector<int> gens = allFiniteGens(t, n);
  std::vector<int> sub;
  for (int j : gens)
    if (j != r) sub.push_back(j);
  SignedPerm w = longestParabolic(t, n, sub).compose(longestParabolic(t, n, gens));
  GroupElement x;
  x.type = t;
  x.n = n;
  x.trans2 = omega2;
  x.perm = w;
  return x;
}

static std::pair<std::vector<GroupElement>, std::vector<std::string>> buildOmega(WeylType t,
                                                                                 int n) {
  checkRank(t, n);
  std::vector<GroupElement> elts;
  std::vector<std::string> names;
  std::vector<long long> v(n, 0);
  switch (t) {
    case WeylType::A: {
      std::fill(v.begin(), v.end(), 2);
      elts.push_back(GroupElement::translation(t, n, v));
      names.push_back("t_one");
      for (int r = 1; r < n; ++r) {
        std::vector<long long> w2(n, 0);
        std::fill(w2.begin(), w2.begin() + r, 2);
        elts.push_back(tauElement(t, n, r, w2));
        names.push_back("tau_" + std::to_string(r));
      }
      break;
    }
    case WeylType::B: {
      v[0] = 2;
      elts.push_back(tauElement(t, n, 1, v));
      names.push_back("tau_1");
      break;
    }
    case WeylType::C: {
      std::fill(v.begin(), v.end(), 1);
      elts.push_back(tauElement(t, n, n, v));
      names.push_back("tau_" + std::to_string(n));
      break;
    }
    case WeylType::D: {
      v[0] = 2;
      elts.push_back(tauElement(t, n, 1, v));
      names.push_back("tau_1");
      std::vector<long long> half(n, 1);
      half[n - 1] = -1;
      elts.push_back(tauElement(t, n, n - 1, half));
      names.push_back("tau_" + std::to_string(n - 1));
      std::fill(half.begin(), half.end(), 1);
      elts.push_back(tauElement(t, n, n, half));
      names.push_back("tau_" + std::to_string(n));
      elts.push_back(iotaElement(n));
      names.push_back("iota");
      break;
    }
  }
  return {elts, names};
}

static const std::pair<std::vector<GroupElement>, std::vector<std::string>>& omegaData(
    WeylType t, int n) {
  static std::map<std::pair<int, int>,
                  std::pair<std::vector<GroupElement>, std::vector<std::string>>>
      cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair((int)t, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, buildOmega(t, n)).first;
  return it->second;
}

const std::vector<GroupElement>& omega_elements(WeylType t, int n) {
  return omegaData(t, n).first;
}

const std::vector<std::string>& omega_names(WeylType t, int n) {
  return omegaData(t, n).second;
}

// ---------------------------------------------------------------------------
// Coset tag, Bruhat order, reduced words

long long cosetTag(const GroupElement& x) {
  long long sum2 = std::accumulate(x.trans2.begin(), x.trans2.end(), 0LL);
  switch (x.type) {
    case WeylType::A:
      return sum2 / 2;  // coset of ⟨s_0,…,s_{n-1}⟩ ↔ total translation
    case WeylType::B:
      return ((sum2 / 2) % 2 + 2) % 2;
    case WeylType::C:
      return ((x.trans2[0] % 2) + 2) % 2;
    case WeylType::D: {
      long long par = ((x.trans2[0] % 2) + 2) % 2;
      long long iota = x.perm.signFlips() % 2;
      long long lattice;
      if (par == 0)
        lattice = ((sum2 / 2) % 2 + 2) % 2;  // 0 or e_1-class
      else
        lattice = 2 + ((((sum2 - x.n) / 2) % 2 + 2) % 2);  // ω- or ω'-class
      return lattice * 2 + iota;
    }
  }
  throw std::invalid_argument("bad type");
}

bool bruhat_leq(const GroupElement& x, const GroupElement& y) {
  checkSameGroup(x, y);
  if (cosetTag(x) != cosetTag(y)) return false;
  GroupElement u = x, w = y;
  const auto& gens = simple_reflections(x.type, x.n);
  while (true) {
    if (u == w) return true;
    long long lw = length(w);
    long long lu = length(u);
    if (lu >= lw) return false;
    int pick = -1;
    for (int i = 0; i < (int)gens.size(); ++i) {
      if (length(multiply(gens[i], w)) < lw) {
        pick = i;
        break;
      }
    }
    if (pick < 0) throw std::logic_error("positive-length element without descent");
    GroupElement su = multiply(gens[pick], u);
    if (length(su) < lu) u = su;
    w = multiply(gens[pick], w);
  }
}

ReducedWord reduced_word(const GroupElement& x) {
  ReducedWord out;
  GroupElement cur = x;
  const auto& gens = simple_reflections(x.type, x.n);
  long long l = length(cur);
  std::vector<int> rev;
  while (l > 0) {
    bool found = false;
    for (int i = 0; i < (int)gens.size(); ++i) {
      GroupElement nxt = multiply(cur, gens[i]);
      long long l2 = length(nxt);
      if (l2 < l) {
        rev.push_back(i);
        cur = nxt;
        l = l2;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("positive-length element without right descent");
  }
  out.omega_part = cur;
  out.word.assign(rev.rbegin(), rev.rend());
  return out;
}

std::vector<long long> twoRho(WeylType t, int n) {
  std::vector<long long> r(n, 0);
  for (const Root& alpha : positiveRoots(t, n))
    for (int i = 0; i < n; ++i) r[i] += alpha[i];
  return r;
}

std::string formatElement(const GroupElement& x) {
  std::ostringstream os;
  os << weylTypeChar(x.type) << x.n << " t^[";
  for (int i = 0; i < x.n; ++i) {
    if (i) os << ",";
    if (x.trans2[i] % 2 == 0)
      os << x.trans2[i] / 2;
    else
      os << x.trans2[i] << "/2";
  }
  os << "](";
  for (int i = 0; i < x.n; ++i) {
    if (i) os << ",";
    os << x.perm.img[i];
  }
  os << ")";
  return os.str();
}

}  // namespace affweyl
