#include "affweyl/newton.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "affweyl/reduction.hpp"

namespace affweyl {

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(std::llabs(n), d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

bool NewtonInv::operator<(const NewtonInv& o) const {
  if (omega_coset != o.omega_coset) return omega_coset < o.omega_coset;
  if (point.size() != o.point.size()) return point.size() < o.point.size();
  for (size_t i = 0; i < point.size(); ++i) {
    if (!(point[i] == o.point[i])) return point[i] < o.point[i];
  }
  return false;
}

long long permOrder(const SignedPerm& p) {
  long long k = 1;
  for (const auto& o : signedOrbits(p)) k = std::lcm(k, (long long)o.walk.size());
  return k;
}

std::vector<Rational> newton_point(const GroupElement& w) {
  long long k = permOrder(w.perm);
  GroupElement pw = GroupElement::identity(w.type, w.n);
  for (long long i = 0; i < k; ++i) pw = multiply(pw, w);
  if (!pw.perm.isIdentity()) throw std::logic_error("finite-part order computation failed");
  std::vector<Rational> v(w.n);
  for (int i = 0; i < w.n; ++i) v[i] = Rational(pw.trans2[i], 2 * k);
  // dominant representative
  switch (w.type) {
    case WeylType::A:
      std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) { return b < a; });
      break;
    case WeylType::B:
    case WeylType::C:
    case WeylType::D:
      // For D this picks the nonnegative one of the two dominant
      // representatives; the signed choice is not constant on classes of the
      // ι-extended group (ι flips the last coordinate), matching the fused
      // coset tags of eta.
      for (auto& x : v) x.num = std::llabs(x.num);
      std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) { return b < a; });
      break;
  }

  return v;
}

long long eta(const GroupElement& w) {
  long long sum2 = std::accumulate(w.trans2.begin(), w.trans2.end(), 0LL);
  switch (w.type) {
    case WeylType::A:
      return (((sum2 / 2) % w.n) + w.n) % w.n;
    case WeylType::B:
      return (((sum2 / 2) % 2) + 2) % 2;
    case WeylType::C:
      return ((w.trans2[0] % 2) + 2) % 2;
    case WeylType::D: {
      bool half = (w.trans2[0] % 2) != 0;
      bool iota = (w.perm.signFlips() % 2) != 0;
      if (!half && !iota) return (((sum2 / 2) % 2) + 2) % 2;  // 0 or 1
      if (!half && iota) return 2;
      if (half && !iota) return 3;
      return 4;
    }
  }
  throw std::invalid_argument("bad type");
}

NewtonInv f_invariant(const GroupElement& w) {
  return NewtonInv{newton_point(w), eta(w)};
}

bool is_good(const GroupElement& w) {
  auto v = newton_point(w);
  auto rho2 = twoRho(w.type, w.n);
  // ⟨ν, 2ρ⟩ as an exact rational
  long long num = 0, den = 1;
  for (int i = 0; i < w.n; ++i) {
    num = num * v[i].den + v[i].num * rho2[i] * den;
    den *= v[i].den;
    long long g = std::gcd(std::llabs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  return den == 1 && num == length(w);
}

// ---------------------------------------------------------------------------
// fibers

namespace {

struct ValueGroup {
  long long c = 0;  // reduced numerator
  long long b = 1;  // reduced denominator
  int count = 0;    // multiplicity of the value in the Newton point
};

std::vector<ValueGroup> groupPoint(const std::vector<Rational>& point) {
  std::vector<ValueGroup> out;
  for (const auto& q : point) {
    if (!out.empty() && out.back().c == q.num && out.back().b == q.den)
      ++out.back().count;
    else
      out.push_back({q.num, q.den, 1});
  }
  return out;
}

std::vector<std::vector<int>> partitionsOf(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int mx) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, mx); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(k, k);
  return out;
}

}  // namespace

DPPair distinguished_of_inv(const NewtonInv& inv, WeylType t, int n) {
  if (t != WeylType::A && t != WeylType::C)
    throw std::invalid_argument("fibers are available for types A and C only");
  if ((int)inv.point.size() != n) throw std::invalid_argument("point has wrong rank");
  for (size_t i = 1; i < inv.point.size(); ++i)
    if (inv.point[i - 1] < inv.point[i])
      throw std::invalid_argument("point is not dominant");
  DPPair p;
  p.type = t;
  for (const auto& g : groupPoint(inv.point)) {
    if (t == WeylType::C && g.c < 0)
      throw std::invalid_argument("type C Newton points are nonnegative");
    if (g.count % g.b != 0)
      throw std::invalid_argument("invariant value is not in the image of f");
    long long copies = g.count / g.b;
    for (long long k = 0; k < copies; ++k) p.lambda.push_back({(int)g.b, g.c});
  }
  long long s = 0;
  for (auto& [b, c] : p.lambda) s += c;
  if (t == WeylType::A) {
    long long want = ((s % n) + n) % n;
    if (inv.omega_coset != want)
      throw std::invalid_argument("coset tag does not match the Newton point");
  } else {
    if (inv.omega_coset != 0)
      throw std::invalid_argument("invariant value is not integral for type C");
  }
  sortDP(p);
  if (!is_distinguished(p)) throw std::logic_error("fiber base pair not distinguished");
  return p;
}

std::vector<DPPair> fiber_classes(const NewtonInv& inv, WeylType t, int n) {
  DPPair base = distinguished_of_inv(inv, t, n);
  // regroupable value groups of the base pair
  std::map<std::pair<long long, long long>, int> groups;  // (c, b) -> copies
  for (auto& [b, c] : base.lambda) ++groups[{c, b}];

  std::set<DPPair> out;
  if (t == WeylType::A) {
    std::vector<std::vector<std::vector<std::pair<int, long long>>>> choices;
    for (auto& [cb, copies] : groups) {
      auto [c, b] = cb;
      std::vector<std::vector<std::pair<int, long long>>> opts;
      for (const auto& part : partitionsOf(copies)) {
        std::vector<std::pair<int, long long>> entries;
        for (int m : part) entries.push_back({(int)(b * m), c * m});
        opts.push_back(entries);
      }
      choices.push_back(opts);
    }
    std::vector<size_t> idx(choices.size(), 0);
    while (true) {
      DPPair p;
      p.type = t;
      for (size_t i = 0; i < choices.size(); ++i)
        for (auto& e : choices[i][idx[i]]) p.lambda.push_back(e);
      sortDP(p);
      out.insert(p);
      size_t i = 0;
      while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
  } else {
    // type C: d'(λ̃', μ̃) = base ⟺ split(λ̃') ⊔ (1,0)^{|μ̃|} = base.lambda
    int zeros = 0;
    for (auto& [b, c] : base.lambda)
      if (b == 1 && c == 0) ++zeros;
    for (int u = 0; u <= zeros; ++u) {
      // all special mu with Σb = u
      std::vector<std::vector<std::pair<int, int>>> mus;
      std::vector<std::pair<int, int>> cur;
      std::function<void(int, int, int)> recMu = [&](int rem, int maxB, int maxCWithB) {
        if (rem == 0) {
          mus.push_back(cur);
          return;
        }
        for (int b = std::min(rem, maxB); b >= 1; --b)
          for (int c = (b == maxB ? maxCWithB : 1); c >= 0; --c) {
            cur.push_back({b, c});
            recMu(rem - b, b, c);
            cur.pop_back();
          }
      };
      recMu(u, u, 1);
      // lambda regroupings of base minus u zero-entries
      std::map<std::pair<long long, long long>, int> g2 = groups;
      if (u > 0) g2[{0, 1}] -= u;
      std::vector<std::vector<std::vector<std::pair<int, long long>>>> choices;
      for (auto& [cb, copies] : g2) {
        if (copies == 0) continue;
        auto [c, b] = cb;
        std::vector<std::vector<std::pair<int, long long>>> opts;
        for (const auto& part : partitionsOf(copies)) {
          std::vector<std::pair<int, long long>> entries;
          for (int m : part) entries.push_back({(int)(b * m), c * m});
          opts.push_back(entries);
        }
        choices.push_back(opts);
      }
      std::vector<size_t> idx(choices.size(), 0);
      while (true) {
        for (const auto& mu : mus) {
          DPPair p;
          p.type = t;
          for (size_t i = 0; i < choices.size(); ++i)
            for (auto& e : choices[i][idx[i]]) p.lambda.push_back(e);
          p.mu = mu;
          out.insert(canonicalDP(p));
        }
        size_t i = 0;
        while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
      }
    }
  }
  return std::vector<DPPair>(out.begin(), out.end());
}

bool preceq(const NewtonInv& a, const NewtonInv& b, WeylType t, int n) {
  if (t != WeylType::A && t != WeylType::C)
    throw std::invalid_argument("the order is defined for types A and C only");
  DPPair pa = distinguished_of_inv(a, t, n);
  DPPair pb = distinguished_of_inv(b, t, n);
  GroupElement wb = fundamental_element(pb);
  for (const auto& wa : length_preserving_closure(fundamental_element(pa)))
    if (bruhat_leq(wa, wb)) return true;
  return false;
}

}  // namespace affweyl
