#include "affweyl/adlv.hpp"

#include <algorithm>
#include <set>

#include "affweyl/reduction.hpp"

namespace affweyl {

namespace {

long long halfExact(long long v) {
  if (v % 2 != 0) throw std::logic_error("odd dimension numerator; parity invariant violated");
  return v / 2;
}

}  // namespace

DimReport dim_general_report(const GroupElement& w,
                             const std::map<DPPair, long long>& base) {
  if (!w.isIntegral())
    throw std::invalid_argument("dimension formulas require integral elements");
  auto table = class_polynomials(w);
  DimReport rep;
  long long lw = length(w);
  for (const auto& [cls, poly] : table.entries) {
    DimTerm term;
    term.cls = cls;
    term.class_min_length = class_min_length(cls);
    term.deg = poly.degree();
    auto it = base.find(cls);
    if (it != base.end()) {
      term.value = halfExact(lw - term.class_min_length + term.deg) + it->second;
      if (!rep.value || *term.value > *rep.value) {
        rep.value = term.value;
        rep.argmax = cls;
      }
    }
    rep.terms.push_back(term);
  }
  return rep;
}

Dim dim_general(const GroupElement& w, const std::map<DPPair, long long>& base) {
  return dim_general_report(w, base).value;
}

DimReport dim_typeAC_report(const GroupElement& w, const NewtonInv& inv) {
  if (w.type != WeylType::A && w.type != WeylType::C)
    throw std::invalid_argument("this dimension formula covers types A and C");
  if (!w.isIntegral())
    throw std::invalid_argument("dimension formulas require integral elements");
  auto fiber = fiber_classes(inv, w.type, w.n);
  long long fiberMin = length(fundamental_element(distinguished_of_inv(inv, w.type, w.n)));
  auto table = class_polynomials(w);
  DimReport rep;
  long long lw = length(w);
  std::set<DPPair> inFiber(fiber.begin(), fiber.end());
  for (const auto& [cls, poly] : table.entries) {
    if (!inFiber.count(cls)) continue;
    DimTerm term;
    term.cls = cls;
    term.class_min_length = class_min_length(cls);
    term.deg = poly.degree();
    term.value = halfExact(lw + term.class_min_length + term.deg) - fiberMin;
    rep.terms.push_back(term);
    if (!rep.value || *term.value > *rep.value) {
      rep.value = term.value;
      rep.argmax = cls;
    }
  }
  return rep;
}

Dim dim_typeAC(const GroupElement& w, const NewtonInv& inv) {
  return dim_typeAC_report(w, inv).value;
}

Dim dim_regular_coweight(const GroupElement& w, const std::vector<long long>& mu) {
  if (w.type != WeylType::A && w.type != WeylType::C)
    throw std::invalid_argument("regular coweight formula covers types A and C");
  if ((int)mu.size() != w.n) throw std::invalid_argument("coweight rank mismatch");
  if (!w.isIntegral())
    throw std::invalid_argument("dimension formulas require integral elements");
  // regularity: no root pairing vanishes
  std::vector<long long> mu2(mu);
  for (auto& v : mu2) v *= 2;
  for (const Root& alpha : positiveRoots(w.type, w.n))
    if (pairingExact(mu2, alpha) == 0)
      throw std::invalid_argument("coweight is not regular");
  GroupElement tmu = GroupElement::translation(w.type, w.n, mu2);
  DPPair cls = classify(tmu);
  auto table = class_polynomials(w);
  auto it = table.entries.find(cls);
  if (it == table.entries.end()) return std::nullopt;
  return halfExact(length(w) + it->second.degree() - length(tmu));
}

}  // namespace affweyl
