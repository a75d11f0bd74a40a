#pragma once

#include <map>
#include <optional>
#include <vector>

#include "affweyl/conj_classes.hpp"
#include "affweyl/weyl_core.hpp"

namespace affweyl {

// Polynomial in ξ = v - v⁻¹ with integer coefficients.
class XiPoly {
 public:
  XiPoly() = default;
  explicit XiPoly(std::vector<long long> coeffs);
  static XiPoly zero() { return XiPoly(); }
  static XiPoly one() { return XiPoly({1}); }
  static XiPoly xi() { return XiPoly({0, 1}); }

  bool isZero() const { return coeffs_.empty(); }
  int degree() const { return (int)coeffs_.size() - 1; }  // -1 for zero
  long long at(int k) const {
    return (k >= 0 && k < (int)coeffs_.size()) ? coeffs_[k] : 0;
  }
  long long constantTerm() const { return at(0); }
  const std::vector<long long>& coeffs() const { return coeffs_; }

  XiPoly operator+(const XiPoly& o) const;
  XiPoly operator*(const XiPoly& o) const;
  bool operator==(const XiPoly&) const = default;

 private:
  std::vector<long long> coeffs_;  // coeffs_[k] = coefficient of ξᵏ, trimmed
};

struct ClassPolyTable {
  GroupElement element;
  std::map<DPPair, XiPoly> entries;  // zero polynomials are not stored
};

// Class polynomials by the length-reduction recursion
// f_{w,O} = ξ f_{w₁s,O} + f_{sw₁s,O}, with the pivot (w₁, s) located by the
// canonical breadth-first search over length-preserving conjugations.
ClassPolyTable class_polynomials(const GroupElement& w);

// Recompute the table under `trials` seeded random search orders; true iff
// every run reproduces the canonical table.
bool path_independence_probe(const GroupElement& w, int trials,
                             unsigned long long seed = 20240601ULL);

// Verify (T_s - v)(T_s + v⁻¹) = 0 and T_s⁻¹ = T_s - ξ for s = s_i in the left
// regular action on basis elements of bounded length, plus additivity
// T_x T_y = T_{xy} when lengths add, on seeded random samples.
bool hecke_check_quadratic(WeylType t, int n, int i, int samples,
                           unsigned long long seed = 20240601ULL);

}  // namespace affweyl
