#pragma once

#include <map>
#include <optional>

#include "affweyl/hecke.hpp"
#include "affweyl/newton.hpp"

namespace affweyl {

// Dimension values; an absent optional is -∞ (empty variety).
using Dim = std::optional<long long>;

// max over classes O with f_{w,O} ≠ 0 of
//   ½(l(w) - l(O) + deg f_{w,O}) + base(O),
// where classes absent from the base map contribute -∞.
Dim dim_general(const GroupElement& w, const std::map<DPPair, long long>& base);

// Types A and C: max over O in the fiber of inv of
//   ½(l(w) + l(O) + deg f_{w,O}) - l(f⁻¹(inv)).
Dim dim_typeAC(const GroupElement& w, const NewtonInv& inv);

// Regular coweight case: ½(l(w) + deg f_{w,O} - l(t^mu)) for O the class of
// t^mu; mu must be regular (type A) or regular in the coroot lattice (type C).
Dim dim_regular_coweight(const GroupElement& w, const std::vector<long long>& mu);

// Per-class terms behind the max, for reporting.
struct DimTerm {
  DPPair cls;
  long long class_min_length = 0;
  int deg = -1;
  Dim value;
};
struct DimReport {
  Dim value;
  std::optional<DPPair> argmax;
  std::vector<DimTerm> terms;
};
DimReport dim_typeAC_report(const GroupElement& w, const NewtonInv& inv);
DimReport dim_general_report(const GroupElement& w,
                             const std::map<DPPair, long long>& base);

}  // namespace affweyl
