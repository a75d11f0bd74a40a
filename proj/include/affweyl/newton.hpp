#pragma once

#include <vector>

#include "affweyl/conj_classes.hpp"
#include "affweyl/weyl_core.hpp"

namespace affweyl {

// Exact rational, normalized with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);
  bool operator==(const Rational&) const = default;
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
};

// Value of the invariant map: dominant Newton point plus the coset tag.
struct NewtonInv {
  std::vector<Rational> point;
  long long omega_coset = 0;

  bool operator==(const NewtonInv&) const = default;
  bool operator<(const NewtonInv& o) const;
};

// Dominant representative of χ/k where w^k is the first pure translation.
std::vector<Rational> newton_point(const GroupElement& w);

// Conjugation-invariant coset tag: type A sums the translation mod n; B mod
// the coroot lattice; C integral/half; D a five-value tag collapsing the
// coset pairs fused by conjugation.
long long eta(const GroupElement& w);

NewtonInv f_invariant(const GroupElement& w);

// l(w) = ⟨ν, 2ρ⟩, equivalently l(wᵏ) = k·l(w) for all k.
bool is_good(const GroupElement& w);

// Order of the finite part (lcm over signed cycles).
long long permOrder(const SignedPerm& p);

// The distinguished class label determined by an invariant value; throws if
// the value is not in the image of f on integral elements.
DPPair distinguished_of_inv(const NewtonInv& inv, WeylType t, int n);

// All class labels in the fiber of f over inv: type A enumerates pairs with
// d(p) fixed, type C pairs with d'(p) fixed.
std::vector<DPPair> fiber_classes(const NewtonInv& inv, WeylType t, int n);

// a ⪯ b iff a minimal-length element of f⁻¹(b) Bruhat-dominates one of
// f⁻¹(a). Types A and C only.
bool preceq(const NewtonInv& a, const NewtonInv& b, WeylType t, int n);

}  // namespace affweyl
