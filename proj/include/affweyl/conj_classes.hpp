#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "affweyl/weyl_core.hpp"

namespace affweyl {

// Purely periodic integer sequence, stored as its minimal period.
// Lexicographic comparison of two periodic sequences is decided within
// lcm(p1, p2) terms.
class PeriodicSeq {
 public:
  PeriodicSeq() : period_{0} {}
  explicit PeriodicSeq(std::vector<long long> period);
  static PeriodicSeq constant(long long v) { return PeriodicSeq({v}); }

  const std::vector<long long>& period() const { return period_; }
  long long at(size_t k) const { return period_[k % period_.size()]; }
  bool isZero() const { return period_.size() == 1 && period_[0] == 0; }
  PeriodicSeq negated() const;

  int compare(const PeriodicSeq& o) const;  // -1, 0, +1
  bool operator==(const PeriodicSeq& o) const { return period_ == o.period_; }
  bool operator<(const PeriodicSeq& o) const { return compare(o) < 0; }
  bool operator>(const PeriodicSeq& o) const { return compare(o) > 0; }
  bool operator<=(const PeriodicSeq& o) const { return compare(o) <= 0; }
  bool operator>=(const PeriodicSeq& o) const { return compare(o) >= 0; }

 private:
  std::vector<long long> period_;
};

// Label of an integral conjugacy class: a pair of double partitions.
// lambda entries (b, c) with b ≥ 1, sorted descending lexicographically;
// mu entries have c ∈ {0, 1} ("special"). For types B, C, D lambda is
// positive; for types C and D the stored representative of the class
// {(λ̃, μ̃), (λ̃, μ̲̃)} is the one with lexicographically larger μ̃.
struct DPPair {
  WeylType type = WeylType::A;
  std::vector<std::pair<int, long long>> lambda;
  std::vector<std::pair<int, int>> mu;

  int totalRank() const;
  std::vector<long long> encode() const;
  bool operator==(const DPPair&) const = default;
  bool operator<(const DPPair& o) const { return encode() < o.encode(); }
};

void sortDP(DPPair& p);
void checkDPPair(const DPPair& p, int n);
// For C/D: replace mu by the lexicographically larger of mu, 1-mu.
DPPair canonicalDP(DPPair p);
std::vector<std::pair<int, int>> barMu(const std::vector<std::pair<int, int>>& mu);

// ā_i(w̃) = (a_i, a_{σ⁻¹(i)}, a_{σ⁻²(i)}, …) with a_{-j} = -a_j.
PeriodicSeq a_seq(const GroupElement& w, int i);

bool is_quasi_positive(const GroupElement& w);
bool is_in_W_set(const GroupElement& w);

// Greatest J ⊆ S with s_j w = w s_{j'} pairing inside J; w must be minimal in
// its W-coset. Indices are finite-Weyl generator indices (1-based).
std::vector<int> I_of(const GroupElement& w);
// Same fixed-point computation without the coset-minimality check. Needed for
// fundamental elements of classes with repeated special mu-blocks, which are
// minimal in their class but can carry finite descents.
std::vector<int> pairing_set(const GroupElement& w);
bool isCosetMinimal(const GroupElement& w);

// χ_{n,m}: entry i is ⌈im/n⌉ - ⌈(i-1)m/n⌉; chi_nm_rev is its reversal χ'_{n,m}.
std::vector<long long> chi_nm(int n, long long m);
std::vector<long long> chi_nm_rev(int n, long long m);

GroupElement standard_element(const DPPair& p);
GroupElement fundamental_element(const DPPair& p);
bool is_distinguished(const DPPair& p);
DPPair classify(const GroupElement& w);

// c_i = 1 iff ā_i(w) ≥ θ; w must be quasi-positive, θ must have positive
// leading entry.
std::vector<int> e_theta(const GroupElement& w, const PeriodicSeq& theta);
GroupElement p_operator(const GroupElement& w, const PeriodicSeq& theta);

// The unique quasi-positive element in the (ℤ/2ℤ)ⁿ-conjugacy class.
GroupElement quasiPositiveRep(const GroupElement& w);

// w̃_{n,m} = t^{χ'_{n,m}} (1 2 ⋯ n) and the sign-flipped variant w̃'_{n,m}
// (requires m = 0 or m | n). Returned with the given type tag.
std::pair<GroupElement, GroupElement> block_elements(int n, long long m,
                                                     WeylType t = WeylType::B);
GroupElement block_element_plain(int n, long long m, WeylType t = WeylType::B);

DPPair d_map(const DPPair& p);
DPPair d_prime_map(const DPPair& p);

// gamma2 = doubled dominant coweight; w = t^χ u with χ dominant.
bool is_minuscule_for(const std::vector<long long>& gamma2, const GroupElement& w);

long long ev0(const GroupElement& w);
std::pair<long long, long long> ev1(const GroupElement& w);

// Extreme θ for the block-reduction exploration: the a-sequences of w whose
// leading entry equals M = max(a_1, …, a_n, 1), plus the lower bound
// (M, -M-1, -M-1, …), which selects exactly the indices with a_i = M.
struct ThetaCandidate {
  bool floor = false;
  PeriodicSeq theta;
};
std::vector<ThetaCandidate> extreme_theta_candidates(const GroupElement& w);
GroupElement p_operator_extreme(const GroupElement& w, const ThetaCandidate& th);

// Signed orbit of σ through i (the walk i, σ(i), σ²(i), …).
struct SignedOrbit {
  std::vector<int> walk;  // signed indices, starts at a positive representative
  bool selfNegating = false;
};
std::vector<SignedOrbit> signedOrbits(const SignedPerm& p);

// All class labels for the given type and rank with |c| bounded; canonical
// representatives only, sorted by encoding.
std::vector<DPPair> enumerate_classes(WeylType t, int n, long long cmax);

}  // namespace affweyl
