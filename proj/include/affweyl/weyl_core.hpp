#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace affweyl {

enum class WeylType : int { A = 0, B = 1, C = 2, D = 3 };

char weylTypeChar(WeylType t);
WeylType weylTypeFromChar(char c);

// Raised when a bounded search runs out of its resource budget.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Permutation of {±1, …, ±n} with σ(-i) = -σ(i); img[i-1] = σ(i).
struct SignedPerm {
  int n = 0;
  std::vector<int> img;

  static SignedPerm identity(int n);
  static SignedPerm transposition(int n, int i, int j);  // (i j), 1-based
  static SignedPerm flip(int n, int i);                  // i ↦ -i

  int apply(int i) const;
  bool isValid() const;
  bool isUnsigned() const;  // σ(i) > 0 for all i > 0
  int signFlips() const;    // #{i > 0 : σ(i) < 0}
  bool isIdentity() const;
  SignedPerm compose(const SignedPerm& o) const;  // (this ∘ o)(i) = this(o(i))
  SignedPerm inverse() const;
  bool operator==(const SignedPerm&) const = default;
};

// Element t^χ σ of an extended affine Weyl group of classical type.
// trans2 stores 2χ so half-integral coweights (types C, D) stay in integers.
// For type D, a perm with an odd number of sign flips encodes the coset of
// the length-zero diagram automorphism (n,-n).
struct GroupElement {
  WeylType type = WeylType::A;
  int n = 0;
  std::vector<long long> trans2;
  SignedPerm perm;

  static GroupElement identity(WeylType t, int n);
  static GroupElement translation(WeylType t, int n, const std::vector<long long>& trans2);
  static GroupElement fromPerm(WeylType t, const SignedPerm& p);

  bool isValid() const;
  bool isIntegral() const;  // χ ∈ ℤⁿ
  // Canonical tuple (type, n, trans2, images); lexicographic order on these
  // encodings is the deterministic tie-break used everywhere downstream.
  std::vector<long long> encode() const;
  bool operator==(const GroupElement&) const = default;
};

bool encodeLess(const GroupElement& a, const GroupElement& b);

void checkSameGroup(const GroupElement& x, const GroupElement& y);
void checkRank(WeylType t, int n);

GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupElement& x);
GroupElement conjugate(const GroupElement& g, const GroupElement& x);  // g x g⁻¹

// σ · [a_1,…,a_n] with a_{-i} = -a_i.
std::vector<long long> permAct(const SignedPerm& p, const std::vector<long long>& v);

// Roots as coefficient vectors over e_1, …, e_n.
using Root = std::vector<int>;

const std::vector<Root>& positiveRoots(WeylType t, int n);
std::vector<Root> simpleRoots(WeylType t, int n);
Root highestRoot(WeylType t, int n);
bool rootPositive(const Root& r);
Root rootImage(const SignedPerm& p, const Root& r);
SignedPerm rootReflection(int n, const Root& r);

// ⟨2χ, α⟩ and ⟨χ, α⟩; the latter checks the pairing is an integer.
long long pairing2(const std::vector<long long>& trans2, const Root& r);
long long pairingExact(const std::vector<long long>& trans2, const Root& r);

// Iwahori–Matsumoto length. Type A evaluates on any ℤⁿ representative (the
// sum over type-A roots is invariant under central shifts); type D peels off
// the (n,-n) automorphism first.
long long length(const GroupElement& x);
long long finiteLength(WeylType t, const SignedPerm& p);

// s_0, …, s_{n-1} (type A) or s_0, …, s_n (types B, C, D); s_0 = t^{θ∨} s_θ.
const std::vector<GroupElement>& simple_reflections(WeylType t, int n);

// Generators of the length-zero subgroup modulo central translations:
// type A returns t^{(1,…,1)} and τ_r = t^{ω_r} w_{S-{r}} w_S for 0 < r < n;
// B returns the ω = [1,0,…,0] element; C the ω = [½,…,½] element; D the
// [1,0,…,0] and [½,…,±½] elements plus ι = (n,-n).
const std::vector<GroupElement>& omega_elements(WeylType t, int n);
const std::vector<std::string>& omega_names(WeylType t, int n);

// Longest element of the parabolic subgroup generated by {s_j : j ∈ gens},
// gens ⊆ {1,…,rank of finite Weyl group}.
SignedPerm longestParabolic(WeylType t, int n, const std::vector<int>& gens);

// Bruhat order on the extended group: comparable elements must share the
// W_a-coset; decided by the lifting-property recursion.
bool bruhat_leq(const GroupElement& x, const GroupElement& y);

struct ReducedWord {
  std::vector<int> word;      // x = omega_part · s_{word[0]} · s_{word[1]} ⋯
  GroupElement omega_part;
};
ReducedWord reduced_word(const GroupElement& x);

std::vector<long long> twoRho(WeylType t, int n);

// Exact coset tag of x in W̃^!/W_a (not conjugation-invariant for type D).
long long cosetTag(const GroupElement& x);

std::string formatElement(const GroupElement& x);

}  // namespace affweyl
