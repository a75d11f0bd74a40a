#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "affweyl/conj_classes.hpp"
#include "affweyl/weyl_core.hpp"

namespace affweyl {

// One conjugation move: either by a simple reflection (simple ≥ 0) or by a
// length-zero generator (omega ≥ 0, index into omega_elements).
struct ReductionStep {
  int simple = -1;
  int omega = -1;
  long long len_before = 0;
  long long len_after = 0;
};

struct ReductionPath {
  GroupElement start, end;
  std::vector<ReductionStep> steps;
};

GroupElement replay(const ReductionPath& path);

// s_i w s_i and the length change (always -2, 0 or +2).
std::pair<GroupElement, long long> conj_step(const GroupElement& w, int i);

// Non-increasing simple conjugations plus length-zero conjugations down to a
// minimal length element of the conjugacy class.
std::pair<GroupElement, ReductionPath> reduce_to_minimal(const GroupElement& w);

// No strictly decreasing simple-conjugation step is reachable through
// length-preserving simple conjugations.
bool is_terminal(const GroupElement& w);

struct BruteForceResult {
  long long min_length = 0;
  std::vector<GroupElement> minimal_elements;  // sorted by encoding
};
// BFS over conjugation by simple reflections and length-zero generators,
// never exceeding length(w). Throws BudgetError past node_budget states.
BruteForceResult brute_force_min(const GroupElement& w, size_t node_budget = 2000000);

// Certificate search: true iff ws is one component under elementary strong
// conjugations with witnesses of length ≤ budget. False means "not found
// within budget", never a refutation.
bool strong_conj_connected(const std::vector<GroupElement>& ws, long long budget);

struct FundamentalReduction {
  GroupElement x;  // element of W_{I(f)}
  GroupElement f;  // fundamental element of d(classify(w)) (d' route built in for C usage)
  bool iota_twist = false;  // type D only: target was x·f·(n,-n)
};
FundamentalReduction reduce_to_fundamental(const GroupElement& w);

// Length-zero conjugators (omega_elements without the central translation of
// type A, which conjugates trivially).
std::vector<GroupElement> omega_conjugators(WeylType t, int n);

// Type A central normalization: shift by t^{(a,…,a)} so Σχ lands in [0, n).
GroupElement normalize_central(const GroupElement& x);
std::vector<long long> canonicalKey(const GroupElement& x);

// All integral length-zero elements (modulo central translations for type A).
std::vector<GroupElement> integral_length_zero(WeylType t, int n);

// Every integral element of length ≤ maxlen, modulo central translations for
// type A; sorted by encoding.
std::vector<GroupElement> integral_ball(WeylType t, int n, long long maxlen);

// The closure of a minimal-length element under length-preserving simple and
// length-zero conjugations. For distinguished classes this is the full set of
// minimal length elements of the class.
std::vector<GroupElement> length_preserving_closure(const GroupElement& w);

// Minimal length of the class with the given label (cached internally).
long long class_min_length(const DPPair& p);

}  // namespace affweyl
