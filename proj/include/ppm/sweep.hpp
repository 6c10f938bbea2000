#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ppm/match321.hpp"
#include "ppm/oracle.hpp"

/// Batch kernels over many independent instances. Each has a serial reference and an
/// OpenMP version that splits the outer loop across threads; both return identical reports.
namespace ppm::sweep {

using oracle::PermClass;

/// Fast matcher for the class; Any is rejected.
MatchResult match_in_class(PermClass cls, const Permutation& pattern, const Permutation& text);

struct EquivalenceReport {
  uint64_t pairs = 0;
  uint64_t found = 0;
  uint64_t discrepancies = 0;      // fast matcher disagrees with brute_contains
  uint64_t invalid_embeddings = 0; // found, but the embedding fails the pairwise check
  uint64_t bound_violations = 0;   // iterations > k * n

  friend bool operator==(const EquivalenceReport&, const EquivalenceReport&) = default;
};

/// Every class member of size <= max_n as text, against every class member of size <= the
/// text's size as pattern.
EquivalenceReport oracle_equivalence_serial(PermClass cls, int32_t max_n);
EquivalenceReport oracle_equivalence_parallel(PermClass cls, int32_t max_n);

struct LabelReport {
  uint64_t permutations = 0;
  uint64_t flag_mismatches = 0;   // is_avoider / is_skew_merged disagrees with brute avoidance
  uint64_t label_mismatches = 0;  // labels of a class member disagree with brute_labels

  friend bool operator==(const LabelReport&, const LabelReport&) = default;
};

/// All permutations of size <= max_n: fast labelings against the definition-based ones.
LabelReport label_agreement_serial(PermClass cls, int32_t max_n);
LabelReport label_agreement_parallel(PermClass cls, int32_t max_n);

struct TrialSpec {
  PermClass cls = PermClass::Av321;
  int32_t n = 0;
  int32_t k = 0;
  uint64_t seed = 0;
};

struct TrialResult {
  int32_t n = 0;
  int32_t k = 0;
  uint64_t iterations = 0;
  uint64_t elapsed_ns = 0;
  uint64_t seed = 0;
  bool found = false;
};

/// Builds the instance for a trial: a random class member of size n as text; for even seeds
/// the pattern is k random points of the text (so it is contained), otherwise an
/// independent random class member of size k.
std::pair<Permutation, Permutation> trial_instance(const TrialSpec& spec);

/// Times only the match call.
TrialResult run_trial(const TrialSpec& spec);

std::vector<TrialResult> run_trials_serial(std::span<const TrialSpec> specs);
std::vector<TrialResult> run_trials_parallel(std::span<const TrialSpec> specs);

int max_threads();

}  // namespace ppm::sweep
