#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "ppm/classify.hpp"
#include "ppm/match321.hpp"
#include "ppm/permutation.hpp"

namespace ppm {

/// True when `a` lies strictly further from the centre than `b`; both of corner type `c`.
inline bool strictly_outer(Corner c, Element a, Element b) { return is_west(c) ? a.pos < b.pos : a.pos > b.pos; }

/// Mutable state of the fixpoint on the non-central part of a skew-merged pattern.
struct SkewState {
  std::vector<MaybeElement> image;  // indexed by pattern position - 1; unused for central positions
  std::deque<int32_t> problems;
  std::vector<uint8_t> queued;
  uint64_t iterations = 0;

  MaybeElement at(int32_t pattern_pos) const { return image[static_cast<size_t>(pattern_pos - 1)]; }
};

/// The innermost of the typed inward seeks from the images of x's outer horizontal and
/// outer vertical neighbors.
Bound problem_bound_skew(const SkewState& state, int32_t x, const Permutation& pattern,
                         const SkewLabels& pattern_labels, const SkewLabels& text_labels);

/// Outermost type-preserving embedding of the non-central pattern elements.
class SkewSolver {
public:
  using Status = RigidSolver::Status;

  SkewSolver(const Permutation& pattern, const SkewLabels& pattern_labels, const Permutation& text,
             const SkewLabels& text_labels);

  /// Sends each non-central element to the outermost text element of its type.
  Status initialize();
  Status step();
  Status run();

  Bound bound(int32_t x) const { return problem_bound_skew(state_, x, pattern_, pattern_labels_, text_labels_); }
  bool is_problem(int32_t x) const;

  const SkewState& state() const { return state_; }
  Status status() const { return status_; }

  /// Partial embedding defined exactly on the non-central pattern positions.
  Embedding embedding() const;

private:
  void examine(MaybeElement x);

  const Permutation& pattern_;
  const SkewLabels& pattern_labels_;
  const Permutation& text_;
  const SkewLabels& text_labels_;
  SkewState state_;
  Status status_ = Status::Running;
};

struct SkewOutcome {
  bool found = false;
  Embedding embedding;  // defined on non-central pattern positions
  uint64_t iterations = 0;
};

SkewOutcome min_noncentral_embedding(const Permutation& pattern, const SkewLabels& pattern_labels,
                                     const Permutation& text, const SkewLabels& text_labels);

/// Open rectangle of the text left free by the outermost non-central embedding.
struct Region {
  int32_t pos_low = 0;
  int32_t pos_high = 0;
  int32_t val_low = 0;
  int32_t val_high = 0;
  std::vector<int32_t> members;  // text positions, increasing
  Permutation subpattern;
  SkewLabels sublabels;
};

Region remaining_region(const Permutation& text, const Embedding& partial, const SkewLabels& pattern_labels);

struct MonotoneCapacity {
  int32_t lis = 0;
  int32_t lds = 0;
};

/// Longest increasing and decreasing subsequence lengths of a skew-merged region, read off
/// its labels: corner counts on the matching diagonal plus the centre's contribution.
MonotoneCapacity monotone_capacity(const Region& r);

/// Decides containment between two skew-merged permutations in O(kn).
/// Throws ClassError if either input contains 3412 or 2143.
MatchResult match_skew_merged(const Permutation& pattern, const Permutation& text);

MatchResult match_skew_merged(const Permutation& pattern, const SkewLabels& pattern_labels, const Permutation& text,
                              const SkewLabels& text_labels);

}  // namespace ppm
