#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "ppm/classify.hpp"
#include "ppm/permutation.hpp"

namespace ppm {

struct MatchResult {
  bool found = false;
  Embedding embedding;  // total on the pattern iff found
  uint64_t iterations = 0;
};

/// Lower bound that the neighbors of a pattern element impose on its image.
struct Bound {
  enum class Kind : uint8_t {
    Unconstrained,  // no left or down neighbor in the pattern
    At,             // the image must be at or beyond `element` in its type chain
    Exhausted,      // a neighbor's image has no successor of the right type
  };
  Kind kind = Kind::Unconstrained;
  Element element{};

  static Bound unconstrained() { return {}; }
  static Bound exhausted() { return Bound{Kind::Exhausted, {}}; }
  static Bound at(Element e) { return Bound{Kind::At, e}; }
};

/// Rectangle of text points strictly above and to the right of a partial embedding.
/// (0, 0) is the whole text.
struct Frontier {
  int32_t maxpos = 0;
  int32_t maxval = 0;

  bool dominates(const Frontier& o) const { return maxpos <= o.maxpos && maxval <= o.maxval; }
  friend bool operator==(const Frontier&, const Frontier&) = default;
  friend auto operator<=>(const Frontier&, const Frontier&) = default;
};

/// Mutable state of the problem-queue fixpoint on a rigid pattern.
struct RigidState {
  std::vector<MaybeElement> image;  // indexed by pattern position - 1
  std::deque<int32_t> problems;     // pattern positions, first in first out
  std::vector<uint8_t> queued;      // membership flags for `problems`
  uint64_t iterations = 0;

  MaybeElement at(int32_t pattern_pos) const { return image[static_cast<size_t>(pattern_pos - 1)]; }
};

/// Computes the larger of (image of left neighbor)'s next element of x's type to the right
/// and (image of down neighbor)'s next element of x's type upward.
Bound problem_bound_321(const RigidState& state, int32_t x, const Permutation& pattern, const Labels321& pattern_labels,
                        const Labels321& text_labels);

/// Runs the minimum-rigid-embedding fixpoint for one rigid pattern inside a frontier.
///
/// The solver starts from the map sending every upper (lower) pattern element to the least
/// upper (lower) text element inside the frontier rectangle, then repeatedly raises the
/// image of the oldest problem to its bound. Only the right and up neighbors of an updated
/// element can become new problems.
class RigidSolver {
public:
  enum class Status : uint8_t { Running, Done, Failed };

  RigidSolver(const Permutation& pattern, const Labels321& pattern_labels, const Permutation& text,
              const Labels321& text_labels);

  /// Builds the initial map and problem queue. Returns Failed when a needed type has no
  /// element inside the frontier.
  Status initialize(Frontier frontier);

  /// Resolves one problem.
  Status step();

  /// Steps until the queue drains or an image becomes undefined.
  Status run();

  Bound bound(int32_t x) const { return problem_bound_321(state_, x, pattern_, pattern_labels_, text_labels_); }
  bool is_problem(int32_t x) const;

  const RigidState& state() const { return state_; }
  Status status() const { return status_; }

  /// Image positions in pattern order; valid after run() returned Done.
  Embedding embedding() const;

private:
  void examine(MaybeElement x);

  const Permutation& pattern_;
  const Labels321& pattern_labels_;
  const Permutation& text_;
  const Labels321& text_labels_;
  RigidState state_;
  Status status_ = Status::Running;
};

struct RigidOutcome {
  bool found = false;
  Embedding embedding;  // block position -> text position
  uint64_t iterations = 0;
};

/// Minimum embedding of a rigid pattern into the part of the text inside `frontier`.
RigidOutcome min_rigid_embedding(const Permutation& pattern, const Labels321& pattern_labels, const Permutation& text,
                                 const Labels321& text_labels, Frontier frontier = {});

/// Per-block record of the candidate frontiers, for inspecting the two-candidate branching.
struct BlockTrace {
  size_t block_index = 0;
  Block::Kind kind = Block::Kind::Singleton;
  std::vector<Frontier> produced;  // before pruning
  std::vector<Frontier> kept;      // after pruning
};

struct MatchTrace {
  std::vector<BlockTrace> blocks;
};

/// Decides containment between two 321-avoiding permutations in O(kn).
/// Throws ClassError if either input contains 321.
MatchResult match_321(const Permutation& pattern, const Permutation& text, MatchTrace* trace = nullptr);

/// Same, with labelings computed by the caller (e.g. reused across many pairs).
MatchResult match_321(const Permutation& pattern, const Labels321& pattern_labels, const Permutation& text,
                      const Labels321& text_labels, MatchTrace* trace = nullptr);

}  // namespace ppm
