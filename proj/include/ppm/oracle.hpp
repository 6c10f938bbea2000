#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ppm/classify.hpp"
#include "ppm/permutation.hpp"

/// Ground truth for the fast matchers. Nothing here uses the labelings, neighbor tables or
/// solvers of the matchers; every answer comes from direct order comparisons.
namespace ppm::oracle {

enum class PermClass : uint8_t { Av321, Skew, Any };

/// Pairwise definition: every pair of pattern points keeps its horizontal and vertical order.
bool full_order_check(const Permutation& pattern, const Permutation& text, const Embedding& e);

/// Backtracking over increasing position choices with incremental order checks.
bool brute_contains(const Permutation& pattern, const Permutation& text);

/// Lexicographically first embedding by image positions, if any.
std::optional<Embedding> brute_find(const Permutation& pattern, const Permutation& text);

/// All embeddings, ordered lexicographically by image positions.
std::vector<Embedding> enumerate_embeddings(const Permutation& pattern, const Permutation& text);

/// Upper/lower flags straight from the definition: upper is the 2 of some 21, lower the 1.
struct RigidFlags {
  std::vector<bool> upper;
  std::vector<bool> lower;

  /// Per-position type; meaningful only when no element is both upper and lower.
  RigidType type(int32_t pos) const;
};
RigidFlags brute_labels_321(const Permutation& p);

/// Bit i set when the element plays the corner role `Corner(i)` in some 3-point pattern:
/// NE = 3 of 213, NW = 3 of 312, SW = 1 of 132, SE = 1 of 231.
struct CornerFlags {
  std::vector<uint8_t> mask;

  /// Per-position corner; Central when no bit is set. Meaningful for skew-merged input.
  Corner type(int32_t pos) const;
};
CornerFlags brute_labels_skew(const Permutation& p);

/// Pointwise minimum and maximum of two embeddings of a rigid pattern in the per-type orders.
/// Throws InputError when the embeddings differ in size, are not total, or disagree on types.
std::pair<Embedding, Embedding> meet_join_321(const Permutation& pattern, const Permutation& text, const Embedding& a,
                                              const Embedding& b);

/// Pointwise outer of two type-preserving maps of the non-central pattern elements.
Embedding outer_meet_skew(const Permutation& pattern, const Permutation& text, const Embedding& a, const Embedding& b);

/// Patience sorting.
int32_t lis_reference(const Permutation& p);
int32_t lds_reference(const Permutation& p);

/// Linear 321 test: some element has a larger one to its left and a smaller one to its right.
bool avoids_321(const Permutation& p);

/// Skew-merged iff the inversion graph splits into a clique and an independent set;
/// decided from the degree sequence. O(n log n).
bool is_skew_merged_split(const Permutation& p);

/// Class membership by brute pattern search (321 for Av321; 3412 and 2143 for Skew).
bool brute_in_class(const Permutation& p, PermClass cls);

/// All permutations of size n in the class, filtered from all n! by brute_in_class.
std::vector<Permutation> enumerate_avoiders(PermClass cls, int32_t n);

/// A class member of size n, deterministic in `seed`; not uniform over the class.
/// Av321 maps a uniformly random Dyck word through its peaks; Skew interleaves an
/// increasing and a decreasing run.
Permutation random_avoider(PermClass cls, int32_t n, uint64_t seed);

/// The pattern formed by k randomly chosen points of `text`, deterministic in `seed`.
Permutation random_subpattern(const Permutation& text, int32_t k, uint64_t seed);

}  // namespace ppm::oracle
