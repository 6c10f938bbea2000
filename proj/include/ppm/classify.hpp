#pragma once

#include <array>
#include <vector>

#include "ppm/permutation.hpp"

namespace ppm {

// ---------------------------------------------------------------------------
// 321-avoiding permutations
// ---------------------------------------------------------------------------

enum class RigidType : uint8_t { Upper, Lower, Fluid };

/// Upper/lower/fluid labeling of a permutation plus typed-neighbor tables.
///
/// An upper element is the larger point of some inversion, a lower element the smaller
/// one, and a fluid element takes part in no inversion. When an element is both upper
/// and lower the permutation contains 321; `is_avoider()` is then false and the labels
/// must not be used.
class Labels321 {
public:
  Labels321() = default;

  int32_t size() const { return static_cast<int32_t>(label_.size()); }
  bool is_avoider() const { return is_avoider_; }

  RigidType type(Element x) const { return label_[static_cast<size_t>(x.pos - 1)]; }
  RigidType type(int32_t pos) const { return label_[static_cast<size_t>(pos - 1)]; }

  /// Nearest element of type `t` (Upper or Lower) strictly in direction `dir` from `x`.
  MaybeElement next(MaybeElement x, Direction dir, RigidType t) const {
    if (!x) return std::nullopt;
    const int32_t p = table(dir, t)[static_cast<size_t>(x->pos - 1)];
    return p == 0 ? std::nullopt : MaybeElement(Element{p});
  }

  /// Least element of type `t` in the whole permutation.
  MaybeElement first(RigidType t) const {
    const int32_t p = t == RigidType::Upper ? first_upper_ : first_lower_;
    return p == 0 ? std::nullopt : MaybeElement(Element{p});
  }

  friend Labels321 label_rigid_321(const Permutation& p);

private:
  const std::vector<int32_t>& table(Direction dir, RigidType t) const {
    return next_[static_cast<size_t>(dir)][t == RigidType::Upper ? 0 : 1];
  }

  std::vector<RigidType> label_;
  bool is_avoider_ = true;
  int32_t first_upper_ = 0;
  int32_t first_lower_ = 0;
  // Position of the nearest typed element, 0 when there is none. Never escapes the class.
  std::array<std::array<std::vector<int32_t>, 2>, 4> next_;
};

/// One left-to-right pass tracking the running maximum and the suffix minimum, then
/// eight linear passes for the typed-neighbor tables.
Labels321 label_rigid_321(const Permutation& p);

/// Nearest element of type `t` strictly in direction `dir`; requires `l.is_avoider()`.
MaybeElement typed_next_321(const Labels321& l, MaybeElement x, Direction dir, RigidType t);

struct Block {
  enum class Kind : uint8_t { Rigid, Singleton };
  Kind kind = Kind::Singleton;
  int32_t first = 0;  // first position, inclusive
  int32_t last = 0;   // last position, inclusive
  Permutation pattern;

  int32_t size() const { return last - first + 1; }
};

/// Unique direct-sum decomposition of a 321-avoider into rigid blocks and singletons,
/// where no two rigid blocks are adjacent.
struct BlockDecomposition {
  std::vector<Block> blocks;
};

BlockDecomposition block_decomposition(const Permutation& p, const Labels321& l);

// ---------------------------------------------------------------------------
// Skew-merged permutations
// ---------------------------------------------------------------------------

enum class Corner : uint8_t { NE, NW, SW, SE, Central };

inline constexpr std::array<Corner, 4> kCorners = {Corner::NE, Corner::NW, Corner::SW, Corner::SE};

inline constexpr bool is_west(Corner c) { return c == Corner::NW || c == Corner::SW; }
inline constexpr bool is_north(Corner c) { return c == Corner::NW || c == Corner::NE; }

enum class CenterDirection : uint8_t { Increasing, Decreasing, Trivial };

/// Steps relative to the centre: outer/inner, horizontal/vertical.
enum class SkewStep : uint8_t { OuterH, InnerH, OuterV, InnerV };

/// Resolves a relative step to an absolute direction for an element of corner type `c`.
Direction resolve(SkewStep step, Corner c);

/// Five-region labeling of a skew-merged permutation.
///
/// West positions form a prefix and East positions a suffix; South values form a prefix
/// and North values a suffix. Corner elements lie in both a horizontal and a vertical
/// outer band; central elements lie in neither and form a monotone sequence.
class SkewLabels {
public:
  SkewLabels() = default;

  int32_t size() const { return static_cast<int32_t>(label_.size()); }
  bool is_skew_merged() const { return is_skew_merged_; }
  CenterDirection center_direction() const { return center_; }

  Corner type(Element x) const { return label_[static_cast<size_t>(x.pos - 1)]; }
  Corner type(int32_t pos) const { return label_[static_cast<size_t>(pos - 1)]; }

  /// Last West position (0 if none) and first East position (n+1 if none).
  int32_t west_end() const { return west_end_; }
  int32_t east_begin() const { return east_begin_; }
  /// Largest South value (0 if none) and smallest North value (n+1 if none).
  int32_t south_top() const { return south_top_; }
  int32_t north_bottom() const { return north_bottom_; }

  int32_t count(Corner c) const { return count_[static_cast<size_t>(c)]; }

  /// Outermost element of corner type `c`, if any.
  MaybeElement outermost(Corner c) const {
    const int32_t p = outermost_[static_cast<size_t>(c)];
    return p == 0 ? std::nullopt : MaybeElement(Element{p});
  }

  /// One relative step from a non-central element; undefined at the boundary or when the
  /// step lands on a central element.
  MaybeElement step(const Permutation& p, MaybeElement x, SkewStep s) const;

  /// First element of type `t` on the chain of single steps in direction `s` from `x`.
  MaybeElement seek(MaybeElement x, SkewStep s, Corner t) const {
    if (!x || type(*x) == Corner::Central) return std::nullopt;
    const Direction d = resolve(s, type(*x));
    const int32_t pos = seek_[static_cast<size_t>(d)][static_cast<size_t>(t)][static_cast<size_t>(x->pos - 1)];
    return pos == 0 ? std::nullopt : MaybeElement(Element{pos});
  }

  /// Elements of the permutation with the given label, in position order.
  std::vector<int32_t> positions_of(Corner c) const;

  friend SkewLabels label_skew(const Permutation& p);

private:
  std::vector<Corner> label_;
  bool is_skew_merged_ = true;
  CenterDirection center_ = CenterDirection::Trivial;
  int32_t west_end_ = 0;
  int32_t east_begin_ = 1;
  int32_t south_top_ = 0;
  int32_t north_bottom_ = 1;
  std::array<int32_t, 5> count_{};
  std::array<int32_t, 4> outermost_{};
  // seek_[absolute direction][corner][pos - 1]: chain walk result, 0 when undefined.
  std::array<std::array<std::vector<int32_t>, 4>, 4> seek_;
};

/// First position that completes a 231 (as its 1) or a 213 (as its 3) together with two
/// earlier elements, or n+1. Linear: only the last ascent and last descent are tracked.
int32_t first_east_position(std::span<const int32_t> values);

/// Four boundary scans, region labeling, then a monotonicity check of the increasing and
/// decreasing witnesses. `is_skew_merged()` is true iff both witnesses are monotone.
SkewLabels label_skew(const Permutation& p);

/// First element of type `t` on the chain of single steps from `x`; requires a skew-merged
/// labeling and a non-central or undefined `x`.
MaybeElement typed_seek_skew(const SkewLabels& l, MaybeElement x, SkewStep s, Corner t);

const char* to_string(RigidType t);
const char* to_string(Corner c);
const char* to_string(CenterDirection d);

}  // namespace ppm
