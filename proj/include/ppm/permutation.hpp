#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ppm {

/// Raised for malformed permutations, embeddings and position lists.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an input lies outside the permutation class an algorithm requires.
class ClassError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An element of a permutation, identified by its 1-based position.
struct Element {
  int32_t pos = 0;
  friend bool operator==(Element, Element) = default;
};

/// Either an element or undefined. Every neighbor operator maps undefined to undefined.
using MaybeElement = std::optional<Element>;

enum class Direction : uint8_t { Left, Right, Up, Down };

/// A permutation of {1..n} in one-line notation, with its inverse.
///
/// Positions and values are 1-based throughout the public interface.
/// Immutable after construction.
class Permutation {
public:
  Permutation() = default;

  /// Validates that `values` is a bijection on {1..n}; throws InputError otherwise.
  explicit Permutation(std::vector<int32_t> values);

  int32_t size() const { return static_cast<int32_t>(values_.size()); }
  bool empty() const { return values_.empty(); }

  int32_t value(int32_t pos) const { return values_[static_cast<size_t>(pos - 1)]; }
  int32_t position(int32_t value) const { return inverse_[static_cast<size_t>(value - 1)]; }
  int32_t value(Element x) const { return value(x.pos); }

  Element at_value(int32_t value) const { return Element{position(value)}; }

  std::span<const int32_t> values() const { return values_; }
  std::span<const int32_t> inverse_values() const { return inverse_; }

  Permutation inverse() const;
  Permutation reverse() const;
  Permutation complement() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.values_ == b.values_; }

private:
  std::vector<int32_t> values_;
  std::vector<int32_t> inverse_;
};

Permutation identity(int32_t n);

/// Partial map from pattern positions to text positions.
class Embedding {
public:
  Embedding() = default;
  explicit Embedding(int32_t pattern_size) : image_(static_cast<size_t>(pattern_size)) {}

  /// Builds a total embedding from image positions listed in pattern-position order.
  static Embedding from_positions(std::span<const int32_t> text_positions);

  int32_t pattern_size() const { return static_cast<int32_t>(image_.size()); }

  void assign(int32_t pattern_pos, int32_t text_pos) { image_[static_cast<size_t>(pattern_pos - 1)] = text_pos; }
  void unassign(int32_t pattern_pos) { image_[static_cast<size_t>(pattern_pos - 1)].reset(); }
  std::optional<int32_t> at(int32_t pattern_pos) const { return image_[static_cast<size_t>(pattern_pos - 1)]; }
  bool assigned(int32_t pattern_pos) const { return at(pattern_pos).has_value(); }

  bool is_total() const;

  /// Image positions in pattern-position order; requires a total embedding.
  std::vector<int32_t> positions() const;

  friend bool operator==(const Embedding&, const Embedding&) = default;

private:
  std::vector<std::optional<int32_t>> image_;
};

/// One-line permutation text: integers separated by whitespace and/or commas, or an
/// unseparated digit string when n <= 9. Empty input is the size-0 permutation.
Permutation parse_permutation(std::string_view text);

/// Canonical form: values separated by single spaces.
std::string format_permutation(const Permutation& p);

MaybeElement neighbor(const Permutation& p, MaybeElement x, Direction dir);

/// The direct sum: each part placed above and to the right of the preceding ones.
Permutation direct_sum(std::span<const Permutation> parts);

/// The pattern formed by the points at the given strictly increasing positions.
Permutation normalize_subsequence(const Permutation& p, std::span<const int32_t> positions);

/// Neighbor-only embedding check: every element must land strictly right of the image
/// of its left neighbor and strictly above the image of its down neighbor.
/// Throws InputError if `e` is not total or maps outside the text.
bool verify_embedding(const Permutation& pattern, const Permutation& text, const Embedding& e);

/// (pattern value, text value) pairs in pattern-position order, as printed by the CLI.
std::vector<std::pair<int32_t, int32_t>> value_map(const Permutation& pattern, const Permutation& text,
                                                   const Embedding& e);

}  // namespace ppm
