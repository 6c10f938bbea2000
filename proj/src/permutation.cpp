#include "ppm/permutation.hpp"

#include <algorithm>
#include <charconv>

namespace ppm {

Permutation::Permutation(std::vector<int32_t> values) : values_(std::move(values)), inverse_(values_.size(), 0) {
  const auto n = static_cast<int32_t>(values_.size());
  for (int32_t i = 0; i < n; ++i) {
    const int32_t v = values_[static_cast<size_t>(i)];
    if (v < 1 || v > n) {
      throw InputError("value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    auto& slot = inverse_[static_cast<size_t>(v - 1)];
    if (slot != 0) throw InputError("duplicate value " + std::to_string(v));
    slot = i + 1;
  }
}

Permutation Permutation::inverse() const { return Permutation(inverse_); }

Permutation Permutation::reverse() const {
  std::vector<int32_t> r(values_.rbegin(), values_.rend());
  return Permutation(std::move(r));
}

Permutation Permutation::complement() const {
  std::vector<int32_t> c(values_.size());
  const auto n = size();
  std::transform(values_.begin(), values_.end(), c.begin(), [n](int32_t v) { return n + 1 - v; });
  return Permutation(std::move(c));
}

Permutation identity(int32_t n) {
  std::vector<int32_t> v(static_cast<size_t>(n));
  for (int32_t i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  return Permutation(std::move(v));
}

Embedding Embedding::from_positions(std::span<const int32_t> text_positions) {
  Embedding e(static_cast<int32_t>(text_positions.size()));
  for (size_t i = 0; i < text_positions.size(); ++i) e.image_[i] = text_positions[i];
  return e;
}

bool Embedding::is_total() const {
  return std::all_of(image_.begin(), image_.end(), [](const auto& x) { return x.has_value(); });
}

std::vector<int32_t> Embedding::positions() const {
  std::vector<int32_t> out;
  out.reserve(image_.size());
  for (const auto& x : image_) {
    if (!x) throw InputError("embedding is not total");
    out.push_back(*x);
  }
  return out;
}

namespace {

bool is_separator(char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

int32_t parse_int(std::string_view token) {
  int32_t v = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw InputError("not an integer: '" + std::string(token) + "'");
  return v;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_separator(text[i])) ++i;
    size_t j = i;
    while (j < text.size() && !is_separator(text[j])) ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }

  std::vector<int32_t> values;
  const bool digit_string = tokens.size() == 1 && tokens[0].size() > 1 &&
                            std::all_of(tokens[0].begin(), tokens[0].end(), [](char c) { return c >= '0' && c <= '9'; });
  if (digit_string) {
    if (tokens[0].size() > 9) throw InputError("unseparated form only supports sizes up to 9");
    for (char c : tokens[0]) values.push_back(c - '0');
  } else {
    values.reserve(tokens.size());
    for (auto t : tokens) values.push_back(parse_int(t));
  }
  return Permutation(std::move(values));
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  for (int32_t i = 1; i <= p.size(); ++i) {
    if (i > 1) out.push_back(' ');
    out += std::to_string(p.value(i));
  }
  return out;
}

MaybeElement neighbor(const Permutation& p, MaybeElement x, Direction dir) {
  if (!x) return std::nullopt;
  const int32_t n = p.size();
  switch (dir) {
    case Direction::Left:
      return x->pos > 1 ? MaybeElement(Element{x->pos - 1}) : std::nullopt;
    case Direction::Right:
      return x->pos < n ? MaybeElement(Element{x->pos + 1}) : std::nullopt;
    case Direction::Up: {
      const int32_t v = p.value(*x);
      return v < n ? MaybeElement(p.at_value(v + 1)) : std::nullopt;
    }
    case Direction::Down: {
      const int32_t v = p.value(*x);
      return v > 1 ? MaybeElement(p.at_value(v - 1)) : std::nullopt;
    }
  }
  return std::nullopt;
}

Permutation direct_sum(std::span<const Permutation> parts) {
  std::vector<int32_t> values;
  int32_t shift = 0;
  for (const auto& part : parts) {
    for (int32_t v : part.values()) values.push_back(v + shift);
    shift += part.size();
  }
  return Permutation(std::move(values));
}

Permutation normalize_subsequence(const Permutation& p, std::span<const int32_t> positions) {
  const int32_t n = p.size();
  for (size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 1 || positions[i] > n) throw InputError("position out of range");
    if (i > 0 && positions[i] <= positions[i - 1]) throw InputError("positions must be strictly increasing");
  }
  // Rank by a bucket pass over values so the cost stays linear in n.
  std::vector<int32_t> rank(static_cast<size_t>(n) + 1, 0);
  for (int32_t pos : positions) rank[static_cast<size_t>(p.value(pos))] = 1;
  int32_t r = 0;
  for (int32_t v = 1; v <= n; ++v) {
    if (rank[static_cast<size_t>(v)] != 0) rank[static_cast<size_t>(v)] = ++r;
  }
  std::vector<int32_t> out;
  out.reserve(positions.size());
  for (int32_t pos : positions) out.push_back(rank[static_cast<size_t>(p.value(pos))]);
  return Permutation(std::move(out));
}

bool verify_embedding(const Permutation& pattern, const Permutation& text, const Embedding& e) {
  const int32_t k = pattern.size();
  if (e.pattern_size() != k) throw InputError("embedding size does not match pattern");
  for (int32_t i = 1; i <= k; ++i) {
    auto img = e.at(i);
    if (!img) throw InputError("embedding is not total");
    if (*img < 1 || *img > text.size()) throw InputError("image position out of range");
  }
  for (int32_t i = 1; i <= k; ++i) {
    const int32_t img = *e.at(i);
    if (i > 1 && img <= *e.at(i - 1)) return false;
    const int32_t v = pattern.value(i);
    if (v > 1) {
      const int32_t below = *e.at(pattern.position(v - 1));
      if (text.value(img) <= text.value(below)) return false;
    }
  }
  return true;
}

std::vector<std::pair<int32_t, int32_t>> value_map(const Permutation& pattern, const Permutation& text,
                                                   const Embedding& e) {
  std::vector<std::pair<int32_t, int32_t>> out;
  for (int32_t i = 1; i <= pattern.size(); ++i) {
    if (auto img = e.at(i)) out.emplace_back(pattern.value(i), text.value(*img));
  }
  return out;
}

}  // namespace ppm
