#include "ppm/classify.hpp"

#include <algorithm>
#include <limits>

namespace ppm {

namespace {

size_t idx(int32_t one_based) { return static_cast<size_t>(one_based - 1); }

}  // namespace

Labels321 label_rigid_321(const Permutation& p) {
  const int32_t n = p.size();
  Labels321 l;
  l.label_.assign(static_cast<size_t>(n), RigidType::Fluid);

  std::vector<int32_t> suffix_min(static_cast<size_t>(n) + 1, std::numeric_limits<int32_t>::max());
  for (int32_t i = n - 1; i >= 0; --i) {
    suffix_min[static_cast<size_t>(i)] = std::min(suffix_min[static_cast<size_t>(i) + 1], p.values()[static_cast<size_t>(i)]);
  }

  int32_t running_max = 0;
  for (int32_t pos = 1; pos <= n; ++pos) {
    const int32_t v = p.value(pos);
    const bool upper = v > suffix_min[static_cast<size_t>(pos)];
    const bool lower = v < running_max;
    if (upper && lower) l.is_avoider_ = false;
    if (upper) {
      l.label_[idx(pos)] = RigidType::Upper;
    } else if (lower) {
      l.label_[idx(pos)] = RigidType::Lower;
    }
    running_max = std::max(running_max, v);
  }

  for (auto& per_dir : l.next_) {
    for (auto& table : per_dir) table.assign(static_cast<size_t>(n), 0);
  }

  auto sweep = [&](Direction dir, auto&& order) {
    auto& up_table = l.next_[static_cast<size_t>(dir)][0];
    auto& low_table = l.next_[static_cast<size_t>(dir)][1];
    int32_t last_upper = 0;
    int32_t last_lower = 0;
    order([&](int32_t pos) {
      up_table[idx(pos)] = last_upper;
      low_table[idx(pos)] = last_lower;
      const RigidType t = l.label_[idx(pos)];
      if (t == RigidType::Upper) last_upper = pos;
      if (t == RigidType::Lower) last_lower = pos;
    });
  };
  sweep(Direction::Left, [&](auto&& visit) {
    for (int32_t pos = 1; pos <= n; ++pos) visit(pos);
  });
  sweep(Direction::Right, [&](auto&& visit) {
    for (int32_t pos = n; pos >= 1; --pos) visit(pos);
  });
  sweep(Direction::Down, [&](auto&& visit) {
    for (int32_t v = 1; v <= n; ++v) visit(p.position(v));
  });
  sweep(Direction::Up, [&](auto&& visit) {
    for (int32_t v = n; v >= 1; --v) visit(p.position(v));
  });

  for (int32_t pos = n; pos >= 1; --pos) {
    if (l.label_[idx(pos)] == RigidType::Upper) l.first_upper_ = pos;
    if (l.label_[idx(pos)] == RigidType::Lower) l.first_lower_ = pos;
  }
  return l;
}

MaybeElement typed_next_321(const Labels321& l, MaybeElement x, Direction dir, RigidType t) {
  if (t == RigidType::Fluid) return std::nullopt;
  return l.next(x, dir, t);
}

BlockDecomposition block_decomposition(const Permutation& p, const Labels321& l) {
  BlockDecomposition d;
  const int32_t n = p.size();
  int32_t pos = 1;
  while (pos <= n) {
    if (l.type(pos) == RigidType::Fluid) {
      d.blocks.push_back(Block{Block::Kind::Singleton, pos, pos, identity(1)});
      ++pos;
      continue;
    }
    const int32_t first = pos;
    while (pos <= n && l.type(pos) != RigidType::Fluid) ++pos;
    std::vector<int32_t> positions(static_cast<size_t>(pos - first));
    for (int32_t i = first; i < pos; ++i) positions[static_cast<size_t>(i - first)] = i;
    d.blocks.push_back(Block{Block::Kind::Rigid, first, pos - 1, normalize_subsequence(p, positions)});
  }
  return d;
}

Direction resolve(SkewStep step, Corner c) {
  switch (step) {
    case SkewStep::OuterH:
      return is_west(c) ? Direction::Left : Direction::Right;
    case SkewStep::InnerH:
      return is_west(c) ? Direction::Right : Direction::Left;
    case SkewStep::OuterV:
      return is_north(c) ? Direction::Up : Direction::Down;
    case SkewStep::InnerV:
      return is_north(c) ? Direction::Down : Direction::Up;
  }
  return Direction::Left;
}

int32_t first_east_position(std::span<const int32_t> values) {
  const auto n = static_cast<int32_t>(values.size());
  // Values of the most recent ascent bottom and descent top whose partner precedes the
  // element under inspection; 0 and n+1 stand for "none seen yet".
  int32_t ascent_low = 0;
  int32_t descent_high = n + 1;
  for (int32_t i = 0; i < n; ++i) {
    const int32_t v = values[static_cast<size_t>(i)];
    if (v < ascent_low || v > descent_high) return i + 1;
    if (i >= 1) {
      const int32_t prev = values[static_cast<size_t>(i) - 1];
      if (prev < v) {
        ascent_low = prev;
      } else {
        descent_high = prev;
      }
    }
  }
  return n + 1;
}

MaybeElement SkewLabels::step(const Permutation& p, MaybeElement x, SkewStep s) const {
  if (!x || type(*x) == Corner::Central) return std::nullopt;
  MaybeElement y = neighbor(p, x, resolve(s, type(*x)));
  if (!y || type(*y) == Corner::Central) return std::nullopt;
  return y;
}

std::vector<int32_t> SkewLabels::positions_of(Corner c) const {
  std::vector<int32_t> out;
  for (int32_t pos = 1; pos <= size(); ++pos) {
    if (type(pos) == c) out.push_back(pos);
  }
  return out;
}

SkewLabels label_skew(const Permutation& p) {
  const int32_t n = p.size();
  SkewLabels l;
  l.label_.assign(static_cast<size_t>(n), Corner::Central);

  const Permutation inv = p.inverse();
  l.east_begin_ = first_east_position(p.values());
  l.west_end_ = n + 1 - first_east_position(p.reverse().values());
  l.north_bottom_ = first_east_position(inv.values());
  l.south_top_ = n + 1 - first_east_position(inv.reverse().values());

  bool consistent = true;
  for (int32_t pos = 1; pos <= n; ++pos) {
    const int32_t v = p.value(pos);
    const bool west = pos <= l.west_end_;
    const bool east = pos >= l.east_begin_;
    const bool south = v <= l.south_top_;
    const bool north = v >= l.north_bottom_;
    Corner c = Corner::Central;
    if ((west && east) || (north && south)) {
      consistent = false;
    } else if (west || east) {
      if (north) {
        c = west ? Corner::NW : Corner::NE;
      } else if (south) {
        c = west ? Corner::SW : Corner::SE;
      } else {
        consistent = false;
      }
    } else if (north || south) {
      consistent = false;
    }
    l.label_[idx(pos)] = c;
    ++l.count_[static_cast<size_t>(c)];
  }

  // Central elements must be monotone; their direction decides which witness they join.
  int32_t prev_central = 0;
  bool central_inc = true;
  bool central_dec = true;
  for (int32_t pos = 1; pos <= n; ++pos) {
    if (l.label_[idx(pos)] != Corner::Central) continue;
    const int32_t v = p.value(pos);
    if (prev_central != 0) {
      central_inc = central_inc && v > prev_central;
      central_dec = central_dec && v < prev_central;
    }
    prev_central = v;
  }
  if (l.count(Corner::Central) <= 1) {
    l.center_ = CenterDirection::Trivial;
  } else if (central_inc) {
    l.center_ = CenterDirection::Increasing;
  } else if (central_dec) {
    l.center_ = CenterDirection::Decreasing;
  } else {
    consistent = false;
    l.center_ = CenterDirection::Trivial;
  }

  int32_t inc_last = 0;
  int32_t dec_last = n + 1;
  bool witnesses_ok = true;
  for (int32_t pos = 1; pos <= n && witnesses_ok; ++pos) {
    const Corner c = l.label_[idx(pos)];
    const int32_t v = p.value(pos);
    bool increasing_side = c == Corner::SW || c == Corner::NE;
    if (c == Corner::Central) increasing_side = l.center_ != CenterDirection::Decreasing;
    if (increasing_side) {
      witnesses_ok = v > inc_last;
      inc_last = v;
    } else {
      witnesses_ok = v < dec_last;
      dec_last = v;
    }
  }
  l.is_skew_merged_ = consistent && witnesses_ok;

  for (Corner c : kCorners) {
    // Outermost: leftmost for West corners, rightmost for East corners.
    int32_t best = 0;
    for (int32_t pos = 1; pos <= n; ++pos) {
      if (l.label_[idx(pos)] != c) continue;
      if (is_west(c)) {
        best = pos;
        break;
      }
      best = pos;
    }
    l.outermost_[static_cast<size_t>(c)] = best;
  }

  for (auto& per_dir : l.seek_) {
    for (auto& table : per_dir) table.assign(static_cast<size_t>(n), 0);
  }
  auto sweep = [&](Direction dir, auto&& order) {
    auto& tables = l.seek_[static_cast<size_t>(dir)];
    std::array<int32_t, 4> last{};
    order([&](int32_t pos) {
      for (size_t c = 0; c < 4; ++c) tables[c][idx(pos)] = last[c];
      const Corner t = l.label_[idx(pos)];
      if (t == Corner::Central) {
        last.fill(0);
      } else {
        last[static_cast<size_t>(t)] = pos;
      }
    });
  };
  sweep(Direction::Left, [&](auto&& visit) {
    for (int32_t pos = 1; pos <= n; ++pos) visit(pos);
  });
  sweep(Direction::Right, [&](auto&& visit) {
    for (int32_t pos = n; pos >= 1; --pos) visit(pos);
  });
  sweep(Direction::Down, [&](auto&& visit) {
    for (int32_t v = 1; v <= n; ++v) visit(p.position(v));
  });
  sweep(Direction::Up, [&](auto&& visit) {
    for (int32_t v = n; v >= 1; --v) visit(p.position(v));
  });
  return l;
}

MaybeElement typed_seek_skew(const SkewLabels& l, MaybeElement x, SkewStep s, Corner t) {
  if (t == Corner::Central) return std::nullopt;
  return l.seek(x, s, t);
}

const char* to_string(RigidType t) {
  switch (t) {
    case RigidType::Upper: return "U";
    case RigidType::Lower: return "L";
    case RigidType::Fluid: return "F";
  }
  return "?";
}

const char* to_string(Corner c) {
  switch (c) {
    case Corner::NE: return "NE";
    case Corner::NW: return "NW";
    case Corner::SW: return "SW";
    case Corner::SE: return "SE";
    case Corner::Central: return "C";
  }
  return "?";
}

const char* to_string(CenterDirection d) {
  switch (d) {
    case CenterDirection::Increasing: return "increasing";
    case CenterDirection::Decreasing: return "decreasing";
    case CenterDirection::Trivial: return "trivial";
  }
  return "?";
}

}  // namespace ppm
