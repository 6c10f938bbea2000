#include "ppm/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace ppm::oracle {

namespace {

int sign(int32_t d) { return (d > 0) - (d < 0); }

/// Depth-first search over strictly increasing image positions. `visit` returns false to stop.
void search(const Permutation& pattern, const Permutation& text, const std::function<bool(const std::vector<int32_t>&)>& visit) {
  const int32_t k = pattern.size();
  const int32_t n = text.size();
  std::vector<int32_t> img(static_cast<size_t>(k), 0);
  bool stop = false;

  std::function<void(int32_t, int32_t)> rec = [&](int32_t i, int32_t from) {
    if (stop) return;
    if (i == k) {
      stop = !visit(img);
      return;
    }
    const int32_t pv = pattern.values()[static_cast<size_t>(i)];
    for (int32_t t = from; t <= n - (k - i) + 1 && !stop; ++t) {
      const int32_t tv = text.value(t);
      bool ok = true;
      for (int32_t j = 0; j < i && ok; ++j) {
        ok = sign(pv - pattern.values()[static_cast<size_t>(j)]) == sign(tv - text.value(img[static_cast<size_t>(j)]));
      }
      if (!ok) continue;
      img[static_cast<size_t>(i)] = t;
      rec(i + 1, t + 1);
    }
  };
  if (k <= n) rec(0, 1);
}

}  // namespace

bool full_order_check(const Permutation& pattern, const Permutation& text, const Embedding& e) {
  const int32_t k = pattern.size();
  if (e.pattern_size() != k || !e.is_total()) throw InputError("embedding must be total on the pattern");
  for (int32_t i = 1; i <= k; ++i) {
    if (*e.at(i) < 1 || *e.at(i) > text.size()) throw InputError("image position out of range");
  }
  for (int32_t i = 1; i <= k; ++i) {
    for (int32_t j = i + 1; j <= k; ++j) {
      const int32_t a = *e.at(i);
      const int32_t b = *e.at(j);
      if (a >= b) return false;
      if (sign(pattern.value(j) - pattern.value(i)) != sign(text.value(b) - text.value(a))) return false;
    }
  }
  return true;
}

bool brute_contains(const Permutation& pattern, const Permutation& text) { return brute_find(pattern, text).has_value(); }

std::optional<Embedding> brute_find(const Permutation& pattern, const Permutation& text) {
  std::optional<Embedding> found;
  search(pattern, text, [&](const std::vector<int32_t>& img) {
    found = Embedding::from_positions(img);
    return false;
  });
  return found;
}

std::vector<Embedding> enumerate_embeddings(const Permutation& pattern, const Permutation& text) {
  std::vector<Embedding> all;
  search(pattern, text, [&](const std::vector<int32_t>& img) {
    all.push_back(Embedding::from_positions(img));
    return true;
  });
  return all;
}

RigidType RigidFlags::type(int32_t pos) const {
  const auto i = static_cast<size_t>(pos - 1);
  if (upper[i]) return RigidType::Upper;
  if (lower[i]) return RigidType::Lower;
  return RigidType::Fluid;
}

RigidFlags brute_labels_321(const Permutation& p) {
  const int32_t n = p.size();
  RigidFlags f{std::vector<bool>(static_cast<size_t>(n)), std::vector<bool>(static_cast<size_t>(n))};
  for (int32_t i = 1; i <= n; ++i) {
    for (int32_t j = i + 1; j <= n; ++j) {
      if (p.value(i) > p.value(j)) {
        f.upper[static_cast<size_t>(i - 1)] = true;
        f.lower[static_cast<size_t>(j - 1)] = true;
      }
    }
  }
  return f;
}

Corner CornerFlags::type(int32_t pos) const {
  const uint8_t m = mask[static_cast<size_t>(pos - 1)];
  for (Corner c : kCorners) {
    if ((m & (1U << static_cast<unsigned>(c))) != 0) return c;
  }
  return Corner::Central;
}

CornerFlags brute_labels_skew(const Permutation& p) {
  const int32_t n = p.size();
  CornerFlags f{std::vector<uint8_t>(static_cast<size_t>(n), 0)};
  auto mark = [&](int32_t pos, Corner c) { f.mask[static_cast<size_t>(pos - 1)] |= static_cast<uint8_t>(1U << static_cast<unsigned>(c)); };
  for (int32_t a = 1; a <= n; ++a) {
    for (int32_t b = a + 1; b <= n; ++b) {
      for (int32_t c = b + 1; c <= n; ++c) {
        const int32_t x = p.value(a);
        const int32_t y = p.value(b);
        const int32_t z = p.value(c);
        if (y < x && x < z) mark(c, Corner::NE);  // 213
        if (y < z && z < x) mark(a, Corner::NW);  // 312
        if (x < z && z < y) mark(a, Corner::SW);  // 132
        if (z < x && x < y) mark(c, Corner::SE);  // 231
      }
    }
  }
  return f;
}

namespace {

void check_pair(const Embedding& a, const Embedding& b, int32_t k) {
  if (a.pattern_size() != k || b.pattern_size() != k) throw InputError("embedding domains differ from the pattern");
}

}  // namespace

std::pair<Embedding, Embedding> meet_join_321(const Permutation& pattern, const Permutation& text, const Embedding& a,
                                              const Embedding& b) {
  const int32_t k = pattern.size();
  check_pair(a, b, k);
  if (!a.is_total() || !b.is_total()) throw InputError("embeddings must be total");
  const RigidFlags pf = brute_labels_321(pattern);
  const RigidFlags tf = brute_labels_321(text);
  Embedding meet(k);
  Embedding join(k);
  for (int32_t x = 1; x <= k; ++x) {
    const int32_t ia = *a.at(x);
    const int32_t ib = *b.at(x);
    const RigidType t = pf.type(x);
    if (t == RigidType::Fluid || tf.type(ia) != t || tf.type(ib) != t) {
      throw InputError("meet/join needs type-preserving maps of a rigid pattern");
    }
    // Same-type points of a 321-avoider are ordered identically by position and value.
    meet.assign(x, std::min(ia, ib));
    join.assign(x, std::max(ia, ib));
  }
  return {meet, join};
}

Embedding outer_meet_skew(const Permutation& pattern, const Permutation& text, const Embedding& a, const Embedding& b) {
  const int32_t k = pattern.size();
  check_pair(a, b, k);
  const CornerFlags pf = brute_labels_skew(pattern);
  const CornerFlags tf = brute_labels_skew(text);
  Embedding meet(k);
  for (int32_t x = 1; x <= k; ++x) {
    const Corner t = pf.type(x);
    if (t == Corner::Central) continue;
    const auto ia = a.at(x);
    const auto ib = b.at(x);
    if (!ia || !ib) throw InputError("embedding domains differ");
    if (tf.type(*ia) != t || tf.type(*ib) != t) throw InputError("maps must preserve corner types");
    // Outer: leftmost in the West corners, rightmost in the East corners.
    meet.assign(x, is_west(t) ? std::min(*ia, *ib) : std::max(*ia, *ib));
  }
  return meet;
}

int32_t lis_reference(const Permutation& p) {
  std::vector<int32_t> tails;
  for (int32_t v : p.values()) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int32_t>(tails.size());
}

int32_t lds_reference(const Permutation& p) { return lis_reference(p.reverse()); }

bool avoids_321(const Permutation& p) {
  const int32_t n = p.size();
  std::vector<int32_t> suffix_min(static_cast<size_t>(n) + 2, n + 1);
  for (int32_t i = n; i >= 1; --i) suffix_min[static_cast<size_t>(i)] = std::min(suffix_min[static_cast<size_t>(i) + 1], p.value(i));
  int32_t prefix_max = 0;
  for (int32_t i = 1; i <= n; ++i) {
    const int32_t v = p.value(i);
    if (prefix_max > v && suffix_min[static_cast<size_t>(i) + 1] < v) return false;
    prefix_max = std::max(prefix_max, v);
  }
  return true;
}

bool is_skew_merged_split(const Permutation& p) {
  const int32_t n = p.size();
  // Inversion-graph degree of each point: larger values to its left plus smaller to its right.
  std::vector<int64_t> degree(static_cast<size_t>(n), 0);
  std::vector<int32_t> fenwick(static_cast<size_t>(n) + 1, 0);
  auto add = [&](int32_t i) {
    for (; i <= n; i += i & -i) ++fenwick[static_cast<size_t>(i)];
  };
  auto prefix = [&](int32_t i) {
    int32_t s = 0;
    for (; i > 0; i -= i & -i) s += fenwick[static_cast<size_t>(i)];
    return s;
  };
  for (int32_t i = 1; i <= n; ++i) {
    const int32_t v = p.value(i);
    const int32_t smaller_left = prefix(v);
    const int32_t larger_left = (i - 1) - smaller_left;
    const int32_t smaller_right = (v - 1) - smaller_left;
    degree[static_cast<size_t>(i - 1)] = larger_left + smaller_right;
    add(v);
  }
  std::sort(degree.begin(), degree.end(), std::greater<>());
  int64_t m = 0;
  for (int64_t i = 1; i <= n; ++i) {
    if (degree[static_cast<size_t>(i - 1)] >= i - 1) m = i;
  }
  int64_t head = 0;
  int64_t tail = 0;
  for (int64_t i = 1; i <= n; ++i) (i <= m ? head : tail) += degree[static_cast<size_t>(i - 1)];
  return head == m * (m - 1) + tail;
}

bool brute_in_class(const Permutation& p, PermClass cls) {
  static const Permutation p321({3, 2, 1});
  static const Permutation p3412({3, 4, 1, 2});
  static const Permutation p2143({2, 1, 4, 3});
  switch (cls) {
    case PermClass::Av321: return !brute_contains(p321, p);
    case PermClass::Skew: return !brute_contains(p3412, p) && !brute_contains(p2143, p);
    case PermClass::Any: return true;
  }
  return true;
}

std::vector<Permutation> enumerate_avoiders(PermClass cls, int32_t n) {
  std::vector<int32_t> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation p(v);
    if (brute_in_class(p, cls)) out.push_back(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

namespace {

/// Uniform Dyck word of semilength n via the cycle lemma; true marks an up step.
std::vector<bool> random_dyck(int32_t n, std::mt19937_64& rng) {
  std::vector<bool> w(static_cast<size_t>(2 * n + 1), false);
  std::fill(w.begin(), w.begin() + n, true);
  std::shuffle(w.begin(), w.end(), rng);
  // Rotate to start right after the first minimum of the prefix sums; drop the final down.
  int32_t height = 0;
  int32_t min_height = 0;
  size_t cut = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    height += w[i] ? 1 : -1;
    if (height < min_height) {
      min_height = height;
      cut = i + 1;
    }
  }
  std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
  w.pop_back();
  return w;
}

}  // namespace

Permutation random_avoider(PermClass cls, int32_t n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int32_t> values(static_cast<size_t>(n), 0);
  switch (cls) {
    case PermClass::Av321: {
      // Each peak after u ups and d downs puts a left-to-right maximum u at position d+1;
      // the remaining values fill the remaining positions in increasing order.
      const std::vector<bool> w = random_dyck(n, rng);
      std::vector<bool> used(static_cast<size_t>(n) + 1, false);
      int32_t ups = 0;
      int32_t downs = 0;
      for (size_t i = 0; i < w.size(); ++i) {
        if (w[i]) {
          ++ups;
          if (i + 1 == w.size() || !w[i + 1]) {
            values[static_cast<size_t>(downs)] = ups;
            used[static_cast<size_t>(ups)] = true;
          }
        } else {
          ++downs;
        }
      }
      int32_t next = 1;
      for (auto& v : values) {
        if (v != 0) continue;
        while (used[static_cast<size_t>(next)]) ++next;
        v = next++;
      }
      break;
    }
    case PermClass::Skew: {
      std::uniform_int_distribution<int32_t> split(0, n);
      const int32_t m = split(rng);
      std::vector<int32_t> idx(static_cast<size_t>(n));
      std::iota(idx.begin(), idx.end(), 0);
      std::vector<int32_t> vals = idx;
      std::shuffle(idx.begin(), idx.end(), rng);
      std::shuffle(vals.begin(), vals.end(), rng);
      std::vector<int32_t> inc_pos(idx.begin(), idx.begin() + m);
      std::vector<int32_t> dec_pos(idx.begin() + m, idx.end());
      std::vector<int32_t> inc_val(vals.begin(), vals.begin() + m);
      std::vector<int32_t> dec_val(vals.begin() + m, vals.end());
      std::sort(inc_pos.begin(), inc_pos.end());
      std::sort(dec_pos.begin(), dec_pos.end());
      std::sort(inc_val.begin(), inc_val.end());
      std::sort(dec_val.begin(), dec_val.end(), std::greater<>());
      for (size_t i = 0; i < inc_pos.size(); ++i) values[static_cast<size_t>(inc_pos[i])] = inc_val[i] + 1;
      for (size_t i = 0; i < dec_pos.size(); ++i) values[static_cast<size_t>(dec_pos[i])] = dec_val[i] + 1;
      break;
    }
    case PermClass::Any: {
      std::iota(values.begin(), values.end(), 1);
      std::shuffle(values.begin(), values.end(), rng);
      break;
    }
  }
  return Permutation(std::move(values));
}

Permutation random_subpattern(const Permutation& text, int32_t k, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int32_t n = text.size();
  // Selection sampling keeps the chosen positions sorted without a shuffle of n items.
  std::vector<int32_t> positions;
  positions.reserve(static_cast<size_t>(k));
  int32_t needed = k;
  for (int32_t pos = 1; pos <= n && needed > 0; ++pos) {
    std::uniform_int_distribution<int32_t> pick(0, n - pos);
    if (pick(rng) < needed) {
      positions.push_back(pos);
      --needed;
    }
  }
  return normalize_subsequence(text, positions);
}

}  // namespace ppm::oracle
