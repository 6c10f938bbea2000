#include "ppm/match_skew.hpp"

#include <algorithm>
#include <stdexcept>

namespace ppm {

Bound problem_bound_skew(const SkewState& state, int32_t x, const Permutation& pattern,
                         const SkewLabels& pattern_labels, const SkewLabels& text_labels) {
  const Corner t = pattern_labels.type(x);
  Bound b = Bound::unconstrained();
  auto consider = [&](SkewStep outward, SkewStep inward) {
    if (b.kind == Bound::Kind::Exhausted) return;
    const MaybeElement y = pattern_labels.step(pattern, Element{x}, outward);
    if (!y) return;
    const MaybeElement candidate = text_labels.seek(state.at(y->pos), inward, t);
    if (!candidate) {
      b = Bound::exhausted();
    } else if (b.kind == Bound::Kind::Unconstrained || strictly_outer(t, b.element, *candidate)) {
      b = Bound::at(*candidate);
    }
  };
  consider(SkewStep::OuterH, SkewStep::InnerH);
  consider(SkewStep::OuterV, SkewStep::InnerV);
  return b;
}

SkewSolver::SkewSolver(const Permutation& pattern, const SkewLabels& pattern_labels, const Permutation& text,
                       const SkewLabels& text_labels)
    : pattern_(pattern), pattern_labels_(pattern_labels), text_(text), text_labels_(text_labels) {}

bool SkewSolver::is_problem(int32_t x) const {
  const Bound b = bound(x);
  switch (b.kind) {
    case Bound::Kind::Unconstrained: return false;
    case Bound::Kind::Exhausted: return true;
    case Bound::Kind::At: return strictly_outer(pattern_labels_.type(x), *state_.at(x), b.element);
  }
  return false;
}

SkewSolver::Status SkewSolver::initialize() {
  const int32_t k = pattern_.size();
  state_ = SkewState{};
  state_.image.assign(static_cast<size_t>(k), std::nullopt);
  state_.queued.assign(static_cast<size_t>(k), 0);
  for (int32_t x = 1; x <= k; ++x) {
    const Corner t = pattern_labels_.type(x);
    if (t == Corner::Central) continue;
    const MaybeElement y = text_labels_.outermost(t);
    if (!y) return status_ = Status::Failed;
    state_.image[static_cast<size_t>(x - 1)] = y;
  }
  for (int32_t x = 1; x <= k; ++x) {
    if (pattern_labels_.type(x) != Corner::Central && is_problem(x)) {
      state_.problems.push_back(x);
      state_.queued[static_cast<size_t>(x - 1)] = 1;
    }
  }
  return status_ = state_.problems.empty() ? Status::Done : Status::Running;
}

void SkewSolver::examine(MaybeElement x) {
  if (!x || state_.queued[static_cast<size_t>(x->pos - 1)] != 0) return;
  if (is_problem(x->pos)) {
    state_.problems.push_back(x->pos);
    state_.queued[static_cast<size_t>(x->pos - 1)] = 1;
  }
}

SkewSolver::Status SkewSolver::step() {
  if (status_ != Status::Running) return status_;
  if (state_.problems.empty()) return status_ = Status::Done;

  const int32_t x = state_.problems.front();
  state_.problems.pop_front();
  state_.queued[static_cast<size_t>(x - 1)] = 0;

  const Bound b = bound(x);
  if (b.kind == Bound::Kind::Exhausted) {
    state_.image[static_cast<size_t>(x - 1)] = std::nullopt;
    return status_ = Status::Failed;
  }
  const Corner t = pattern_labels_.type(x);
  if (b.kind == Bound::Kind::At && strictly_outer(t, *state_.at(x), b.element)) {
    state_.image[static_cast<size_t>(x - 1)] = b.element;
    ++state_.iterations;
    examine(pattern_labels_.step(pattern_, Element{x}, SkewStep::InnerH));
    examine(pattern_labels_.step(pattern_, Element{x}, SkewStep::InnerV));
  }
  if (state_.problems.empty()) status_ = Status::Done;
  return status_;
}

SkewSolver::Status SkewSolver::run() {
  while (status_ == Status::Running) step();
  return status_;
}

Embedding SkewSolver::embedding() const {
  Embedding e(pattern_.size());
  for (int32_t x = 1; x <= pattern_.size(); ++x) {
    if (auto y = state_.at(x)) e.assign(x, y->pos);
  }
  return e;
}

SkewOutcome min_noncentral_embedding(const Permutation& pattern, const SkewLabels& pattern_labels,
                                     const Permutation& text, const SkewLabels& text_labels) {
  SkewSolver solver(pattern, pattern_labels, text, text_labels);
  SkewOutcome out;
  if (solver.initialize() != SkewSolver::Status::Failed) solver.run();
  out.iterations = solver.state().iterations;
  out.found = solver.status() == SkewSolver::Status::Done;
  if (out.found) out.embedding = solver.embedding();
  return out;
}

Region remaining_region(const Permutation& text, const Embedding& partial, const SkewLabels& pattern_labels) {
  const int32_t n = text.size();
  Region r;
  r.pos_low = 0;
  r.pos_high = n + 1;
  r.val_low = 0;
  r.val_high = n + 1;
  for (int32_t x = 1; x <= partial.pattern_size(); ++x) {
    const Corner c = pattern_labels.type(x);
    const auto img = partial.at(x);
    if (c == Corner::Central || !img) continue;
    const int32_t v = text.value(*img);
    if (is_west(c)) {
      r.pos_low = std::max(r.pos_low, *img);
    } else {
      r.pos_high = std::min(r.pos_high, *img);
    }
    if (is_north(c)) {
      r.val_high = std::min(r.val_high, v);
    } else {
      r.val_low = std::max(r.val_low, v);
    }
  }
  for (int32_t pos = r.pos_low + 1; pos < r.pos_high; ++pos) {
    const int32_t v = text.value(pos);
    if (v > r.val_low && v < r.val_high) r.members.push_back(pos);
  }
  r.subpattern = normalize_subsequence(text, r.members);
  r.sublabels = label_skew(r.subpattern);
  return r;
}

MonotoneCapacity monotone_capacity(const Region& r) {
  const SkewLabels& l = r.sublabels;
  const int32_t central = l.count(Corner::Central);
  const int32_t one = std::min(1, central);
  MonotoneCapacity cap;
  cap.lis = l.count(Corner::SW) + l.count(Corner::NE) +
            (l.center_direction() == CenterDirection::Decreasing ? one : central);
  cap.lds = l.count(Corner::NW) + l.count(Corner::SE) +
            (l.center_direction() == CenterDirection::Increasing ? one : central);
  return cap;
}

namespace {

/// Region positions forming a monotone run: one corner, the centre (all of it when its
/// direction agrees, else a single element), then the opposite corner.
std::vector<int32_t> monotone_witness(const Region& r, bool increasing) {
  const SkewLabels& l = r.sublabels;
  const Corner first = increasing ? Corner::SW : Corner::NW;
  const Corner last = increasing ? Corner::NE : Corner::SE;
  const CenterDirection against = increasing ? CenterDirection::Decreasing : CenterDirection::Increasing;
  std::vector<int32_t> out = l.positions_of(first);
  std::vector<int32_t> centre = l.positions_of(Corner::Central);
  if (l.center_direction() == against) centre.resize(std::min<size_t>(centre.size(), 1));
  out.insert(out.end(), centre.begin(), centre.end());
  const std::vector<int32_t> tail = l.positions_of(last);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace

MatchResult match_skew_merged(const Permutation& pattern, const Permutation& text) {
  return match_skew_merged(pattern, label_skew(pattern), text, label_skew(text));
}

MatchResult match_skew_merged(const Permutation& pattern, const SkewLabels& pl, const Permutation& text,
                              const SkewLabels& tl) {
  if (!pl.is_skew_merged()) throw ClassError("pattern is not skew-merged");
  if (!tl.is_skew_merged()) throw ClassError("text is not skew-merged");

  const int32_t k = pattern.size();
  MatchResult result;
  if (k == 0) {
    result.found = true;
    result.embedding = Embedding(0);
    return result;
  }
  if (k > text.size()) return result;

  SkewOutcome outer = min_noncentral_embedding(pattern, pl, text, tl);
  result.iterations = outer.iterations;
  if (!outer.found) return result;

  Embedding e = std::move(outer.embedding);
  const std::vector<int32_t> central = pl.positions_of(Corner::Central);
  const auto c = static_cast<int32_t>(central.size());
  if (c > 0) {
    const Region region = remaining_region(text, e, pl);
    const MonotoneCapacity cap = monotone_capacity(region);
    bool increasing = false;
    switch (pl.center_direction()) {
      case CenterDirection::Increasing:
        if (c > cap.lis) return result;
        increasing = true;
        break;
      case CenterDirection::Decreasing:
        if (c > cap.lds) return result;
        break;
      case CenterDirection::Trivial:
        if (c > std::max(cap.lis, cap.lds)) return result;
        increasing = cap.lis >= c;
        break;
    }
    const std::vector<int32_t> witness = monotone_witness(region, increasing);
    for (int32_t i = 0; i < c; ++i) {
      const int32_t region_pos = witness[static_cast<size_t>(i)];
      e.assign(central[static_cast<size_t>(i)], region.members[static_cast<size_t>(region_pos - 1)]);
    }
  }

  result.found = true;
  result.embedding = std::move(e);
  if (!verify_embedding(pattern, text, result.embedding)) {
    throw std::logic_error("match_skew_merged produced an invalid embedding");
  }
  return result;
}

}  // namespace ppm
