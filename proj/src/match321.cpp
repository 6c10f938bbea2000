#include "ppm/match321.hpp"

#include <algorithm>
#include <stdexcept>

namespace ppm {

namespace {

/// Least element of type `t` strictly inside the frontier rectangle.
MaybeElement least_inside(const Permutation& text, const Labels321& tl, RigidType t, Frontier fr) {
  MaybeElement y = fr.maxpos == 0 ? tl.first(t) : tl.next(Element{fr.maxpos}, Direction::Right, t);
  while (y && text.value(*y) <= fr.maxval) y = tl.next(y, Direction::Right, t);
  return y;
}

}  // namespace

Bound problem_bound_321(const RigidState& state, int32_t x, const Permutation& pattern, const Labels321& pattern_labels,
                        const Labels321& text_labels) {
  const RigidType t = pattern_labels.type(x);
  Bound b = Bound::unconstrained();
  auto consider = [&](MaybeElement pattern_neighbor, Direction toward) {
    if (!pattern_neighbor || b.kind == Bound::Kind::Exhausted) return;
    const MaybeElement candidate = text_labels.next(state.at(pattern_neighbor->pos), toward, t);
    if (!candidate) {
      b = Bound::exhausted();
    } else if (b.kind == Bound::Kind::Unconstrained || candidate->pos > b.element.pos) {
      // Same-type elements of a 321-avoider increase in both coordinates, so position
      // order is the type order.
      b = Bound::at(*candidate);
    }
  };
  consider(neighbor(pattern, Element{x}, Direction::Left), Direction::Right);
  consider(neighbor(pattern, Element{x}, Direction::Down), Direction::Up);
  return b;
}

RigidSolver::RigidSolver(const Permutation& pattern, const Labels321& pattern_labels, const Permutation& text,
                         const Labels321& text_labels)
    : pattern_(pattern), pattern_labels_(pattern_labels), text_(text), text_labels_(text_labels) {}

bool RigidSolver::is_problem(int32_t x) const {
  const Bound b = bound(x);
  switch (b.kind) {
    case Bound::Kind::Unconstrained: return false;
    case Bound::Kind::Exhausted: return true;
    case Bound::Kind::At: return state_.at(x)->pos < b.element.pos;
  }
  return false;
}

RigidSolver::Status RigidSolver::initialize(Frontier frontier) {
  const int32_t k = pattern_.size();
  state_ = RigidState{};
  state_.image.assign(static_cast<size_t>(k), std::nullopt);
  state_.queued.assign(static_cast<size_t>(k), 0);

  MaybeElement least[2] = {std::nullopt, std::nullopt};
  bool needed[2] = {false, false};
  for (int32_t x = 1; x <= k; ++x) {
    const RigidType t = pattern_labels_.type(x);
    if (t == RigidType::Fluid) throw std::invalid_argument("rigid solver needs a pattern without fluid elements");
    needed[t == RigidType::Upper ? 0 : 1] = true;
  }
  for (int i = 0; i < 2; ++i) {
    if (!needed[i]) continue;
    least[i] = least_inside(text_, text_labels_, i == 0 ? RigidType::Upper : RigidType::Lower, frontier);
    if (!least[i]) return status_ = Status::Failed;
  }
  for (int32_t x = 1; x <= k; ++x) {
    state_.image[static_cast<size_t>(x - 1)] = least[pattern_labels_.type(x) == RigidType::Upper ? 0 : 1];
  }
  for (int32_t x = 1; x <= k; ++x) {
    if (is_problem(x)) {
      state_.problems.push_back(x);
      state_.queued[static_cast<size_t>(x - 1)] = 1;
    }
  }
  return status_ = state_.problems.empty() ? Status::Done : Status::Running;
}

void RigidSolver::examine(MaybeElement x) {
  if (!x || state_.queued[static_cast<size_t>(x->pos - 1)] != 0) return;
  if (is_problem(x->pos)) {
    state_.problems.push_back(x->pos);
    state_.queued[static_cast<size_t>(x->pos - 1)] = 1;
  }
}

RigidSolver::Status RigidSolver::step() {
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
  if (b.kind == Bound::Kind::At && state_.at(x)->pos < b.element.pos) {
    state_.image[static_cast<size_t>(x - 1)] = b.element;
    ++state_.iterations;
    examine(neighbor(pattern_, Element{x}, Direction::Right));
    examine(neighbor(pattern_, Element{x}, Direction::Up));
  }
  if (state_.problems.empty()) status_ = Status::Done;
  return status_;
}

RigidSolver::Status RigidSolver::run() {
  while (status_ == Status::Running) step();
  return status_;
}

Embedding RigidSolver::embedding() const {
  Embedding e(pattern_.size());
  for (int32_t x = 1; x <= pattern_.size(); ++x) {
    if (auto y = state_.at(x)) e.assign(x, y->pos);
  }
  return e;
}

RigidOutcome min_rigid_embedding(const Permutation& pattern, const Labels321& pattern_labels, const Permutation& text,
                                 const Labels321& text_labels, Frontier frontier) {
  RigidSolver solver(pattern, pattern_labels, text, text_labels);
  RigidOutcome out;
  if (solver.initialize(frontier) != RigidSolver::Status::Failed) solver.run();
  out.iterations = solver.state().iterations;
  out.found = solver.status() == RigidSolver::Status::Done;
  if (out.found) out.embedding = solver.embedding();
  return out;
}

namespace {

struct Candidate {
  Embedding embedding;
  Frontier frontier;
};

/// Drops every candidate whose region is contained in another's; among equal frontiers the
/// earliest survives.
void prune(std::vector<Candidate>& cands) {
  std::vector<Candidate> kept;
  for (size_t i = 0; i < cands.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < cands.size() && !dominated; ++j) {
      if (i == j) continue;
      const bool beats = cands[j].frontier.dominates(cands[i].frontier);
      const bool tie = cands[j].frontier == cands[i].frontier;
      dominated = beats && (!tie || j < i);
    }
    if (!dominated) kept.push_back(std::move(cands[i]));
  }
  cands = std::move(kept);
}

}  // namespace

MatchResult match_321(const Permutation& pattern, const Permutation& text, MatchTrace* trace) {
  return match_321(pattern, label_rigid_321(pattern), text, label_rigid_321(text), trace);
}

MatchResult match_321(const Permutation& pattern, const Labels321& pl, const Permutation& text, const Labels321& tl,
                      MatchTrace* trace) {
  if (!pl.is_avoider()) throw ClassError("pattern contains 321");
  if (!tl.is_avoider()) throw ClassError("text contains 321");

  const int32_t k = pattern.size();
  const int32_t n = text.size();
  MatchResult result;
  if (k == 0) {
    result.found = true;
    result.embedding = Embedding(0);
    return result;
  }
  if (k > n) return result;

  const BlockDecomposition decomposition = block_decomposition(pattern, pl);
  std::vector<Candidate> cands{Candidate{Embedding(k), Frontier{}}};

  for (size_t bi = 0; bi < decomposition.blocks.size(); ++bi) {
    const Block& block = decomposition.blocks[bi];
    std::vector<Candidate> next;

    if (block.kind == Block::Kind::Rigid) {
      const Labels321 bl = label_rigid_321(block.pattern);
      for (const Candidate& c : cands) {
        RigidOutcome r = min_rigid_embedding(block.pattern, bl, text, tl, c.frontier);
        result.iterations += r.iterations;
        if (!r.found) continue;
        Candidate ext{c.embedding, c.frontier};
        for (int32_t i = 1; i <= block.size(); ++i) {
          const int32_t img = *r.embedding.at(i);
          ext.embedding.assign(block.first + i - 1, img);
          ext.frontier.maxpos = std::max(ext.frontier.maxpos, img);
          ext.frontier.maxval = std::max(ext.frontier.maxval, text.value(img));
        }
        next.push_back(std::move(ext));
      }
    } else {
      for (const Candidate& c : cands) {
        // Leftmost and lowest points of the region above and right of the frontier.
        int32_t leftmost = 0;
        for (int32_t pos = c.frontier.maxpos + 1; pos <= n; ++pos) {
          if (text.value(pos) > c.frontier.maxval) {
            leftmost = pos;
            break;
          }
        }
        if (leftmost == 0) continue;
        int32_t lowest = 0;
        for (int32_t v = c.frontier.maxval + 1; v <= n; ++v) {
          if (text.position(v) > c.frontier.maxpos) {
            lowest = text.position(v);
            break;
          }
        }
        for (int32_t img : {leftmost, lowest}) {
          Candidate ext{c.embedding, Frontier{img, text.value(img)}};
          ext.embedding.assign(block.first, img);
          next.push_back(std::move(ext));
          if (lowest == leftmost) break;
        }
      }
    }

    BlockTrace bt;
    if (trace != nullptr) {
      bt.block_index = bi;
      bt.kind = block.kind;
      for (const auto& c : next) bt.produced.push_back(c.frontier);
    }
    prune(next);
    if (trace != nullptr) {
      for (const auto& c : next) bt.kept.push_back(c.frontier);
      trace->blocks.push_back(std::move(bt));
    }
    if (next.size() > 2) throw std::logic_error("more than two candidates survived pruning");
    cands = std::move(next);
    if (cands.empty()) return result;
  }

  const auto best = std::min_element(cands.begin(), cands.end(),
                                     [](const Candidate& a, const Candidate& b) { return a.frontier < b.frontier; });
  result.found = true;
  result.embedding = best->embedding;
  if (!verify_embedding(pattern, text, result.embedding)) {
    throw std::logic_error("match_321 produced an invalid embedding");
  }
  return result;
}

}  // namespace ppm
