#include "ppm/sweep.hpp"

#include <chrono>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ppm/match_skew.hpp"

namespace ppm::sweep {

MatchResult match_in_class(PermClass cls, const Permutation& pattern, const Permutation& text) {
  switch (cls) {
    case PermClass::Av321: return match_321(pattern, text);
    case PermClass::Skew: return match_skew_merged(pattern, text);
    case PermClass::Any: break;
  }
  throw std::invalid_argument("no fast matcher for unrestricted permutations");
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

/// Class members of every size up to max_n, with labelings computed once.
struct Corpus {
  PermClass cls;
  std::vector<std::vector<Permutation>> by_size;
  std::vector<std::vector<Labels321>> rigid;
  std::vector<std::vector<SkewLabels>> skew;
  std::vector<std::pair<int32_t, size_t>> texts;  // (size, index) of every member

  Corpus(PermClass c, int32_t max_n) : cls(c) {
    for (int32_t n = 0; n <= max_n; ++n) {
      by_size.push_back(oracle::enumerate_avoiders(cls, n));
      rigid.emplace_back();
      skew.emplace_back();
      for (const auto& p : by_size.back()) {
        if (cls == PermClass::Av321) rigid.back().push_back(label_rigid_321(p));
        if (cls == PermClass::Skew) skew.back().push_back(label_skew(p));
      }
      for (size_t i = 0; i < by_size.back().size(); ++i) texts.emplace_back(n, i);
    }
  }

  MatchResult match(int32_t pk, size_t pi, int32_t tn, size_t ti) const {
    const auto& pattern = by_size[static_cast<size_t>(pk)][pi];
    const auto& text = by_size[static_cast<size_t>(tn)][ti];
    if (cls == PermClass::Av321) {
      return match_321(pattern, rigid[static_cast<size_t>(pk)][pi], text, rigid[static_cast<size_t>(tn)][ti]);
    }
    return match_skew_merged(pattern, skew[static_cast<size_t>(pk)][pi], text, skew[static_cast<size_t>(tn)][ti]);
  }
};

/// All pairs with the given text, accumulated into `r`.
void check_text(const Corpus& corpus, size_t text_index, EquivalenceReport& r) {
  const auto [tn, ti] = corpus.texts[text_index];
  const Permutation& text = corpus.by_size[static_cast<size_t>(tn)][ti];
  for (int32_t k = 0; k <= tn; ++k) {
    const auto& patterns = corpus.by_size[static_cast<size_t>(k)];
    for (size_t pi = 0; pi < patterns.size(); ++pi) {
      const MatchResult fast = corpus.match(k, pi, tn, ti);
      const bool truth = oracle::brute_contains(patterns[pi], text);
      ++r.pairs;
      r.found += fast.found ? 1 : 0;
      r.discrepancies += fast.found != truth ? 1 : 0;
      if (fast.found && !oracle::full_order_check(patterns[pi], text, fast.embedding)) ++r.invalid_embeddings;
      if (fast.iterations > static_cast<uint64_t>(k) * static_cast<uint64_t>(tn)) ++r.bound_violations;
    }
  }
}

std::vector<Permutation> all_permutations_up_to(int32_t max_n) {
  std::vector<Permutation> out;
  for (int32_t n = 0; n <= max_n; ++n) {
    auto members = oracle::enumerate_avoiders(PermClass::Any, n);
    out.insert(out.end(), members.begin(), members.end());
  }
  return out;
}

void check_labels(PermClass cls, const Permutation& p, LabelReport& r) {
  ++r.permutations;
  const bool member = oracle::brute_in_class(p, cls);
  if (cls == PermClass::Av321) {
    const Labels321 l = label_rigid_321(p);
    if (l.is_avoider() != member) ++r.flag_mismatches;
    if (!member) return;
    const auto truth = oracle::brute_labels_321(p);
    for (int32_t pos = 1; pos <= p.size(); ++pos) {
      if (l.type(pos) != truth.type(pos)) {
        ++r.label_mismatches;
        return;
      }
    }
  } else {
    const SkewLabels l = label_skew(p);
    if (l.is_skew_merged() != member) ++r.flag_mismatches;
    if (!member) return;
    const auto truth = oracle::brute_labels_skew(p);
    for (int32_t pos = 1; pos <= p.size(); ++pos) {
      if (l.type(pos) != truth.type(pos)) {
        ++r.label_mismatches;
        return;
      }
    }
  }
}

}  // namespace

EquivalenceReport oracle_equivalence_serial(PermClass cls, int32_t max_n) {
  const Corpus corpus(cls, max_n);
  EquivalenceReport r;
  for (size_t t = 0; t < corpus.texts.size(); ++t) check_text(corpus, t, r);
  return r;
}

EquivalenceReport oracle_equivalence_parallel(PermClass cls, int32_t max_n) {
  const Corpus corpus(cls, max_n);
  uint64_t pairs = 0, found = 0, discrepancies = 0, invalid = 0, violations = 0;
  const auto count = static_cast<int64_t>(corpus.texts.size());
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : pairs, found, discrepancies, invalid, violations)
  for (int64_t t = 0; t < count; ++t) {
    EquivalenceReport local;
    check_text(corpus, static_cast<size_t>(t), local);
    pairs += local.pairs;
    found += local.found;
    discrepancies += local.discrepancies;
    invalid += local.invalid_embeddings;
    violations += local.bound_violations;
  }
  return EquivalenceReport{pairs, found, discrepancies, invalid, violations};
}

LabelReport label_agreement_serial(PermClass cls, int32_t max_n) {
  LabelReport r;
  for (const auto& p : all_permutations_up_to(max_n)) check_labels(cls, p, r);
  return r;
}

LabelReport label_agreement_parallel(PermClass cls, int32_t max_n) {
  const auto perms = all_permutations_up_to(max_n);
  uint64_t total = 0, flags = 0, labels = 0;
  const auto count = static_cast<int64_t>(perms.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : total, flags, labels)
  for (int64_t i = 0; i < count; ++i) {
    LabelReport local;
    check_labels(cls, perms[static_cast<size_t>(i)], local);
    total += local.permutations;
    flags += local.flag_mismatches;
    labels += local.label_mismatches;
  }
  return LabelReport{total, flags, labels};
}

std::pair<Permutation, Permutation> trial_instance(const TrialSpec& spec) {
  Permutation text = oracle::random_avoider(spec.cls, spec.n, spec.seed);
  Permutation pattern = spec.seed % 2 == 0
                            ? oracle::random_subpattern(text, spec.k, spec.seed + 1)
                            : oracle::random_avoider(spec.cls, spec.k, spec.seed ^ 0x9e3779b97f4a7c15ULL);
  return {std::move(pattern), std::move(text)};
}

TrialResult run_trial(const TrialSpec& spec) {
  const auto [pattern, text] = trial_instance(spec);
  const auto start = std::chrono::steady_clock::now();
  const MatchResult m = match_in_class(spec.cls, pattern, text);
  const auto stop = std::chrono::steady_clock::now();
  TrialResult r;
  r.n = spec.n;
  r.k = spec.k;
  r.iterations = m.iterations;
  r.elapsed_ns = static_cast<uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  r.seed = spec.seed;
  r.found = m.found;
  return r;
}

std::vector<TrialResult> run_trials_serial(std::span<const TrialSpec> specs) {
  std::vector<TrialResult> out(specs.size());
  for (size_t i = 0; i < specs.size(); ++i) out[i] = run_trial(specs[i]);
  return out;
}

std::vector<TrialResult> run_trials_parallel(std::span<const TrialSpec> specs) {
  std::vector<TrialResult> out(specs.size());
  const auto count = static_cast<int64_t>(specs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int64_t i = 0; i < count; ++i) out[static_cast<size_t>(i)] = run_trial(specs[static_cast<size_t>(i)]);
  return out;
}

}  // namespace ppm::sweep
