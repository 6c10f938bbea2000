#include "ppm/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ppm/match321.hpp"
#include "ppm/match_skew.hpp"
#include "ppm/oracle.hpp"
#include "ppm/sweep.hpp"

namespace ppm {

namespace {

using Json = nlohmann::ordered_json;
using oracle::PermClass;

constexpr int kFound = 0;
constexpr int kNotFound = 1;
constexpr int kError = 2;

std::vector<Permutation> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<Permutation> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
    out.push_back(parse_permutation(line));
  }
  return out;
}

std::vector<Permutation> gather(const std::vector<std::string>& args, const std::string& file) {
  std::vector<Permutation> out;
  if (!file.empty()) out = read_file(file);
  for (const auto& a : args) out.push_back(parse_permutation(a));
  return out;
}

Json pairs_json(const std::vector<std::pair<int32_t, int32_t>>& pairs) {
  Json a = Json::array();
  for (const auto& [x, y] : pairs) a.push_back(Json::array({x, y}));
  return a;
}

Json embedding_json(const Permutation& pattern, const Permutation& text, const Embedding& e, bool found) {
  Json j;
  j["contains"] = found;
  std::vector<std::pair<int32_t, int32_t>> positions;
  std::vector<std::pair<int32_t, int32_t>> values;
  if (found) {
    const auto image = e.positions();
    for (int32_t i = 1; i <= pattern.size(); ++i) positions.emplace_back(i, image[static_cast<size_t>(i - 1)]);
    values = value_map(pattern, text, e);
  }
  j["embedding_positions"] = pairs_json(positions);
  j["embedding_values"] = pairs_json(values);
  return j;
}

Json frontiers_json(const std::vector<Frontier>& fs) {
  Json a = Json::array();
  for (const auto& f : fs) a.push_back(Json{{"maxpos", f.maxpos}, {"maxval", f.maxval}});
  return a;
}

const char* kind_name(Block::Kind k) { return k == Block::Kind::Rigid ? "rigid" : "singleton"; }

Json classify_json(const Permutation& p) {
  Json j;
  j["permutation"] = format_permutation(p);
  const Labels321 rl = label_rigid_321(p);
  const SkewLabels sl = label_skew(p);
  j["av321"] = rl.is_avoider();
  j["skew_merged"] = sl.is_skew_merged();
  if (rl.is_avoider()) {
    Json labels = Json::array();
    for (int32_t i = 1; i <= p.size(); ++i) labels.push_back(to_string(rl.type(i)));
    j["labels_321"] = labels;
  }
  if (sl.is_skew_merged()) {
    Json labels = Json::array();
    for (int32_t i = 1; i <= p.size(); ++i) labels.push_back(to_string(sl.type(i)));
    j["labels_skew"] = labels;
    j["center_direction"] = to_string(sl.center_direction());
  }
  return j;
}

Json decompose_json(const Permutation& p) {
  Json j;
  j["permutation"] = format_permutation(p);
  const Labels321 rl = label_rigid_321(p);
  const SkewLabels sl = label_skew(p);
  if (!rl.is_avoider() && !sl.is_skew_merged()) throw ClassError("permutation is neither 321-avoiding nor skew-merged");
  if (rl.is_avoider()) {
    Json blocks = Json::array();
    for (const Block& b : block_decomposition(p, rl).blocks) {
      blocks.push_back(Json{{"kind", kind_name(b.kind)},
                            {"first", b.first},
                            {"last", b.last},
                            {"pattern", format_permutation(b.pattern)}});
    }
    j["blocks"] = blocks;
  }
  if (sl.is_skew_merged()) {
    Json regions;
    regions["west_end"] = sl.west_end();
    regions["east_begin"] = sl.east_begin();
    regions["south_top"] = sl.south_top();
    regions["north_bottom"] = sl.north_bottom();
    regions["center_direction"] = to_string(sl.center_direction());
    for (Corner c : {Corner::NE, Corner::NW, Corner::SW, Corner::SE, Corner::Central}) {
      regions[to_string(c)] = sl.positions_of(c);
    }
    j["skew"] = regions;
  }
  return j;
}

/// Single inputs print one document, --file or several inputs print an array.
std::string render(const std::vector<Json>& docs, bool as_array) {
  if (!as_array && docs.size() == 1) return docs.front().dump(2) + "\n";
  return Json(docs).dump(2) + "\n";
}

PermClass resolve_class(const std::string& name, const Permutation& pattern, const Permutation& text) {
  if (name == "av321") return PermClass::Av321;
  if (name == "skew") return PermClass::Skew;
  if (oracle::avoids_321(pattern) && oracle::avoids_321(text)) return PermClass::Av321;
  if (label_skew(pattern).is_skew_merged() && label_skew(text).is_skew_merged()) return PermClass::Skew;
  throw ClassError("inputs are neither both 321-avoiding nor both skew-merged");
}

std::pair<Permutation, Permutation> pattern_and_text(const std::vector<std::string>& args, const std::string& file) {
  const auto perms = gather(args, file);
  if (perms.size() != 2) throw InputError("expected a pattern and a text");
  return {perms[0], perms[1]};
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Permutation pattern matching for 321-avoiding and skew-merged permutations", "ppm"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  std::string file;
  std::string cls = "auto";
  bool trace = false;

  auto* classify = app.add_subcommand("classify", "class memberships and labels");
  classify->add_option("permutations", inputs, "one-line permutations");
  classify->add_option("--file", file, "read one permutation per line");

  auto* decompose = app.add_subcommand("decompose", "direct-sum blocks or skew regions");
  decompose->add_option("permutations", inputs, "one-line permutations");
  decompose->add_option("--file", file, "read one permutation per line");

  auto* match = app.add_subcommand("match", "fast containment test");
  match->add_option("inputs", inputs, "pattern then text");
  match->add_option("--file", file, "pattern on the first line, text on the second");
  match->add_option("--class", cls, "algorithm")->check(CLI::IsMember({"auto", "av321", "skew"}));
  match->add_flag("--trace", trace, "include per-block candidate frontiers (av321)");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference");
  oracle_cmd->require_subcommand(1);
  auto* oracle_match = oracle_cmd->add_subcommand("match", "brute-force containment test");
  oracle_match->add_option("inputs", inputs, "pattern then text");
  oracle_match->add_option("--file", file, "pattern on the first line, text on the second");

  std::string gen_class = "av321";
  int32_t gen_size = 0;
  int32_t gen_count = 1;
  uint64_t seed = 1;
  bool exhaustive = false;
  auto* gen = app.add_subcommand("gen", "generate class members");
  gen->add_option("--class", gen_class)->check(CLI::IsMember({"av321", "skew", "any"}));
  gen->add_option("--size", gen_size)->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--count", gen_count)->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed);
  gen->add_flag("--exhaustive", exhaustive, "all members of the given size (size <= 9)");

  std::string bench_class = "av321";
  std::vector<int32_t> bench_n{1000};
  std::vector<int32_t> bench_k{10};
  int32_t trials = 10;
  bool serial = false;
  auto* bench = app.add_subcommand("bench", "timed random trials as CSV");
  bench->add_option("--class", bench_class)->check(CLI::IsMember({"av321", "skew"}));
  bench->add_option("--n", bench_n, "text sizes")->check(CLI::PositiveNumber);
  bench->add_option("--k", bench_k, "pattern sizes, paired with --n")->check(CLI::NonNegativeNumber);
  bench->add_option("--trials", trials, "trials per (n, k)")->check(CLI::NonNegativeNumber);
  bench->add_option("--seed", seed, "seed of the first trial");
  bench->add_flag("--serial", serial, "run trials on one thread");

  CliResult r;
  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    r.exit_code = app.exit(e, out, err);
    r.out = out.str();
    return r;
  } catch (const CLI::CallForAllHelp& e) {
    r.exit_code = app.exit(e, out, err);
    r.out = out.str();
    return r;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return CliResult{kError, out.str(), err.str()};
  }

  try {
    if (classify->parsed() || decompose->parsed()) {
      const auto perms = gather(inputs, file);
      if (perms.empty()) throw InputError("no permutation given");
      std::vector<Json> docs;
      for (const auto& p : perms) docs.push_back(classify->parsed() ? classify_json(p) : decompose_json(p));
      r.out = render(docs, !file.empty());
    } else if (match->parsed()) {
      const auto [pattern, text] = pattern_and_text(inputs, file);
      const PermClass chosen = resolve_class(cls, pattern, text);
      MatchTrace mt;
      const MatchResult m = chosen == PermClass::Av321 ? match_321(pattern, text, trace ? &mt : nullptr)
                                                       : match_skew_merged(pattern, text);
      if (m.found && !verify_embedding(pattern, text, m.embedding)) {
        throw std::logic_error("embedding failed verification");
      }
      Json j = embedding_json(pattern, text, m.embedding, m.found);
      j["iterations"] = m.iterations;
      j["algorithm"] = chosen == PermClass::Av321 ? "av321" : "skew";
      if (trace && chosen == PermClass::Av321) {
        Json blocks = Json::array();
        for (const auto& b : mt.blocks) {
          blocks.push_back(Json{{"block", b.block_index},
                                {"kind", kind_name(b.kind)},
                                {"produced", frontiers_json(b.produced)},
                                {"kept", frontiers_json(b.kept)}});
        }
        j["trace"] = blocks;
      }
      r.out = j.dump(2) + "\n";
      r.exit_code = m.found ? kFound : kNotFound;
    } else if (oracle_match->parsed()) {
      const auto [pattern, text] = pattern_and_text(inputs, file);
      const auto e = oracle::brute_find(pattern, text);
      Json j = embedding_json(pattern, text, e.value_or(Embedding(pattern.size())), e.has_value());
      r.out = j.dump(2) + "\n";
      r.exit_code = e ? kFound : kNotFound;
    } else if (gen->parsed()) {
      const PermClass pc = gen_class == "av321" ? PermClass::Av321
                           : gen_class == "skew" ? PermClass::Skew
                                                 : PermClass::Any;
      if (exhaustive) {
        if (gen_size > 9) throw InputError("--exhaustive supports sizes up to 9");
        for (const auto& p : oracle::enumerate_avoiders(pc, gen_size)) out << format_permutation(p) << "\n";
      } else {
        for (int32_t i = 0; i < gen_count; ++i) {
          out << format_permutation(oracle::random_avoider(pc, gen_size, seed + static_cast<uint64_t>(i))) << "\n";
        }
      }
      r.out = out.str();
    } else if (bench->parsed()) {
      if (bench_n.size() != bench_k.size()) throw InputError("--n and --k need the same number of values");
      std::vector<sweep::TrialSpec> specs;
      uint64_t s = seed;
      for (size_t i = 0; i < bench_n.size(); ++i) {
        if (bench_k[i] > bench_n[i]) throw InputError("pattern size exceeds text size");
        for (int32_t t = 0; t < trials; ++t) {
          specs.push_back({bench_class == "av321" ? PermClass::Av321 : PermClass::Skew, bench_n[i], bench_k[i], s++});
        }
      }
      const auto results = serial ? sweep::run_trials_serial(specs) : sweep::run_trials_parallel(specs);
      out << "n,k,iterations,elapsed_nanoseconds,seed\n";
      for (const auto& t : results) {
        if (t.iterations > static_cast<uint64_t>(t.k) * static_cast<uint64_t>(t.n)) {
          throw std::logic_error("iteration count exceeds k*n");
        }
        out << t.n << "," << t.k << "," << t.iterations << "," << t.elapsed_ns << "," << t.seed << "\n";
      }
      r.out = out.str();
    }
  } catch (const std::invalid_argument& e) {
    return CliResult{kError, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::logic_error& e) {
    return CliResult{kError, "", std::string("internal error: ") + e.what() + "\n"};
  }
  return r;
}

}  // namespace ppm
