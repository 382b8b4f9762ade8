// Copyright 2026 The mdmatch Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mdmatch/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "mdmatch/core.hpp"
#include "mdmatch/ingest.hpp"
#include "mdmatch/oracle.hpp"
#include "mdmatch/search.hpp"

namespace mdmatch::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

std::uint64_t default_seed() {
  const char* env = std::getenv("MDMATCH_SEED");
  if (env == nullptr || *env == '\0') return 1;
  try {
    std::size_t used = 0;
    const std::uint64_t seed = std::stoull(env, &used);
    if (env[used] != '\0') throw std::invalid_argument(env);
    return seed;
  } catch (const std::logic_error&) {
    throw UsageError(std::string("invalid MDMATCH_SEED: ") + env);
  }
}

// Unset alpha/beta default to the largest legal values, floor(m/2) and m.
struct ParamFlags {
  std::optional<std::int64_t> alpha;
  std::optional<std::int64_t> beta;

  void add_to(CLI::App* app) {
    app->add_option("--alpha", alpha, "Max translocation factor length (default floor(m/2))")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--beta", beta, "Max inversion length (default m)")
        ->check(CLI::NonNegativeNumber);
  }

  SearchParams for_length(std::size_t m) const {
    return normalize_params({alpha.value_or(kUnbounded), beta.value_or(kUnbounded)}, m);
  }

  std::string describe() const {
    return "alpha=" + (alpha ? std::to_string(*alpha) : std::string("floor(m/2)")) +
           " beta=" + (beta ? std::to_string(*beta) : std::string("m"));
  }
};

std::vector<ingest::SequenceRecord> load_records(const std::string& path, bool raw) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  try {
    if (raw) return {ingest::read_raw(in)};
    return ingest::read_fasta(in);
  } catch (const ingest::FormatError& e) {
    throw IoError(path + ": " + e.what());
  }
}

// Text for the experiment commands: a file, or --random N SIGMA SEED.
struct TextSource {
  std::string file;
  std::vector<std::uint64_t> random;
  std::string format = "fasta";

  void add_to(CLI::App* app) {
    auto* file_opt = app->add_option("--text", file, "Sequence file");
    auto* random_opt = app->add_option("--random", random, "Generate uniform text: N SIGMA SEED")
                           ->expected(3);
    file_opt->excludes(random_opt);
    app->add_option("--format", format, "Input format")
        ->check(CLI::IsMember({"fasta", "raw"}));
  }

  // Returns the text and the alphabet size used for probabilities.
  std::pair<std::string, std::size_t> load(std::ostream& err) const {
    if (!random.empty()) {
      const std::string text = ingest::gen_random_text(random[0], random[1], random[2]);
      return {text, random[1]};
    }
    if (file.empty()) throw UsageError("one of --text or --random is required");
    auto records = load_records(file, format == "raw");
    if (records.size() > 1)
      err << "# " << file << ": " << records.size() << " records, using the first\n";
    std::string text = std::move(records.front().data);
    const std::string_view view = text;
    const std::size_t sigma = build_alphabet(std::span(&view, 1)).size();
    return {std::move(text), sigma};
  }
};

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

struct SearchCommand {
  std::string pattern;
  std::string pattern_file;
  std::string text_file;
  std::string format = "fasta";
  ParamFlags params;
  bool witness = false;
  std::size_t threads = 1;
  bool verify_parallel = false;

  void add_to(CLI::App* app) {
    auto* inline_opt = app->add_option("-p,--pattern", pattern, "Pattern string");
    auto* file_opt = app->add_option("--pattern-file", pattern_file, "Patterns, one per record");
    inline_opt->excludes(file_opt);
    app->add_option("text-file,-t,--text", text_file, "Text file")->required();
    app->add_option("--format", format, "Input format for text and pattern files")
        ->check(CLI::IsMember({"fasta", "raw"}));
    params.add_to(app);
    app->add_flag("--witness", witness, "Append the block decomposition of each match");
    app->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    app->add_flag("--verify-parallel", verify_parallel,
                  "Compare the threaded result with a sequential run");
  }

  int run(std::ostream& out, std::ostream& err) const {
    const bool raw = format == "raw";
    std::vector<std::string> patterns;
    if (!pattern_file.empty()) {
      for (auto& r : load_records(pattern_file, raw)) patterns.push_back(std::move(r.data));
    } else if (!pattern.empty()) {
      patterns.push_back(raw ? pattern : upper(pattern));
    } else {
      throw UsageError("one of --pattern or --pattern-file is required");
    }
    for (const auto& p : patterns)
      if (p.empty()) throw UsageError("empty pattern");

    const auto records = load_records(text_file, raw);
    for (std::size_t r = 0; r < records.size(); ++r) {
      const auto& record = records[r];
      std::vector<std::string_view> all(patterns.begin(), patterns.end());
      all.push_back(record.data);
      const Alphabet alphabet = build_alphabet(all);
      const CodedString text = alphabet.encode(record.data);

      for (std::size_t pid = 0; pid < patterns.size(); ++pid) {
        const CodedString p = alphabet.encode(patterns[pid]);
        const SearchParams sp = params.for_length(p.size());
        auto emit = [&](const Occurrence& occ) {
          out << pid << '\t' << record.id << '\t' << occ.position;
          if (occ.witness) out << '\t' << format_witness(*occ.witness);
          out << '\n';
        };
        if (threads <= 1) {
          for_each_occurrence(p, text, alphabet.size(), sp, witness, emit);
          continue;
        }
        const auto found = parallel_fgg_search(p, text, alphabet.size(), sp, threads, witness);
        if (verify_parallel && found != fgg_search(p, text, alphabet.size(), sp, witness)) {
          err << "parallel result differs from sequential for pattern " << pid << '\n';
          return kExitIo;
        }
        for (const auto& occ : found) emit(occ);
      }
    }
    return kExitOk;
  }
};

std::vector<CodedString> encode_patterns(const Alphabet& alphabet,
                                         const std::vector<std::string>& patterns) {
  std::vector<CodedString> out;
  out.reserve(patterns.size());
  for (const auto& p : patterns) out.push_back(alphabet.encode(p));
  return out;
}

struct DensityCommand {
  TextSource source;
  std::size_t m = 0;
  std::size_t count = 200;
  ParamFlags params;
  std::optional<std::uint64_t> seed;

  void add_to(CLI::App* app) {
    source.add_to(app);
    app->add_option("-m,--length", m, "Pattern length")->required()->check(CLI::PositiveNumber);
    app->add_option("--count", count, "Patterns to extract")->check(CLI::PositiveNumber);
    params.add_to(app);
    app->add_option("--seed", seed, "Pattern extraction seed (default $MDMATCH_SEED or 1)");
  }

  int run(std::ostream& out, std::ostream& err) const {
    const auto [text, sigma] = source.load(err);
    const std::uint64_t pattern_seed = seed ? *seed : default_seed();
    const std::string_view view = text;
    const Alphabet alphabet = build_alphabet(std::span(&view, 1));
    const CodedString coded = alphabet.encode(text);
    const auto patterns =
        encode_patterns(alphabet, ingest::extract_patterns(text, m, count, pattern_seed));

    double density = 0;
    double matches = 0;
    double probability = 0;
    for (const auto& p : patterns) {
      const SearchStats stats = search_stats(p, coded, alphabet.size(), params.for_length(m));
      density += stats.candidate_density();
      matches += static_cast<double>(stats.matches);
      probability += oracle::permutation_probability(oracle::symbol_counts(p, alphabet.size()),
                                                     m, sigma);
    }
    const auto n = static_cast<double>(patterns.size());
    err << "# " << params.describe() << " pattern_seed=" << pattern_seed
        << " rng=mt19937_64\n";
    out << "m,sigma,count,mean_candidate_density,mean_match_count,theoretical_probability\n";
    out << std::setprecision(10) << m << ',' << sigma << ',' << patterns.size() << ','
        << density / n << ',' << matches / n << ',' << probability / n << '\n';
    return kExitOk;
  }
};

struct BenchCommand {
  TextSource source;
  std::vector<std::size_t> m_list{8, 16, 32, 64, 128, 256, 512};
  std::size_t count = 200;
  std::size_t runs = 1;
  ParamFlags params;
  std::optional<std::uint64_t> seed;
  bool baseline = true;

  void add_to(CLI::App* app) {
    source.add_to(app);
    app->add_option("--m-list", m_list, "Pattern lengths")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    app->add_option("--count", count, "Patterns per length")->check(CLI::PositiveNumber);
    app->add_option("--runs", runs, "Timed runs per pattern")->check(CLI::PositiveNumber);
    params.add_to(app);
    app->add_option("--seed", seed, "Pattern extraction seed (default $MDMATCH_SEED or 1)");
    app->add_flag("--baseline,!--no-baseline", baseline, "Also time the unfiltered scan");
  }

  int run(std::ostream& out, std::ostream& err) const {
    using Clock = std::chrono::steady_clock;
    const auto [text, sigma] = source.load(err);
    (void)sigma;
    const std::uint64_t pattern_seed = seed ? *seed : default_seed();
    const std::string_view view = text;
    const Alphabet alphabet = build_alphabet(std::span(&view, 1));
    const CodedString coded = alphabet.encode(text);

    err << "# " << params.describe() << " pattern_seed=" << pattern_seed << '\n';
    out << "m,algorithm,mean_ms,candidates_per_position\n" << std::setprecision(10);
    for (std::size_t m : m_list) {
      if (m > text.size()) throw UsageError("pattern length exceeds text length");
      const auto patterns =
          encode_patterns(alphabet, ingest::extract_patterns(text, m, count, pattern_seed));
      const SearchParams sp = params.for_length(m);

      auto time_ms = [&](auto&& search) {
        double total = 0;
        std::size_t sink = 0;
        for (const auto& p : patterns) {
          for (std::size_t r = 0; r < runs; ++r) {
            const auto start = Clock::now();
            sink += search(p).size();
            total += std::chrono::duration<double, std::milli>(Clock::now() - start).count();
          }
        }
        if (sink == 0) err << "# no matches at m=" << m << '\n';
        return total / static_cast<double>(patterns.size() * runs);
      };

      double density = 0;
      for (const auto& p : patterns)
        density += search_stats(p, coded, alphabet.size(), sp).candidate_density();
      density /= static_cast<double>(patterns.size());

      const double fgg_ms =
          time_ms([&](const CodedString& p) { return fgg_search(p, coded, alphabet.size(), sp); });
      out << m << ",fgg," << fgg_ms << ',' << density << '\n';
      if (baseline) {
        const double all_ms =
            time_ms([&](const CodedString& p) { return scan_all_search(p, coded, sp); });
        out << m << ",scan_all," << all_ms << ",1\n";
      }
    }
    return kExitOk;
  }
};

struct GenCommand {
  std::size_t n = 0;
  std::size_t sigma = 0;
  std::optional<std::uint64_t> seed;
  std::string out_file;

  void add_to(CLI::App* app) {
    app->add_option("-n,--length", n, "Text length")->required();
    app->add_option("--sigma", sigma, "Alphabet size, 2..256")->required();
    app->add_option("--seed", seed, "Generator seed (default $MDMATCH_SEED or 1)");
    app->add_option("-o,--out", out_file, "Output file")->required();
  }

  int run(std::ostream&, std::ostream&) const {
    const std::string text = ingest::gen_random_text(n, sigma, seed ? *seed : default_seed());
    std::ofstream out(out_file, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + out_file);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) throw IoError("write failed: " + out_file);
    return kExitOk;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern matching with translocations and inversions", "mdmatch"};
  app.require_subcommand(1);

  SearchCommand search;
  DensityCommand density;
  BenchCommand bench;
  GenCommand gen;
  auto* search_cmd = app.add_subcommand("search", "Report md-match positions of patterns");
  auto* density_cmd = app.add_subcommand("density", "Measure candidate density per position");
  auto* bench_cmd = app.add_subcommand("bench", "Time the filtered and unfiltered searches");
  auto* gen_cmd = app.add_subcommand("gen", "Write a uniform random text");
  search.add_to(search_cmd);
  density.add_to(density_cmd);
  bench.add_to(bench_cmd);
  gen.add_to(gen_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (search_cmd->parsed()) return search.run(out, err);
    if (density_cmd->parsed()) return density.run(out, err);
    if (bench_cmd->parsed()) return bench.run(out, err);
    return gen.run(out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace mdmatch::cli
