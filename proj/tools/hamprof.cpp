// hamprof — streaming per-alignment match counts / Hamming distances for a
// fixed pattern over byte streams, with k-mismatch filtering, an independent
// verification mode and a measurement harness.
//
// Exit codes: 0 success (kmatch: at least one alignment reported),
// 1 kmatch found nothing (grep convention) or a failed bench check,
// 2 usage error, 3 I/O error, 4 verify divergence.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamprof/hamprof.hpp"

namespace {

using hamprof::AlignmentRecord;
using hamprof::Byte;
using hamprof::ByteSpan;
using hamprof::MatchProfile;
using hamprof::Pattern;
using hamprof::ShiftTable;
using hamprof::StreamScanner;

using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOpts {
  std::string pattern;
  std::string pattern_file;
  bool raw_pattern = false;
  std::string source = "-";
  std::string format = "tsv";
  std::string range;  // empty = subcommand default
  std::size_t chunk_size = hamprof::io::ChunkedReader::kDefaultChunkSize;
  bool stats = false;
  unsigned jobs = 1;

  CLI::Option* pattern_opt = nullptr;
  CLI::Option* pattern_file_opt = nullptr;
  CLI::Option* format_opt = nullptr;
  CLI::Option* range_opt = nullptr;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  o.pattern_opt =
      cmd->add_option("-p,--pattern", o.pattern, "Inline pattern bytes");
  o.pattern_file_opt = cmd->add_option("--pattern-file", o.pattern_file,
                                       "Read the pattern from a file");
  o.pattern_opt->excludes(o.pattern_file_opt);
  o.pattern_file_opt->excludes(o.pattern_opt);
  cmd->add_flag("--raw-pattern", o.raw_pattern,
                "Keep a trailing newline of a pattern file (default strips "
                "one LF or CRLF)");
  cmd->add_option("text", o.source,
                  "Text file path, or - for standard input (default)");
  o.format_opt = cmd->add_option("--format", o.format, "Output format")
                     ->check(CLI::IsMember({"tsv", "jsonl"}));
  o.range_opt =
      cmd->add_option("--range", o.range,
                      "Alignment range: core = pattern fully inside the "
                      "text, extended = every overlapping placement")
          ->check(CLI::IsMember({"core", "extended"}));
  cmd->add_option("--chunk-size", o.chunk_size, "Read chunk size in bytes")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--stats", o.stats,
                "Append a summary line to standard error");
  cmd->add_option("--jobs", o.jobs,
                  "Scan with this many parallel chunk scanners (buffers the "
                  "input; output is identical to --jobs 1)")
      ->check(CLI::PositiveNumber);
}

Pattern load_pattern(const CommonOpts& o) {
  if (o.pattern_opt->count() > 0)
    return hamprof::io::pattern_from_string(o.pattern);
  if (o.pattern_file_opt->count() > 0)
    return hamprof::io::pattern_from_file(
        o.pattern_file, o.raw_pattern
                            ? hamprof::io::PatternMode::Raw
                            : hamprof::io::PatternMode::StripTrailingNewline);
  throw UsageError("a pattern is required (--pattern or --pattern-file)");
}

std::unique_ptr<hamprof::io::ChunkedReader> make_reader(const CommonOpts& o) {
  if (o.source == "-")
    return std::make_unique<hamprof::io::ChunkedReader>(std::cin,
                                                        o.chunk_size);
  return std::make_unique<hamprof::io::ChunkedReader>(
      std::filesystem::path(o.source), o.chunk_size);
}

std::vector<Byte> slurp(const CommonOpts& o) {
  auto reader = make_reader(o);
  return hamprof::io::read_all(*reader);
}

hamprof::io::RecordFormat record_format(const CommonOpts& o) {
  return o.format == "jsonl" ? hamprof::io::RecordFormat::Jsonl
                             : hamprof::io::RecordFormat::Tsv;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void print_stats(std::uint64_t n, std::uint32_t m, std::uint64_t hits,
                 double wall_ms, std::uint64_t state_bytes) {
  std::fprintf(stderr,
               "stats: N=%llu M=%u total_hits=%llu wall_ms=%.3f "
               "state_bytes=%llu\n",
               static_cast<unsigned long long>(n), m,
               static_cast<unsigned long long>(hits), wall_ms,
               static_cast<unsigned long long>(state_bytes));
}

// Emits a finished profile (the --jobs > 1 path).
void emit_profile(const MatchProfile& prof, bool paper_trace, bool core,
                  hamprof::io::RecordFormat fmt, std::ostream& out) {
  const std::uint32_t m = prof.pattern_length();
  if (paper_trace) {
    // The scanner's leading record for alignment -M (always 0).
    hamprof::io::write_trace_line(
        {prof.first_alignment() - 1, 0, m}, out);
    std::int64_t a = prof.first_alignment();
    for (std::uint32_t count : prof.counts())
      hamprof::io::write_trace_line({a++, count, m - count}, out);
    return;
  }
  std::int64_t lo = prof.first_alignment();
  std::int64_t hi = prof.last_alignment();
  if (core) {
    lo = 0;
    hi = static_cast<std::int64_t>(prof.text_length()) - m;
  }
  for (std::int64_t a = lo; a <= hi; ++a) {
    const std::uint32_t count = prof.count_at(a);
    hamprof::io::write_record({a, count, m - count}, fmt, out);
  }
}

int run_profile(const CommonOpts& o, bool paper_trace) {
  const auto t0 = Clock::now();
  Pattern pattern = load_pattern(o);
  ShiftTable table(pattern);
  const std::uint32_t m = table.pattern_length();
  const bool core = o.range == "core";  // profile defaults to extended
  const auto fmt = record_format(o);
  std::ostream& out = std::cout;

  if (o.jobs > 1) {
    const std::vector<Byte> text = slurp(o);
    const ByteSpan span{text.data(), text.size()};
    MatchProfile prof = hamprof::profile_parallel(table, span, o.jobs);
    emit_profile(prof, paper_trace, core, fmt, out);
    out.flush();
    if (o.stats) {
      hamprof::io::ByteHistogram hist(span);
      print_stats(text.size(), m, hamprof::total_hits(table, hist.counts()),
                  ms_since(t0), StreamScanner(table).state_bytes() * o.jobs);
    }
    return 0;
  }

  StreamScanner scanner(table);
  bool drop_next = !paper_trace;  // the -M record is kept only in trace mode
  auto emit = [&](const AlignmentRecord& r) {
    if (drop_next) {
      drop_next = false;
      return;
    }
    if (core && r.alignment < 0) return;
    if (paper_trace)
      hamprof::io::write_trace_line(r, out);
    else
      hamprof::io::write_record(r, fmt, out);
  };

  auto reader = make_reader(o);
  std::vector<Byte> block;
  while (reader->next(block)) {
    scanner.scan(ByteSpan{block.data(), block.size()}, emit);
    out.flush();
  }
  const auto tail = scanner.finish();
  for (std::size_t k = 0; k < tail.size(); ++k) {
    // Of the trailing records only the first (alignment N-M) is in core.
    if (core && k > 0) break;
    emit(tail[k]);
  }
  out.flush();
  if (o.stats)
    print_stats(scanner.bytes_consumed(), m, scanner.hit_increments(),
                ms_since(t0), scanner.state_bytes());
  return 0;
}

int run_kmatch(const CommonOpts& o, std::int64_t k) {
  const auto t0 = Clock::now();
  Pattern pattern = load_pattern(o);
  ShiftTable table(pattern);
  const std::uint32_t m = table.pattern_length();
  if (k < 0 || k > static_cast<std::int64_t>(m))
    throw UsageError("k must be in [0, M]");
  const bool core = o.range != "extended";  // kmatch defaults to core
  const auto fmt = record_format(o);
  std::ostream& out = std::cout;
  bool found = false;

  if (o.jobs > 1) {
    const std::vector<Byte> text = slurp(o);
    const ByteSpan span{text.data(), text.size()};
    MatchProfile prof = hamprof::profile_parallel(table, span, o.jobs);
    for (std::int64_t a : hamprof::k_mismatch_positions(
             prof, k, core ? hamprof::RangeMode::Core
                           : hamprof::RangeMode::Extended)) {
      const std::uint32_t count = prof.count_at(a);
      hamprof::io::write_record({a, count, m - count}, fmt, out);
      found = true;
    }
    out.flush();
    if (o.stats) {
      hamprof::io::ByteHistogram hist(span);
      print_stats(text.size(), m, hamprof::total_hits(table, hist.counts()),
                  ms_since(t0), StreamScanner(table).state_bytes() * o.jobs);
    }
    return found ? 0 : 1;
  }

  StreamScanner scanner(table);
  bool drop_next = true;
  auto emit = [&](const AlignmentRecord& r) {
    if (drop_next) {
      drop_next = false;
      return;
    }
    if (core && r.alignment < 0) return;
    if (r.hamming > k) return;
    found = true;
    hamprof::io::write_record(r, fmt, out);
  };

  auto reader = make_reader(o);
  std::vector<Byte> block;
  while (reader->next(block)) {
    scanner.scan(ByteSpan{block.data(), block.size()}, emit);
    out.flush();
  }
  const auto tail = scanner.finish();
  for (std::size_t idx = 0; idx < tail.size(); ++idx) {
    if (core && idx > 0) break;
    emit(tail[idx]);
  }
  out.flush();
  if (o.stats)
    print_stats(scanner.bytes_consumed(), m, scanner.hit_increments(),
                ms_since(t0), scanner.state_bytes());
  return found ? 0 : 1;
}

int run_verify(const CommonOpts& o, std::uint64_t oracle_limit) {
  Pattern pattern = load_pattern(o);
  ShiftTable table(pattern);
  const std::uint32_t m = table.pattern_length();

  const std::vector<Byte> text = slurp(o);
  if (text.size() > oracle_limit)
    throw UsageError("input of " + std::to_string(text.size()) +
                     " bytes exceeds the oracle guard of " +
                     std::to_string(oracle_limit) +
                     " bytes; raise --oracle-limit to override");
  const ByteSpan span{text.data(), text.size()};

  // Streamed records, including the leading -M one.
  StreamScanner scanner(table);
  std::vector<AlignmentRecord> records;
  records.reserve(text.size() + m);
  scanner.feed(span, records);
  const auto tail = scanner.finish();
  records.insert(records.end(), tail.begin(), tail.end());

  if (records.front().alignment != -static_cast<std::int64_t>(m) ||
      records.front().matches != 0) {
    std::printf("DIVERGENCE leading record is (%lld, %u), expected (%lld, 0)\n",
                static_cast<long long>(records.front().alignment),
                records.front().matches, -static_cast<long long>(m));
    return 4;
  }

  std::vector<std::uint32_t> counts;
  counts.reserve(records.size() - 1);
  for (std::size_t i = 1; i < records.size(); ++i)
    counts.push_back(records[i].matches);
  const MatchProfile streamed(m, text.size(), std::move(counts));
  const MatchProfile brute = hamprof::oracle::brute_force_profile(pattern, span);

  for (std::int64_t a = streamed.first_alignment();
       a <= streamed.last_alignment(); ++a) {
    if (streamed.count_at(a) != brute.count_at(a)) {
      std::printf("DIVERGENCE alignment=%lld streamer=%u oracle=%u\n",
                  static_cast<long long>(a), streamed.count_at(a),
                  brute.count_at(a));
      return 4;
    }
  }

  const auto evidence =
      hamprof::oracle::analyze(hamprof::oracle::build_sets(pattern, span));
  std::size_t exact = 0;
  for (std::int64_t a = brute.first_alignment(); a <= brute.last_alignment();
       ++a) {
    const auto it = evidence.frequencies.find(a);
    const std::uint32_t f =
        it == evidence.frequencies.end() ? 0 : it->second;
    if (f != brute.count_at(a)) {
      std::printf(
          "DIVERGENCE alignment=%lld set-frequency=%u oracle=%u\n",
          static_cast<long long>(a), f, brute.count_at(a));
      return 4;
    }
    if (brute.count_at(a) == m) ++exact;
  }
  if (evidence.exact_shifts.size() != exact) {
    std::printf("DIVERGENCE exact-shift sets disagree: sets=%zu profile=%zu\n",
                evidence.exact_shifts.size(), exact);
    return 4;
  }

  const hamprof::io::ByteHistogram hist(span);
  const std::uint64_t closed_form = hamprof::total_hits(table, hist.counts());
  if (scanner.hit_increments() != closed_form) {
    std::printf("DIVERGENCE hit counts: instrumented=%llu histogram=%llu\n",
                static_cast<unsigned long long>(scanner.hit_increments()),
                static_cast<unsigned long long>(closed_form));
    return 4;
  }

  std::printf("OK N=%llu M=%u alignments=%zu exact_matches=%zu total_hits=%llu\n",
              static_cast<unsigned long long>(text.size()), m, streamed.size(),
              exact, static_cast<unsigned long long>(closed_form));
  return 0;
}

struct BenchOpts {
  std::string corpus;     // positional path or "-"
  std::string synthetic;  // "uniform" or "single"
  std::uint64_t n = 1 << 20;
  std::uint32_t sigma = 256;
  std::string letter = "a";
  std::string sizes;  // comma-separated pattern sizes
  std::vector<std::string> patterns;
  std::uint64_t seed = 42;
  int repeats = 3;
  std::string output;
  std::size_t chunk_size = hamprof::io::ChunkedReader::kDefaultChunkSize;
  bool memory_check = false;
  std::uint32_t mem_m = 100;
  std::string corpus_sizes = "1000,100000,10000000";
};

// Comma-separated unsigned list ("16,64,256").
std::vector<std::uint64_t> parse_u64_list(const std::string& text,
                                          const char* what) {
  std::vector<std::uint64_t> values;
  if (text.empty()) return values;
  std::size_t at = 0;
  while (true) {
    const std::size_t comma = text.find(',', at);
    const std::string token =
        comma == std::string::npos ? text.substr(at) : text.substr(at, comma - at);
    try {
      std::size_t used = 0;
      const std::uint64_t value = std::stoull(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(value);
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": bad list entry '" + token + "'");
    }
    if (comma == std::string::npos) break;
    at = comma + 1;
  }
  return values;
}

int run_bench(const BenchOpts& b) {
  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!b.output.empty()) {
    file_out.open(b.output, std::ios::binary);
    if (!file_out) throw hamprof::IoError("cannot open output file", b.output);
    out = &file_out;
  }

  if (b.memory_check) {
    const auto sizes = parse_u64_list(b.corpus_sizes, "--corpus-sizes");
    if (sizes.empty()) throw UsageError("--corpus-sizes must not be empty");
    const auto report = hamprof::bench::run_memory_check(
        std::span<const std::uint64_t>{sizes.data(), sizes.size()}, b.mem_m,
        b.seed);
    hamprof::bench::write_report(*out, report);
    return report.independent_of_text_length ? 0 : 1;
  }

  std::vector<Byte> corpus;
  std::string id;
  if (!b.corpus.empty()) {
    CommonOpts src;
    src.source = b.corpus;
    src.chunk_size = b.chunk_size;
    corpus = slurp(src);
    id = b.corpus == "-" ? "stdin"
                         : std::filesystem::path(b.corpus).filename().string();
  } else if (b.synthetic == "uniform") {
    corpus = hamprof::bench::uniform_corpus(b.n, b.sigma, b.seed);
    id = "uniform-s" + std::to_string(b.sigma) + "-n" + std::to_string(b.n);
  } else if (b.synthetic == "single") {
    corpus = hamprof::bench::repeated_corpus(
        b.n, static_cast<Byte>(b.letter.empty() ? 'a' : b.letter[0]));
    id = "single-n" + std::to_string(b.n);
  } else {
    throw UsageError("bench needs a corpus path or --synthetic");
  }

  hamprof::bench::SweepOptions sweep;
  sweep.pattern_sizes = {4, 16, 64, 256};
  if (!b.sizes.empty()) {
    sweep.pattern_sizes.clear();
    for (std::uint64_t m : parse_u64_list(b.sizes, "--sizes")) {
      if (m == 0 || m > hamprof::Pattern::kMaxLength)
        throw UsageError("--sizes: pattern size out of range");
      sweep.pattern_sizes.push_back(static_cast<std::uint32_t>(m));
    }
  }
  for (const std::string& p : b.patterns)
    sweep.patterns.emplace_back(p.begin(), p.end());
  sweep.seed = b.seed;
  sweep.repeats = b.repeats;

  const auto points = hamprof::bench::run_sweep(
      id, ByteSpan{corpus.data(), corpus.size()}, sweep, &std::cerr);
  hamprof::bench::write_csv(*out, points);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{
      "per-alignment match counts and Hamming distances of a fixed pattern "
      "over byte streams"};
  app.require_subcommand(1);

  CommonOpts prof_opts;
  bool paper_trace = false;
  auto* prof_cmd = app.add_subcommand(
      "profile", "Stream the match-count profile of the text");
  add_common(prof_cmd, prof_opts);
  auto* trace_opt = prof_cmd->add_flag(
      "--paper-trace", paper_trace,
      "Raw scanner trace: leading always-zero line for alignment -M and "
      "\"<alignment>, <matches>\" pairs");
  trace_opt->excludes(prof_opts.format_opt);
  trace_opt->excludes(prof_opts.range_opt);

  CommonOpts kmatch_opts;
  std::int64_t k = 0;
  auto* kmatch_cmd = app.add_subcommand(
      "kmatch", "Report alignments with at most k mismatches");
  add_common(kmatch_cmd, kmatch_opts);
  kmatch_cmd->add_option("-k,--k", k, "Mismatch budget, 0 <= k <= M")
      ->required();

  CommonOpts verify_opts;
  std::uint64_t oracle_limit = 1000000;
  auto* verify_cmd = app.add_subcommand(
      "verify",
      "Cross-check the streaming scanner against the brute-force and "
      "set-frequency oracles on the given input");
  add_common(verify_cmd, verify_opts);
  verify_cmd->add_option("--oracle-limit", oracle_limit,
                         "Largest input the quadratic oracle will accept");

  BenchOpts bench_opts;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Sweep pattern sizes over a corpus and emit CSV measurements");
  bench_cmd->add_option("corpus", bench_opts.corpus,
                        "Corpus file path, or - for standard input");
  bench_cmd->add_option("--synthetic", bench_opts.synthetic,
                        "Generate the corpus instead of reading one")
      ->check(CLI::IsMember({"uniform", "single"}));
  bench_cmd->add_option("--n", bench_opts.n, "Synthetic corpus size in bytes");
  bench_cmd->add_option("--sigma", bench_opts.sigma,
                        "Alphabet size of the uniform synthetic corpus")
      ->check(CLI::Range(1, 256));
  bench_cmd->add_option("--letter", bench_opts.letter,
                        "Byte of the single-letter synthetic corpus");
  bench_cmd->add_option("--sizes", bench_opts.sizes,
                        "Comma-separated pattern sizes to sample from the "
                        "corpus (default 4,16,64,256)");
  bench_cmd->add_option("--bench-pattern", bench_opts.patterns,
                        "Explicit pattern (repeatable; overrides --sizes)");
  bench_cmd->add_option("--seed", bench_opts.seed,
                        "Seed for pattern sampling and synthetic corpora");
  bench_cmd->add_option("--repeats", bench_opts.repeats,
                        "Timing repetitions per point (best-of)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("-o,--output", bench_opts.output,
                        "Write CSV here instead of standard output");
  bench_cmd->add_option("--chunk-size", bench_opts.chunk_size,
                        "Read chunk size for corpus files")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--memory-check", bench_opts.memory_check,
                      "Check state bytes are independent of corpus size");
  bench_cmd->add_option("--m", bench_opts.mem_m,
                        "Fixed pattern size for --memory-check");
  bench_cmd->add_option("--corpus-sizes", bench_opts.corpus_sizes,
                        "Comma-separated corpus sizes for --memory-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (prof_cmd->parsed()) return run_profile(prof_opts, paper_trace);
    if (kmatch_cmd->parsed()) return run_kmatch(kmatch_opts, k);
    if (verify_cmd->parsed()) return run_verify(verify_opts, oracle_limit);
    if (bench_cmd->parsed()) return run_bench(bench_opts);
  } catch (const UsageError& e) {
    std::cerr << "hamprof: error: " << e.what() << '\n';
    return 2;
  } catch (const hamprof::IoError& e) {
    std::cerr << "hamprof: error: " << e.what() << '\n';
    return 3;
  } catch (const hamprof::PatternError& e) {
    std::cerr << "hamprof: error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hamprof: error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hamprof: error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
