// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. The CLI-level checks need HAMPROF_BIN to point at the
// built tool (ctest sets it; pass the path as argv[1] when running by hand).

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hamprof/hamprof.hpp"

namespace fs = std::filesystem;

using hamprof::AlignmentRecord;
using hamprof::Byte;
using hamprof::ByteSpan;
using hamprof::MatchProfile;
using hamprof::Pattern;
using hamprof::ShiftTable;
using hamprof::StreamScanner;

using Clock = std::chrono::steady_clock;

namespace {

std::string g_tool;  // path to the hamprof binary, may be empty

struct CheckFailure {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw CheckFailure{message};
}

std::vector<Byte> bytes_of(std::string_view s) { return {s.begin(), s.end()}; }

ByteSpan span_of(const std::vector<Byte>& v) { return {v.data(), v.size()}; }

std::vector<Byte> random_bytes(std::mt19937_64& rng, std::size_t n,
                               std::uint32_t sigma) {
  std::uniform_int_distribution<std::uint32_t> dist(0, sigma - 1);
  std::vector<Byte> out(n);
  for (Byte& b : out) b = static_cast<Byte>(dist(rng));
  return out;
}

std::vector<AlignmentRecord> scan_all(const ShiftTable& table, ByteSpan text,
                                      std::uint64_t* hits = nullptr) {
  StreamScanner scanner(table);
  std::vector<AlignmentRecord> records;
  records.reserve(text.size() + table.pattern_length());
  scanner.feed(text, records);
  for (const AlignmentRecord& r : scanner.finish()) records.push_back(r);
  if (hits) *hits = scanner.hit_increments();
  return records;
}

std::string tsv_of(const std::vector<AlignmentRecord>& records) {
  std::ostringstream out;
  hamprof::io::write_records(records, hamprof::io::RecordFormat::Tsv, out);
  return out.str();
}

fs::path temp_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("hamprof-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

const std::string kGoldenText = "BBABAABBACAAB";
const std::string kGoldenTrace =
    "-4, 0\n-3, 0\n-2, 1\n-1, 3\n0, 1\n1, 2\n2, 3\n3, 0\n4, 2\n5, 4\n"
    "6, 1\n7, 1\n8, 2\n9, 0\n10, 2\n11, 2\n12, 0\n";

// --- criterion 1: golden trace --------------------------------------------

std::string golden_trace() {
  // In-process: scan + trace formatting, timed.
  const Pattern pattern("ABBA");
  const ShiftTable table(pattern);
  double best_ms = 1e9;
  std::string trace;
  for (int rep = 0; rep < 5; ++rep) {
    const auto t0 = Clock::now();
    const auto records = scan_all(table, hamprof::as_bytes(kGoldenText));
    std::ostringstream out;
    hamprof::io::write_paper_trace(records, out);
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    best_ms = std::min(best_ms, ms);
    trace = out.str();
  }
  require(trace == kGoldenTrace, "in-process trace differs from the golden trace");
  require(best_ms < 1.0, "trace took " + std::to_string(best_ms) + " ms");

  // Through the CLI, byte-exact.
  require(!g_tool.empty(), "HAMPROF_BIN not set; cannot run the CLI check");
  const fs::path text = temp_dir() / "golden.txt";
  std::ofstream(text, std::ios::binary) << kGoldenText;
  const fs::path out = temp_dir() / "trace.out";
  const std::string cmd = g_tool + " profile -p ABBA --paper-trace " +
                          text.string() + " >" + out.string() + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  require(WIFEXITED(rc) && WEXITSTATUS(rc) == 0, "CLI exited nonzero");
  std::ifstream in(out, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  require(buf.str() == kGoldenTrace, "CLI trace differs from the golden trace");

  char detail[96];
  std::snprintf(detail, sizeof detail,
                "17 trace lines byte-exact (CLI and in-process, %.3f ms)",
                best_ms);
  return detail;
}

// --- criterion 2: worked set-frequency examples ----------------------------

std::string set_frequency_examples() {
  const Pattern pattern("ABAB");
  const auto text = bytes_of("CABABABCBA");
  const MatchProfile prof = hamprof::profile(pattern, span_of(text));

  const auto exact =
      hamprof::k_mismatch_positions(prof, 0, hamprof::RangeMode::Core);
  require(exact == std::vector<std::int64_t>{1, 3}, "exact-match set != {1,3}");

  const auto evidence =
      hamprof::oracle::analyze(hamprof::oracle::build_sets(pattern, span_of(text)));
  require(evidence.exact_shifts == std::vector<std::int64_t>{1, 3},
          "set-frequency exact shifts != {1,3}");
  require(evidence.frequencies.at(5) == 3, "f_5 != 3");
  require(evidence.frequencies.at(7) == 2, "f_7 != 2");
  require(evidence.frequencies.at(-1) == 2, "f_-1 != 2");
  require(prof.pattern_length() - prof.count_at(5) == 1, "hd_5 != 1");
  return "S={1,3}, f_5=3, f_7=2, f_-1=2, hd_5=1";
}

// --- criterion 3: golden set-row cross-check --------------------------------

std::string set_rows_crosscheck() {
  const Pattern pattern("FCTHZCTZCF");
  const auto text = bytes_of("SKRFCTHZCTZCFTYCTZGHTTCTHZTHZFCTHZCTZC");
  require(text.size() == 38, "sample text must have 38 bytes");

  const MatchProfile prof = hamprof::profile(pattern, span_of(text));
  require(prof.count_at(3) == 10, "alignment 3 is not a 10/10 match");

  const auto family = hamprof::oracle::build_sets(pattern, span_of(text));
  using Set = std::vector<std::int64_t>;
  const std::pair<std::size_t, Set> golden[] = {
      {1, Set{3, 7, 10, 14, 21, 29, 33, 36}},
      {5, Set{-1, 3, 6, 10, 17, 25, 29, 32}},
      {8, Set{-4, 0, 3, 7, 14, 22, 26, 29}},
      {2, Set{3, 7, 11, 14, 18, 19, 21, 24, 29, 33}},
      {6, Set{-1, 3, 7, 10, 14, 15, 17, 20, 25, 29}},
      {3, Set{3, 16, 21, 24, 29}},
      {4, Set{3, 6, 13, 21, 24, 29, 32}},
      {7, Set{0, 3, 10, 18, 21, 26, 29}},
  };
  for (const auto& [j, want] : golden)
    require(family.sets[j] == want,
            "set R_" + std::to_string(j) + " differs from the golden row");

  // The golden F rows list an occurrence at index 38 that the
  // 38-character text cannot hold; the rebuilt rows must flag it by its
  // absence, leaving alignment 29 one hit short of a full match.
  require(family.sets[0] == Set{3, 12, 29}, "rebuilt R_0 != {3,12,29}");
  require(family.sets[9] == Set{-6, 3, 20}, "rebuilt R_9 != {-6,3,20}");

  const auto evidence = hamprof::oracle::analyze(family);
  require(evidence.exact_shifts == Set{3}, "exact matches != {3}");
  require(evidence.frequencies.at(29) == 9, "rebuilt f_29 != 9");
  return "alignment 3 = 10/10; C/T/H/Z rows exact; F-row typo flagged, f_29=9";
}

// --- criterion 4: oracle equivalence ----------------------------------------

std::string oracle_equivalence() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(0xACCE57);
  const std::uint32_t sigmas[] = {1, 2, 4, 26, 256};
  const int instances = 10000;
  std::uint64_t alignments_checked = 0;

  for (int i = 0; i < instances; ++i) {
    const std::uint32_t sigma = sigmas[i % 5];
    std::uniform_int_distribution<std::size_t> m_dist(1, 50);
    const std::size_t m = m_dist(rng);
    std::size_t n;
    if (i % 10 == 0) {
      n = 0;  // empty text
    } else if (i % 10 == 1) {
      n = rng() % m;  // pattern longer than text
    } else {
      n = rng() % 201;
    }
    const auto pattern_bytes = random_bytes(rng, m, sigma);
    const auto text = random_bytes(rng, n, sigma);
    const Pattern pattern{span_of(pattern_bytes)};

    const MatchProfile streamed = hamprof::profile(pattern, span_of(text));
    const MatchProfile brute =
        hamprof::oracle::brute_force_profile(pattern, span_of(text));
    require(streamed.size() == brute.size(), "profile sizes differ");
    const auto evidence = hamprof::oracle::analyze(
        hamprof::oracle::build_sets(pattern, span_of(text)));

    for (std::int64_t a = streamed.first_alignment();
         a <= streamed.last_alignment(); ++a) {
      const std::uint32_t got = streamed.count_at(a);
      require(got == brute.count_at(a),
              "streamer != brute force at alignment " + std::to_string(a));
      const auto it = evidence.frequencies.find(a);
      const std::uint32_t f =
          it == evidence.frequencies.end() ? 0 : it->second;
      require(got == f,
              "set-frequency differs at alignment " + std::to_string(a));
      ++alignments_checked;
    }
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  require(secs < 60.0, "suite took " + std::to_string(secs) + " s");

  char detail[128];
  std::snprintf(detail, sizeof detail,
                "%d instances, %llu alignments, 3-way equal in %.1f s",
                instances,
                static_cast<unsigned long long>(alignments_checked), secs);
  return detail;
}

// --- criterion 5: chunk/merge determinism -----------------------------------

std::string chunk_merge_determinism() {
  std::mt19937_64 rng(0xC0FFEE);
  const std::uint32_t sigmas[] = {2, 4, 26, 256};

  for (int i = 0; i < 100; ++i) {
    const std::uint32_t sigma = sigmas[i % 4];
    std::uniform_int_distribution<std::size_t> m_dist(1, 40);
    std::uniform_int_distribution<std::size_t> n_dist(0, 5000);
    const auto pattern_bytes = random_bytes(rng, m_dist(rng), sigma);
    const auto text = random_bytes(rng, n_dist(rng), sigma);
    const Pattern pattern{span_of(pattern_bytes)};
    const ShiftTable table(pattern);

    const auto single = scan_all(table, span_of(text));
    const std::string single_tsv = tsv_of(single);

    // Chunked feeding must not change a single record.
    for (const std::size_t chunk : {std::size_t{1}, std::size_t{7},
                                    std::size_t{4096}}) {
      StreamScanner scanner(table);
      std::vector<AlignmentRecord> records;
      const ByteSpan span = span_of(text);
      for (std::size_t at = 0; at < span.size(); at += chunk)
        scanner.feed(span.subspan(at, std::min(chunk, span.size() - at)),
                     records);
      for (const AlignmentRecord& r : scanner.finish()) records.push_back(r);
      require(records == single, "chunked scan records differ");
      require(tsv_of(records) == single_tsv, "chunked scan bytes differ");
    }

    // Random split, scanned as two independent chunks and merged.
    std::uniform_int_distribution<std::size_t> cut_dist(0, text.size());
    const std::size_t cut = cut_dist(rng);
    const ByteSpan span = span_of(text);
    const MatchProfile merged = hamprof::merge_concat(
        hamprof::profile(table, span.subspan(0, cut)),
        hamprof::profile(table, span.subspan(cut)));
    const MatchProfile direct = hamprof::profile(table, span);
    require(merged.size() == direct.size(), "merged profile size differs");
    require(std::equal(merged.counts().begin(), merged.counts().end(),
                       direct.counts().begin(), direct.counts().end()),
            "merged profile differs at split " + std::to_string(cut));
  }
  return "100 instances, chunk sizes {1,7,4096} and random merges identical";
}

// --- criterion 6: hit identity ----------------------------------------------

std::string hit_identity() {
  // The 13-byte golden input: exactly 24 increments.
  {
    const Pattern pattern("ABBA");
    const ShiftTable table(pattern);
    std::uint64_t hits = 0;
    scan_all(table, hamprof::as_bytes(kGoldenText), &hits);
    require(hits == 24, "golden input produced " + std::to_string(hits));
    const hamprof::io::ByteHistogram hist(hamprof::as_bytes(kGoldenText));
    require(hamprof::total_hits(table, hist.counts()) == 24,
            "closed form != 24");
  }

  std::mt19937_64 rng(0x1DE47177);
  for (int i = 0; i < 1000; ++i) {
    const std::uint32_t sigma = 1 + static_cast<std::uint32_t>(rng() % 256);
    const auto pattern_bytes = random_bytes(rng, 1 + rng() % 64, sigma);
    const auto text = random_bytes(rng, rng() % 2000, sigma);
    const Pattern pattern{span_of(pattern_bytes)};
    const ShiftTable table(pattern);
    std::uint64_t instrumented = 0;
    const auto records = scan_all(table, span_of(text), &instrumented);
    const hamprof::io::ByteHistogram hist(span_of(text));
    const std::uint64_t closed = hamprof::total_hits(table, hist.counts());
    require(instrumented == closed, "instrumented != closed form");
    // Emitted counts over the full extended range conserve every hit.
    const std::uint64_t emitted = std::accumulate(
        records.begin(), records.end(), std::uint64_t{0},
        [](std::uint64_t acc, const AlignmentRecord& r) {
          return acc + r.matches;
        });
    require(emitted == closed, "emitted counts do not conserve hits");
  }

  // Benchmark-style inputs, via the harness (throws internally on mismatch).
  const auto uniform = hamprof::bench::uniform_corpus(200000, 256, 5);
  hamprof::bench::SweepOptions options;
  options.pattern_sizes = {16, 64};
  options.repeats = 1;
  const auto points =
      hamprof::bench::run_sweep("u", span_of(uniform), options, nullptr);
  require(points.size() == 2, "sweep lost points");
  return "golden input = 24; 1000 random + bench inputs instrumented == closed form";
}

// --- criterion 7: memory independence ---------------------------------------

std::string memory_independence() {
  const std::vector<std::uint64_t> sizes{1000, 100000, 10000000};
  const auto report = hamprof::bench::run_memory_check(
      std::span<const std::uint64_t>{sizes.data(), sizes.size()}, 100, 77);
  require(report.points.size() == 3, "memory check lost points");
  const std::uint64_t bytes = report.points.front().state_bytes;
  for (const auto& p : report.points)
    require(p.state_bytes == bytes,
            "state bytes vary: N=" + std::to_string(p.n));
  require(report.independent_of_text_length, "report flagged growth");

  // A direct 10^7-byte scan: structural state identical before, during and
  // after; ring capacity untouched beyond the initial allocation.
  const auto corpus = hamprof::bench::uniform_corpus(10000000, 256, 78);
  const Pattern pattern{ByteSpan{corpus.data(), 100}};
  const ShiftTable table(pattern);
  StreamScanner scanner(table);
  const std::size_t fresh = scanner.state_bytes();
  const ByteSpan span{corpus.data(), corpus.size()};
  scanner.scan(span.subspan(0, 5000000), [](const AlignmentRecord&) {});
  require(scanner.state_bytes() == fresh, "state grew mid-scan");
  scanner.scan(span.subspan(5000000), [](const AlignmentRecord&) {});
  auto tail = scanner.finish();
  require(tail.size() == 100, "finish must emit M records");
  require(scanner.state_bytes() == fresh, "state grew after scan");

  char detail[96];
  std::snprintf(detail, sizeof detail,
                "state_bytes=%llu for N in {1e3,1e5,1e7}, zero growth",
                static_cast<unsigned long long>(bytes));
  return detail;
}

// --- criterion 8: average-case scaling --------------------------------------

std::string average_case_scaling() {
  const auto corpus = hamprof::bench::uniform_corpus(1000000, 256, 1234);
  hamprof::bench::SweepOptions options;
  options.pattern_sizes = {16, 64, 256};
  options.seed = 99;
  options.repeats = 5;
  const auto points =
      hamprof::bench::run_sweep("uniform256", span_of(corpus), options, nullptr);
  require(points.size() == 3, "sweep lost points");

  for (const auto& p : points) {
    const double expected = static_cast<double>(p.m) / 256.0;
    const double err = std::abs(p.hits_per_char - expected) / expected;
    require(err <= 0.20, "M=" + std::to_string(p.m) + " hits_per_char " +
                             std::to_string(p.hits_per_char) + " off by " +
                             std::to_string(err * 100) + "%");
  }

  // Monotone wall-time trend in total hits, with the 20% noise allowance.
  auto sorted = points;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.total_hits < b.total_hits; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    require(sorted[i].wall_ms >= 0.8 * sorted[i - 1].wall_ms,
            "wall time fell more than 20% from M=" +
                std::to_string(sorted[i - 1].m) + " to M=" +
                std::to_string(sorted[i].m));

  char detail[160];
  std::snprintf(detail, sizeof detail,
                "hits/char %.4f/%.4f/%.4f vs M/256 %.4f/%.4f/%.4f, "
                "trend holds",
                points[0].hits_per_char, points[1].hits_per_char,
                points[2].hits_per_char, 16 / 256.0, 64 / 256.0, 256 / 256.0);
  return detail;
}

// --- criterion 9: degenerate worst case -------------------------------------

std::string degenerate_worst_case() {
  const std::vector<Byte> pattern_bytes(10, 'a');
  const std::vector<Byte> text(100000, 'a');
  const Pattern pattern{span_of(pattern_bytes)};
  const ShiftTable table(pattern);

  std::uint64_t hits = 0;
  StreamScanner scanner(table);
  std::vector<AlignmentRecord> records;
  scanner.feed(span_of(text), records);
  for (const AlignmentRecord& r : scanner.finish()) records.push_back(r);
  hits = scanner.hit_increments();
  require(hits == 10ull * 100000ull, "hit count != N*M");

  const std::int64_t n = 100000;
  const std::int64_t m = 10;
  for (const AlignmentRecord& r : records) {
    const std::int64_t a = r.alignment;
    std::uint32_t want;
    if (a < 0)
      want = static_cast<std::uint32_t>(m + a);  // leading overhang
    else if (a > n - m)
      want = static_cast<std::uint32_t>(n - a);  // trailing overhang
    else
      want = static_cast<std::uint32_t>(m);
    require(r.matches == want,
            "alignment " + std::to_string(a) + " reported " +
                std::to_string(r.matches));
    require(r.matches <= 10, "counter exceeded M");
  }
  return "N*M = 1e6 hits, every core alignment 10/10, overhangs exact";
}

struct Criterion {
  const char* name;
  std::function<std::string()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("HAMPROF_BIN")) g_tool = env;
  if (argc > 1) g_tool = argv[1];

  const Criterion criteria[] = {
      {"golden-trace", golden_trace},
      {"set-frequency-examples", set_frequency_examples},
      {"set-rows-crosscheck", set_rows_crosscheck},
      {"oracle-equivalence", oracle_equivalence},
      {"chunk-merge-determinism", chunk_merge_determinism},
      {"hit-identity", hit_identity},
      {"memory-independence", memory_independence},
      {"average-case-scaling", average_case_scaling},
      {"degenerate-worst-case", degenerate_worst_case},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    try {
      const std::string detail = c.run();
      std::printf("PASS  %-26s %s\n", c.name, detail.c_str());
    } catch (const CheckFailure& f) {
      ++failures;
      std::printf("FAIL  %-26s %s\n", c.name, f.message.c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL  %-26s unexpected error: %s\n", c.name, e.what());
    }
    std::fflush(stdout);
  }
  std::printf("acceptance: %zu/%zu criteria passed\n",
              std::size(criteria) - failures, std::size(criteria));
  return failures;
}
