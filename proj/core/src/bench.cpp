#include "hamprof/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>

#include "hamprof/io.hpp"
#include "hamprof/profile.hpp"
#include "hamprof/scan.hpp"

namespace hamprof::bench {

namespace {

using Clock = std::chrono::steady_clock;

// Keeps scan results observable so the timed loop cannot be elided.
volatile std::uint64_t g_scan_sink = 0;

double best_scan_ms(const ShiftTable& table, ByteSpan corpus, int repeats,
                    std::uint64_t& hits_out, std::uint64_t& state_out) {
  double best = std::numeric_limits<double>::infinity();
  for (int rep = 0; rep < std::max(1, repeats); ++rep) {
    StreamScanner scanner(table);
    const auto t0 = Clock::now();
    scanner.scan(corpus, [](const AlignmentRecord&) {});
    auto tail = scanner.finish();
    const auto t1 = Clock::now();
    std::uint64_t sink = 0;
    for (const AlignmentRecord& r : tail) sink += r.matches;
    g_scan_sink = g_scan_sink + sink;
    state_out = scanner.state_bytes();
    hits_out = scanner.hit_increments();
    best = std::min(best,
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

std::vector<BenchPoint> run_sweep(const std::string& corpus_id,
                                  ByteSpan corpus, const SweepOptions& options,
                                  std::ostream* warnings) {
  io::ByteHistogram hist(corpus);
  const std::uint32_t sigma = hist.distinct();
  const std::uint64_t n = corpus.size();

  // Assemble the pattern list: provided, or sampled at seeded offsets.
  std::vector<std::vector<Byte>> patterns = options.patterns;
  if (patterns.empty()) {
    std::mt19937_64 rng(options.seed);
    for (std::uint32_t m : options.pattern_sizes) {
      if (m == 0 || m > n) {
        if (warnings)
          *warnings << "bench: skipping M=" << m << " (corpus has " << n
                    << " bytes)\n";
        continue;
      }
      std::uniform_int_distribution<std::uint64_t> offset(0, n - m);
      const std::uint64_t at = offset(rng);
      patterns.emplace_back(corpus.begin() + static_cast<std::ptrdiff_t>(at),
                            corpus.begin() + static_cast<std::ptrdiff_t>(at + m));
    }
  } else {
    std::erase_if(patterns, [&](const std::vector<Byte>& p) {
      if (!p.empty() && p.size() <= n) return false;
      if (warnings)
        *warnings << "bench: skipping M=" << p.size() << " (corpus has " << n
                  << " bytes)\n";
      return true;
    });
  }

  std::vector<BenchPoint> points;
  points.reserve(patterns.size());
  for (const std::vector<Byte>& bytes : patterns) {
    Pattern pattern{ByteSpan{bytes.data(), bytes.size()}};
    ShiftTable table(pattern);

    std::uint64_t hits = 0;
    std::uint64_t state = 0;
    const double wall_ms = best_scan_ms(table, corpus, options.repeats, hits, state);

    // The instrumented count must equal the histogram closed form.
    const std::uint64_t expected = total_hits(table, hist.counts());
    if (hits != expected)
      throw Error("bench: instrumented hit count " + std::to_string(hits) +
                  " != histogram form " + std::to_string(expected));

    BenchPoint point;
    point.corpus = corpus_id;
    point.n = n;
    point.m = pattern.length();
    point.sigma = sigma;
    point.total_hits = hits;
    point.hits_per_char = n ? static_cast<double>(hits) / static_cast<double>(n) : 0.0;
    point.wall_ms = wall_ms;
    point.throughput_bps =
        wall_ms > 0.0 ? static_cast<double>(n) / (wall_ms / 1e3) : 0.0;
    point.state_bytes = state;
    points.push_back(std::move(point));
  }
  return points;
}

void write_csv(std::ostream& out, std::span<const BenchPoint> points) {
  out << kCsvHeader << '\n';
  char buf[256];
  for (const BenchPoint& p : points) {
    std::snprintf(buf, sizeof buf, ",%llu,%u,%u,%llu,%.6f,%.6f,%.0f,%llu\n",
                  static_cast<unsigned long long>(p.n), p.m, p.sigma,
                  static_cast<unsigned long long>(p.total_hits),
                  p.hits_per_char, p.wall_ms, p.throughput_bps,
                  static_cast<unsigned long long>(p.state_bytes));
    out << p.corpus << buf;
  }
}

MemoryCheckReport run_memory_check(std::span<const std::uint64_t> corpus_sizes,
                                   std::uint32_t m, std::uint64_t seed) {
  if (m == 0) throw std::invalid_argument("memory check: M must be positive");
  MemoryCheckReport report;
  report.m = m;
  report.independent_of_text_length = true;

  for (std::uint64_t n : corpus_sizes) {
    if (n < m)
      throw std::invalid_argument("memory check: corpus smaller than pattern");
    const std::vector<Byte> corpus = uniform_corpus(n, 256, seed);
    Pattern pattern{ByteSpan{corpus.data(), m}};
    ShiftTable table(pattern);
    StreamScanner scanner(table);

    const std::uint64_t before = scanner.state_bytes();
    scanner.scan(ByteSpan{corpus.data(), corpus.size()},
                 [](const AlignmentRecord&) {});
    auto tail = scanner.finish();
    (void)tail;
    const std::uint64_t after = scanner.state_bytes();
    if (after != before) report.independent_of_text_length = false;
    report.points.push_back({n, after});
  }

  for (const MemoryCheckPoint& p : report.points)
    if (p.state_bytes != report.points.front().state_bytes)
      report.independent_of_text_length = false;
  return report;
}

void write_report(std::ostream& out, const MemoryCheckReport& report) {
  out << "memory check: M=" << report.m << '\n';
  for (const MemoryCheckPoint& p : report.points)
    out << "N=" << p.n << " state_bytes=" << p.state_bytes << '\n';
  out << (report.independent_of_text_length
              ? "PASS state bytes independent of text length\n"
              : "FAIL state bytes vary with text length\n");
}

std::vector<Byte> uniform_corpus(std::uint64_t n, std::uint32_t sigma,
                                 std::uint64_t seed) {
  if (sigma == 0 || sigma > 256)
    throw std::invalid_argument("sigma must be in [1, 256]");
  std::vector<Byte> corpus(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, sigma - 1);
  for (Byte& b : corpus) b = static_cast<Byte>(dist(rng));
  return corpus;
}

std::vector<Byte> repeated_corpus(std::uint64_t n, Byte b) {
  return std::vector<Byte>(n, b);
}

}  // namespace hamprof::bench
