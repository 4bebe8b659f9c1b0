#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamprof/pattern.hpp"

// Measurement harness: induced-hit counts and scan wall time versus pattern
// size over a corpus, plus the structural-memory check. Emits CSV for
// plotting.
namespace hamprof::bench {

struct BenchPoint {
  std::string corpus;
  std::uint64_t n = 0;
  std::uint32_t m = 0;
  std::uint32_t sigma = 0;  // distinct byte values in the corpus
  std::uint64_t total_hits = 0;
  double hits_per_char = 0.0;
  double wall_ms = 0.0;  // best-of-repeats scan time
  double throughput_bps = 0.0;
  std::uint64_t state_bytes = 0;
};

struct SweepOptions {
  /// Sampled mode: one point per size, pattern taken at a seeded
  /// pseudo-random corpus offset.
  std::vector<std::uint32_t> pattern_sizes;
  /// Provided mode: explicit patterns; overrides pattern_sizes when
  /// non-empty.
  std::vector<std::vector<Byte>> patterns;
  std::uint64_t seed = 42;
  int repeats = 3;
};

/// One BenchPoint per pattern. Sizes exceeding the corpus are skipped with a
/// warning line on `warnings` (when non-null). Each point's total_hits comes
/// from the scanner's increment counter and is checked against the histogram
/// closed form; a mismatch throws Error.
std::vector<BenchPoint> run_sweep(const std::string& corpus_id,
                                  ByteSpan corpus, const SweepOptions& options,
                                  std::ostream* warnings = nullptr);

inline constexpr std::string_view kCsvHeader =
    "corpus,N,M,sigma,total_hits,hits_per_char,wall_ms,throughput_bps,"
    "state_bytes";

void write_csv(std::ostream& out, std::span<const BenchPoint> points);

struct MemoryCheckPoint {
  std::uint64_t n = 0;
  std::uint64_t state_bytes = 0;
};

struct MemoryCheckReport {
  std::uint32_t m = 0;
  std::vector<MemoryCheckPoint> points;
  /// True iff every point reports the same structural state size and no
  /// scan changed it.
  bool independent_of_text_length = false;
};

/// Scans seeded uniform corpora of the given sizes with a fixed pattern
/// length, recording the scanner's structural bytes before and after each
/// scan. Every size must be >= m.
MemoryCheckReport run_memory_check(std::span<const std::uint64_t> corpus_sizes,
                                   std::uint32_t m, std::uint64_t seed = 42);

void write_report(std::ostream& out, const MemoryCheckReport& report);

/// Seeded synthetic corpora (network-free benchmark inputs).
std::vector<Byte> uniform_corpus(std::uint64_t n, std::uint32_t sigma,
                                 std::uint64_t seed);
std::vector<Byte> repeated_corpus(std::uint64_t n, Byte b);

}  // namespace hamprof::bench
