#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hamprof/pattern.hpp"
#include "hamprof/scan.hpp"

namespace hamprof {

/// Dense per-alignment match counts over the extended range (1-M) .. (N-1):
/// every placement of the pattern that overlaps the text by at least one
/// position. The Hamming distance at alignment a is pattern_length -
/// count_at(a), with overhanging positions counting as mismatches.
class MatchProfile {
public:
  /// `counts` must hold text_length + pattern_length - 1 entries, one per
  /// alignment starting at 1 - pattern_length.
  MatchProfile(std::uint32_t pattern_length, std::uint64_t text_length,
               std::vector<std::uint32_t> counts);

  std::uint32_t pattern_length() const noexcept { return m_; }
  std::uint64_t text_length() const noexcept { return n_; }

  std::int64_t first_alignment() const noexcept {
    return 1 - static_cast<std::int64_t>(m_);
  }
  std::int64_t last_alignment() const noexcept {
    return static_cast<std::int64_t>(n_) - 1;
  }

  std::size_t size() const noexcept { return counts_.size(); }

  /// Match count at an alignment; 0 outside the extended range (a placement
  /// with no overlap matches nothing).
  std::uint32_t count_at(std::int64_t alignment) const noexcept {
    const std::int64_t idx = alignment - first_alignment();
    if (idx < 0 || idx >= static_cast<std::int64_t>(counts_.size())) return 0;
    return counts_[static_cast<std::size_t>(idx)];
  }

  std::span<const std::uint32_t> counts() const noexcept {
    return {counts_.data(), counts_.size()};
  }

private:
  std::uint32_t m_;
  std::uint64_t n_;
  std::vector<std::uint32_t> counts_;
};

/// Alignment ranges for filtering operations. Core is the classic range
/// [0, N-M] where the pattern lies fully inside the text; Extended is the
/// whole profile.
enum class RangeMode { Core, Extended };

/// Scans the whole text and returns its match profile. The scanner's leading
/// always-zero record for alignment -M (zero overlap) is not part of the
/// profile.
MatchProfile profile(const ShiftTable& table, ByteSpan text);
MatchProfile profile(const Pattern& pattern, ByteSpan text);

/// Chunked parallel scan: splits the text into `jobs` contiguous pieces,
/// scans each with its own scanner against the shared table and combines
/// with merge_concat. Bit-identical to the sequential profile.
MatchProfile profile_parallel(const ShiftTable& table, ByteSpan text,
                              unsigned jobs);

/// Per-alignment (alignment, matches, hamming) rows for the whole profile.
std::vector<AlignmentRecord> hamming_profile(const MatchProfile& profile);

/// All alignments whose Hamming distance is at most k, ascending.
/// Throws std::invalid_argument unless 0 <= k <= M.
std::vector<std::int64_t> k_mismatch_positions(const MatchProfile& profile,
                                               std::int64_t k, RangeMode mode);

/// Profile of the concatenation T1 ++ T2 from the two pieces' profiles.
/// Both must come from the same pattern length; throws std::invalid_argument
/// otherwise.
MatchProfile merge_concat(const MatchProfile& left, const MatchProfile& right);

/// Exact number of counter increments a scan of a text with the given byte
/// histogram performs: sum_c histogram[c] * occurrences(c). Computable
/// incrementally during ingestion, without the text itself.
std::uint64_t total_hits(const ShiftTable& table,
                         std::span<const std::uint64_t, 256> histogram);
std::uint64_t total_hits(const Pattern& pattern,
                         std::span<const std::uint64_t, 256> histogram);

}  // namespace hamprof
