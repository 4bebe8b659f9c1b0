#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hamprof/error.hpp"
#include "hamprof/pattern.hpp"

namespace hamprof {

/// One output row: the number of matching characters (and the Hamming
/// distance M - matches) for one alignment of the pattern against the text.
/// Aligning at a compares pattern position j with text position a + j;
/// positions falling outside the text count as mismatches.
struct AlignmentRecord {
  std::int64_t alignment;
  std::uint32_t matches;
  std::uint32_t hamming;

  friend bool operator==(const AlignmentRecord&, const AlignmentRecord&) = default;
};

/// Online match-count scanner.
///
/// Keeps a ring of 2M counters. Feeding one text byte increments the counter
/// of every alignment that byte matches (one per occurrence of the byte in
/// the pattern, via the shift table) and then emits the now-final record of
/// the alignment lagging M positions behind the cursor. Storage is the ring
/// plus the shared table plus O(1) cursors; nothing grows with the amount of
/// text consumed.
///
/// A scanner is a single-stream object: feed it from one thread at a time.
/// Independent scanners may share one ShiftTable. The table must outlive the
/// scanner.
class StreamScanner {
public:
  explicit StreamScanner(const ShiftTable& table);

  /// Consumes one byte and returns the final record for the oldest pending
  /// alignment (bytes_consumed-before-call - M). The byte just fed can never
  /// touch that alignment: its hit indexes land strictly after the emitted
  /// slot.
  AlignmentRecord feed(Byte b) {
    ensure_live();
    AlignmentRecord rec{};
    step(b, [&rec](const AlignmentRecord& r) { rec = r; });
    return rec;
  }

  /// Consumes a block, passing each emitted record to `sink`.
  template <typename Sink>
  void scan(ByteSpan block, Sink&& sink) {
    ensure_live();
    for (Byte b : block) step(b, sink);
  }

  /// Consumes a block, appending emitted records to `out`.
  void feed(ByteSpan block, std::vector<AlignmentRecord>& out) {
    scan(block, [&out](const AlignmentRecord& r) { out.push_back(r); });
  }

  /// Drains the M trailing records (alignments bytes_consumed-M ..
  /// bytes_consumed-1). Consumes the scanner: any further feed or finish
  /// throws StateError.
  std::vector<AlignmentRecord> finish();

  bool finished() const noexcept { return finished_; }
  std::uint64_t bytes_consumed() const noexcept { return consumed_; }
  std::uint32_t pattern_length() const noexcept { return m_; }

  /// Alignment the next emitted record will describe.
  std::int64_t next_alignment() const noexcept { return alignment_; }

  /// Ring cursor; cycles through [M, 3M-1].
  std::uint32_t cursor() const noexcept { return cursor_; }

  /// The 2M live counters (introspection for tests and stats).
  std::span<const std::uint32_t> ring_counters() const noexcept {
    return {ring_.data(), ring_.size()};
  }

  /// Total counter increments performed so far; equals
  /// sum_c occ_text(c) * occ_pattern(c) over everything consumed.
  std::uint64_t hit_increments() const noexcept { return hits_; }

  /// Structural state: ring counters + shift table storage + cursors.
  /// Constant for a given pattern length, whatever the text size.
  std::size_t state_bytes() const noexcept {
    return sizeof(*this) + ring_.size() * sizeof(std::uint32_t) +
           table_->table_bytes();
  }

private:
  void ensure_live() const {
    if (finished_) throw StateError("scanner already finished");
  }

  template <typename Sink>
  void step(Byte b, Sink&& sink) {
    const std::uint32_t wrap = 2 * m_;
    for (std::uint32_t s : table_->shifts_of(b)) {
      std::uint32_t t = cursor_ - s;  // cursor_ >= M > s, so t is in [1, 3M-1]
      if (t >= wrap) t -= wrap;
      ++ring_[t];
    }
    hits_ += table_->occurrences(b);
    const std::uint32_t slot = cursor_ - m_;
    const std::uint32_t count = ring_[slot];
    ring_[slot] = 0;
    sink(AlignmentRecord{alignment_, count, m_ - count});
    ++alignment_;
    ++consumed_;
    if (++cursor_ == 3 * m_) cursor_ = m_;
  }

  const ShiftTable* table_;
  std::uint32_t m_;
  std::vector<std::uint32_t> ring_;  // 2M counters
  std::uint32_t cursor_;             // D in [M, 3M-1]
  std::int64_t alignment_;           // next output alignment, starts at -M
  std::uint64_t consumed_ = 0;
  std::uint64_t hits_ = 0;
  bool finished_ = false;
};

}  // namespace hamprof
