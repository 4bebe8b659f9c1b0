#include "hamprof/scan.hpp"

namespace hamprof {

StreamScanner::StreamScanner(const ShiftTable& table)
    : table_(&table),
      m_(table.pattern_length()),
      ring_(2 * static_cast<std::size_t>(table.pattern_length()), 0),
      cursor_(table.pattern_length()),
      alignment_(-static_cast<std::int64_t>(table.pattern_length())) {}

std::vector<AlignmentRecord> StreamScanner::finish() {
  ensure_live();
  finished_ = true;
  std::vector<AlignmentRecord> tail;
  tail.reserve(m_);
  // Drain without resetting; the scanner is consumed.
  for (std::uint32_t k = 0; k < m_; ++k) {
    const std::uint32_t count = ring_[cursor_ - m_];
    tail.push_back({alignment_, count, m_ - count});
    ++alignment_;
    if (++cursor_ == 3 * m_) cursor_ = m_;
  }
  return tail;
}

}  // namespace hamprof
