#include "hamprof/pattern.hpp"

#include <stdexcept>
#include <string>

namespace hamprof {

Pattern::Pattern(ByteSpan bytes) : bytes_(bytes.begin(), bytes.end()) {
  if (bytes_.empty()) throw PatternError("empty pattern");
  if (bytes_.size() > kMaxLength)
    throw PatternError("pattern longer than " + std::to_string(kMaxLength) +
                       " bytes");
}

ShiftTable::ShiftTable(const Pattern& pattern)
    : m_(pattern.length()), shifts_(pattern.length()) {
  std::array<std::uint32_t, 256> occ{};
  for (Byte b : pattern.bytes()) ++occ[b];
  for (std::size_t c = 0; c < 256; ++c) offset_[c + 1] = offset_[c] + occ[c];

  std::array<std::uint32_t, 256> next{};
  for (std::size_t c = 0; c < 256; ++c) next[c] = offset_[c];
  const ByteSpan bytes = pattern.bytes();
  for (std::uint32_t j = 0; j < m_; ++j) shifts_[next[bytes[j]]++] = j;
}

ShiftTable::ShiftTable(std::uint32_t pattern_length,
                       const std::vector<std::vector<std::uint32_t>>& lists)
    : m_(pattern_length) {
  if (m_ == 0) throw std::invalid_argument("shift table: pattern length is 0");
  if (lists.size() != 256)
    throw std::invalid_argument("shift table: expected 256 entries");

  std::vector<bool> seen(m_, false);
  std::size_t total = 0;
  for (const auto& list : lists) total += list.size();
  if (total != m_)
    throw std::invalid_argument(
        "shift table: stored positions must number exactly the pattern length");

  shifts_.reserve(m_);
  for (std::size_t c = 0; c < 256; ++c) {
    offset_[c] = static_cast<std::uint32_t>(shifts_.size());
    for (std::uint32_t j : lists[c]) {
      if (j >= m_)
        throw std::invalid_argument("shift table: position out of range");
      if (seen[j])
        throw std::invalid_argument("shift table: duplicate position");
      seen[j] = true;
      shifts_.push_back(j);
    }
  }
  offset_[256] = static_cast<std::uint32_t>(shifts_.size());
}

}  // namespace hamprof
