#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hamprof/error.hpp"

namespace hamprof {

using Byte = std::uint8_t;
using ByteSpan = std::span<const Byte>;

/// Views the bytes of a string without copying.
inline ByteSpan as_bytes(std::string_view s) noexcept {
  return {reinterpret_cast<const Byte*>(s.data()), s.size()};
}

/// Immutable search pattern. Patterns and text are raw byte strings; nothing
/// is ever decoded, so any encoding works as long as the two agree.
class Pattern {
public:
  /// Longest accepted pattern. Keeps every per-alignment match count well
  /// inside a 32-bit counter.
  static constexpr std::size_t kMaxLength = std::size_t{1} << 20;

  explicit Pattern(ByteSpan bytes);
  explicit Pattern(std::string_view bytes) : Pattern(as_bytes(bytes)) {}

  std::uint32_t length() const noexcept {
    return static_cast<std::uint32_t>(bytes_.size());
  }
  ByteSpan bytes() const noexcept { return {bytes_.data(), bytes_.size()}; }
  Byte operator[](std::size_t j) const noexcept { return bytes_[j]; }

private:
  std::vector<Byte> bytes_;
};

/// Per-byte lists of pattern positions: entry c holds every j with
/// pattern[j] == c. Building costs O(M + 256); positions are stored
/// ascending in one contiguous array indexed by a 257-entry offset table.
///
/// Immutable once built; safe to share read-only across any number of
/// scanners.
class ShiftTable {
public:
  explicit ShiftTable(const Pattern& pattern);

  /// Builds from explicit per-byte position lists (256 of them). The stored
  /// positions must form exactly the multiset {0 .. pattern_length-1}; list
  /// order is preserved as given. Scan output does not depend on it.
  ShiftTable(std::uint32_t pattern_length,
             const std::vector<std::vector<std::uint32_t>>& lists);

  std::uint32_t pattern_length() const noexcept { return m_; }

  /// Pattern positions holding byte c.
  std::span<const std::uint32_t> shifts_of(Byte c) const noexcept {
    return {shifts_.data() + offset_[c],
            static_cast<std::size_t>(offset_[std::size_t{c} + 1] - offset_[c])};
  }

  /// Number of times byte c occurs in the pattern.
  std::uint32_t occurrences(Byte c) const noexcept {
    return offset_[std::size_t{c} + 1] - offset_[c];
  }

  /// Structural storage: the offset table, the stored positions and the
  /// object itself. Independent of any text ever scanned.
  std::size_t table_bytes() const noexcept {
    return sizeof(*this) + shifts_.size() * sizeof(std::uint32_t);
  }

private:
  std::uint32_t m_ = 0;
  std::array<std::uint32_t, 257> offset_{};  // CSR offsets into shifts_
  std::vector<std::uint32_t> shifts_;        // all M positions, grouped by byte
};

}  // namespace hamprof
