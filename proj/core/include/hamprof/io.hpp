#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "hamprof/error.hpp"
#include "hamprof/pattern.hpp"
#include "hamprof/scan.hpp"

namespace hamprof::io {

/// Running per-byte-value counts of everything ingested.
class ByteHistogram {
public:
  ByteHistogram() = default;
  explicit ByteHistogram(ByteSpan bytes) { add(bytes); }

  void add(Byte b) noexcept { ++counts_[b]; }
  void add(ByteSpan bytes) noexcept {
    for (Byte b : bytes) ++counts_[b];
  }

  std::uint64_t operator[](Byte b) const noexcept { return counts_[b]; }
  std::uint64_t total() const noexcept;
  std::uint32_t distinct() const noexcept;

  std::span<const std::uint64_t, 256> counts() const noexcept {
    return std::span<const std::uint64_t, 256>{counts_};
  }

private:
  std::array<std::uint64_t, 256> counts_{};
};

/// Reads a file or an already-open stream in fixed-size chunks, byte-exact:
/// binary mode, no newline translation, every byte delivered exactly once in
/// order. One reader per source; not copyable or movable.
class ChunkedReader {
public:
  static constexpr std::size_t kDefaultChunkSize = 64 * 1024;

  /// Opens a file. Throws IoError if it cannot be opened.
  explicit ChunkedReader(const std::filesystem::path& path,
                         std::size_t chunk_size = kDefaultChunkSize);

  /// Wraps an external stream (typically std::cin); the stream must outlive
  /// the reader.
  explicit ChunkedReader(std::istream& stream,
                         std::size_t chunk_size = kDefaultChunkSize);

  ChunkedReader(const ChunkedReader&) = delete;
  ChunkedReader& operator=(const ChunkedReader&) = delete;

  /// Fills `block` with the next chunk (at most chunk_size bytes; the final
  /// chunk may be shorter). Returns false at end of input. A mid-stream
  /// failure throws IoError carrying bytes_delivered().
  bool next(std::vector<Byte>& block);

  std::uint64_t bytes_delivered() const noexcept { return delivered_; }
  std::size_t chunk_size() const noexcept { return chunk_size_; }

private:
  std::ifstream owned_;
  std::istream* in_;
  std::string path_;
  std::size_t chunk_size_;
  std::uint64_t delivered_ = 0;
};

/// Drains a reader into one buffer.
std::vector<Byte> read_all(ChunkedReader& reader);

enum class PatternMode { Raw, StripTrailingNewline };

/// Pattern from inline bytes, verbatim.
Pattern pattern_from_string(std::string_view bytes);

/// Pattern from a file. The default mode removes one trailing LF or CRLF
/// (shell-created pattern files almost always carry one); Raw keeps the
/// bytes verbatim. Empty result throws PatternError, unreadable file throws
/// IoError with the path.
Pattern pattern_from_file(const std::filesystem::path& path,
                          PatternMode mode = PatternMode::StripTrailingNewline);

enum class RecordFormat { Tsv, Jsonl };

/// TSV: "<alignment>\t<matches>\t<hamming>\n", plain decimals.
/// JSONL: {"alignment":A,"matches":M,"hamming":H}, one object per line.
/// Return the number of bytes written; throw IoError on a failed sink.
std::size_t write_record(const AlignmentRecord& record, RecordFormat format,
                         std::ostream& out);
std::size_t write_records(std::span<const AlignmentRecord> records,
                          RecordFormat format, std::ostream& out);

/// Pair layout "<alignment>, <matches>\n" used by the CLI --paper-trace mode.
std::size_t write_trace_line(const AlignmentRecord& record, std::ostream& out);
std::size_t write_paper_trace(std::span<const AlignmentRecord> records,
                              std::ostream& out);

}  // namespace hamprof::io
