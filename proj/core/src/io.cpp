#include "hamprof/io.hpp"

#include <cstdio>
#include <istream>
#include <iterator>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hamprof::io {

std::uint64_t ByteHistogram::total() const noexcept {
  std::uint64_t sum = 0;
  for (std::uint64_t c : counts_) sum += c;
  return sum;
}

std::uint32_t ByteHistogram::distinct() const noexcept {
  std::uint32_t d = 0;
  for (std::uint64_t c : counts_)
    if (c > 0) ++d;
  return d;
}

ChunkedReader::ChunkedReader(const std::filesystem::path& path,
                             std::size_t chunk_size)
    : owned_(path, std::ios::binary),
      in_(&owned_),
      path_(path.string()),
      chunk_size_(chunk_size) {
  if (chunk_size_ == 0)
    throw std::invalid_argument("chunk size must be at least 1");
  if (!owned_.is_open()) throw IoError("cannot open", path_);
}

ChunkedReader::ChunkedReader(std::istream& stream, std::size_t chunk_size)
    : in_(&stream), chunk_size_(chunk_size) {
  if (chunk_size_ == 0)
    throw std::invalid_argument("chunk size must be at least 1");
}

bool ChunkedReader::next(std::vector<Byte>& block) {
  block.resize(chunk_size_);
  in_->read(reinterpret_cast<char*>(block.data()),
            static_cast<std::streamsize>(chunk_size_));
  if (in_->bad())
    throw IoError("read failed after " + std::to_string(delivered_) + " bytes",
                  path_, delivered_);
  const auto got = static_cast<std::size_t>(in_->gcount());
  block.resize(got);
  delivered_ += got;
  return got > 0;
}

std::vector<Byte> read_all(ChunkedReader& reader) {
  std::vector<Byte> all;
  std::vector<Byte> block;
  while (reader.next(block)) all.insert(all.end(), block.begin(), block.end());
  return all;
}

Pattern pattern_from_string(std::string_view bytes) { return Pattern(bytes); }

Pattern pattern_from_file(const std::filesystem::path& path,
                          PatternMode mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open pattern file", path.string());
  std::string content{std::istreambuf_iterator<char>(in),
                      std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("cannot read pattern file", path.string());

  if (mode == PatternMode::StripTrailingNewline && !content.empty() &&
      content.back() == '\n') {
    content.pop_back();
    if (!content.empty() && content.back() == '\r') content.pop_back();
  }
  return Pattern(std::string_view{content});
}

namespace {

std::size_t put(std::ostream& out, const char* buf, int len) {
  out.write(buf, len);
  if (!out) throw IoError("record write failed");
  return static_cast<std::size_t>(len);
}

}  // namespace

std::size_t write_record(const AlignmentRecord& record, RecordFormat format,
                         std::ostream& out) {
  char buf[96];
  int len;
  if (format == RecordFormat::Tsv) {
    len = std::snprintf(buf, sizeof buf, "%lld\t%u\t%u\n",
                        static_cast<long long>(record.alignment),
                        record.matches, record.hamming);
  } else {
    len = std::snprintf(buf, sizeof buf,
                        "{\"alignment\":%lld,\"matches\":%u,\"hamming\":%u}\n",
                        static_cast<long long>(record.alignment),
                        record.matches, record.hamming);
  }
  return put(out, buf, len);
}

std::size_t write_records(std::span<const AlignmentRecord> records,
                          RecordFormat format, std::ostream& out) {
  std::size_t bytes = 0;
  for (const AlignmentRecord& r : records) bytes += write_record(r, format, out);
  return bytes;
}

std::size_t write_trace_line(const AlignmentRecord& record, std::ostream& out) {
  char buf[48];
  const int len =
      std::snprintf(buf, sizeof buf, "%lld, %u\n",
                    static_cast<long long>(record.alignment), record.matches);
  return put(out, buf, len);
}

std::size_t write_paper_trace(std::span<const AlignmentRecord> records,
                              std::ostream& out) {
  std::size_t bytes = 0;
  for (const AlignmentRecord& r : records) bytes += write_trace_line(r, out);
  return bytes;
}

}  // namespace hamprof::io
