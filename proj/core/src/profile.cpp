#include "hamprof/profile.hpp"

#include <algorithm>
#include <cassert>
#include <future>
#include <stdexcept>
#include <utility>

namespace hamprof {

MatchProfile::MatchProfile(std::uint32_t pattern_length,
                           std::uint64_t text_length,
                           std::vector<std::uint32_t> counts)
    : m_(pattern_length), n_(text_length), counts_(std::move(counts)) {
  if (m_ == 0) throw std::invalid_argument("profile: pattern length is 0");
  if (counts_.size() != n_ + m_ - 1)
    throw std::invalid_argument("profile: expected N + M - 1 counts");
}

MatchProfile profile(const ShiftTable& table, ByteSpan text) {
  StreamScanner scanner(table);
  const std::uint32_t m = table.pattern_length();
  std::vector<std::uint32_t> counts;
  counts.reserve(text.size() + m - 1);
  // The first record (alignment -M) has zero overlap and is not part of the
  // profile; it is always 0.
  bool lead = true;
  auto keep = [&](const AlignmentRecord& r) {
    if (lead) {
      lead = false;
      assert(r.matches == 0);
      return;
    }
    counts.push_back(r.matches);
  };
  scanner.scan(text, keep);
  for (const AlignmentRecord& r : scanner.finish()) keep(r);
  return MatchProfile(m, text.size(), std::move(counts));
}

MatchProfile profile(const Pattern& pattern, ByteSpan text) {
  return profile(ShiftTable(pattern), text);
}

MatchProfile profile_parallel(const ShiftTable& table, ByteSpan text,
                              unsigned jobs) {
  const std::size_t n = text.size();
  const std::size_t pieces =
      std::max<std::size_t>(1, std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));
  if (pieces == 1) return profile(table, text);

  std::vector<std::future<MatchProfile>> futures;
  futures.reserve(pieces);
  std::size_t begin = 0;
  for (std::size_t w = 0; w < pieces; ++w) {
    const std::size_t end = begin + (n - begin) / (pieces - w);
    futures.push_back(std::async(
        std::launch::async,
        [&table, piece = text.subspan(begin, end - begin)] {
          return profile(table, piece);
        }));
    begin = end;
  }
  MatchProfile merged = futures.front().get();
  for (std::size_t w = 1; w < pieces; ++w)
    merged = merge_concat(merged, futures[w].get());
  return merged;
}

std::vector<AlignmentRecord> hamming_profile(const MatchProfile& profile) {
  std::vector<AlignmentRecord> rows;
  rows.reserve(profile.size());
  std::int64_t a = profile.first_alignment();
  const std::uint32_t m = profile.pattern_length();
  for (std::uint32_t count : profile.counts()) {
    rows.push_back({a, count, m - count});
    ++a;
  }
  return rows;
}

std::vector<std::int64_t> k_mismatch_positions(const MatchProfile& profile,
                                               std::int64_t k,
                                               RangeMode mode) {
  const std::int64_t m = profile.pattern_length();
  if (k < 0 || k > m) throw std::invalid_argument("k must be in [0, M]");

  std::int64_t lo = profile.first_alignment();
  std::int64_t hi = profile.last_alignment();
  if (mode == RangeMode::Core) {
    lo = 0;
    hi = static_cast<std::int64_t>(profile.text_length()) - m;
  }
  std::vector<std::int64_t> hits;
  for (std::int64_t a = lo; a <= hi; ++a)
    if (m - profile.count_at(a) <= k) hits.push_back(a);
  return hits;
}

MatchProfile merge_concat(const MatchProfile& left, const MatchProfile& right) {
  if (left.pattern_length() != right.pattern_length())
    throw std::invalid_argument(
        "merge_concat: profiles built from different pattern lengths");
  const std::uint32_t m = left.pattern_length();
  const std::uint64_t n = left.text_length() + right.text_length();
  const std::int64_t split = static_cast<std::int64_t>(left.text_length());

  std::vector<std::uint32_t> counts;
  counts.reserve(n + m - 1);
  const std::int64_t last = static_cast<std::int64_t>(n) - 1;
  for (std::int64_t a = 1 - static_cast<std::int64_t>(m); a <= last; ++a)
    counts.push_back(left.count_at(a) + right.count_at(a - split));
  return MatchProfile(m, n, std::move(counts));
}

std::uint64_t total_hits(const ShiftTable& table,
                         std::span<const std::uint64_t, 256> histogram) {
  std::uint64_t sum = 0;
  for (std::size_t c = 0; c < 256; ++c)
    sum += histogram[c] * table.occurrences(static_cast<Byte>(c));
  return sum;
}

std::uint64_t total_hits(const Pattern& pattern,
                         std::span<const std::uint64_t, 256> histogram) {
  std::array<std::uint64_t, 256> occ{};
  for (Byte b : pattern.bytes()) ++occ[b];
  std::uint64_t sum = 0;
  for (std::size_t c = 0; c < 256; ++c) sum += histogram[c] * occ[c];
  return sum;
}

}  // namespace hamprof
