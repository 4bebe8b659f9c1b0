#include "hamprof/oracle.hpp"

namespace hamprof::oracle {

MatchProfile brute_force_profile(const Pattern& pattern, ByteSpan text) {
  const std::int64_t m = pattern.length();
  const std::int64_t n = static_cast<std::int64_t>(text.size());

  std::vector<std::uint32_t> counts;
  counts.reserve(static_cast<std::size_t>(n + m - 1));
  for (std::int64_t a = 1 - m; a <= n - 1; ++a) {
    std::uint32_t matches = 0;
    for (std::int64_t j = 0; j < m; ++j) {
      const std::int64_t i = a + j;
      if (i >= 0 && i < n &&
          text[static_cast<std::size_t>(i)] ==
              pattern[static_cast<std::size_t>(j)])
        ++matches;
    }
    counts.push_back(matches);
  }
  return MatchProfile(pattern.length(), text.size(), std::move(counts));
}

ShiftSetFamily build_sets(const Pattern& pattern, ByteSpan text) {
  ShiftSetFamily family;
  family.m = pattern.length();
  family.n = text.size();
  family.sets.resize(pattern.length());
  const std::int64_t n = static_cast<std::int64_t>(text.size());
  for (std::uint32_t j = 0; j < pattern.length(); ++j) {
    const Byte p = pattern[j];
    for (std::int64_t i = 0; i < n; ++i)
      if (text[static_cast<std::size_t>(i)] == p)
        family.sets[j].push_back(i - j);
  }
  return family;
}

MatchEvidence analyze(const ShiftSetFamily& family) {
  MatchEvidence evidence;
  for (const auto& set : family.sets)
    for (std::int64_t t : set) ++evidence.frequencies[t];
  for (const auto& [t, f] : evidence.frequencies)
    if (f == family.m) evidence.exact_shifts.push_back(t);
  return evidence;
}

}  // namespace hamprof::oracle
