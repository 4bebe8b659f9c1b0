#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hamprof/pattern.hpp"
#include "hamprof/profile.hpp"

// Independent, deliberately plain implementations of the match-count
// definitions. These are the reference oracles the streaming scanner is
// checked against (unit tests, the acceptance suite and the CLI `verify`
// subcommand). Everything favors clarity over speed; keep instances small.
namespace hamprof::oracle {

/// The literal definition: for every alignment in the extended range,
/// compare the pattern position by position against the text, counting the
/// positions that fall inside the text and match. O(NM + M^2).
MatchProfile brute_force_profile(const Pattern& pattern, ByteSpan text);

/// The family of shift sets, one per pattern position:
/// sets[j] = { i - j : text[i] == pattern[j] }. Every element lies in
/// [1-M, N-1]; elements are ascending.
struct ShiftSetFamily {
  std::uint32_t m = 0;
  std::uint64_t n = 0;
  std::vector<std::vector<std::int64_t>> sets;
};

ShiftSetFamily build_sets(const Pattern& pattern, ByteSpan text);

/// Frequency view of a ShiftSetFamily. frequencies[t] is the number of sets
/// containing t — the match count at alignment t; alignments matching
/// nothing are absent. exact_shifts are the integers present in all m sets:
/// exactly the alignments where the pattern occurs in full.
struct MatchEvidence {
  std::vector<std::int64_t> exact_shifts;             // ascending
  std::map<std::int64_t, std::uint32_t> frequencies;  // only t with f_t >= 1
};

/// Each set in the family must hold distinct elements (build_sets guarantees
/// this).
MatchEvidence analyze(const ShiftSetFamily& family);

}  // namespace hamprof::oracle
