#pragma once

#include "colexnet/wordlist.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace colexnet {

enum class AffixKind { prefix, suffix };

const char* to_string(AffixKind kind);
std::optional<AffixKind> affix_kind_from_string(const std::string& s);

// Length gates for affix search. Both are strictly-greater: an affix
// qualifies iff len(affix) > affix and len(word) - len(affix) > remainder.
struct Thresholds {
    int affix = 2;
    int remainder = 2;

    bool operator==(const Thresholds&) const = default;
};

inline constexpr Thresholds kAffixDefaults{2, 2};
inline constexpr Thresholds kOverlapDefaults{4, 3};

using SegmentView = std::span<const Sound>;

// True iff a occurs as a contiguous subsequence of b. Both inputs must be
// non-empty (contract_error otherwise).
bool is_part_of(SegmentView a, SegmentView b);

// Unthresholded structural tests; a == b counts as both.
bool is_prefix(SegmentView a, SegmentView b);
bool is_suffix(SegmentView a, SegmentView b);

// One maximal common contiguous subsequence; ties resolve to the witness
// with the smallest start offset in a. Empty result when nothing is shared.
Segments longest_common_substring(SegmentView a, SegmentView b);

// True iff affix relates to word by the given kind and passes both gates.
bool affix_qualifies(SegmentView affix, SegmentView word, AffixKind kind, Thresholds t);

// prefix if a begins b, suffix if a ends b, threshold-gated with word = b;
// prefix wins when both hold.
std::optional<AffixKind> affix_relation(SegmentView a, SegmentView b, Thresholds t);

struct AffixCandidate {
    Segments key;
    AffixKind kind;

    bool operator==(const AffixCandidate&) const = default;
};

// Every qualifying prefix of segments by decreasing length, then every
// qualifying suffix by decreasing length. A sequence that qualifies as both
// appears twice, once per kind.
std::vector<AffixCandidate> affix_candidates(SegmentView segments, Thresholds t);

// Sound tokens joined with single spaces. Injective because tokens never
// contain whitespace.
std::string join_segments(SegmentView segments);

} // namespace colexnet
