#include "colexnet/seqrel.hpp"

#include "colexnet/errors.hpp"

#include <algorithm>

namespace colexnet {

const char* to_string(AffixKind kind) {
    return kind == AffixKind::prefix ? "prefix" : "suffix";
}

std::optional<AffixKind> affix_kind_from_string(const std::string& s) {
    if (s == "prefix") return AffixKind::prefix;
    if (s == "suffix") return AffixKind::suffix;
    return std::nullopt;
}

static void require_non_empty(SegmentView a, SegmentView b, const char* op) {
    if (a.empty() || b.empty())
        throw contract_error(std::string(op) + " requires non-empty sequences");
}

bool is_part_of(SegmentView a, SegmentView b) {
    require_non_empty(a, b, "is_part_of");
    if (a.size() > b.size()) return false;
    return std::search(b.begin(), b.end(), a.begin(), a.end()) != b.end();
}

bool is_prefix(SegmentView a, SegmentView b) {
    return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

bool is_suffix(SegmentView a, SegmentView b) {
    return a.size() <= b.size() && std::equal(a.rbegin(), a.rend(), b.rbegin());
}

Segments longest_common_substring(SegmentView a, SegmentView b) {
    require_non_empty(a, b, "longest_common_substring");
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    // match[j] = length of the common run ending at a[i-1], b[j-1]
    std::vector<std::size_t> match(m + 1, 0);
    std::size_t best_len = 0;
    std::size_t best_start = 0;
    // Scanning end positions in a in ascending order means the first maximal
    // run found starts earliest in a, which is the documented tie-break.
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = m; j >= 1; --j) {
            match[j] = (a[i - 1] == b[j - 1]) ? match[j - 1] + 1 : 0;
            if (match[j] > best_len) {
                best_len = match[j];
                best_start = i - match[j];
            }
        }
    }
    return Segments(a.begin() + static_cast<std::ptrdiff_t>(best_start),
                    a.begin() + static_cast<std::ptrdiff_t>(best_start + best_len));
}

bool affix_qualifies(SegmentView affix, SegmentView word, AffixKind kind, Thresholds t) {
    if (static_cast<long>(affix.size()) <= t.affix) return false;
    if (static_cast<long>(word.size()) - static_cast<long>(affix.size()) <= t.remainder)
        return false;
    return kind == AffixKind::prefix ? is_prefix(affix, word) : is_suffix(affix, word);
}

std::optional<AffixKind> affix_relation(SegmentView a, SegmentView b, Thresholds t) {
    require_non_empty(a, b, "affix_relation");
    if (affix_qualifies(a, b, AffixKind::prefix, t)) return AffixKind::prefix;
    if (affix_qualifies(a, b, AffixKind::suffix, t)) return AffixKind::suffix;
    return std::nullopt;
}

std::vector<AffixCandidate> affix_candidates(SegmentView segments, Thresholds t) {
    if (segments.empty()) throw contract_error("affix_candidates requires a non-empty sequence");
    const long n = static_cast<long>(segments.size());
    const long min_len = t.affix + 1;
    const long max_len = n - t.remainder - 1;
    std::vector<AffixCandidate> out;
    if (max_len < min_len) return out;
    out.reserve(static_cast<std::size_t>(2 * (max_len - min_len + 1)));
    for (long len = max_len; len >= min_len; --len) {
        out.push_back({Segments(segments.begin(), segments.begin() + len), AffixKind::prefix});
    }
    for (long len = max_len; len >= min_len; --len) {
        out.push_back({Segments(segments.end() - len, segments.end()), AffixKind::suffix});
    }
    return out;
}

std::string join_segments(SegmentView segments) {
    std::string key;
    std::size_t total = segments.empty() ? 0 : segments.size() - 1;
    for (const Sound& s : segments) total += s.size();
    key.reserve(total);
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (i) key.push_back(' ');
        key += segments[i];
    }
    return key;
}

} // namespace colexnet
