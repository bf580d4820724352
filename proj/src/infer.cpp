#include "colexnet/infer.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace colexnet {

namespace {

// Key builder shared by the associative-array passes. Joined sound tokens
// are injective keys because tokens never contain whitespace.
std::string form_key(const Form& f) { return join_segments(f.segments); }

struct IndexEntry {
    const Form* form;
    AffixKind kind;
};

struct KeyBucket {
    std::size_t length = 0; // key length in sounds
    std::vector<IndexEntry> entries;
};

using AffixIndex = std::unordered_map<std::string, KeyBucket>;

AffixIndex build_affix_index(const FormRefs& forms, Thresholds t) {
    AffixIndex index;
    for (const Form* f : forms) {
        for (AffixCandidate& cand : affix_candidates(f->segments, t)) {
            KeyBucket& bucket = index[join_segments(cand.key)];
            bucket.length = cand.key.size();
            bucket.entries.push_back({f, cand.kind});
        }
    }
    return index;
}

std::string pair_token(const std::string& a, const std::string& b) {
    return a < b ? a + '\t' + b : b + '\t' + a;
}

bool neither_contains_other(const Segments& a, const Segments& b) {
    return !is_prefix(a, b) && !is_suffix(a, b) && !is_prefix(b, a) && !is_suffix(b, a);
}

OverlapColexHit make_overlap_hit(const Form& x, const Form& y, Segments shared) {
    if (x.concept < y.concept) return {x.concept, y.concept, x.id, y.id, std::move(shared)};
    return {y.concept, x.concept, y.id, x.id, std::move(shared)};
}

} // namespace

std::vector<FullColexHit> infer_full(const FormRefs& forms) {
    // key -> per-concept lowest form id, in one scan over the language
    std::unordered_map<std::string, std::map<std::string, std::string>> groups;
    std::unordered_map<std::string, const Form*> group_form;
    for (const Form* f : forms) {
        std::string key = form_key(*f);
        auto& concepts = groups[key];
        auto [it, inserted] = concepts.emplace(f->concept, f->id);
        if (!inserted && f->id < it->second) it->second = f->id;
        group_form.emplace(std::move(key), f);
    }

    std::vector<FullColexHit> hits;
    for (const auto& [key, concepts] : groups) {
        if (concepts.size() < 2) continue;
        const Segments& shared = group_form.at(key)->segments;
        for (auto a = concepts.begin(); a != concepts.end(); ++a) {
            for (auto b = std::next(a); b != concepts.end(); ++b) {
                hits.push_back({a->first, b->first, std::min(a->second, b->second), shared});
            }
        }
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

std::vector<AffixColexHit> infer_affix(const FormRefs& forms, Thresholds t) {
    AffixIndex index = build_affix_index(forms, t);

    FormRefs by_length(forms);
    std::sort(by_length.begin(), by_length.end(), [](const Form* a, const Form* b) {
        if (a->segments.size() != b->segments.size())
            return a->segments.size() > b->segments.size();
        return a->id < b->id;
    });

    std::vector<AffixColexHit> hits;
    for (const Form* f : by_length) {
        auto it = index.find(form_key(*f));
        if (it == index.end()) continue;
        for (const IndexEntry& entry : it->second.entries) {
            if (entry.form->concept == f->concept) continue;
            if (entry.form->id == f->id) continue;
            hits.push_back({f->concept, entry.form->concept, f->id, entry.form->id, entry.kind});
        }
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

std::vector<OverlapColexHit> infer_overlap(const FormRefs& forms, Thresholds t) {
    AffixIndex index = build_affix_index(forms, t);

    // Longest affixes first; the first key a form pair shares decides the
    // stored overlap.
    std::vector<const AffixIndex::value_type*> keys;
    keys.reserve(index.size());
    for (const auto& kv : index) keys.push_back(&kv);
    std::sort(keys.begin(), keys.end(), [](const auto* a, const auto* b) {
        if (a->second.length != b->second.length) return a->second.length > b->second.length;
        return a->first < b->first;
    });

    std::vector<OverlapColexHit> hits;
    std::unordered_set<std::string> emitted;
    for (const auto* kv : keys) {
        const std::vector<IndexEntry>& entries = kv->second.entries;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const Form& x = *entries[i].form;
            for (std::size_t j = i + 1; j < entries.size(); ++j) {
                const Form& y = *entries[j].form;
                if (x.id == y.id) continue;
                if (x.concept == y.concept) continue;
                if (x.segments == y.segments) continue; // full colexification
                if (!neither_contains_other(x.segments, y.segments)) continue;
                if (!emitted.insert(pair_token(x.id, y.id)).second) continue;
                Segments shared(x.segments.begin(),
                                x.segments.begin() + static_cast<std::ptrdiff_t>(0));
                // reconstruct the key's segments from either member
                shared = entries[i].kind == AffixKind::prefix
                             ? Segments(x.segments.begin(),
                                        x.segments.begin() +
                                            static_cast<std::ptrdiff_t>(kv->second.length))
                             : Segments(x.segments.end() -
                                            static_cast<std::ptrdiff_t>(kv->second.length),
                                        x.segments.end());
                hits.push_back(make_overlap_hit(x, y, std::move(shared)));
            }
        }
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

std::vector<AffixColexHit> naive_affix(const FormRefs& forms, Thresholds t) {
    std::vector<AffixColexHit> hits;
    for (const Form* a : forms) {
        for (const Form* b : forms) {
            if (a->id == b->id || a->concept == b->concept) continue;
            for (AffixKind kind : {AffixKind::prefix, AffixKind::suffix}) {
                if (affix_qualifies(a->segments, b->segments, kind, t))
                    hits.push_back({a->concept, b->concept, a->id, b->id, kind});
            }
        }
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

namespace {

// Longest shared qualifying affix of both forms; ties between the two
// possible keys of one length resolve to the smaller joined key, matching
// the key order of the efficient pass.
std::optional<Segments> best_shared_affix(const Segments& a, const Segments& b, Thresholds t) {
    const long len_a = static_cast<long>(a.size());
    const long len_b = static_cast<long>(b.size());
    const long min_len = t.affix + 1;
    const long max_len = std::min(len_a, len_b) - t.remainder - 1;
    for (long len = max_len; len >= min_len; --len) {
        auto slice = [len](const Segments& s, bool front) {
            return front ? SegmentView(s.data(), static_cast<std::size_t>(len))
                         : SegmentView(s.data() + s.size() - static_cast<std::size_t>(len),
                                       static_cast<std::size_t>(len));
        };
        SegmentView candidates_a[2] = {slice(a, true), slice(a, false)};
        SegmentView candidates_b[2] = {slice(b, true), slice(b, false)};
        std::optional<Segments> best;
        for (SegmentView ka : candidates_a) {
            for (SegmentView kb : candidates_b) {
                if (!std::equal(ka.begin(), ka.end(), kb.begin(), kb.end())) continue;
                Segments key(ka.begin(), ka.end());
                if (!best || join_segments(key) < join_segments(*best)) best = std::move(key);
            }
        }
        if (best) return best;
    }
    return std::nullopt;
}

} // namespace

std::vector<OverlapColexHit> naive_overlap(const FormRefs& forms, Thresholds t) {
    std::vector<OverlapColexHit> hits;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const Form& x = *forms[i];
        for (std::size_t j = i + 1; j < forms.size(); ++j) {
            const Form& y = *forms[j];
            if (x.id == y.id || x.concept == y.concept) continue;
            if (x.segments == y.segments) continue;
            if (!neither_contains_other(x.segments, y.segments)) continue;
            if (auto shared = best_shared_affix(x.segments, y.segments, t))
                hits.push_back(make_overlap_hit(x, y, std::move(*shared)));
        }
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

} // namespace colexnet
