#pragma once

#include "colexnet/seqrel.hpp"
#include "colexnet/wordlist.hpp"

#include <compare>
#include <string>
#include <vector>

namespace colexnet {

// Two concepts expressed by segment-identical forms of one language.
// concept_a < concept_b; form is the lowest form id in the identity group
// that attests either concept.
struct FullColexHit {
    std::string concept_a;
    std::string concept_b;
    std::string form;
    Segments shared;

    auto operator<=>(const FullColexHit&) const = default;
};

// The full form of `source` recurs as prefix or suffix of a form of
// `target`.
struct AffixColexHit {
    std::string source;
    std::string target;
    std::string affix_form;
    std::string full_form;
    AffixKind kind;

    auto operator<=>(const AffixColexHit&) const = default;
};

// Two forms sharing a qualifying affix while neither contains the other.
// concept_a < concept_b; form_a expresses concept_a.
struct OverlapColexHit {
    std::string concept_a;
    std::string concept_b;
    std::string form_a;
    std::string form_b;
    Segments shared;

    auto operator<=>(const OverlapColexHit&) const = default;
};

using FormRefs = std::vector<const Form*>;

// All inference operations take the forms of a single language and return
// canonically sorted hits. They are pure; different languages may run
// concurrently.

std::vector<FullColexHit> infer_full(const FormRefs& forms);

std::vector<AffixColexHit> infer_affix(const FormRefs& forms, Thresholds t = kAffixDefaults);

std::vector<OverlapColexHit> infer_overlap(const FormRefs& forms, Thresholds t = kOverlapDefaults);

// Quadratic all-pairs baselines. Produce exactly the same sorted hit lists
// as their efficient counterparts.
std::vector<AffixColexHit> naive_affix(const FormRefs& forms, Thresholds t = kAffixDefaults);

std::vector<OverlapColexHit> naive_overlap(const FormRefs& forms, Thresholds t = kOverlapDefaults);

} // namespace colexnet
