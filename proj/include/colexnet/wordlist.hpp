#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace colexnet {

// One phonetic segment, e.g. "ʃ", "uː", "tsʰ". Never empty, never contains
// whitespace.
using Sound = std::string;
using Segments = std::vector<Sound>;

bool valid_sound_token(const Sound& token);

struct Concept {
    std::string id;
    std::string gloss;

    bool operator==(const Concept&) const = default;
};

struct Language {
    std::string id;
    std::string name;
    std::string family; // never empty; falls back to the language id

    bool operator==(const Language&) const = default;
};

struct Form {
    std::string id;
    std::string language;
    std::string concept;
    std::string value; // original orthographic/transcribed text
    Segments segments; // never empty

    bool operator==(const Form&) const = default;
};

// Immutable, indexed collection of forms. Safe for concurrent reads once
// constructed.
class Wordlist {
public:
    Wordlist() = default;

    // Validates all invariants: unique ids, resolvable references, non-empty
    // segment lists, well-formed sound tokens. Languages with no forms are
    // allowed. Throws validation_error on violation.
    static Wordlist build(std::vector<Language> languages,
                          std::vector<Concept> concepts,
                          std::vector<Form> forms);

    const std::vector<Language>& languages() const { return languages_; }
    const std::vector<Concept>& concepts() const { return concepts_; }
    const std::vector<Form>& forms() const { return forms_; }

    bool has_language(const std::string& id) const;
    bool has_concept(const std::string& id) const;
    bool has_form(const std::string& id) const;

    const Language& language(const std::string& id) const; // not_found_error
    const Concept& concept(const std::string& id) const;   // not_found_error
    const Form& form(const std::string& id) const;         // not_found_error

    // Forms of one language in input order. Throws not_found_error for an
    // undeclared language id.
    std::vector<const Form*> forms_by_language(const std::string& language_id) const;

    bool operator==(const Wordlist& other) const;

private:
    std::vector<Language> languages_;
    std::vector<Concept> concepts_;
    std::vector<Form> forms_;
    std::unordered_map<std::string, std::size_t> language_index_;
    std::unordered_map<std::string, std::size_t> concept_index_;
    std::unordered_map<std::string, std::size_t> form_index_;
    std::unordered_map<std::string, std::vector<std::size_t>> by_language_;
};

// Reads the tab-separated wordlist format: a header row with the columns
// ID, LANGUAGE, FAMILY, CONCEPT, FORM, SEGMENTS, then one row per form.
// Lines starting with '#' are comments. Throws parse_error (with line
// number) for structural problems and validation_error for invariant
// violations.
Wordlist parse_wordlist(std::istream& in);

Wordlist load_wordlist(const std::filesystem::path& path);

// Serializes back to the same TSV format; re-parsing yields an equal
// wordlist.
void write_wordlist(const Wordlist& wordlist, std::ostream& out);

void save_wordlist(const Wordlist& wordlist, const std::filesystem::path& path);

} // namespace colexnet
