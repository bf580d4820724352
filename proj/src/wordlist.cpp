#include "colexnet/wordlist.hpp"

#include "colexnet/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace colexnet {

bool valid_sound_token(const Sound& token) {
    if (token.empty()) return false;
    for (unsigned char c : token) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') return false;
    }
    return true;
}

Wordlist Wordlist::build(std::vector<Language> languages,
                         std::vector<Concept> concepts,
                         std::vector<Form> forms) {
    Wordlist wl;
    wl.languages_ = std::move(languages);
    wl.concepts_ = std::move(concepts);
    wl.forms_ = std::move(forms);

    for (std::size_t i = 0; i < wl.languages_.size(); ++i) {
        Language& lang = wl.languages_[i];
        if (lang.id.empty()) throw validation_error("language with empty id");
        if (lang.family.empty()) lang.family = lang.id; // isolates count as singleton families
        if (!wl.language_index_.emplace(lang.id, i).second)
            throw validation_error("duplicate language id: " + lang.id);
        wl.by_language_.emplace(lang.id, std::vector<std::size_t>{});
    }
    for (std::size_t i = 0; i < wl.concepts_.size(); ++i) {
        const Concept& c = wl.concepts_[i];
        if (c.id.empty()) throw validation_error("concept with empty id");
        if (!wl.concept_index_.emplace(c.id, i).second)
            throw validation_error("duplicate concept id: " + c.id);
    }
    for (std::size_t i = 0; i < wl.forms_.size(); ++i) {
        const Form& f = wl.forms_[i];
        if (f.id.empty()) throw validation_error("form with empty id");
        if (!wl.form_index_.emplace(f.id, i).second)
            throw validation_error("duplicate form id: " + f.id);
        if (!wl.language_index_.count(f.language))
            throw validation_error("form " + f.id + " references unknown language: " + f.language);
        if (!wl.concept_index_.count(f.concept))
            throw validation_error("form " + f.id + " references unknown concept: " + f.concept);
        if (f.segments.empty())
            throw validation_error("form " + f.id + " has an empty segments field");
        for (const Sound& s : f.segments) {
            if (!valid_sound_token(s))
                throw validation_error("form " + f.id + " has a malformed sound token");
        }
        wl.by_language_[f.language].push_back(i);
    }
    return wl;
}

bool Wordlist::has_language(const std::string& id) const { return language_index_.count(id) > 0; }
bool Wordlist::has_concept(const std::string& id) const { return concept_index_.count(id) > 0; }
bool Wordlist::has_form(const std::string& id) const { return form_index_.count(id) > 0; }

const Language& Wordlist::language(const std::string& id) const {
    auto it = language_index_.find(id);
    if (it == language_index_.end()) throw not_found_error("unknown language id: " + id);
    return languages_[it->second];
}

const Concept& Wordlist::concept(const std::string& id) const {
    auto it = concept_index_.find(id);
    if (it == concept_index_.end()) throw not_found_error("unknown concept id: " + id);
    return concepts_[it->second];
}

const Form& Wordlist::form(const std::string& id) const {
    auto it = form_index_.find(id);
    if (it == form_index_.end()) throw not_found_error("unknown form id: " + id);
    return forms_[it->second];
}

std::vector<const Form*> Wordlist::forms_by_language(const std::string& language_id) const {
    auto it = by_language_.find(language_id);
    if (it == by_language_.end()) throw not_found_error("unknown language id: " + language_id);
    std::vector<const Form*> out;
    out.reserve(it->second.size());
    for (std::size_t idx : it->second) out.push_back(&forms_[idx]);
    return out;
}

bool Wordlist::operator==(const Wordlist& other) const {
    return languages_ == other.languages_ && concepts_ == other.concepts_ &&
           forms_ == other.forms_;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        auto tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

Segments split_segments(const std::string& text) {
    Segments segments;
    std::istringstream ss(text);
    std::string token;
    while (ss >> token) segments.push_back(token);
    return segments;
}

const std::vector<std::string> kColumns = {"ID",      "LANGUAGE", "FAMILY",
                                           "CONCEPT", "FORM",     "SEGMENTS"};

} // namespace

Wordlist parse_wordlist(std::istream& in) {
    std::vector<Language> languages;
    std::vector<Concept> concepts;
    std::vector<Form> forms;
    std::unordered_map<std::string, std::size_t> seen_language;
    std::unordered_map<std::string, bool> seen_concept;

    std::string line;
    long line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields = split_tabs(line);
        if (!header_seen) {
            if (fields != kColumns) {
                throw parse_error("expected header 'ID LANGUAGE FAMILY CONCEPT FORM SEGMENTS'",
                                  line_no);
            }
            header_seen = true;
            continue;
        }
        if (fields.size() != kColumns.size()) {
            throw parse_error("expected " + std::to_string(kColumns.size()) + " columns, got " +
                                  std::to_string(fields.size()),
                              line_no);
        }
        const std::string& id = fields[0];
        const std::string& lang_id = fields[1];
        const std::string& family = fields[2];
        const std::string& concept_id = fields[3];
        const std::string& value = fields[4];
        Segments segments = split_segments(fields[5]);
        if (id.empty()) throw parse_error("empty ID field", line_no);
        if (lang_id.empty()) throw parse_error("empty LANGUAGE field", line_no);
        if (concept_id.empty()) throw parse_error("empty CONCEPT field", line_no);
        if (segments.empty())
            throw validation_error("empty segments field for form " + id + " (line " +
                                   std::to_string(line_no) + ")");

        auto lang_it = seen_language.find(lang_id);
        if (lang_it == seen_language.end()) {
            seen_language.emplace(lang_id, languages.size());
            languages.push_back({lang_id, lang_id, family.empty() ? lang_id : family});
        } else {
            const std::string& known = languages[lang_it->second].family;
            const std::string& effective = family.empty() ? lang_id : family;
            if (known != effective)
                throw validation_error("conflicting family for language " + lang_id + " (line " +
                                       std::to_string(line_no) + "): '" + known + "' vs '" +
                                       effective + "'");
        }
        if (!seen_concept.count(concept_id)) {
            seen_concept.emplace(concept_id, true);
            concepts.push_back({concept_id, concept_id});
        }
        forms.push_back({id, lang_id, concept_id, value, std::move(segments)});
    }
    if (!header_seen) throw parse_error("missing header row", line_no);
    return Wordlist::build(std::move(languages), std::move(concepts), std::move(forms));
}

Wordlist load_wordlist(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open wordlist: " + path.string());
    return parse_wordlist(in);
}

void write_wordlist(const Wordlist& wordlist, std::ostream& out) {
    out << "ID\tLANGUAGE\tFAMILY\tCONCEPT\tFORM\tSEGMENTS\n";
    for (const Form& f : wordlist.forms()) {
        const Language& lang = wordlist.language(f.language);
        out << f.id << '\t' << f.language << '\t' << lang.family << '\t' << f.concept << '\t'
            << f.value << '\t';
        for (std::size_t i = 0; i < f.segments.size(); ++i) {
            if (i) out << ' ';
            out << f.segments[i];
        }
        out << '\n';
    }
}

void save_wordlist(const Wordlist& wordlist, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write wordlist: " + path.string());
    write_wordlist(wordlist, out);
}

} // namespace colexnet
