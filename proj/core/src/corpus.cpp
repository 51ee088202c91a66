#include "meso/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "meso/stemmer.hpp"
#include "meso/stopwords.hpp"

namespace meso {
namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool is_blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

std::string lowercase_ascii(std::string s) {
    for (char& c : s)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return s;
}

} // namespace

const char* to_string(Role r) {
    switch (r) {
        case Role::Subject: return "subject";
        case Role::Verb: return "verb";
        case Role::DirectObject: return "direct-object";
        case Role::Fallback: return "fallback";
    }
    return "fallback";
}

Role role_from_string(const std::string& s) {
    if (s == "subject") return Role::Subject;
    if (s == "verb") return Role::Verb;
    if (s == "direct-object" || s == "direct object" || s == "dobj")
        return Role::DirectObject;
    if (s == "fallback") return Role::Fallback;
    throw std::runtime_error("unknown token role: '" + s + "'");
}

const char* to_string(Provenance p) {
    return p == Provenance::Annotated ? "annotated" : "fallback";
}

std::string clean_text(const RawBook& raw, const CleanOptions& opts) {
    if (trim(raw.text).empty())
        throw std::runtime_error("book '" + raw.id + "': empty input text");

    const std::regex chapter(opts.chapter_pattern);
    std::istringstream in(raw.text);
    std::string out;
    out.reserve(raw.text.size());
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string no_underscore;
        no_underscore.reserve(line.size());
        for (char c : line)
            if (c != '_') no_underscore += c;
        if (!is_blank(no_underscore) &&
            std::regex_match(trim(no_underscore), chapter))
            continue;
        out += no_underscore;
        out += '\n';
    }
    if (trim(out).empty())
        throw std::runtime_error("book '" + raw.id +
                                 "': text empty after cleaning");
    return out;
}

std::vector<std::string> segment_paragraphs(const std::string& cleaned) {
    std::vector<std::string> paragraphs;
    std::istringstream in(cleaned);
    std::string line, current;
    auto flush = [&] {
        std::string p = trim(current);
        if (!p.empty()) paragraphs.push_back(std::move(p));
        current.clear();
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_blank(line)) {
            flush();
        } else {
            if (!current.empty()) current += '\n';
            current += line;
        }
    }
    flush();
    if (paragraphs.empty())
        throw std::runtime_error("no paragraphs after segmentation");
    return paragraphs;
}

Paragraph extract_tokens(const std::string& paragraph, int index,
                         const std::vector<Token>* annotation,
                         const TokenizeOptions& opts) {
    Paragraph out;
    out.index = index;
    if (annotation) {
        out.tokens.reserve(annotation->size());
        for (const Token& t : *annotation)
            out.tokens.push_back({lowercase_ascii(t.lemma), t.role});
        return out;
    }
    const auto& stop =
        opts.stopwords ? *opts.stopwords : builtin_stopword_set();
    std::string word;
    auto emit = [&] {
        if (word.empty()) return;
        if (!stop.contains(word)) out.tokens.push_back({porter_stem(word), Role::Fallback});
        word.clear();
    };
    for (char c : paragraph) {
        if (c >= 'a' && c <= 'z') {
            word += c;
        } else if (c >= 'A' && c <= 'Z') {
            word += static_cast<char>(c - 'A' + 'a');
        } else {
            emit();
        }
    }
    emit();
    return out;
}

OrganizedText organize(const RawBook& raw, const AnnotationSidecar* sidecar,
                       const CleanOptions& clean_opts,
                       const TokenizeOptions& tok_opts) {
    const std::string cleaned = clean_text(raw, clean_opts);
    const std::vector<std::string> paragraphs = segment_paragraphs(cleaned);
    if (sidecar && sidecar->records.size() != paragraphs.size())
        throw std::runtime_error(
            "book '" + raw.id + "': annotation sidecar has " +
            std::to_string(sidecar->records.size()) + " records but " +
            std::to_string(paragraphs.size()) + " paragraphs");

    OrganizedText o;
    o.book_id = raw.id;
    o.provenance = sidecar ? Provenance::Annotated : Provenance::Fallback;
    o.paragraphs.reserve(paragraphs.size());
    for (size_t i = 0; i < paragraphs.size(); i++) {
        const std::vector<Token>* rec = sidecar ? &sidecar->records[i] : nullptr;
        o.paragraphs.push_back(
            extract_tokens(paragraphs[i], static_cast<int>(i), rec, tok_opts));
    }
    return o;
}

OrganizedText shuffle_paragraphs(const OrganizedText& o, std::uint64_t seed) {
    if (o.paragraphs.size() < 2)
        throw std::runtime_error("book '" + o.book_id +
                                 "': need at least 2 paragraphs to shuffle");
    OrganizedText out = o;
    out.shuffle_seed = seed;
    // Hand-rolled Fisher-Yates so permutations are identical across standard
    // library implementations.
    std::mt19937_64 rng(seed);
    auto& ps = out.paragraphs;
    for (size_t i = ps.size() - 1; i > 0; i--) {
        size_t j = static_cast<size_t>(rng() % (i + 1));
        std::swap(ps[i], ps[j]);
    }
    for (size_t i = 0; i < ps.size(); i++) ps[i].index = static_cast<int>(i);
    return out;
}

std::unordered_set<std::string> load_stopword_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stopword file: " + path);
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        std::string w = trim(line);
        if (!w.empty()) words.insert(lowercase_ascii(w));
    }
    return words;
}

} // namespace meso
