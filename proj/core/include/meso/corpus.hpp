#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace meso {

struct RawBook {
    std::string id;
    std::string text;
    std::vector<std::string> genres;
};

enum class Role { Subject, Verb, DirectObject, Fallback };

const char* to_string(Role r);
Role role_from_string(const std::string& s);

struct Token {
    std::string lemma;
    Role role = Role::Fallback;

    bool operator==(const Token&) const = default;
};

struct Paragraph {
    int index = 0;
    std::vector<Token> tokens;

    bool operator==(const Paragraph&) const = default;
};

enum class Provenance { Annotated, Fallback };

const char* to_string(Provenance p);

/// The cleaned, segmented, role-tagged token sequence of one book.
struct OrganizedText {
    std::string book_id;
    std::vector<Paragraph> paragraphs;
    Provenance provenance = Provenance::Fallback;
    std::optional<std::uint64_t> shuffle_seed;
};

/// Per-paragraph (lemma, role) records from an external parser.
struct AnnotationSidecar {
    std::vector<std::vector<Token>> records;
};

/// Options for the text-processing stage. Defaults match the shipped
/// pipeline; the chapter pattern is matched against each trimmed line
/// (full match removes the line).
struct CleanOptions {
    std::string chapter_pattern = R"((?:CHAPTER|Chapter)\b.*|[IVXLCDM]+\.?)";
};

struct TokenizeOptions {
    // Empty means the embedded list.
    const std::unordered_set<std::string>* stopwords = nullptr;
};

/// Removes underscores and chapter-marker lines, preserving blank-line
/// paragraph boundaries. Throws std::runtime_error if nothing but
/// whitespace survives.
std::string clean_text(const RawBook& raw, const CleanOptions& opts = {});

/// Splits on runs of blank lines, trims, drops empty paragraphs. Throws on
/// zero paragraphs.
std::vector<std::string> segment_paragraphs(const std::string& cleaned);

/// Token extraction for one paragraph. With an annotation record the
/// (lemma, role) pairs are taken as-is, lowercased. Without one the
/// fallback path runs: lowercase, letters-only tokens, stopword removal,
/// suffix stripping, role = fallback.
Paragraph extract_tokens(const std::string& paragraph, int index,
                         const std::vector<Token>* annotation,
                         const TokenizeOptions& opts = {});

/// Full text-processing stage: clean -> segment -> extract. If a sidecar is
/// given its record count must equal the paragraph count (hard error
/// otherwise) and provenance is Annotated.
OrganizedText organize(const RawBook& raw, const AnnotationSidecar* sidecar,
                       const CleanOptions& clean_opts = {},
                       const TokenizeOptions& tok_opts = {});

/// Seeded Fisher-Yates permutation of the paragraphs. Token contents are
/// untouched; indices are re-assigned in the new order and the seed is
/// recorded on the result.
OrganizedText shuffle_paragraphs(const OrganizedText& o, std::uint64_t seed);

/// Loads a stopword file (one word per line, blank lines ignored).
std::unordered_set<std::string> load_stopword_file(const std::string& path);

} // namespace meso
