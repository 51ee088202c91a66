#pragma once

#include <span>
#include <string>
#include <unordered_set>

namespace meso {

/// The embedded English stopword list (lowercase, letters only). Versioned
/// with the repo so fallback tokenization is reproducible.
std::span<const char* const> builtin_stopwords();

/// Set form of builtin_stopwords(), built once.
const std::unordered_set<std::string>& builtin_stopword_set();

} // namespace meso
