#pragma once

#include <string>

namespace meso {

/// Porter suffix-stripping stemmer (Porter 1980). Input must already be
/// lowercase ASCII letters; words of length <= 2 are returned unchanged.
std::string porter_stem(const std::string& word);

} // namespace meso
