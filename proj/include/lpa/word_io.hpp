#pragma once

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "lpa/word.hpp"

namespace lpa {

/// One word from a word file together with its 1-based source line.
struct WordLine {
  std::size_t line = 0;
  Word word;
};

/// Parses one line: single digits when q <= 10, comma-separated decimals otherwise.
[[nodiscard]] Word parse_word(std::string_view text, unsigned q);

/// Reads a word file, skipping blank lines and lines starting with '#'.
/// Throws UsageError naming the offending line.
[[nodiscard]] std::vector<WordLine> read_words(std::istream& in, unsigned q);

}  // namespace lpa
