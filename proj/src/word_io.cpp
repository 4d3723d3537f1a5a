#include "lpa/word_io.hpp"

#include <charconv>
#include <istream>
#include <string>

namespace lpa {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Word parse_word(std::string_view text, unsigned q) {
  text = trim(text);
  if (q <= 10) return Word::from_digits(text, q);
  Word w{Alphabet(q)};
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto field = trim(text.substr(0, comma));
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw UsageError("bad symbol '" + std::string(field) + "'");
    }
    w.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (trim(text).empty()) throw UsageError("trailing comma");
  }
  return w;
}

std::vector<WordLine> read_words(std::istream& in, unsigned q) {
  std::vector<WordLine> words;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    try {
      words.push_back({number, parse_word(body, q)});
    } catch (const UsageError& e) {
      throw UsageError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return words;
}

}  // namespace lpa
