#include "lpa/word.hpp"

#include <algorithm>
#include <functional>

namespace lpa {

namespace {

void check_symbol(unsigned s, unsigned q) {
  if (s >= q) {
    throw UsageError("symbol " + std::to_string(s) + " out of range for q=" + std::to_string(q));
  }
}

}  // namespace

Word::Word(Alphabet a, std::vector<Symbol> symbols) : q_(a.size()), symbols_(std::move(symbols)) {
  for (Symbol s : symbols_) check_symbol(s, q_);
}

Word::Word(Alphabet a, std::initializer_list<unsigned> symbols) : q_(a.size()) {
  symbols_.reserve(symbols.size());
  for (unsigned s : symbols) push_back(s);
}

Word Word::from_digits(std::string_view digits, unsigned q) {
  if (q > 10) throw UsageError("digit notation requires q <= 10");
  Word w{Alphabet(q)};
  w.symbols_.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw UsageError(std::string("not a digit: '") + c + "'");
    }
    w.push_back(static_cast<unsigned>(c - '0'));
  }
  return w;
}

Word Word::slice(std::size_t start, std::size_t length) const {
  if (start > symbols_.size() || length > symbols_.size() - start) {
    throw UsageError("slice out of range");
  }
  Word out{Alphabet(q_)};
  out.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(start),
                      symbols_.begin() + static_cast<std::ptrdiff_t>(start + length));
  return out;
}

void Word::push_back(unsigned s) {
  check_symbol(s, q_);
  symbols_.push_back(static_cast<Symbol>(s));
}

void Word::append(std::span<const Symbol> tail) {
  for (Symbol s : tail) check_symbol(s, q_);
  symbols_.insert(symbols_.end(), tail.begin(), tail.end());
}

void Word::erase(std::size_t start, std::size_t length) {
  if (start > symbols_.size() || length > symbols_.size() - start) {
    throw UsageError("erase out of range");
  }
  auto first = symbols_.begin() + static_cast<std::ptrdiff_t>(start);
  symbols_.erase(first, first + static_cast<std::ptrdiff_t>(length));
}

void Word::insert(std::size_t pos, std::span<const Symbol> block) {
  if (pos > symbols_.size()) throw UsageError("insert position out of range");
  for (Symbol s : block) check_symbol(s, q_);
  symbols_.insert(symbols_.begin() + static_cast<std::ptrdiff_t>(pos), block.begin(), block.end());
}

std::string Word::to_string() const {
  std::string out;
  if (q_ <= 10) {
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
    return out;
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(symbols_[i]);
  }
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the symbols, seeded with q.
  std::uint64_t h = 1469598103934665603ULL ^ w.q();
  for (Symbol s : w.view()) {
    h ^= s;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace lpa
