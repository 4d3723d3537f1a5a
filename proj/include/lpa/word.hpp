#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

using Symbol = std::uint8_t;

/// Largest alphabet a Word can carry (symbols are stored in one byte).
inline constexpr unsigned kMaxAlphabet = 256;

/// Alphabet Σ_q = {0, ..., q-1}. Always contains the symbols 0 and 1.
class Alphabet {
 public:
  explicit Alphabet(unsigned q) : q_(q) {
    if (q < 2 || q > kMaxAlphabet) {
      throw UsageError("alphabet size must be in [2, 256], got " + std::to_string(q));
    }
  }
  [[nodiscard]] unsigned size() const noexcept { return q_; }
  [[nodiscard]] bool contains(unsigned s) const noexcept { return s < q_; }
  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  unsigned q_;
};

/// A finite q-ary sequence. Symbols are validated against q on construction.
class Word {
 public:
  explicit Word(Alphabet a = Alphabet(2)) : q_(a.size()) {}
  Word(Alphabet a, std::vector<Symbol> symbols);
  Word(Alphabet a, std::initializer_list<unsigned> symbols);

  /// Parses a string of decimal digits ("0110"); requires q <= 10.
  static Word from_digits(std::string_view digits, unsigned q = 2);

  [[nodiscard]] unsigned q() const noexcept { return q_; }
  [[nodiscard]] Alphabet alphabet() const { return Alphabet(q_); }
  [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
  [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }

  [[nodiscard]] Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
  [[nodiscard]] Symbol back() const noexcept { return symbols_.back(); }
  [[nodiscard]] std::span<const Symbol> view() const noexcept { return symbols_; }
  [[nodiscard]] const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  /// Contiguous window [start, start + length).
  [[nodiscard]] Word slice(std::size_t start, std::size_t length) const;

  void push_back(unsigned s);
  void append(std::span<const Symbol> tail);
  /// Removes the window [start, start + length).
  void erase(std::size_t start, std::size_t length);
  void insert(std::size_t pos, std::span<const Symbol> block);

  /// Digits for q <= 10, otherwise comma-separated decimal symbols.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& a, const Word& b) {
    return a.symbols_ < b.symbols_;
  }

 private:
  unsigned q_;
  std::vector<Symbol> symbols_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace lpa
