#pragma once

#include <string>
#include <vector>

#include "lpa/word.hpp"
#include "oracle.hpp"

inline lpa::Word W(const std::string& digits, unsigned q = 2) {
  return lpa::Word::from_digits(digits, q);
}

inline oracle::Seq seq(const lpa::Word& w) { return oracle::Seq(w.view().begin(), w.view().end()); }

inline lpa::Word word(const oracle::Seq& s, unsigned q) {
  std::vector<lpa::Symbol> v(s.begin(), s.end());
  return lpa::Word(lpa::Alphabet(q), std::move(v));
}
