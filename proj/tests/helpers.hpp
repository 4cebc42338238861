#pragma once

#include <doctest.h>

#include <random>

#include "mzvlab/expr.hpp"
#include "mzvlab/suites.hpp"

namespace testing {

inline mzv::Poly H2(const std::string& s) { return mzv::parse_expr(s, {mzv::Alphabet::H2, 1}); }
inline mzv::Poly PY(const std::string& s) { return mzv::parse_expr(s, {mzv::Alphabet::PY, 1}); }
inline mzv::Poly PDY(const std::string& s) { return mzv::parse_expr(s, {mzv::Alphabet::PDY, 1}); }

// Random word over the alphabet, normalized (PDY words may shrink).
inline mzv::Word random_word(std::mt19937& rng, mzv::Alphabet a, int max_len) {
  const int k = a == mzv::Alphabet::PDY ? 3 : 2;
  const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
  std::string s;
  for (int i = 0; i < len; ++i) s.push_back(static_cast<char>(std::uniform_int_distribution<int>(0, k - 1)(rng)));
  return mzv::Word(a, s);
}

inline mzv::Poly random_poly(std::mt19937& rng, mzv::Alphabet a, int max_len, int terms = 3) {
  mzv::Poly p(a);
  for (int i = 0; i < terms; ++i) {
    const int num = std::uniform_int_distribution<int>(-5, 5)(rng);
    const int den = std::uniform_int_distribution<int>(1, 4)(rng);
    mzv::Rational c(num, den);
    c.canonicalize();
    p += mzv::Poly(random_word(rng, a, max_len), c);
  }
  return p;
}

}  // namespace testing
