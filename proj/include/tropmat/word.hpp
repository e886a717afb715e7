#pragma once

#include <string>
#include <vector>

#include "tropmat/generators.hpp"

namespace tropmat {

/// A word in generator letters, evaluated left to right; the empty word is
/// the identity.
using Word = std::vector<Descriptor>;

inline Matrix eval_word(SemiringSpec spec, int n, const Word& word) {
  Matrix acc = Matrix::identity(spec, n);
  for (const Descriptor& d : word) {
    acc = acc * d.realize(spec, n);
  }
  return acc;
}

inline std::string word_str(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ' ';
    out += word[i].token();
  }
  return out;
}

}  // namespace tropmat
