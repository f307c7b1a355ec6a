#pragma once

#include "braid/braids.hpp"
#include "braid/rng.hpp"

namespace braid::test {

inline FreeWord W(const std::string& text, int rank) {
  return parse_word(text, rank);
}

inline BraidWord B(const std::string& text, int strands) {
  return parse_braid(text, strands);
}

}  // namespace braid::test
