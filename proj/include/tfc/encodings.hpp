#pragma once

#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

#include "tfc/error.hpp"
#include "tfc/word.hpp"

namespace tfc {

// ---------------------------------------------------------------------------
// length-lexicographic enumeration of binary words
//
// Shorter words come first, ties broken lexicographically with 0 < 1. This
// is the bijection 2^{<omega} -> omega with rank(<>) = 0 that is monotone
// under word extension: prepend a 1 and read off binary, minus one.

inline std::uint64_t lex_rank(const Word2& s) {
  if (s.size() > 62)
    throw ForcingError("binary word too long for a 64-bit rank");
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < s.size(); ++i) v = (v << 1) | static_cast<std::uint64_t>(s[i]);
  return v - 1;
}

inline Word2 lex_unrank(std::uint64_t n) {
  std::uint64_t v = n + 1;
  int msb = 63;
  while (!(v >> msb)) --msb;
  Word2 s;
  for (int i = msb - 1; i >= 0; --i) s.push_back((v >> i) & 1);
  return s;
}

// ---------------------------------------------------------------------------
// ternary words ending in a 2  <->  strictly increasing finite sequences
//
// Cut the word at its 2s into binary segments sigma_0, sigma_1, ...; the
// n-th output entry is rank(sigma_0) + ... + rank(sigma_n) + n. This is the
// finite trace of the isomorphism between H and the space of strictly
// increasing omega-sequences.

inline std::vector<std::uint64_t> to_increasing_seq(const Word3& x) {
  if (x.empty() || x[x.size() - 1] != 2)
    throw ForcingError("word must be nonempty and end with digit 2");
  std::vector<std::uint64_t> out;
  Word2 segment;
  std::uint64_t acc = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 2) {
      acc += lex_rank(segment);
      out.push_back(acc + n);
      ++n;
      segment = Word2{};
    } else {
      segment.push_back(x[i]);
    }
  }
  return out;
}

inline Word3 from_increasing_seq(std::span<const std::uint64_t> s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] <= s[i - 1])
      throw ForcingError("sequence is not strictly increasing");
  Word3 x;
  std::uint64_t prev_entry = 0;
  for (std::size_t n = 0; n < s.size(); ++n) {
    std::uint64_t rank = n == 0 ? s[0] : s[n] - prev_entry - 1;
    Word2 segment = lex_unrank(rank);
    for (std::size_t i = 0; i < segment.size(); ++i) x.push_back(segment[i]);
    x.push_back(2);
    prev_entry = s[n];
  }
  return x;
}

}  // namespace tfc
