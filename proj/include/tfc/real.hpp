#pragma once

#include <cstddef>

#include "tfc/error.hpp"
#include "tfc/word.hpp"

namespace tfc {

/// Eventually periodic element of 3^omega: a finite prefix followed by a
/// nonempty word repeated forever. These are the only infinite sequences
/// the library manipulates.
struct EventualReal {
  Word3 prefix;
  Word3 tail;

  int digit(std::size_t i) const {
    if (i < prefix.size()) return prefix[i];
    if (tail.empty()) throw ForcingError("eventually periodic real has an empty tail");
    return tail[(i - prefix.size()) % tail.size()];
  }

  /// Member of H, i.e. digit 2 occurs at infinitely many positions.
  bool in_H() const { return tail.count(2) > 0; }

  friend bool operator==(const EventualReal&, const EventualReal&) = default;
};

/// Digit choices consumed one per splitting level when walking down a
/// branch; finite choices first, then the periodic tail.
struct BranchSelector {
  Word3 choices;
  Word3 tail_choices;

  int choice(std::size_t k) const {
    if (k < choices.size()) return choices[k];
    if (tail_choices.empty())
      throw ForcingError("branch selector has an empty tail");
    return tail_choices[(k - choices.size()) % tail_choices.size()];
  }
};

}  // namespace tfc
