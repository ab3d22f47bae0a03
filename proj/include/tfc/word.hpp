#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include "tfc/error.hpp"

namespace tfc {

/// Finite word over the alphabet {0, ..., Radix-1}, stored as the ASCII
/// digits '0'.. so fixtures and JSON carry words as plain strings.
template <int Radix>
class BasicWord {
  static_assert(Radix >= 2 && Radix <= 10);

 public:
  static constexpr std::size_t npos = std::string::npos;

  BasicWord() = default;

  static BasicWord parse(std::string_view digits) {
    BasicWord w;
    for (char c : digits) {
      if (c < '0' || c >= '0' + Radix)
        throw ForcingError("invalid digit '" + std::string(1, c) +
                           "' for alphabet of size " + std::to_string(Radix));
      w.digits_.push_back(c);
    }
    return w;
  }

  static BasicWord repeated(int digit, std::size_t count) {
    BasicWord w;
    for (std::size_t i = 0; i < count; ++i) w.push_back(digit);
    return w;
  }

  void push_back(int digit) {
    if (digit < 0 || digit >= Radix)
      throw ForcingError("digit " + std::to_string(digit) +
                         " out of range for alphabet of size " +
                         std::to_string(Radix));
    digits_.push_back(static_cast<char>('0' + digit));
  }

  int at(std::size_t i) const { return digits_.at(i) - '0'; }
  int operator[](std::size_t i) const { return digits_[i] - '0'; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }

  BasicWord prefix(std::size_t len) const {
    BasicWord w;
    w.digits_ = digits_.substr(0, len);
    return w;
  }

  /// p is an initial segment of this word.
  bool has_prefix(const BasicWord& p) const {
    return digits_.compare(0, p.digits_.size(), p.digits_) == 0;
  }

  /// One of the two words extends the other.
  bool compatible_with(const BasicWord& o) const {
    return has_prefix(o) || o.has_prefix(*this);
  }

  BasicWord concat(const BasicWord& o) const {
    BasicWord w;
    w.digits_ = digits_ + o.digits_;
    return w;
  }

  std::size_t count(int digit) const {
    std::size_t n = 0;
    for (char c : digits_)
      if (c == '0' + digit) ++n;
    return n;
  }

  /// Position of the k-th occurrence (0-indexed) of digit, or npos.
  std::size_t find_occurrence(int digit, std::size_t k) const {
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (digits_[i] == '0' + digit) {
        if (k == 0) return i;
        --k;
      }
    }
    return npos;
  }

  std::size_t find_last(int digit) const {
    return digits_.rfind(static_cast<char>('0' + digit));
  }

  const std::string& str() const { return digits_; }

  friend auto operator<=>(const BasicWord&, const BasicWord&) = default;

 private:
  std::string digits_;
};

using Word3 = BasicWord<3>;  // nodes of trees on the ternary alphabet
using Word2 = BasicWord<2>;  // binary words (coded reals, predicates)

}  // namespace tfc
