#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "wh/errors.hpp"

namespace wh {

// Largest ambient rank representable: letter sets are 64-bit masks.
inline constexpr int kMaxRank = 32;

// A letter of the alphabet {x_1,...,x_n}^{+-1}, stored as the signed
// generator index (+i for x_i, -i for x_i^{-1}).
//
// The total order used for canonical forms and enumeration is
// x1 < x1^{-1} < x2 < x2^{-1} < ..., i.e. the order of code().
class Letter {
 public:
  constexpr Letter() = default;
  constexpr explicit Letter(int signed_index) : v_(static_cast<std::int8_t>(signed_index)) {}

  // code = 2*(gen-1) for x_i, 2*(gen-1)+1 for x_i^{-1}
  static constexpr Letter from_code(int code) {
    return Letter((code % 2 == 0) ? (code / 2 + 1) : -(code / 2 + 1));
  }

  constexpr int signed_index() const { return v_; }
  constexpr int gen() const { return v_ < 0 ? -v_ : v_; }
  constexpr int sign() const { return v_ < 0 ? -1 : 1; }
  constexpr bool negative() const { return v_ < 0; }
  constexpr Letter inverse() const { return Letter(-v_); }
  constexpr int code() const { return 2 * (gen() - 1) + (v_ < 0 ? 1 : 0); }
  constexpr bool valid() const { return v_ != 0; }

  friend constexpr bool operator==(Letter a, Letter b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Letter a, Letter b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(Letter a, Letter b) { return a.code() < b.code(); }

  // 'a'..'z' for generators, 'A'..'Z' for inverses; only ranks up to 26.
  std::string text() const {
    if (gen() > 26) return (v_ < 0 ? "X" : "x") + std::to_string(gen());
    char c = static_cast<char>((v_ < 0 ? 'A' : 'a') + gen() - 1);
    return std::string(1, c);
  }

 private:
  std::int8_t v_ = 0;
};

// A subset of the alphabet, as a bitmask indexed by Letter::code().
class LetterSet {
 public:
  constexpr LetterSet() = default;
  constexpr explicit LetterSet(std::uint64_t bits) : bits_(bits) {}
  LetterSet(std::initializer_list<Letter> ls) {
    for (Letter l : ls) insert(l);
  }

  static constexpr LetterSet all(int rank) {
    return LetterSet(rank >= kMaxRank ? ~std::uint64_t{0} : ((std::uint64_t{1} << (2 * rank)) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcountll(bits_); }

  constexpr bool contains(Letter l) const { return (bits_ >> l.code()) & 1; }
  void insert(Letter l) { bits_ |= std::uint64_t{1} << l.code(); }
  void erase(Letter l) { bits_ &= ~(std::uint64_t{1} << l.code()); }
  LetterSet with(Letter l) const {
    LetterSet s = *this;
    s.insert(l);
    return s;
  }
  LetterSet without(Letter l) const {
    LetterSet s = *this;
    s.erase(l);
    return s;
  }

  constexpr bool contains_all(LetterSet o) const { return (bits_ & o.bits_) == o.bits_; }
  constexpr bool intersects(LetterSet o) const { return (bits_ & o.bits_) != 0; }

  // {x^{-1} : x in S}: swap adjacent bit pairs.
  constexpr LetterSet inverses() const {
    constexpr std::uint64_t even = 0x5555555555555555ull;
    return LetterSet(((bits_ & even) << 1) | ((bits_ >> 1) & even));
  }
  constexpr bool inversion_closed() const { return bits_ == inverses().bits_; }

  // letters x with x in S but x^{-1} not in S
  constexpr LetterSet one_sided() const { return LetterSet(bits_ & ~inverses().bits_); }

  constexpr LetterSet complement_in(int rank) const {
    return LetterSet(all(rank).bits_ & ~bits_);
  }

  friend constexpr LetterSet operator&(LetterSet a, LetterSet b) { return LetterSet(a.bits_ & b.bits_); }
  friend constexpr LetterSet operator|(LetterSet a, LetterSet b) { return LetterSet(a.bits_ | b.bits_); }
  constexpr LetterSet minus(LetterSet o) const { return LetterSet(bits_ & ~o.bits_); }

  friend constexpr bool operator==(LetterSet a, LetterSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(LetterSet a, LetterSet b) { return a.bits_ != b.bits_; }
  friend constexpr bool operator<(LetterSet a, LetterSet b) { return a.bits_ < b.bits_; }

  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    std::uint64_t b = bits_;
    while (b) {
      int c = __builtin_ctzll(b);
      out.push_back(Letter::from_code(c));
      b &= b - 1;
    }
    return out;
  }

  std::string text() const {
    std::string s = "{";
    bool first = true;
    for (Letter l : letters()) {
      if (!first) s += ",";
      s += l.text();
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

inline void check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank)
    fail(ErrorKind::Rank, "rank must be between 1 and " + std::to_string(kMaxRank) +
                              ", got " + std::to_string(rank));
}

inline void check_letter(Letter l, int rank) {
  if (!l.valid() || l.gen() > rank)
    fail(ErrorKind::Rank, "letter " + (l.valid() ? l.text() : std::string("<invalid>")) +
                              " outside alphabet of rank " + std::to_string(rank));
}

}  // namespace wh
