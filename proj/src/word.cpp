#include "wh/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace wh {

std::size_t least_rotation(std::span<const Letter> w) {
  const std::size_t n = w.size();
  if (n <= 1) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Letter a = w[(i + k) % n];
    Letter b = w[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (b < a) {
      i += k + 1;
      if (i == j) ++i;
    } else {
      j += k + 1;
      if (j == i) ++j;
    }
    k = 0;
  }
  return std::min(i, j);
}

CyclicWord CyclicWord::reduce(int rank, std::span<const Letter> letters) {
  check_rank(rank);
  for (Letter l : letters) check_letter(l, rank);

  // free reduction
  std::vector<Letter> s;
  s.reserve(letters.size());
  for (Letter l : letters) {
    if (!s.empty() && s.back() == l.inverse())
      s.pop_back();
    else
      s.push_back(l);
  }

  // cyclic reduction: trim matching ends
  std::size_t lo = 0, hi = s.size();
  while (hi - lo >= 2 && s[lo] == s[hi - 1].inverse()) {
    ++lo;
    --hi;
  }

  std::vector<Letter> w(s.begin() + lo, s.begin() + hi);
  std::size_t r = least_rotation(w);
  std::rotate(w.begin(), w.begin() + r, w.end());
  return CyclicWord(rank, std::move(w));
}

CyclicWord CyclicWord::from_ints(const std::vector<int>& ints, int rank) {
  std::vector<Letter> ls;
  ls.reserve(ints.size());
  for (int v : ints) {
    if (v == 0) fail(ErrorKind::Parse, "0 is not a letter");
    ls.push_back(Letter(v));
  }
  return reduce(rank, ls);
}

namespace {

CyclicWord parse_int_array(std::string_view text, int rank) {
  std::vector<int> ints;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[') fail(ErrorKind::Parse, "expected '['");
  ++i;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        fail(ErrorKind::Parse, "expected integer in letter array");
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > kMaxRank) fail(ErrorKind::Rank, "generator index " + std::to_string(v) + " too large");
        ++i;
      }
      ints.push_back(static_cast<int>(neg ? -v : v));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      fail(ErrorKind::Parse, "expected ',' or ']' in letter array");
    }
  }
  skip_ws();
  if (i != text.size()) fail(ErrorKind::Parse, "trailing characters after letter array");
  for (int v : ints)
    if (v == 0 || v > rank || v < -rank)
      fail(v == 0 ? ErrorKind::Parse : ErrorKind::Rank,
           "letter " + std::to_string(v) + " outside alphabet of rank " + std::to_string(rank));
  return CyclicWord::from_ints(ints, rank);
}

}  // namespace

CyclicWord CyclicWord::parse(std::string_view text, int rank) {
  check_rank(rank);
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '[') return parse_int_array(text.substr(i), rank);

  std::vector<Letter> ls;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    int idx;
    if (c >= 'a' && c <= 'z')
      idx = c - 'a' + 1;
    else if (c >= 'A' && c <= 'Z')
      idx = -(c - 'A' + 1);
    else
      fail(ErrorKind::Parse, std::string("unexpected character '") + c + "' in word");
    if (std::abs(idx) > rank)
      fail(ErrorKind::Rank, std::string("letter '") + c + "' outside alphabet of rank " +
                                std::to_string(rank));
    ls.push_back(Letter(idx));
  }
  return reduce(rank, ls);
}

int CyclicWord::occurrence_count(int gen_index) const {
  int n = 0;
  for (Letter l : letters_)
    if (l.gen() == gen_index) ++n;
  return n;
}

std::vector<int> CyclicWord::occurrence_profile() const {
  std::vector<int> m(static_cast<std::size_t>(rank_) + 1, 0);
  for (Letter l : letters_) ++m[static_cast<std::size_t>(l.gen())];
  return m;
}

std::string CyclicWord::text() const {
  std::string s;
  for (Letter l : letters_) s += l.text();
  return s;
}

std::vector<int> CyclicWord::ints() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(l.signed_index());
  return out;
}

bool operator<(const CyclicWord& a, const CyclicWord& b) {
  if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
  if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
  for (std::size_t i = 0; i < a.letters_.size(); ++i) {
    if (a.letters_[i] != b.letters_[i]) return a.letters_[i] < b.letters_[i];
  }
  return false;
}

std::size_t CyclicWord::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::size_t>(rank_);
  for (Letter l : letters_) {
    h ^= static_cast<std::size_t>(l.code()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace wh
