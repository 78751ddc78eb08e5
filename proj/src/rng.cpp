#include "wh/rng.hpp"

namespace wh {

CyclicWord random_cyclic_word(int rank, std::size_t length, SplitMix64& rng) {
  check_rank(rank);
  if (length == 0) return CyclicWord::reduce(rank, std::vector<Letter>{});
  std::vector<Letter> w;
  w.reserve(length);
  const int letters = 2 * rank;
  w.push_back(Letter::from_code(static_cast<int>(rng.below(letters))));
  for (std::size_t i = 1; i < length; ++i) {
    std::vector<Letter> options;
    options.reserve(static_cast<std::size_t>(letters));
    for (int c = 0; c < letters; ++c) {
      Letter l = Letter::from_code(c);
      if (l == w.back().inverse()) continue;
      if (i + 1 == length && l == w.front().inverse() && length > 1) continue;
      options.push_back(l);
    }
    w.push_back(options[rng.below(options.size())]);
  }
  CyclicWord out = CyclicWord::reduce(rank, w);
  return out;
}

}  // namespace wh
