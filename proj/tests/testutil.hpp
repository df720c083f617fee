#pragma once

#include "lsft/algebra.hpp"
#include "lsft/rational.hpp"

namespace lsft::testutil {

inline Word random_word(SplitMix64& rng, int nchords, int maxlen, bool allow_t = true) {
  const int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(maxlen) + 1));
  Word w;
  for (int i = 0; i < len; ++i) {
    const std::uint64_t r = rng.below(static_cast<std::uint64_t>(nchords) + (allow_t ? 2 : 0));
    if (r < static_cast<std::uint64_t>(nchords))
      w.push_back(Letter::chord(static_cast<int>(r) + 1));
    else
      w.push_back(Letter::tpow(r == static_cast<std::uint64_t>(nchords) ? 1 : -1));
  }
  return normalize(w);
}

inline Rat random_coef(SplitMix64& rng) {
  static const int vals[] = {-3, -2, -1, 1, 2, 3};
  Rat c(vals[rng.below(6)]);
  if (rng.below(3) == 0) c /= static_cast<int>(rng.below(3)) + 2;
  return c;
}

inline Elem random_elem(SplitMix64& rng, const Grading& gr, int nterms, int maxlen) {
  Elem e;
  for (int i = 0; i < nterms; ++i) {
    if (rng.below(2))
      e.add_word(random_word(rng, gr.nchords(), maxlen), random_coef(rng));
    else
      e.add_hbar(random_word(rng, gr.nchords(), maxlen),
                 random_word(rng, gr.nchords(), maxlen), random_coef(rng), gr);
  }
  return e;
}

inline Tensor random_tensor(SplitMix64& rng, const Grading& gr, int nterms, int maxlen) {
  Tensor t;
  for (int i = 0; i < nterms; ++i)
    t.add(random_word(rng, gr.nchords(), maxlen), random_word(rng, gr.nchords(), maxlen),
          random_coef(rng));
  return t;
}

}  // namespace lsft::testutil
