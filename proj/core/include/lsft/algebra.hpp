#pragma once

#include "lsft/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lsft {

// Generator ids: chords are 1..n, the base-point letters are sentinels.
using GenId = int;
inline constexpr GenId kTPlus = -1;
inline constexpr GenId kTMinus = -2;

// One letter of a word: a chord q_i (q > 0, t == 0) or a base-point power
// t^k (q == 0, t = k != 0).
struct Letter {
  std::int32_t q = 0;
  std::int32_t t = 0;
  static Letter chord(int i) { return Letter{static_cast<std::int32_t>(i), 0}; }
  static Letter tpow(int k) { return Letter{0, static_cast<std::int32_t>(k)}; }
  bool is_t() const { return q == 0; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A word of the free algebra, normal form: adjacent t-powers merged via
// t^+ t^- = 1, zero powers removed.
using Word = std::vector<Letter>;

// Grading context: chord degrees (1-based) and the rotation number; the
// degree of t^k is -2*rot*k.
struct Grading {
  std::vector<int> qdeg;
  int rot = 0;

  int deg(const Letter& l) const {
    return l.is_t() ? -2 * rot * l.t : qdeg.at(static_cast<std::size_t>(l.q) - 1);
  }
  int deg_gen(GenId g) const {
    if (g == kTPlus) return -2 * rot;
    if (g == kTMinus) return 2 * rot;
    return qdeg.at(static_cast<std::size_t>(g) - 1);
  }
  int nchords() const { return static_cast<int>(qdeg.size()); }
};

Word normalize(Word w);
Word concat(const Word& a, const Word& b);
Word gen_word(GenId g);
int degree(const Word& w, const Grading& gr);

// Unit-letter expansion: t^k becomes |k| copies of t^{±1}.
std::vector<Letter> unit_letters(const Word& w);
// The generator id of a unit letter (chord or t^{±1}).
GenId letter_gen(const Letter& l);

// Canonical cyclic form: [w] = sign * [rep], or the zero class (bad word:
// some rotation returns the word with a Koszul sign of -1).
struct CyclicCanon {
  Word rep;
  int sign = 1;
  bool zero = false;
};
CyclicCanon cyclic_canonical(const Word& w, const Grading& gr);

// Element of Ã ⊗ Ã (both factors straight words).
struct Tensor {
  std::map<std::pair<Word, Word>, Rat> terms;

  void add(const Word& a, const Word& b, const Rat& c);
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor operator-() const;
  Tensor operator*(const Rat& c) const;
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const Tensor&, const Tensor&) = default;
};

Tensor tensor_of(const Word& a, const Word& b, const Rat& c = Rat(1));

// Product on Ã⊗Ã: (v1⊗v2)(w1⊗w2) = (-1)^{|v1||w2|} v1w1 ⊗ v2w2.
Tensor tmul(const Tensor& a, const Tensor& b, const Grading& gr);

// Bimodule actions on Ã⊗Ã by a word x:
//   (x⊗1).(w1⊗w2) = (-1)^{|x||w2|} xw1 ⊗ w2      lmul_first
//   (1⊗x).(w1⊗w2) = w1 ⊗ xw2                      lmul_second
//   (w1⊗w2).(x⊗1) = w1x ⊗ w2                      rmul_first
//   (w1⊗w2).(1⊗x) = (-1)^{|w1||x|} w1 ⊗ w2x      rmul_second
Tensor lmul_first(const Word& x, const Tensor& t, const Grading& gr);
Tensor lmul_second(const Word& x, const Tensor& t, const Grading& gr);
Tensor rmul_first(const Tensor& t, const Word& x, const Grading& gr);
Tensor rmul_second(const Tensor& t, const Word& x, const Grading& gr);

// Element of A = Ã ⊕ ħ(Ã ⊗ Ã^cyc). Keys of hb have a cyclically canonical
// second factor; zero coefficients are pruned on insertion.
struct Elem {
  std::map<Word, Rat> lin;
  std::map<std::pair<Word, Word>, Rat> hb;

  void add_word(const Word& w, const Rat& c);
  // Adds c * ħ(a ⊗ b), canonicalizing b (signs, bad words).
  void add_hbar(const Word& a, const Word& b, const Rat& c, const Grading& gr);
  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem operator-() const;
  Elem operator*(const Rat& c) const;
  bool is_zero() const { return lin.empty() && hb.empty(); }
  friend bool operator==(const Elem&, const Elem&) = default;
};

Elem elem_one();
Elem elem_word(const Word& w, const Rat& c = Rat(1));
Elem elem_gen(GenId g);

Elem mul(const Elem& a, const Elem& b, const Grading& gr);

// ħ π_cyc : Ã⊗Ã -> A (wraps a tensor as an ħ-pair, canonicalizing the
// second factor).
Elem hbar_cyc(const Tensor& t, const Grading& gr);

// π_Ã: the word part.
Elem proj_lin(const Elem& x);

// Action (length) filtration: max over summands of the total chord length;
// t-letters contribute zero. Returns nullopt for the zero element.
std::optional<Rat> action(const Elem& x, const std::vector<Rat>& lengths);
Rat word_action(const Word& w, const std::vector<Rat>& lengths);

// Degree of a homogeneous element (ħ-pairs count |w1|+|w2|-1), or nullopt if
// mixed/zero.
std::optional<int> homogeneous_degree(const Elem& x, const Grading& gr);
std::optional<int> homogeneous_degree(const Tensor& t, const Grading& gr);

// Deterministic canonical rendering: words as `q3.q4.t^-1` (empty word `1`),
// ħ-pairs as `h(q3.q4 | q2)`, tensors as `q4 (x) q3`, coefficients as `p/q`.
std::string render(const Word& w);
std::string render(const Elem& x);
std::string render(const Tensor& t);

}  // namespace lsft
