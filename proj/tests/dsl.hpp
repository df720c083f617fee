#pragma once

// Tiny parser for the canonical rendering ("q3.q4.t^-1", "h(q1 | 1)",
// "q2 (x) q1", rational coefficients). Used to transcribe fixtures; the
// round-trip with render() is itself under test.

#include "lsft/algebra.hpp"

#include <cctype>
#include <cstring>
#include <stdexcept>
#include <string>

namespace lsft::dsl {

struct Cursor {
  const std::string& s;
  std::size_t p = 0;

  void ws() {
    while (p < s.size() && s[p] == ' ') ++p;
  }
  bool eof() {
    ws();
    return p >= s.size();
  }
  char peek() {
    ws();
    return p < s.size() ? s[p] : '\0';
  }
  bool eat(char c) {
    ws();
    if (p < s.size() && s[p] == c) {
      ++p;
      return true;
    }
    return false;
  }
  bool eat(const char* lit) {
    ws();
    const std::size_t n = std::strlen(lit);
    if (s.compare(p, n, lit) == 0) {
      p += n;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("parse error at " + std::to_string(p) + " in '" + s +
                             "': " + msg);
  }
};

inline long parse_int(Cursor& c) {
  c.ws();
  const bool neg = c.eat('-');
  c.ws();
  if (c.p >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.p])))
    c.fail("digit expected");
  long v = 0;
  while (c.p < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.p]))) {
    v = v * 10 + (c.s[c.p] - '0');
    ++c.p;
  }
  return neg ? -v : v;
}

inline Rat parse_rat(Cursor& c) {
  const long num = parse_int(c);
  if (c.p < c.s.size() && c.s[c.p] == '/') {
    ++c.p;
    const long den = parse_int(c);
    return Rat(num) / den;
  }
  return Rat(num);
}

inline Word parse_word_body(Cursor& c) {
  Word w;
  for (;;) {
    c.ws();
    if (c.eat('q')) {
      w.push_back(Letter::chord(static_cast<int>(parse_int(c))));
    } else if (c.eat('t')) {
      if (!c.eat('^')) c.fail("^ expected after t");
      w.push_back(Letter::tpow(static_cast<int>(parse_int(c))));
    } else if (c.eat('1')) {
      // empty-word atom
    } else {
      c.fail("atom expected");
    }
    if (!c.eat('.')) break;
  }
  return normalize(w);
}

inline Word parse_word(const std::string& s) {
  Cursor c{s};
  Word w = parse_word_body(c);
  if (!c.eof()) c.fail("trailing input");
  return w;
}

// Parses a signed sum of terms; `add(cursor, coefficient)` consumes one body,
// `add_const(coefficient)` records a bare-number term.
template <class Add, class AddConst>
void parse_sum(Cursor& c, Add&& add, AddConst&& add_const) {
  c.ws();
  if (c.p < c.s.size() && c.s[c.p] == '0') {
    ++c.p;
    if (!c.eof()) c.fail("junk after 0");
    return;
  }
  int sign = 1;
  if (c.eat('-'))
    sign = -1;
  else
    c.eat('+');
  for (;;) {
    Rat coef(sign);
    bool constant = false;
    c.ws();
    if (c.p < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.p]))) {
      const std::size_t save = c.p;
      const Rat r = parse_rat(c);
      const std::size_t after = c.p;
      if (c.eat('*')) {
        coef *= r;
      } else if (c.s[save] == '1' && after == save + 1) {
        c.p = save;  // bare "1": the empty-word atom
      } else {
        c.p = after;
        coef *= r;  // bare number: constant term
        constant = true;
      }
    }
    if (constant)
      add_const(coef);
    else
      add(c, coef);
    if (c.eof()) break;
    if (c.eat('-'))
      sign = -1;
    else if (c.eat('+'))
      sign = 1;
    else
      c.fail("+ or - expected");
  }
}

inline Elem parse_elem(const std::string& s, const Grading& gr) {
  Elem e;
  Cursor c{s};
  parse_sum(
      c,
      [&](Cursor& cc, const Rat& coef) {
        if (cc.eat('h')) {
          if (!cc.eat('(')) cc.fail("( expected after h");
          const Word a = parse_word_body(cc);
          if (!cc.eat('|')) cc.fail("| expected");
          const Word b = parse_word_body(cc);
          if (!cc.eat(')')) cc.fail(") expected");
          e.add_hbar(a, b, coef, gr);
        } else {
          e.add_word(parse_word_body(cc), coef);
        }
      },
      [&](const Rat& coef) { e.add_word(Word{}, coef); });
  return e;
}

inline Tensor parse_tensor(const std::string& s) {
  Tensor t;
  Cursor c{s};
  parse_sum(
      c,
      [&](Cursor& cc, const Rat& coef) {
        const Word a = parse_word_body(cc);
        if (!cc.eat("(x)")) cc.fail("(x) expected");
        const Word b = parse_word_body(cc);
        t.add(a, b, coef);
      },
      [&](const Rat&) {
        Cursor& cc = c;
        cc.fail("tensor term without (x)");
      });
  return t;
}

}  // namespace lsft::dsl
