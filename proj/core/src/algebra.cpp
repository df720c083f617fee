#include "lsft/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace lsft {

Word normalize(Word w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!l.is_t()) {
      out.push_back(l);
      continue;
    }
    if (l.t == 0) continue;
    if (!out.empty() && out.back().is_t()) {
      out.back().t += l.t;
      if (out.back().t == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return normalize(std::move(w));
}

Word gen_word(GenId g) {
  if (g == kTPlus) return {Letter::tpow(1)};
  if (g == kTMinus) return {Letter::tpow(-1)};
  return {Letter::chord(g)};
}

int degree(const Word& w, const Grading& gr) {
  int d = 0;
  for (const Letter& l : w) d += gr.deg(l);
  return d;
}

std::vector<Letter> unit_letters(const Word& w) {
  std::vector<Letter> u;
  for (const Letter& l : w) {
    if (!l.is_t()) {
      u.push_back(l);
    } else {
      const int step = l.t > 0 ? 1 : -1;
      for (int i = 0; i != l.t; i += step) u.push_back(Letter::tpow(step));
    }
  }
  return u;
}

GenId letter_gen(const Letter& l) {
  if (!l.is_t()) return l.q;
  return l.t > 0 ? kTPlus : kTMinus;
}

CyclicCanon cyclic_canonical(const Word& w, const Grading& gr) {
  std::vector<Letter> units = unit_letters(w);
  const std::size_t n = units.size();
  if (n == 0) return CyclicCanon{Word{}, 1, false};
  const int total = degree(w, gr);

  // Rotate one unit letter at a time, front to back; each step carries the
  // Koszul sign (-1)^{|x|(|w|-|x|)}. A word reached with both signs is the
  // zero cyclic class (bad word). The representative is the cyclically
  // reduced candidate (fewest unit letters; base-point pairs can cancel
  // across the seam), ties broken lexicographically.
  std::map<Word, int> seen;
  Word best;
  std::size_t best_units = 0;
  int best_sign = 0;
  int sign = 1;
  std::vector<Letter> cur = units;
  for (std::size_t r = 0; r < n; ++r) {
    Word cand = normalize(Word(cur.begin(), cur.end()));
    auto [it, inserted] = seen.emplace(cand, sign);
    if (!inserted && it->second != sign) return CyclicCanon{Word{}, 1, true};
    const std::size_t cand_units = unit_letters(cand).size();
    if (best_sign == 0 || cand_units < best_units ||
        (cand_units == best_units && cand < best)) {
      best = cand;
      best_units = cand_units;
      best_sign = sign;
    }
    // Advance: move cur.front() to the back.
    const Letter x = cur.front();
    const int dx = gr.deg(x);
    if ((dx & 1) && ((total - dx) & 1)) sign = -sign;
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
  }
  return CyclicCanon{best, best_sign, false};
}

void Tensor::add(const Word& a, const Word& b, const Rat& c) {
  if (c == 0) return;
  auto key = std::make_pair(a, b);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Tensor& Tensor::operator+=(const Tensor& o) {
  for (const auto& [k, c] : o.terms) add(k.first, k.second, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  for (const auto& [k, c] : o.terms) add(k.first, k.second, -c);
  return *this;
}

Tensor Tensor::operator-() const {
  Tensor t;
  for (const auto& [k, c] : terms) t.terms.emplace(k, -c);
  return t;
}

Tensor Tensor::operator*(const Rat& c) const {
  Tensor t;
  if (c == 0) return t;
  for (const auto& [k, v] : terms) t.terms.emplace(k, v * c);
  return t;
}

Tensor tensor_of(const Word& a, const Word& b, const Rat& c) {
  Tensor t;
  t.add(a, b, c);
  return t;
}

Tensor tmul(const Tensor& a, const Tensor& b, const Grading& gr) {
  Tensor out;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      const int s = (degree(ka.first, gr) & 1) && (degree(kb.second, gr) & 1) ? -1 : 1;
      out.add(concat(ka.first, kb.first), concat(ka.second, kb.second), ca * cb * s);
    }
  return out;
}

Tensor lmul_first(const Word& x, const Tensor& t, const Grading& gr) {
  Tensor out;
  const int dx = degree(x, gr);
  for (const auto& [k, c] : t.terms) {
    const int s = (dx & 1) && (degree(k.second, gr) & 1) ? -1 : 1;
    out.add(concat(x, k.first), k.second, c * s);
  }
  return out;
}

Tensor lmul_second(const Word& x, const Tensor& t, const Grading& gr) {
  (void)gr;
  Tensor out;
  for (const auto& [k, c] : t.terms) out.add(k.first, concat(x, k.second), c);
  return out;
}

Tensor rmul_first(const Tensor& t, const Word& x, const Grading& gr) {
  (void)gr;
  Tensor out;
  for (const auto& [k, c] : t.terms) out.add(concat(k.first, x), k.second, c);
  return out;
}

Tensor rmul_second(const Tensor& t, const Word& x, const Grading& gr) {
  Tensor out;
  const int dx = degree(x, gr);
  for (const auto& [k, c] : t.terms) {
    const int s = (degree(k.first, gr) & 1) && (dx & 1) ? -1 : 1;
    out.add(k.first, concat(k.second, x), c * s);
  }
  return out;
}

void Elem::add_word(const Word& w, const Rat& c) {
  if (c == 0) return;
  auto it = lin.find(w);
  if (it == lin.end()) {
    lin.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) lin.erase(it);
  }
}

void Elem::add_hbar(const Word& a, const Word& b, const Rat& c, const Grading& gr) {
  if (c == 0) return;
  const CyclicCanon cc = cyclic_canonical(b, gr);
  if (cc.zero) return;
  auto key = std::make_pair(a, cc.rep);
  const Rat v = c * cc.sign;
  auto it = hb.find(key);
  if (it == hb.end()) {
    hb.emplace(std::move(key), v);
  } else {
    it->second += v;
    if (it->second == 0) hb.erase(it);
  }
}

Elem& Elem::operator+=(const Elem& o) {
  for (const auto& [w, c] : o.lin) add_word(w, c);
  for (const auto& [k, c] : o.hb) {
    auto it = hb.find(k);
    if (it == hb.end()) {
      hb.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == 0) hb.erase(it);
    }
  }
  return *this;
}

Elem& Elem::operator-=(const Elem& o) { return *this += -o; }

Elem Elem::operator-() const {
  Elem e;
  for (const auto& [w, c] : lin) e.lin.emplace(w, -c);
  for (const auto& [k, c] : hb) e.hb.emplace(k, -c);
  return e;
}

Elem Elem::operator*(const Rat& c) const {
  Elem e;
  if (c == 0) return e;
  for (const auto& [w, v] : lin) e.lin.emplace(w, v * c);
  for (const auto& [k, v] : hb) e.hb.emplace(k, v * c);
  return e;
}

Elem elem_one() {
  Elem e;
  e.add_word(Word{}, Rat(1));
  return e;
}

Elem elem_word(const Word& w, const Rat& c) {
  Elem e;
  e.add_word(w, c);
  return e;
}

Elem elem_gen(GenId g) { return elem_word(gen_word(g)); }

Elem mul(const Elem& a, const Elem& b, const Grading& gr) {
  Elem out;
  for (const auto& [wa, ca] : a.lin)
    for (const auto& [wb, cb] : b.lin) out.add_word(concat(wa, wb), ca * cb);
  // w · ħ(v1⊗v2) = (-1)^{|w|(|v2|+1)} ħ(w v1 ⊗ v2)
  for (const auto& [wa, ca] : a.lin)
    for (const auto& [kb, cb] : b.hb) {
      const int s =
          (degree(wa, gr) & 1) && ((degree(kb.second, gr) + 1) & 1) ? -1 : 1;
      Elem t;
      // kb.second is already canonical; keep it as-is.
      const Word first = concat(wa, kb.first);
      auto key = std::make_pair(first, kb.second);
      auto it = out.hb.find(key);
      const Rat v = ca * cb * s;
      if (it == out.hb.end()) {
        if (v != 0) out.hb.emplace(std::move(key), v);
      } else {
        it->second += v;
        if (it->second == 0) out.hb.erase(it);
      }
    }
  // ħ(v1⊗v2) · w = ħ(v1 w ⊗ v2); ħ·ħ = 0.
  for (const auto& [ka, ca] : a.hb)
    for (const auto& [wb, cb] : b.lin) {
      const Word first = concat(ka.first, wb);
      auto key = std::make_pair(first, ka.second);
      auto it = out.hb.find(key);
      const Rat v = ca * cb;
      if (it == out.hb.end()) {
        if (v != 0) out.hb.emplace(std::move(key), v);
      } else {
        it->second += v;
        if (it->second == 0) out.hb.erase(it);
      }
    }
  return out;
}

Elem hbar_cyc(const Tensor& t, const Grading& gr) {
  Elem e;
  for (const auto& [k, c] : t.terms) e.add_hbar(k.first, k.second, c, gr);
  return e;
}

Elem proj_lin(const Elem& x) {
  Elem e;
  e.lin = x.lin;
  return e;
}

Rat word_action(const Word& w, const std::vector<Rat>& lengths) {
  Rat a = 0;
  for (const Letter& l : w)
    if (!l.is_t()) a += lengths.at(static_cast<std::size_t>(l.q) - 1);
  return a;
}

std::optional<Rat> action(const Elem& x, const std::vector<Rat>& lengths) {
  std::optional<Rat> best;
  auto consider = [&](const Rat& v) {
    if (!best || v > *best) best = v;
  };
  for (const auto& [w, c] : x.lin) consider(word_action(w, lengths));
  for (const auto& [k, c] : x.hb)
    consider(word_action(k.first, lengths) + word_action(k.second, lengths));
  return best;
}

std::optional<int> homogeneous_degree(const Elem& x, const Grading& gr) {
  std::optional<int> d;
  auto consider = [&](int v) -> bool {
    if (d && *d != v) return false;
    d = v;
    return true;
  };
  for (const auto& [w, c] : x.lin)
    if (!consider(degree(w, gr))) return std::nullopt;
  for (const auto& [k, c] : x.hb)
    if (!consider(degree(k.first, gr) + degree(k.second, gr) - 1)) return std::nullopt;
  return d;
}

std::optional<int> homogeneous_degree(const Tensor& t, const Grading& gr) {
  std::optional<int> d;
  for (const auto& [k, c] : t.terms) {
    const int v = degree(k.first, gr) + degree(k.second, gr);
    if (d && *d != v) return std::nullopt;
    d = v;
  }
  return d;
}

std::string render(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const Letter& l : w) {
    if (!s.empty()) s += '.';
    if (l.is_t()) {
      s += "t^" + std::to_string(l.t);
    } else {
      s += "q" + std::to_string(l.q);
    }
  }
  return s;
}

namespace {

void append_term(std::string& out, const Rat& c, const std::string& body) {
  const bool neg = c < 0;
  const Rat a = neg ? Rat(-c) : c;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (a != 1) {
    out += to_string(a);
    out += "*";
  }
  out += body;
}

}  // namespace

std::string render(const Elem& x) {
  std::string out;
  for (const auto& [w, c] : x.lin) append_term(out, c, render(w));
  for (const auto& [k, c] : x.hb)
    append_term(out, c, "h(" + render(k.first) + " | " + render(k.second) + ")");
  if (out.empty()) return "0";
  return out;
}

std::string render(const Tensor& t) {
  std::string out;
  for (const auto& [k, c] : t.terms)
    append_term(out, c, render(k.first) + " (x) " + render(k.second));
  if (out.empty()) return "0";
  return out;
}

}  // namespace lsft
