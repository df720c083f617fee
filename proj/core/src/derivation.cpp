#include "lsft/derivation.hpp"

#include <stdexcept>

namespace lsft {

namespace {

int deg2(const Grading& gr, const Letter& l) { return gr.deg(l) & 1; }

Word word_of(const std::vector<Letter>& u, std::size_t b, std::size_t e) {
  return normalize(Word(u.begin() + static_cast<std::ptrdiff_t>(b),
                        u.begin() + static_cast<std::ptrdiff_t>(e)));
}

}  // namespace

Elem DerivationData::d_gen(GenId g) const {
  auto it = value.find(g);
  return it == value.end() ? Elem{} : it->second;
}

Tensor DerivationData::bracket_gen(GenId a, GenId b) const {
  auto it = bracket.find({a, b});
  return it == bracket.end() ? Tensor{} : it->second;
}

std::vector<GenId> DerivationData::generators() const {
  std::vector<GenId> g;
  for (int i = 1; i <= gr.nchords(); ++i) g.push_back(i);
  g.push_back(kTPlus);
  g.push_back(kTMinus);
  return g;
}

Tensor standard_t_bracket(GenId a, GenId b) {
  const Word wa = gen_word(a);
  const Word wb = gen_word(b);
  const Word one{};
  Tensor t;
  if (b == kTPlus) {
    t.add(wb, wa, 1);
    t.add(concat(wa, wb), one, -1);
  } else if (b == kTMinus) {
    t.add(wa, wb, 1);
    t.add(one, concat(wb, wa), -1);
  } else if (a == kTPlus) {
    t.add(concat(wa, wb), one, -1);
    t.add(wa, wb, 1);
  } else if (a == kTMinus) {
    t.add(one, concat(wb, wa), -1);
    t.add(wb, wa, 1);
  }
  return t;
}

void fill_standard_t_rows(DerivationData& d) {
  for (GenId g : d.generators())
    for (GenId t : {kTPlus, kTMinus}) {
      d.bracket[{g, t}] = standard_t_bracket(g, t);
      d.bracket[{t, g}] = standard_t_bracket(t, g);
    }
}

Elem d0_word(const DerivationData& d, const Word& w) {
  const std::vector<Letter> u = unit_letters(w);
  Elem out;
  int pre = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Elem dv = d.d_gen(letter_gen(u[i]));
    if (!dv.lin.empty()) {
      const Word prefix = word_of(u, 0, i);
      const Word suffix = word_of(u, i + 1, u.size());
      for (const auto& [wv, cv] : dv.lin)
        out.add_word(concat(concat(prefix, wv), suffix), (pre & 1) ? -cv : cv);
    }
    pre += deg2(d.gr, u[i]);
  }
  return out;
}

Elem apply_d0(const DerivationData& d, const Elem& x) {
  Elem out;
  for (const auto& [w, c] : x.lin) out += d0_word(d, w) * c;
  return out;
}

Elem d_word(const DerivationData& d, const Word& w) {
  const std::vector<Letter> u = unit_letters(w);
  const std::size_t k = u.size();
  Elem out;

  // Leibniz part: Σ_i (-1)^{|s_1..s_{i-1}|} s_1..s_{i-1} d(s_i) s_{i+1}..s_k.
  int pre = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const Elem dv = d.d_gen(letter_gen(u[i]));
    if (!dv.is_zero()) {
      Elem term = mul(elem_word(word_of(u, 0, i)), dv, d.gr);
      term = mul(term, elem_word(word_of(u, i + 1, k)), d.gr);
      if (pre & 1) term = -term;
      out += term;
    }
    pre += deg2(d.gr, u[i]);
  }

  // ħ-pair part over letter pairs i<j. Unrolling the product rule gives
  // Σ_j ħπ{s_1..s_{j-1}, s_j} · s_{j+1}..s_k, and expanding the bracket over
  // the first argument's letters gives, for a stored term c·(A⊗B) of
  // {s_i,s_j} with M = |s_{i+1}..s_{j-1}| and P_i = |s_1..s_{i-1}|,
  //   (-1)^{M|s_j| + P_i|B| + (P_i+|A|)M} ħ( s_<i A s_>j ⊗ B s_(i..j) ),
  // the last two exponents being the Koszul signs of the left/right module
  // actions on the two tensor slots.
  std::vector<int> P(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) P[i + 1] = (P[i] + deg2(d.gr, u[i])) & 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Tensor R = d.bracket_gen(letter_gen(u[i]), letter_gen(u[j]));
      if (R.is_zero()) continue;
      const Word prefix = word_of(u, 0, i);
      const Word suffix = word_of(u, j + 1, k);
      const Word mid = word_of(u, i + 1, j);
      const int dj = deg2(d.gr, u[j]);
      const int dmid = (P[j] + P[i + 1]) & 1;
      for (const auto& [key, c] : R.terms) {
        const int a1 = degree(key.first, d.gr) & 1;
        const int b1 = degree(key.second, d.gr) & 1;
        int par = dmid & dj;
        par ^= P[i] & b1;
        par ^= (P[i] ^ a1) & dmid;
        const Word first = concat(concat(prefix, key.first), suffix);
        const Word second = concat(key.second, mid);
        out.add_hbar(first, second, par ? -c : c, d.gr);
      }
    }
  return out;
}

Elem apply_d(const DerivationData& d, const Elem& x) {
  Elem out;
  for (const auto& [w, c] : x.lin) out += d_word(d, w) * c;
  for (const auto& [key, c] : x.hb) {
    // d ħ(w1⊗w2) = (-1)^{|w2|+1} ħ(d0 w1 ⊗ w2) - ħ(w1 ⊗ d0 w2).
    const int s = (degree(key.second, d.gr) + 1) & 1;
    const Elem d1 = d0_word(d, key.first);
    for (const auto& [v, cv] : d1.lin)
      out.add_hbar(v, key.second, s ? Rat(-c * cv) : Rat(c * cv), d.gr);
    const Elem d2 = d0_word(d, key.second);
    for (const auto& [v, cv] : d2.lin) out.add_hbar(key.first, v, -c * cv, d.gr);
  }
  return out;
}

Tensor bracket_words(const DerivationData& d, const Word& v, const Word& w) {
  const std::vector<Letter> uv = unit_letters(v);
  const std::vector<Letter> uw = unit_letters(w);
  const std::size_t l = uv.size();
  const std::size_t m = uw.size();
  Tensor out;
  if (l == 0 || m == 0) return out;
  std::vector<int> Pv(l + 1, 0), Pw(m + 1, 0);
  for (std::size_t i = 0; i < l; ++i) Pv[i + 1] = (Pv[i] + deg2(d.gr, uv[i])) & 1;
  for (std::size_t j = 0; j < m; ++j) Pw[j + 1] = (Pw[j] + deg2(d.gr, uw[j])) & 1;
  const int Dv = Pv[l];

  // Expanding over the second argument's letters and then the first's gives,
  // for a stored term c·(A⊗B) of {v_i,w_j} with V = |v_{i+1..l}| and
  // W = |w_{1..j-1}|,
  //   (-1)^{|v|W + V|w_j| + |v_{<i}||B| + (|v_{<i}|+|A|)V}
  //     · ( v_<i A w_>j ⊗ w_<j B v_>i ),
  // the last two exponents being the module-action Koszul signs.
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Tensor R = d.bracket_gen(letter_gen(uv[i]), letter_gen(uw[j]));
      if (R.is_zero()) continue;
      const int V = (Pv[l] + Pv[i + 1]) & 1;
      const int W = Pw[j];
      const Word vpre = word_of(uv, 0, i);
      const Word vpost = word_of(uv, i + 1, l);
      const Word wpre = word_of(uw, 0, j);
      const Word wpost = word_of(uw, j + 1, m);
      const int dwj = deg2(d.gr, uw[j]);
      for (const auto& [key, c] : R.terms) {
        const int a1 = degree(key.first, d.gr) & 1;
        const int b1 = degree(key.second, d.gr) & 1;
        int par = Dv & W;
        par ^= V & dwj;
        par ^= Pv[i] & b1;
        par ^= (Pv[i] ^ a1) & V;
        out.add(concat(concat(vpre, key.first), wpost),
                concat(concat(wpre, key.second), vpost), par ? -c : c);
      }
    }
  return out;
}

Tensor bracket_elems(const DerivationData& d, const Elem& x, const Elem& y) {
  Tensor out;
  for (const auto& [wx, cx] : x.lin)
    for (const auto& [wy, cy] : y.lin) out += bracket_words(d, wx, wy) * (cx * cy);
  return out;
}

Tensor bracket_rec(const DerivationData& d, const Word& v, const Word& w) {
  const std::vector<Letter> uv = unit_letters(v);
  const std::vector<Letter> uw = unit_letters(w);
  if (uv.empty() || uw.empty()) return Tensor{};
  if (uv.size() == 1 && uw.size() == 1)
    return d.bracket_gen(letter_gen(uv[0]), letter_gen(uw[0]));
  if (uv.size() > 1) {
    // {s v', w} = (s⊗1)·{v',w} + (-1)^{|v'||w|} {s,w}·(1⊗v').
    const Word head{uv[0]};
    const Word tail = word_of(uv, 1, uv.size());
    Tensor t1 = lmul_first(head, bracket_rec(d, tail, w), d.gr);
    Tensor t2 = rmul_second(bracket_rec(d, head, w), tail, d.gr);
    if ((degree(tail, d.gr) & 1) && (degree(w, d.gr) & 1)) t2 = -t2;
    t1 += t2;
    return t1;
  }
  // {v, u w'} = {v,u}·(w'⊗1) + (-1)^{|v||u|} (1⊗u)·{v,w'}.
  const Word head{uw[0]};
  const Word tail = word_of(uw, 1, uw.size());
  Tensor t1 = rmul_first(bracket_rec(d, v, head), tail, d.gr);
  Tensor t2 = lmul_second(head, bracket_rec(d, v, tail), d.gr);
  if ((degree(v, d.gr) & 1) && (degree(head, d.gr) & 1)) t2 = -t2;
  t1 += t2;
  return t1;
}

Elem d_rec(const DerivationData& d, const Word& w) {
  const std::vector<Letter> u = unit_letters(w);
  if (u.empty()) return Elem{};
  if (u.size() == 1) return d.d_gen(letter_gen(u[0]));
  const Word head{u[0]};
  const Word tail = word_of(u, 1, u.size());
  Elem out = mul(d.d_gen(letter_gen(u[0])), elem_word(tail), d.gr);
  Elem rest = mul(elem_word(head), d_rec(d, tail), d.gr);
  if (deg2(d.gr, u[0])) rest = -rest;
  out += rest;
  out += hbar_cyc(bracket_rec(d, head, tail), d.gr);
  return out;
}

Elem d_squared_defect(const DerivationData& d, GenId g) {
  return apply_d(d, d.d_gen(g));
}

Tensor apply_d0_tensor(const DerivationData& d, const Tensor& t) {
  Tensor out;
  for (const auto& [key, c] : t.terms) {
    const int s = degree(key.second, d.gr) & 1;
    const Elem dA = d0_word(d, key.first);
    for (const auto& [v, cv] : dA.lin)
      out.add(v, key.second, s ? Rat(-c * cv) : Rat(c * cv));
    const Elem dB = d0_word(d, key.second);
    for (const auto& [v, cv] : dB.lin) out.add(key.first, v, c * cv);
  }
  return out;
}

Tensor strong_derivation_defect(const DerivationData& d, GenId a, GenId b) {
  Tensor lhs = apply_d0_tensor(d, d.bracket_gen(a, b));
  lhs -= bracket_elems(d, proj_lin(d.d_gen(a)), elem_gen(b));
  Tensor t2 = bracket_elems(d, elem_gen(a), proj_lin(d.d_gen(b)));
  if (d.gr.deg_gen(a) & 1) t2 = -t2;
  lhs -= t2;
  return lhs;
}

// --- morphisms ---

Elem MorphismData::f_gen(GenId g) const {
  auto it = value.find(g);
  return it == value.end() ? elem_gen(g) : it->second;
}

Tensor MorphismData::bracket_gen(GenId a, GenId b) const {
  auto it = bracket.find({a, b});
  return it == bracket.end() ? Tensor{} : it->second;
}

std::vector<GenId> MorphismData::generators() const {
  std::vector<GenId> g;
  for (int i = 1; i <= src.nchords(); ++i) g.push_back(i);
  g.push_back(kTPlus);
  g.push_back(kTMinus);
  return g;
}

MorphismData identity_morphism(const Grading& gr) {
  MorphismData f;
  f.src = gr;
  f.dst = gr;
  return f;
}

Elem f0_word(const MorphismData& f, const Word& w) {
  Elem out = elem_one();
  for (const Letter& l : unit_letters(w))
    out = mul(out, proj_lin(f.f_gen(letter_gen(l))), f.dst);
  return out;
}

Elem apply_f0(const MorphismData& f, const Elem& x) {
  Elem out;
  for (const auto& [w, c] : x.lin) out += f0_word(f, w) * c;
  return out;
}

Elem f_word(const MorphismData& f, const Word& w) {
  const std::vector<Letter> u = unit_letters(w);
  const std::size_t k = u.size();
  Elem out = elem_one();
  for (const Letter& l : u) out = mul(out, f.f_gen(letter_gen(l)), f.dst);

  // ħ corrections: unrolling the glue f(uv) = f(u)f(v) + ħπ{u,v}_f and
  // expanding the bracket over the first argument's letters gives, for a
  // stored term c·(A⊗B) of {s_i,s_j}_f with M = |s_{i+1}..s_{j-1}| and
  // P_i = |s_1..s_{i-1}| in the source,
  //   (-1)^{P_i + M|s_j| + |wp||B| + (|wp|+|A|)|wm|}
  //     ħ( wp·A·ws ⊗ B·wm )
  // summed over lin words wp of f0(s_<i), ws of f0(s_>j), wm of f0(s_(i..j));
  // the last two exponents are the module-action Koszul signs in the target.
  std::vector<int> P(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) P[i + 1] = (P[i] + deg2(f.src, u[i])) & 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Tensor U = f.bracket_gen(letter_gen(u[i]), letter_gen(u[j]));
      if (U.is_zero()) continue;
      const Elem fpre = f0_word(f, word_of(u, 0, i));
      const Elem fsuf = f0_word(f, word_of(u, j + 1, k));
      const Elem fmid = f0_word(f, word_of(u, i + 1, j));
      const int dj = deg2(f.src, u[j]);
      const int dmid = (P[j] + P[i + 1]) & 1;
      for (const auto& [key, c] : U.terms) {
        const int a1 = degree(key.first, f.dst) & 1;
        const int b1 = degree(key.second, f.dst) & 1;
        const int base = P[i] ^ (dmid & dj);
        for (const auto& [wp, cp] : fpre.lin) {
          const int dwp = degree(wp, f.dst) & 1;
          for (const auto& [wm, cm] : fmid.lin) {
            const int dwm = degree(wm, f.dst) & 1;
            const int par = base ^ (dwp & b1) ^ ((dwp ^ a1) & dwm);
            for (const auto& [ws, cs] : fsuf.lin)
              out.add_hbar(concat(concat(wp, key.first), ws),
                           concat(key.second, wm),
                           (par ? -c : c) * cp * cs * cm, f.dst);
          }
        }
      }
    }
  return out;
}

Elem apply_f(const MorphismData& f, const Elem& x) {
  Elem out;
  for (const auto& [w, c] : x.lin) out += f_word(f, w) * c;
  for (const auto& [key, c] : x.hb) {
    const Elem a = f0_word(f, key.first);
    const Elem b = f0_word(f, key.second);
    for (const auto& [wa, ca] : a.lin)
      for (const auto& [wb, cb] : b.lin) out.add_hbar(wa, wb, c * ca * cb, f.dst);
  }
  return out;
}

Tensor fbracket_words(const MorphismData& f, const Word& v, const Word& w) {
  const std::vector<Letter> uv = unit_letters(v);
  const std::vector<Letter> uw = unit_letters(w);
  if (uv.empty() || uw.empty()) return Tensor{};
  if (uv.size() == 1 && uw.size() == 1)
    return f.bracket_gen(letter_gen(uv[0]), letter_gen(uw[0]));
  if (uv.size() > 1) {
    // {s v', w}_f = (-1)^{|s|}(f0 s ⊗ 1)·{v',w}_f + (-1)^{|v'||w|}{s,w}_f·(1⊗f0 v').
    const Word head{uv[0]};
    const Word tail = word_of(uv, 1, uv.size());
    Tensor t1;
    {
      const Tensor rec = fbracket_words(f, tail, w);
      const Elem fs = f0_word(f, head);
      for (const auto& [wp, cp] : fs.lin) t1 += lmul_first(wp, rec, f.dst) * cp;
      if (deg2(f.src, uv[0])) t1 = -t1;
    }
    Tensor t2;
    {
      const Tensor rec = fbracket_words(f, head, w);
      const Elem ft = f0_word(f, tail);
      for (const auto& [wp, cp] : ft.lin) t2 += rmul_second(rec, wp, f.dst) * cp;
      if ((degree(tail, f.src) & 1) && (degree(w, f.src) & 1)) t2 = -t2;
    }
    t1 += t2;
    return t1;
  }
  // {v, u w'}_f = {v,u}_f·(f0 w' ⊗ 1) + (-1)^{|u|(|v|+1)}(1⊗f0 u)·{v,w'}_f.
  const Word head{uw[0]};
  const Word tail = word_of(uw, 1, uw.size());
  Tensor t1;
  {
    const Tensor rec = fbracket_words(f, v, head);
    const Elem fw = f0_word(f, tail);
    for (const auto& [wp, cp] : fw.lin) t1 += rmul_first(rec, wp, f.dst) * cp;
  }
  Tensor t2;
  {
    const Tensor rec = fbracket_words(f, v, tail);
    const Elem fu = f0_word(f, head);
    for (const auto& [wp, cp] : fu.lin) t2 += lmul_second(wp, rec, f.dst) * cp;
    if ((deg2(f.src, uw[0])) && ((degree(v, f.src) + 1) & 1)) t2 = -t2;
  }
  t1 += t2;
  return t1;
}

Tensor fbracket_elems(const MorphismData& f, const Elem& x, const Elem& y) {
  Tensor out;
  for (const auto& [wx, cx] : x.lin)
    for (const auto& [wy, cy] : y.lin) out += fbracket_words(f, wx, wy) * (cx * cy);
  return out;
}

Tensor apply_f0_tensor(const MorphismData& f, const Tensor& t) {
  Tensor out;
  for (const auto& [key, c] : t.terms) {
    const Elem a = f0_word(f, key.first);
    const Elem b = f0_word(f, key.second);
    for (const auto& [wa, ca] : a.lin)
      for (const auto& [wb, cb] : b.lin) out.add(wa, wb, c * ca * cb);
  }
  return out;
}

MorphismData compose(const MorphismData& g, const MorphismData& f) {
  MorphismData h;
  h.src = f.src;
  h.dst = g.dst;
  for (GenId q : f.generators()) {
    Elem val = apply_f(g, f.f_gen(q));
    if (!(val == elem_gen(q))) h.value[q] = val;
  }
  for (GenId a : f.generators())
    for (GenId b : f.generators()) {
      Tensor t = fbracket_elems(g, f0_word(f, gen_word(a)), f0_word(f, gen_word(b)));
      t += apply_f0_tensor(g, f.bracket_gen(a, b));
      if (!t.is_zero()) h.bracket[{a, b}] = t;
    }
  return h;
}

namespace {

bool is_identity(const MorphismData& f) {
  for (GenId q : f.generators())
    if (!(f.f_gen(q) == elem_gen(q))) return false;
  for (const auto& [k, t] : f.bracket)
    if (!t.is_zero()) return false;
  return true;
}

}  // namespace

MorphismData invert(const MorphismData& f, int max_iter) {
  if (f.src.qdeg != f.dst.qdeg || f.src.rot != f.dst.rot)
    throw std::invalid_argument("invert: endomorphism required");
  const Grading& gr = f.src;
  const std::vector<GenId> gens = f.generators();

  // First-order inverse g0, stored as a bracketless morphism.
  MorphismData g0;
  g0.src = gr;
  g0.dst = gr;

  bool monomial = true;
  for (GenId q : gens) {
    const Elem v = proj_lin(f.f_gen(q));
    if (v.lin.size() != 1) {
      monomial = false;
      break;
    }
    int chords = 0;
    for (const Letter& l : v.lin.begin()->first)
      if (!l.is_t()) ++chords;
    if (chords != ((q == kTPlus || q == kTMinus) ? 0 : 1)) {
      monomial = false;
      break;
    }
  }
  if (monomial) {
    // f0(q) = c · t^a q' t^b: invert as q' -> (1/c) t^{-a} q t^{-b}.
    for (GenId q : gens) {
      const Elem v = proj_lin(f.f_gen(q));
      const Word& w = v.lin.begin()->first;
      const Rat& c = v.lin.begin()->second;
      if (q == kTPlus || q == kTMinus) {
        if (w != gen_word(q)) throw std::runtime_error("invert: t-letter image not t");
        if (!(c == 1)) g0.value[q] = elem_word(w, Rat(1) / c);
        continue;
      }
      Word pre, post;
      GenId target = 0;
      bool before = true;
      for (const Letter& l : w) {
        if (!l.is_t()) {
          target = l.q;
          before = false;
        } else {
          (before ? pre : post).push_back(l);
        }
      }
      Word inv;
      for (auto it = pre.rbegin(); it != pre.rend(); ++it)
        inv.push_back(Letter::tpow(-it->t));
      Word invw = inv;
      invw.push_back(Letter::chord(q));
      for (auto it = post.rbegin(); it != post.rend(); ++it)
        invw.push_back(Letter::tpow(-it->t));
      g0.value[target] = elem_word(normalize(invw), Rat(1) / c);
    }
  } else {
    // Substitution fix-point: x_q <- q - (f0(x_q) - x_q).
    std::map<GenId, Elem> x;
    for (GenId q : gens) x[q] = elem_gen(q);
    for (int it = 0; it < max_iter; ++it) {
      bool stable = true;
      for (GenId q : gens) {
        Elem nx = elem_gen(q);
        nx -= apply_f0(f, x[q]);
        nx += x[q];
        if (!(nx == x[q])) stable = false;
        x[q] = std::move(nx);
      }
      if (stable) break;
    }
    for (GenId q : gens)
      if (!(x[q] == elem_gen(q))) g0.value[q] = x[q];
  }
  for (GenId q : gens)
    if (!(apply_f0(f, g0.f_gen(q)) == elem_gen(q)))
      throw std::runtime_error("invert: first-order part not invertible");

  MorphismData g;
  g.src = gr;
  g.dst = gr;
  // ħ-part: g(q) = g0(q) + (g0⊗g0)(q - f(g0(q))).
  for (GenId q : gens) {
    Elem r = elem_gen(q);
    r -= apply_f(f, g0.f_gen(q));
    if (!r.lin.empty()) throw std::runtime_error("invert: residual word part");
    Elem val = g0.f_gen(q);
    for (const auto& [key, c] : r.hb) {
      const Elem a = f0_word(g0, key.first);
      const Elem b = f0_word(g0, key.second);
      for (const auto& [wa, ca] : a.lin)
        for (const auto& [wb, cb] : b.lin) val.add_hbar(wa, wb, c * ca * cb, gr);
    }
    if (!(val == elem_gen(q))) g.value[q] = val;
  }
  // Bracket: {a,b}_{f⁻¹} = -(f0⁻¹⊗f0⁻¹){f0⁻¹a, f0⁻¹b}_f.
  for (GenId a : gens)
    for (GenId b : gens) {
      Tensor t = fbracket_elems(f, g0.f_gen(a), g0.f_gen(b));
      t = apply_f0_tensor(g0, t);
      if (!t.is_zero()) g.bracket[{a, b}] = -t;
    }

  if (!is_identity(compose(g, f)) || !is_identity(compose(f, g)))
    throw std::runtime_error("invert: verification failed");
  return g;
}

DerivationData conjugate(const DerivationData& d, const MorphismData& f) {
  const MorphismData g = invert(f);
  DerivationData out;
  out.gr = d.gr;
  for (GenId q : d.generators()) {
    Elem v = apply_f(g, apply_d(d, f.f_gen(q)));
    if (!v.is_zero()) out.value[q] = v;
  }
  for (GenId a : d.generators())
    for (GenId b : d.generators()) {
      const Elem f0a = f0_word(f, gen_word(a));
      const Elem f0b = f0_word(f, gen_word(b));
      Tensor t = apply_f0_tensor(g, apply_d0_tensor(d, f.bracket_gen(a, b)));
      t = -t;
      t += apply_f0_tensor(g, bracket_elems(d, f0a, f0b));
      t += fbracket_elems(g, apply_d0(d, f0a), f0b);
      Tensor t4 = fbracket_elems(g, f0a, apply_d0(d, f0b));
      if (d.gr.deg_gen(a) & 1) t4 = -t4;
      t += t4;
      if (!t.is_zero()) out.bracket[{a, b}] = t;
    }
  return out;
}

Elem morphism_chain_defect(const DerivationData& d, const DerivationData& dp,
                           const MorphismData& f, GenId g) {
  Elem out = apply_f(f, d.d_gen(g));
  out -= apply_d(dp, f.f_gen(g));
  return out;
}

Tensor morphism_bracket_defect(const DerivationData& d, const DerivationData& dp,
                               const MorphismData& f, GenId a, GenId b) {
  Tensor lhs = apply_f0_tensor(f, d.bracket_gen(a, b));
  lhs += fbracket_elems(f, proj_lin(d.d_gen(a)), elem_gen(b));
  Tensor t3 = fbracket_elems(f, elem_gen(a), proj_lin(d.d_gen(b)));
  if (d.gr.deg_gen(a) & 1) t3 = -t3;
  lhs += t3;
  lhs -= bracket_elems(dp, f0_word(f, gen_word(a)), f0_word(f, gen_word(b)));
  lhs += apply_d0_tensor(dp, f.bracket_gen(a, b));
  return lhs;
}

}  // namespace lsft
