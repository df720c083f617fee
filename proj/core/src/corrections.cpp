#include "lsft/corrections.hpp"

#include <stdexcept>

namespace lsft {

namespace {

int parity(int deg) { return ((deg % 2) + 2) % 2; }
int psign(int deg) { return parity(deg) ? -1 : 1; }

}  // namespace

std::vector<int> capping_linking(const Diagram& d) {
  const int n = d.n();
  const auto& qdeg = d.grading().qdeg;
  std::vector<int> l(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const Endpoint ip = Endpoint::over(i), im = Endpoint::under(i);
    int acc = 0;
    if (d.delta(ip, im)) {
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        const Endpoint jp = Endpoint::over(j), jm = Endpoint::under(j);
        acc += psign(qdeg[static_cast<std::size_t>(j) - 1]) *
               (d.delta(ip, jp) * d.delta(jp, im) + d.delta(ip, jm) * d.delta(jm, im));
      }
    } else {
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        const Endpoint jp = Endpoint::over(j), jm = Endpoint::under(j);
        acc -= psign(qdeg[static_cast<std::size_t>(j) - 1]) *
               (d.delta(im, jp) * d.delta(jp, ip) + d.delta(im, jm) * d.delta(jm, ip));
      }
    }
    if (acc % 2 != 0) throw std::logic_error("internal: capping linking parity");
    l[static_cast<std::size_t>(i)] = acc / 2;
  }
  return l;
}

Elem d_f_chord(const Diagram& d, int i) {
  const Grading& gr = d.grading();
  const int li = capping_linking(d)[static_cast<std::size_t>(i)];
  const int dmi = d.delta(Endpoint::under(i), Endpoint::over(i));  // δ(i⁻,i⁺)
  const bool even = parity(gr.qdeg[static_cast<std::size_t>(i) - 1]) == 0;
  Elem e;
  e.add_hbar(gen_word(i), Word{}, Rat(even ? li - dmi + 1 : li + dmi), gr);
  e.add_hbar(Word{}, gen_word(i), Rat(-dmi), gr);
  return e;
}

Elem d_f_base(const Diagram& d, GenId g) {
  const Grading& gr = d.grading();
  Elem e;
  if (g == kTPlus) {
    e.add_hbar(gen_word(kTPlus), Word{}, Rat(d.tb() + 1), gr);
  } else if (g == kTMinus) {
    e.add_hbar(gen_word(kTMinus), Word{}, Rat(-d.tb()), gr);
    e.add_hbar(Word{}, gen_word(kTMinus), Rat(-1), gr);
  } else {
    throw std::invalid_argument("d_f_base takes a base-point letter");
  }
  return e;
}

Tensor d_f_pair(const Diagram& d, int i, int j) {
  const auto& qdeg = d.grading().qdeg;
  const Word qi = gen_word(i), qj = gen_word(j);
  Tensor t;
  if (i != j) {
    const int s = psign(qdeg[static_cast<std::size_t>(i) - 1] *
                        qdeg[static_cast<std::size_t>(j) - 1]);
    if (d.delta(Endpoint::over(j), Endpoint::over(i))) t.add(qj, qi, Rat(1));
    if (d.delta(Endpoint::under(j), Endpoint::under(i))) t.add(qi, qj, Rat(s));
    if (d.delta(Endpoint::over(j), Endpoint::under(i))) t.add(concat(qi, qj), Word{}, Rat(-1));
    if (d.delta(Endpoint::under(j), Endpoint::over(i))) t.add(Word{}, concat(qj, qi), Rat(-s));
  } else {
    const int pi = parity(qdeg[static_cast<std::size_t>(i) - 1]);
    if (d.delta(Endpoint::over(i), Endpoint::under(i))) t.add(concat(qi, qi), Word{}, Rat(-1));
    if (d.delta(Endpoint::under(i), Endpoint::over(i)))
      t.add(Word{}, concat(qi, qi), Rat(-(pi ? -1 : 1)));
    if (pi == 0) t.add(qi, qi, Rat(1));
  }
  return t;
}

}  // namespace lsft
