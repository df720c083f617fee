#pragma once

#include "lsft/algebra.hpp"

#include <map>
#include <vector>

namespace lsft {

// Full data of a second-order derivation d on the generators: values d(g)
// and the antibracket table {a,b}_d for ordered generator pairs, including
// rows for the base-point letters (fill_standard_t_rows installs the
// universal ones). Missing value/bracket entries read as zero.
struct DerivationData {
  Grading gr;
  std::map<GenId, Elem> value;
  std::map<std::pair<GenId, GenId>, Tensor> bracket;

  Elem d_gen(GenId g) const;
  Tensor bracket_gen(GenId a, GenId b) const;
  std::vector<GenId> generators() const;  // q_1..q_n, t^+, t^-
};

// The universal bracket rows involving t^± (s any generator):
//   {s,t+} = t+ ⊗ s - s t+ ⊗ 1         {s,t-} = s ⊗ t- - 1 ⊗ t- s
//   {t+,s} = -t+ s ⊗ 1 + t+ ⊗ s        {t-,s} = -1 ⊗ s t- + s ⊗ t-
Tensor standard_t_bracket(GenId a, GenId b);
void fill_standard_t_rows(DerivationData& d);

// --- closed-formula evaluation (production path) ---

// d on a word / element via the closed second-order formula.
Elem apply_d(const DerivationData& d, const Elem& x);
Elem d_word(const DerivationData& d, const Word& w);

// First-order part d0 = π ∘ d on words / on the word part of an element.
Elem d0_word(const DerivationData& d, const Word& w);
Elem apply_d0(const DerivationData& d, const Elem& x);

// Antibracket of two words / of the word parts of two elements, by the
// closed pair formula.
Tensor bracket_words(const DerivationData& d, const Word& v, const Word& w);
Tensor bracket_elems(const DerivationData& d, const Elem& x, const Elem& y);

// --- recursive evaluation (test oracle; independent of the closed form) ---
Tensor bracket_rec(const DerivationData& d, const Word& v, const Word& w);
Elem d_rec(const DerivationData& d, const Word& w);

// --- identity checks ---

// d(d(g)); zero iff d² vanishes on g.
Elem d_squared_defect(const DerivationData& d, GenId g);

// (d0⊗1 + 1⊗d0){a,b} - {d0 a, b} - (-1)^{|a|}{a, d0 b}; zero iff the strong
// derivation identity holds on the pair.
Tensor strong_derivation_defect(const DerivationData& d, GenId a, GenId b);

// (d0⊗1 + 1⊗d0) on a tensor: (d0⊗1)(A⊗B) = (-1)^{|B|} d0A ⊗ B and
// (1⊗d0)(A⊗B) = A ⊗ d0B.
Tensor apply_d0_tensor(const DerivationData& d, const Tensor& t);

// --- second-order morphisms ---

// Values f(g) and the morphism bracket table {a,b}_f. A missing value entry
// reads as the identity on that generator; missing brackets read as zero.
struct MorphismData {
  Grading src;
  Grading dst;
  std::map<GenId, Elem> value;
  std::map<std::pair<GenId, GenId>, Tensor> bracket;

  Elem f_gen(GenId g) const;
  Tensor bracket_gen(GenId a, GenId b) const;
  std::vector<GenId> generators() const;
};

MorphismData identity_morphism(const Grading& gr);

Elem apply_f(const MorphismData& f, const Elem& x);
Elem f_word(const MorphismData& f, const Word& w);
// First-order part f0 on words / on the word part of an element.
Elem f0_word(const MorphismData& f, const Word& w);
Elem apply_f0(const MorphismData& f, const Elem& x);

// Morphism bracket of two words, by the defining recursion; *_elems extends
// bilinearly over the word parts.
Tensor fbracket_words(const MorphismData& f, const Word& v, const Word& w);
Tensor fbracket_elems(const MorphismData& f, const Elem& x, const Elem& y);

// Applies f0 to both tensor factors (degree-0 operator: no signs).
Tensor apply_f0_tensor(const MorphismData& f, const Tensor& t);

// g ∘ f with {v,w}_{g∘f} = {f0 v, f0 w}_g + (g0⊗g0){v,w}_f.
MorphismData compose(const MorphismData& g, const MorphismData& f);

// Inverse of a second-order isomorphism. The first-order part is inverted
// directly for monomial substitutions and by bounded substitution fix-point
// otherwise; the ħ-part and the bracket follow the explicit inversion
// formulas. The result is verified by composing both ways; throws
// std::runtime_error if f is not invertible this way.
MorphismData invert(const MorphismData& f, int max_iter = 64);

// Conjugated differential f⁻¹ ∘ d ∘ f together with its antibracket.
DerivationData conjugate(const DerivationData& d, const MorphismData& f);

// Intertwining defects for f: (A,d) -> (B,d'); both vanish iff f is a
// second-order DGA morphism:
//   element level:  f(d(g)) - d'(f(g))
//   bracket level:  (f0⊗f0){v,w}_d + {d0 v,w}_f + (-1)^{|v|}{v,d0 w}_f
//                   - {f0 v, f0 w}_{d'} + (d'0⊗1 + 1⊗d'0){v,w}_f
Elem morphism_chain_defect(const DerivationData& d, const DerivationData& dp,
                           const MorphismData& f, GenId g);
Tensor morphism_bracket_defect(const DerivationData& d, const DerivationData& dp,
                               const MorphismData& f, GenId a, GenId b);

}  // namespace lsft
