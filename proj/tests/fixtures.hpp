#pragma once

// Hand-checked second-order DGAs of the two trefoil knots, used as golden
// fixtures for the derivation engine and later for the geometric pipeline.

#include "dsl.hpp"
#include "lsft/derivation.hpp"

namespace lsft::fixtures {

inline DerivationData right_trefoil() {
  DerivationData d;
  d.gr.qdeg = {1, 1, 0, 0, 0};
  d.gr.rot = 0;
  using dsl::parse_elem;
  using dsl::parse_tensor;
  const Grading& g = d.gr;

  d.value[1] = parse_elem("t^-1 - q3.q4.q5 - q5 - q3 - h(q1 | 1) - h(1 | q1)", g);
  d.value[2] = parse_elem("1 + q5.q4.q3 + q5 + q3 + h(q2 | 1) - h(1 | q2)", g);
  d.value[3] = parse_elem("-h(1 | q3)", g);
  d.value[4] = parse_elem("h(q4 | 1)", g);
  d.value[5] = parse_elem("-h(1 | q5)", g);
  d.value[kTPlus] = parse_elem("2*h(t^1 | 1)", g);
  d.value[kTMinus] = parse_elem("-h(t^-1 | 1) - h(1 | t^-1)", g);

  const char* table[5][5] = {
      {"1 (x) q1.q1", "q2 (x) q1 + 1 (x) q2.q1", "q3 (x) q1 - 1 (x) q3.q1",
       "q4 (x) q1 - 1 (x) q4.q1", "q5 (x) q1 - 1 (x) q5.q1"},
      {"-q2 (x) q1 + 1 (x) q1.q2", "1 (x) q2.q2", "q2 (x) q3 - 1 (x) q3.q2",
       "q4 (x) q2 - q2.q4 (x) 1", "q2 (x) q5 - 1 (x) q5.q2"},
      {"q3 (x) q1 - 1 (x) q1.q3", "q2 (x) q3 - 1 (x) q2.q3",
       "-1 (x) q3.q3 + q3 (x) q3",
       "-1 (x) 1 + q4 (x) q3 - q3.q4 (x) 1 - 1 (x) q4.q3",
       "q5 (x) q3 + q3 (x) q5 - 1 (x) q5.q3"},
      {"q4 (x) q1 - 1 (x) q1.q4", "q4 (x) q2 - q4.q2 (x) 1",
       "1 (x) 1 + q4 (x) q3", "-q4.q4 (x) 1 + q4 (x) q4",
       "-1 (x) 1 + q4 (x) q5 - q4.q5 (x) 1 - 1 (x) q5.q4"},
      {"q5 (x) q1 - 1 (x) q1.q5", "q2 (x) q5 - 1 (x) q2.q5", "-1 (x) q3.q5",
       "1 (x) 1 + q4 (x) q5", "-1 (x) q5.q5 + q5 (x) q5"}};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) d.bracket[{i + 1, j + 1}] = parse_tensor(table[i][j]);

  fill_standard_t_rows(d);
  return d;
}

inline DerivationData left_trefoil() {
  DerivationData d;
  d.gr.qdeg = {3, 1, 1, -1, 1, -1};
  d.gr.rot = -1;
  using dsl::parse_elem;
  using dsl::parse_tensor;
  const Grading& g = d.gr;

  d.value[1] = parse_elem(
      "t^1 + q5.q6.q2.q5 + q5.q3.q4.q5 + q5.q5 + q2.q5 + q5.q3 - 5*h(q1 | 1)"
      " + h(q2.q5 | q3) + h(q5.q3 | q2)",
      g);
  d.value[2] = parse_elem("1 + q5.q4", g);
  d.value[3] = parse_elem("1 + q6.q5", g);
  d.value[4] = parse_elem("3*h(q4 | 1) - h(1 | q4)", g);
  d.value[5] = parse_elem("-3*h(q5 | 1)", g);
  d.value[6] = parse_elem("3*h(q6 | 1) - h(1 | q6)", g);
  d.value[kTPlus] = parse_elem("-5*h(t^1 | 1)", g);
  d.value[kTMinus] = parse_elem("6*h(t^-1 | 1) - h(1 | t^-1)", g);

  const char* table[6][6] = {
      {"-q1.q1 (x) 1", "-q1 (x) q2 - q1.q2 (x) 1", "-q1 (x) q3 - q1.q3 (x) 1",
       "-q5.q6.q2.q2 (x) 1 - q5.q3.q4.q2 (x) 1 - q5.q2 (x) 1 - q2.q2 (x) 1"
       " - q1 (x) q4 - q1.q4 (x) 1",
       "-q5.q3 (x) q2.q5 - q1 (x) q5 - q1.q5 (x) 1",
       "-1 (x) q3.q6.q2.q5 - 1 (x) q3.q3.q4.q5 - 1 (x) q3.q5 - 1 (x) q3.q3"
       " - q1 (x) q6 - q1.q6 (x) 1"},
      {"q1 (x) q2 - q2.q1 (x) 1", "-q2.q2 (x) 1", "0", "0",
       "q5 (x) q2 - q2.q5 (x) 1", "1 (x) 1 - q2 (x) q6 + 1 (x) q6.q2"},
      {"q1 (x) q3 - q3.q1 (x) 1",
       "q2 (x) q3 - q3 (x) q2 - q3.q2 (x) 1 + 1 (x) q2.q3", "-q3.q3 (x) 1",
       "1 (x) 1 - q3 (x) q4 + 1 (x) q4.q3", "q5 (x) q3 - q3.q5 (x) 1",
       "q6 (x) q3 - q3 (x) q6 - q3.q6 (x) 1 + 1 (x) q6.q3"},
      {"-1 (x) q5.q6.q2.q2 - 1 (x) q5.q3.q4.q2 - 1 (x) q5.q2 - 1 (x) q2.q2"
       " + q1 (x) q4 - q4.q1 (x) 1",
       "q2 (x) q4 - q4 (x) q2 - q4.q2 (x) 1 + 1 (x) q2.q4",
       "1 (x) 1 + q3 (x) q4 + 1 (x) q3.q4", "1 (x) q4.q4",
       "q5 (x) q4 - q4.q5 (x) 1 + 1 (x) q5.q4",
       "q6 (x) q4 - q4 (x) q6 + 1 (x) q6.q4"},
      {"-q2.q5 (x) q5.q3 + q1 (x) q5 - q5.q1 (x) 1", "-q5 (x) q2 - q5.q2 (x) 1",
       "-q5 (x) q3 - q5.q3 (x) 1", "-q5 (x) q4", "-q5.q5 (x) 1",
       "-q5 (x) q6 - q5.q6 (x) 1 + 1 (x) q6.q5"},
      {"-q3.q6.q2.q5 (x) 1 - q3.q3.q4.q5 (x) 1 - q3.q5 (x) 1 - q3.q3 (x) 1"
       " + q1 (x) q6 - q6.q1 (x) 1",
       "1 (x) 1 + q2 (x) q6 + 1 (x) q2.q6", "0", "1 (x) q4.q6", "q5 (x) q6",
       "1 (x) q6.q6"}};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) d.bracket[{i + 1, j + 1}] = parse_tensor(table[i][j]);

  fill_standard_t_rows(d);
  return d;
}

}  // namespace lsft::fixtures
