#include "doctest.h"

#include "lsft/linalg.hpp"
#include "lsft/simplex.hpp"

using namespace lsft;

namespace {

Mat mat(std::initializer_list<std::initializer_list<int>> rows) {
  Mat m;
  for (const auto& r : rows) {
    Vec v;
    for (int x : r) v.emplace_back(x);
    m.push_back(std::move(v));
  }
  return m;
}

Vec vec(std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(mat({{1, 0}, {0, 1}})) == 2);
  CHECK(rank(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
  CHECK(rank(Mat{}) == 0);
  CHECK(rank(mat({{0, 0}, {0, 0}})) == 0);
}

TEST_CASE("solve consistent and inconsistent systems") {
  auto x = solve(mat({{2, 1}, {1, -1}}), vec({5, 1}));
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(2));
  CHECK((*x)[1] == Rat(1));

  CHECK_FALSE(solve(mat({{1, 1}, {1, 1}}), vec({0, 1})).has_value());

  // Underdetermined: free variables pinned to zero, still a valid solution.
  auto y = solve(mat({{1, 1, 1}}), vec({3}));
  REQUIRE(y.has_value());
  Rat s = (*y)[0] + (*y)[1] + (*y)[2];
  CHECK(s == Rat(3));
}

TEST_CASE("nullspace vectors satisfy A v = 0") {
  const Mat a = mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  const auto basis = nullspace(a);
  CHECK(static_cast<int>(basis.size()) == 3 - rank(a));
  for (const Vec& v : basis)
    for (const Vec& row : a) {
      Rat dot = 0;
      for (std::size_t i = 0; i < row.size(); ++i) dot += row[i] * v[i];
      CHECK(dot == 0);
    }
}

TEST_CASE("lp feasibility with free variables") {
  {
    LinearProgram lp;
    lp.nvars = 1;
    lp.add_ge(vec({1}), Rat(1));    // x >= 1
    lp.add_ge(vec({-1}), Rat(-3));  // x <= 3
    auto x = lp_feasible(lp);
    REQUIRE(x.has_value());
    CHECK((*x)[0] >= 1);
    CHECK((*x)[0] <= 3);
  }
  {
    LinearProgram lp;
    lp.nvars = 1;
    lp.add_ge(vec({1}), Rat(1));   // x >= 1
    lp.add_ge(vec({-1}), Rat(0));  // x <= 0
    CHECK_FALSE(lp_feasible(lp).has_value());
  }
  {
    // x + y == 2, x - y >= 3 -> feasible with negative y.
    LinearProgram lp;
    lp.nvars = 2;
    lp.add_eq(vec({1, 1}), Rat(2));
    lp.add_ge(vec({1, -1}), Rat(3));
    auto x = lp_feasible(lp);
    REQUIRE(x.has_value());
    CHECK((*x)[0] + (*x)[1] == Rat(2));
    CHECK((*x)[0] - (*x)[1] >= Rat(3));
  }
  {
    // Equalities only, inconsistent.
    LinearProgram lp;
    lp.nvars = 2;
    lp.add_eq(vec({1, 1}), Rat(1));
    lp.add_eq(vec({2, 2}), Rat(3));
    CHECK_FALSE(lp_feasible(lp).has_value());
  }
}
