#include "lsft/linalg.hpp"

#include <cassert>

namespace lsft {

namespace {

// Row-reduces `a` in place (optionally carrying `b`), returns pivot columns.
std::vector<int> reduce(Mat& a, Vec* b) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    if (b) std::swap((*b)[p], (*b)[r]);
    const Rat inv = Rat(1) / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    if (b) (*b)[r] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      if (b) (*b)[i] -= f * (*b)[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Mat a) { return static_cast<int>(reduce(a, nullptr).size()); }

std::optional<Vec> solve(Mat a, Vec b) {
  assert(a.size() == b.size());
  if (a.empty()) {
    for (const Rat& x : b)
      if (x != 0) return std::nullopt;
    return Vec{};
  }
  const int cols = static_cast<int>(a[0].size());
  const std::vector<int> pivots = reduce(a, &b);
  const int r = static_cast<int>(pivots.size());
  for (std::size_t i = r; i < a.size(); ++i)
    if (b[i] != 0) return std::nullopt;
  Vec x(cols, Rat(0));
  for (int i = 0; i < r; ++i) x[pivots[i]] = b[i];
  return x;
}

std::vector<Vec> nullspace(Mat a) {
  if (a.empty()) return {};
  const int cols = static_cast<int>(a[0].size());
  const std::vector<int> pivots = reduce(a, nullptr);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace lsft
