#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace lsft {

// Exact rational coefficients; every quantity in the library (coefficients,
// lengths, areas, coordinates) is a Rat. No floating point anywhere.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline int sgn(const Rat& r) { return r.sign(); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Renders as "p" or "p/q" (canonical form, q > 0).
inline std::string to_string(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Deterministic splitmix64; used only to seed reproducible test data and the
// genericity perturbation, never for anything load-bearing.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

}  // namespace lsft
