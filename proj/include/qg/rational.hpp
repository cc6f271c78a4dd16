#pragma once

#include <gmpxx.h>

#include <random>
#include <stdexcept>
#include <string>

namespace qg {

// Exact rational scalar. Everything combinatorial/algebraic in the library
// runs on these; doubles are reserved for the soliton evaluators.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// "p/q" or "p". Throws std::invalid_argument on junk.
inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline double rat_double(const Rat& r) { return r.get_d(); }

// Seeded rational generator for tests/CLI. Nonzero denominators by
// construction; numerators span a range wide enough that accidental
// degeneracies (equal values, vanishing differences) are negligible,
// and callers that do hit one simply retry with the next draw.
struct RatRng {
  std::mt19937_64 eng;

  explicit RatRng(std::uint64_t seed) : eng(seed) {}

  Rat next(long num_abs = 999, long den_max = 49) {
    std::uniform_int_distribution<long> num(-num_abs, num_abs);
    std::uniform_int_distribution<long> den(1, den_max);
    return rat(num(eng), den(eng));
  }

  // nonzero variant
  Rat next_nonzero(long num_abs = 999, long den_max = 49) {
    for (;;) {
      Rat r = next(num_abs, den_max);
      if (r != 0) return r;
    }
  }

  long index(long n) {  // uniform in [0, n)
    std::uniform_int_distribution<long> d(0, n - 1);
    return d(eng);
  }
};

}  // namespace qg
