#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "coalab/prob.hpp"

namespace coalab {

// Seeded draws built directly on mt19937_64 output. The standard library's
// distribution objects are implementation-defined, so uniforms are derived
// by hand to keep seeded suites identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on (0, 1): never returns an exact endpoint.
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Inclusive range; modulo bias is irrelevant for suite generation.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

inline TUGame random_game(Rng& rng, int n, double lo = -5.0, double hi = 5.0) {
  std::vector<double> table(std::size_t{1} << n, 0.0);
  for (std::size_t s = 1; s < table.size(); ++s) table[s] = rng.uniform(lo, hi);
  return TUGame(n, std::move(table));
}

// Uniform on the 2^n-simplex via normalized exponentials; every coalition
// gets strictly positive mass.
inline CFPD random_simplex_cfpd(Rng& rng, int n) {
  std::vector<double> mass(std::size_t{1} << n);
  double total = 0.0;
  for (double& m : mass) {
    m = -std::log1p(-rng.uniform());
    total += m;
  }
  for (double& m : mass) m /= total;
  return CFPD(n, std::move(mass));
}

// Zero-padded partial support: roughly half the coalitions carry mass.
inline CFPD random_partial_cfpd(Rng& rng, int n) {
  std::vector<double> mass(std::size_t{1} << n, 0.0);
  double total = 0.0;
  for (double& m : mass) {
    if (rng.next() & 1u) {
      m = -std::log1p(-rng.uniform());
      total += m;
    }
  }
  if (total == 0.0) return point_mass(n, full_coalition(n));
  for (double& m : mass) m /= total;
  return CFPD(n, std::move(mass));
}

}  // namespace coalab
