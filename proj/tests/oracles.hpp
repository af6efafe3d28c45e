#pragma once

// Brute-force reference implementations used to derive expected values.
// These stay independent of the library's computation paths: subgames are
// walked through ambient worth lookups, never through the library's
// restriction, dividend or transform code.

#include <algorithm>
#include <numeric>
#include <vector>

#include "coalab/core.hpp"
#include "coalab/prob.hpp"

namespace oracle {

using coalab::CFPD;
using coalab::Coalition;
using coalab::PayoffVector;
using coalab::PlayerId;
using coalab::ProbGame;
using coalab::TUGame;

// Shapley payoffs of the subgame on s, as a full-length vector: average
// marginal contribution over every entry order of the members of s.
inline PayoffVector shapley_on(const TUGame& g, Coalition s) {
  PayoffVector out(g.num_players(), 0.0);
  if (s == 0) return out;
  std::vector<PlayerId> order = coalab::coalition_members(s);
  std::sort(order.begin(), order.end());
  double count = 0.0;
  do {
    Coalition built = 0;
    for (PlayerId i : order) {
      const Coalition before = built;
      built |= coalab::singleton(i);
      out[i] += g.worth(built) - g.worth(before);
    }
    count += 1.0;
  } while (std::next_permutation(order.begin(), order.end()));
  for (double& x : out) x /= count;
  return out;
}

inline PayoffVector shapley(const TUGame& g) { return shapley_on(g, g.grand_coalition()); }

// Literal alternating sum: dividend(S) = sum_{T subseteq S} (-1)^{|S|-|T|} v(T).
inline std::vector<double> dividends(const TUGame& g) {
  std::vector<double> out(g.table_size(), 0.0);
  for (Coalition s = 0; s < g.table_size(); ++s) {
    double total = 0.0;
    coalab::for_each_subset(s, [&](Coalition t) {
      const int sign = (coalab::coalition_size(s) - coalab::coalition_size(t)) % 2 ? -1 : 1;
      total += sign * g.worth(t);
    });
    out[s] = total;
  }
  return out;
}

// Potential from the dividend closed form: P(S) = sum_{T subseteq S} dividend(T)/|T|.
inline double potential_on(const TUGame& g, Coalition s) {
  const std::vector<double> d = dividends(g);
  double total = 0.0;
  coalab::for_each_subset(s, [&](Coalition t) {
    if (t != 0) total += d[t] / coalab::coalition_size(t);
  });
  return total;
}

inline double expected_worth(const ProbGame& pg) {
  double total = 0.0;
  for (Coalition s = 0; s < pg.dist.table_size(); ++s) {
    total += pg.dist.prob(s) * pg.game.worth(s);
  }
  return total;
}

// sum_{S: i in S} p(S) (v(S) - v(S\i)); the closed form of Proposition 1.
inline double weighted_marginal_sum(const ProbGame& pg, PlayerId i) {
  double total = 0.0;
  for (Coalition s = 0; s < pg.dist.table_size(); ++s) {
    if (!coalab::contains(s, i)) continue;
    total += pg.dist.prob(s) * (pg.game.worth(s) - pg.game.worth(s & ~coalab::singleton(i)));
  }
  return total;
}

// Expected Shapley straight from the definition.
inline PayoffVector expected_shapley(const ProbGame& pg) {
  PayoffVector out(pg.num_players(), 0.0);
  for (Coalition s = 1; s < pg.dist.table_size(); ++s) {
    const double p = pg.dist.prob(s);
    if (!(p > 0.0)) continue;
    const PayoffVector sub = shapley_on(pg.game, s);
    for (PlayerId i : coalab::coalition_members(s)) out[i] += p * sub[i];
  }
  return out;
}

// Probabilistic potential as the p-weighted mix of classical potentials.
inline double prob_potential(const ProbGame& pg) {
  double total = 0.0;
  for (Coalition s = 0; s < pg.dist.table_size(); ++s) {
    const double p = pg.dist.prob(s);
    if (p > 0.0) total += p * potential_on(pg.game, s);
  }
  return total;
}

}  // namespace oracle
