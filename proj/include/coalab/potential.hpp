#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "coalab/prob.hpp"
#include "coalab/rng.hpp"

namespace coalab {

// Probabilistic potential evaluated at every sub-player-set T, i.e. the
// potential of the projected probabilistic game (T, v|_T, p^T_T).
struct ProbPotentialTable {
  int n = 0;
  std::vector<double> value;

  double at(Coalition t) const { return value[t]; }
};

// Explicit construction: the p-weighted mix of classical potentials,
// script-P(T) = sum_X p(X) P(X cap T, v) = sum_{S subseteq T} p^T_T(S) P(S, v).
inline ProbPotentialTable prob_potential(const ProbGame& pg) {
  const std::vector<double> classical = potential_table(pg.game);
  ProbPotentialTable out{pg.num_players(),
                         std::vector<double>(pg.dist.table_size(), 0.0)};
  for (Coalition t = 1; t < out.value.size(); ++t) {
    double total = 0.0;
    for (Coalition x = 0; x < pg.dist.table_size(); ++x) {
      const double p = pg.dist.prob(x);
      if (p > 0.0) total += p * classical[x & t];
    }
    out.value[t] = total;
  }
  return out;
}

// Recursion route, seeded at script-P(empty) = 0:
// script-P(T) = (E(T, v|_T, p^T_T) + sum_{i in T} script-P(T\i)) / |T|.
// Must agree with the explicit construction; the pair is the uniqueness check.
inline ProbPotentialTable prob_potential_recursive(const ProbGame& pg) {
  ProbPotentialTable out{pg.num_players(),
                         std::vector<double>(pg.dist.table_size(), 0.0)};
  for (Coalition t = 1; t < out.value.size(); ++t) {
    const double e = expected_worth(
        ProbGame(restrict_game(pg.game, t), project_cfpd(pg.dist, t)));
    double below = 0.0;
    for (Coalition rest = t; rest != 0; rest &= rest - 1) {
      below += out.value[t ^ (rest & -rest)];
    }
    out.value[t] = (e + below) / coalition_size(t);
  }
  return out;
}

// D_i script-P = script-P(N, v, p^N) - script-P(N\i, v, p^{N\i}_{-i}); the
// derivative vector is the Expected Shapley value.
inline double prob_potential_derivative(const ProbGame& pg, PlayerId i) {
  if (i < 0 || i >= pg.num_players()) {
    throw std::invalid_argument("prob_potential_derivative: no such player");
  }
  const ProbPotentialTable table = prob_potential(pg);
  const Coalition grand = pg.grand_coalition();
  return table.at(grand) - table.at(grand & ~singleton(i));
}

namespace detail {

// Shared skeleton of the probabilistic reduced worth: dividend terms rescaled
// by the conditional superset masses q(K1 u K2) / q(K1). q is monotone under
// inclusion, so a zero denominator forces a zero numerator; that summand is 0.
template <typename DividendTerm>
TUGame prob_reduced_worths(const ProbGame& pg, Coalition t, DividendTerm&& term) {
  const std::vector<PlayerId> members = coalition_members(t);
  const Coalition complement = pg.grand_coalition() ^ t;
  const std::vector<double> q = superset_mass(pg.dist);
  std::vector<double> table(std::size_t{1} << members.size(), 0.0);
  for (Coalition r = 1; r < table.size(); ++r) {
    const Coalition s = expand_subset(r, members);
    double total = 0.0;
    for_each_subset(s, [&](Coalition k1) {
      if (k1 == 0) return;
      const double denom = q[k1];
      for_each_subset(complement, [&](Coalition k2) {
        const Coalition joint = k1 | k2;
        if (denom == 0.0) {
          assert(q[joint] == 0.0);
          return;
        }
        total += term(k1, joint) * (q[joint] / denom);
      });
    });
    table[r] = total;
  }
  return TUGame(static_cast<int>(members.size()), std::move(table));
}

inline void check_reduction_subset(const ProbGame& pg, Coalition t) {
  if (t == 0 || t >= pg.grand_coalition()) {
    throw std::invalid_argument("prob_reduced_game: T must be a nonempty proper subset");
  }
}

}  // namespace detail

// Probabilistic reduced game on T with respect to a value: the reduced worth
// table paired with the projected distribution p^T_T.
inline ProbGame prob_reduced_game(const ProbGame& pg, Coalition t, const ValueOperator& phi) {
  detail::check_reduction_subset(pg, t);
  const ValueDividends vd = value_dividends(pg.game, phi);
  TUGame worths = detail::prob_reduced_worths(
      pg, t, [&](Coalition k1, Coalition joint) { return vd.group(k1, joint); });
  return ProbGame(std::move(worths), project_cfpd(pg.dist, t));
}

// Shapley specialization: the dividend aggregate collapses to
// |K1| Delta_v(K1 u K2) / (|K1| + |K2|).
inline ProbGame prob_reduced_game_shapley(const ProbGame& pg, Coalition t) {
  detail::check_reduction_subset(pg, t);
  const DividendTable dividends = harsanyi_dividends(pg.game);
  TUGame worths = detail::prob_reduced_worths(pg, t, [&](Coalition k1, Coalition joint) {
    return coalition_size(k1) * dividends.at(joint) / coalition_size(joint);
  });
  return ProbGame(std::move(worths), project_cfpd(pg.dist, t));
}

struct PconViolation {
  Coalition subset = 0;
  PlayerId player = -1;
  double gap = 0.0;
};

struct PconReport {
  std::vector<PconViolation> violations;
  int checks_run = 0;

  bool pass() const { return violations.empty(); }
};

// p-CON: Phi_i(N, v, p^N) = Phi_i(T, reduced) for every proper nonempty T and
// every i in T. Reduced games are always built in the Shapley dividend form,
// so candidates are judged against one fixed reduction, not one of their own.
inline PconReport check_pcon(const ProbGame& pg, const ProbValueOperator& value,
                             double eps = kEps) {
  if (pg.num_players() < 2) {
    throw std::invalid_argument("check_pcon: need at least two players");
  }
  const PayoffVector base = value(pg);
  PconReport report;
  for (Coalition t = 1; t < pg.grand_coalition(); ++t) {
    const ProbGame reduced = prob_reduced_game_shapley(pg, t);
    const PayoffVector pay = value(reduced);
    const std::vector<PlayerId> members = coalition_members(t);
    for (std::size_t k = 0; k < members.size(); ++k) {
      const double gap = std::abs(pay[k] - base[members[k]]);
      ++report.checks_run;
      if (gap > eps) report.violations.push_back({t, members[k], gap});
    }
  }
  return report;
}

// The payoff STPPG pins for a two-player probabilistic game:
// Phi_i = E({i,j}, v, p_{-j}) + p({i,j}) (v({i,j}) - v(i) - v(j)) / 2.
inline double stppg_reference(const ProbGame& pg, PlayerId i) {
  if (pg.num_players() != 2) {
    throw std::invalid_argument("stppg_reference: need exactly two players");
  }
  const PlayerId j = 1 - i;
  const double e = expected_worth(ProbGame(pg.game, drop_player(pg.dist, j)));
  const double surplus = pg.game.worth(3) - pg.game.worth(1) - pg.game.worth(2);
  return e + 0.5 * pg.dist.prob(3) * surplus;
}

struct StppgViolation {
  int instance = 0;
  PlayerId player = -1;
  double gap = 0.0;
};

struct StppgReport {
  std::vector<StppgViolation> violations;
  int checks_run = 0;

  bool pass() const { return violations.empty(); }
};

// Samples seeded two-player probabilistic games (worths uniform in [-5,5],
// distributions uniform on the simplex) and checks the closed form.
inline StppgReport check_stppg(const ProbValueOperator& value, std::uint64_t seed = 42,
                               int instances = 100, double eps = kEps) {
  Rng rng(seed);
  StppgReport report;
  for (int k = 0; k < instances; ++k) {
    TUGame game = random_game(rng, 2);
    CFPD dist = random_simplex_cfpd(rng, 2);
    const ProbGame pg(std::move(game), std::move(dist));
    const PayoffVector pay = value(pg);
    for (PlayerId i = 0; i < 2; ++i) {
      const double gap = std::abs(pay[i] - stppg_reference(pg, i));
      ++report.checks_run;
      if (gap > eps) report.violations.push_back({k, i, gap});
    }
  }
  return report;
}

}  // namespace coalab
