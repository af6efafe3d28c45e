#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "coalab/core.hpp"

namespace coalab {

// Coalition-formation probability distribution: one probability per
// coalition of {0,...,n-1} (the empty coalition included), summing to 1.
class CFPD {
 public:
  CFPD(int n, std::vector<double> p, double eps = kEps) : n_(n), p_(std::move(p)) {
    if (n_ < 1 || n_ > kMaxPlayers) {
      throw std::invalid_argument("CFPD: player count must be in [1, " +
                                  std::to_string(kMaxPlayers) + "]");
    }
    if (p_.size() != (std::size_t{1} << n_)) {
      throw std::invalid_argument("CFPD: probability table must have 2^n entries");
    }
    double total = 0.0;
    for (std::size_t s = 0; s < p_.size(); ++s) {
      if (!std::isfinite(p_[s]) || p_[s] < 0.0) {
        throw std::invalid_argument("CFPD: probability of " +
                                    coalition_label(static_cast<Coalition>(s)) +
                                    " must be nonnegative");
      }
      total += p_[s];
    }
    if (std::abs(total - 1.0) > eps) {
      throw std::invalid_argument("CFPD: probabilities sum to " + std::to_string(total) +
                                  ", expected 1");
    }
  }

  int num_players() const { return n_; }
  Coalition grand_coalition() const { return full_coalition(n_); }
  std::size_t table_size() const { return p_.size(); }

  double prob(Coalition s) const { return p_[s]; }
  const std::vector<double>& table() const { return p_; }

  bool operator==(const CFPD&) const = default;

 private:
  int n_;
  std::vector<double> p_;
};

inline CFPD make_cfpd(int n, const std::map<Coalition, double>& probs, double eps = kEps) {
  if (n < 1 || n > kMaxPlayers) {
    throw std::invalid_argument("make_cfpd: player count must be in [1, " +
                                std::to_string(kMaxPlayers) + "]");
  }
  std::vector<double> table(std::size_t{1} << n, 0.0);
  for (const auto& [s, p] : probs) {
    if (s >= table.size()) {
      throw std::invalid_argument("make_cfpd: coalition " + coalition_label(s) +
                                  " is outside the player set");
    }
    table[s] = p;
  }
  return CFPD(n, std::move(table), eps);
}

inline CFPD point_mass(int n, Coalition s) { return make_cfpd(n, {{s, 1.0}}); }

inline CFPD uniform_cfpd(int n) {
  const std::size_t size = std::size_t{1} << n;
  return CFPD(n, std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

// Support: coalitions with strictly positive stored probability.
inline std::vector<Coalition> support(const CFPD& d) {
  std::vector<Coalition> out;
  for (Coalition s = 0; s < d.table_size(); ++s) {
    if (d.prob(s) > 0.0) out.push_back(s);
  }
  return out;
}

// True when some supported coalition contains player i.
inline bool in_support_span(const CFPD& d, PlayerId i) {
  for (Coalition s = 0; s < d.table_size(); ++s) {
    if (contains(s, i) && d.prob(s) > 0.0) return true;
  }
  return false;
}

inline bool has_full_support(const CFPD& d) {
  for (Coalition s = 0; s < d.table_size(); ++s) {
    if (!(d.prob(s) > 0.0)) return false;
  }
  return true;
}

// Restriction of d to the player set m, kept in the ambient index space:
// p_M(S) = sum_{T subseteq N\M} p(S u T) for S subseteq M, 0 otherwise.
inline CFPD restrict_cfpd(const CFPD& d, Coalition m) {
  if (m > d.grand_coalition()) {
    throw std::invalid_argument("restrict_cfpd: M is outside the player set");
  }
  std::vector<double> table(d.table_size(), 0.0);
  for (Coalition x = 0; x < d.table_size(); ++x) table[x & m] += d.prob(x);
  return CFPD(d.num_players(), std::move(table));
}

inline CFPD drop_player(const CFPD& d, PlayerId i) {
  if (i < 0 || i >= d.num_players()) {
    throw std::invalid_argument("drop_player: no such player");
  }
  return restrict_cfpd(d, d.grand_coalition() & ~singleton(i));
}

// Restriction re-indexed onto the 2^|T| table of T (ascending member order).
inline CFPD project_cfpd(const CFPD& d, Coalition t) {
  if (t == 0) throw std::invalid_argument("project_cfpd: T must be nonempty");
  if (t > d.grand_coalition()) {
    throw std::invalid_argument("project_cfpd: T is outside the player set");
  }
  const std::vector<PlayerId> members = coalition_members(t);
  std::vector<double> table(std::size_t{1} << members.size(), 0.0);
  for (Coalition x = 0; x < d.table_size(); ++x) {
    table[compress_subset(x & t, members)] += d.prob(x);
  }
  return CFPD(static_cast<int>(members.size()), std::move(table));
}

// q(S) = p^N_S(S) = sum_{X superseteq S} p(X), for every S, via the
// superset-sum transform.
inline std::vector<double> superset_mass(const CFPD& d) {
  std::vector<double> q(d.table());
  for (int i = 0; i < d.num_players(); ++i) {
    const Coalition bit = singleton(i);
    for (Coalition s = 0; s < q.size(); ++s) {
      if (!(s & bit)) q[s] += q[s | bit];
    }
  }
  return q;
}

// A probabilistic TU game: the triple (N, v, p^N).
struct ProbGame {
  TUGame game;
  CFPD dist;

  ProbGame(TUGame g, CFPD d) : game(std::move(g)), dist(std::move(d)) {
    if (game.num_players() != dist.num_players()) {
      throw std::invalid_argument("ProbGame: game and distribution player counts differ");
    }
  }

  int num_players() const { return game.num_players(); }
  Coalition grand_coalition() const { return game.grand_coalition(); }
};

// E(N, v, p^N) = sum over the support of p(S) v(S).
inline double expected_worth(const ProbGame& pg) {
  double total = 0.0;
  for (Coalition s = 0; s < pg.dist.table_size(); ++s) {
    const double p = pg.dist.prob(s);
    if (p > 0.0) total += p * pg.game.worth(s);
  }
  return total;
}

// E(N, v, p^N) - E(N, v, p^N_{-i}); equals sum_{S: i in S} p(S) (v(S) - v(S\i)).
inline double expected_marginal_contribution(const ProbGame& pg, PlayerId i) {
  const ProbGame dropped(pg.game, drop_player(pg.dist, i));
  return expected_worth(pg) - expected_worth(dropped);
}

enum class ExpShForm { kDefinition, kDividend };

// Expected Shapley value.
//   definition form: sum_{S in supp(p), i in S} p(S) Sh_i(S, v)
//   dividend form:   sum_{S: i in S} Delta_v(S)/|S| * p^N_S(S)
inline PayoffVector expected_shapley(const ProbGame& pg,
                                     ExpShForm form = ExpShForm::kDefinition) {
  const int n = pg.num_players();
  PayoffVector out(static_cast<std::size_t>(n), 0.0);
  if (form == ExpShForm::kDefinition) {
    for (Coalition s = 1; s < pg.dist.table_size(); ++s) {
      const double p = pg.dist.prob(s);
      if (!(p > 0.0)) continue;
      const PayoffVector sub = shapley(restrict_game(pg.game, s));
      const std::vector<PlayerId> members = coalition_members(s);
      for (std::size_t k = 0; k < members.size(); ++k) out[members[k]] += p * sub[k];
    }
  } else {
    const DividendTable dividends = harsanyi_dividends(pg.game);
    const std::vector<double> q = superset_mass(pg.dist);
    for (Coalition s = 1; s < q.size(); ++s) {
      const double share = dividends.at(s) / coalition_size(s) * q[s];
      for (PlayerId i : coalition_members(s)) out[i] += share;
    }
  }
  return out;
}

// p-null: the expected marginal contribution vanishes.
inline bool is_p_null(const ProbGame& pg, PlayerId i, double eps = kEps) {
  return std::abs(expected_marginal_contribution(pg, i)) <= eps;
}

// Compatible: equal expected marginal contributions. The defining notion
// quantifies over players in the support span; callers gate on
// in_support_span when that matters.
inline bool are_compatible(const ProbGame& pg, PlayerId i, PlayerId j, double eps = kEps) {
  if (i == j) throw std::invalid_argument("are_compatible: players must differ");
  return std::abs(expected_marginal_contribution(pg, i) -
                  expected_marginal_contribution(pg, j)) <= eps;
}

// A value on probabilistic games: ProbGame -> payoff vector.
using ProbValueOperator = std::function<PayoffVector(const ProbGame&)>;

inline ProbValueOperator expected_shapley_operator() {
  return [](const ProbGame& pg) { return expected_shapley(pg); };
}

}  // namespace coalab
