#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace coalab {

using PlayerId = int;
using Coalition = std::uint32_t;  // bit i set <=> player i is a member
using PayoffVector = std::vector<double>;

inline constexpr int kMaxPlayers = 20;       // 2^n worth tables
inline constexpr int kMaxOraclePlayers = 8;  // n! permutation walk
inline constexpr double kEps = 1e-9;

constexpr Coalition singleton(PlayerId i) { return Coalition{1} << i; }
constexpr Coalition full_coalition(int n) { return (Coalition{1} << n) - 1u; }
constexpr bool contains(Coalition s, PlayerId i) { return (s >> i) & 1u; }
constexpr int coalition_size(Coalition s) { return std::popcount(s); }

inline std::vector<PlayerId> coalition_members(Coalition s) {
  std::vector<PlayerId> out;
  out.reserve(static_cast<std::size_t>(coalition_size(s)));
  for (Coalition rest = s; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

// Visits every subset of s, including s itself and the empty coalition.
template <typename Visit>
void for_each_subset(Coalition s, Visit&& visit) {
  Coalition t = s;
  while (true) {
    visit(t);
    if (t == 0) break;
    t = (t - 1) & s;
  }
}

// Maps a mask over the members of t (listed in ascending player order) back
// to the ambient player set, and the reverse.
inline Coalition expand_subset(Coalition local, const std::vector<PlayerId>& members) {
  Coalition out = 0;
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (contains(local, static_cast<PlayerId>(k))) out |= singleton(members[k]);
  }
  return out;
}

inline Coalition compress_subset(Coalition ambient, const std::vector<PlayerId>& members) {
  Coalition out = 0;
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (contains(ambient, members[k])) out |= singleton(static_cast<PlayerId>(k));
  }
  return out;
}

inline std::string coalition_label(Coalition s) {
  if (s == 0) return "{}";
  std::string out = "{";
  bool first = true;
  for (PlayerId i : coalition_members(s)) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

// A transferable-utility game: a player count n and one real worth per
// coalition of {0,...,n-1}, with the empty coalition fixed at worth 0.
class TUGame {
 public:
  TUGame(int n, std::vector<double> worth) : n_(n), worth_(std::move(worth)) {
    if (n_ < 1 || n_ > kMaxPlayers) {
      throw std::invalid_argument("TUGame: player count must be in [1, " +
                                  std::to_string(kMaxPlayers) + "]");
    }
    if (worth_.size() != (std::size_t{1} << n_)) {
      throw std::invalid_argument("TUGame: worth table must have 2^n entries");
    }
    if (worth_[0] != 0.0) {
      throw std::invalid_argument("TUGame: empty coalition must have worth 0");
    }
    for (double w : worth_) {
      if (!std::isfinite(w)) throw std::invalid_argument("TUGame: worth must be finite");
    }
  }

  int num_players() const { return n_; }
  Coalition grand_coalition() const { return full_coalition(n_); }
  std::size_t table_size() const { return worth_.size(); }

  double worth(Coalition s) const { return worth_[s]; }
  const std::vector<double>& table() const { return worth_; }

  bool operator==(const TUGame&) const = default;

 private:
  int n_;
  std::vector<double> worth_;
};

// Builds a game from a sparse coalition->worth map; unspecified coalitions
// default to worth 0.
inline TUGame make_game(int n, const std::map<Coalition, double>& worths) {
  if (n < 1 || n > kMaxPlayers) {
    throw std::invalid_argument("make_game: player count must be in [1, " +
                                std::to_string(kMaxPlayers) + "]");
  }
  std::vector<double> table(std::size_t{1} << n, 0.0);
  for (const auto& [s, w] : worths) {
    if (s >= table.size()) {
      throw std::invalid_argument("make_game: coalition " + coalition_label(s) +
                                  " is outside the player set");
    }
    if (s == 0 && w != 0.0) {
      throw std::invalid_argument("make_game: empty coalition must have worth 0");
    }
    if (!std::isfinite(w)) {
      throw std::invalid_argument("make_game: worth of " + coalition_label(s) +
                                  " is not finite");
    }
    table[s] = w;
  }
  return TUGame(n, std::move(table));
}

inline TUGame null_game(int n) { return make_game(n, {}); }

// e_T: worth 1 exactly on T, 0 elsewhere.
inline TUGame identity_game(int n, Coalition t) {
  if (t == 0) throw std::invalid_argument("identity_game: T must be nonempty");
  return make_game(n, {{t, 1.0}});
}

// u_T: worth 1 on every superset of T, 0 elsewhere.
inline TUGame unanimity_game(int n, Coalition t) {
  if (t == 0) throw std::invalid_argument("unanimity_game: T must be nonempty");
  if (t > full_coalition(n)) {
    throw std::invalid_argument("unanimity_game: T is outside the player set");
  }
  std::vector<double> table(std::size_t{1} << n, 0.0);
  for (Coalition s = 0; s < table.size(); ++s) {
    if ((s & t) == t) table[s] = 1.0;
  }
  return TUGame(n, std::move(table));
}

enum class BasisKind { kIdentity, kUnanimity };

inline TUGame basis_game(BasisKind kind, int n, Coalition t) {
  return kind == BasisKind::kIdentity ? identity_game(n, t) : unanimity_game(n, t);
}

inline TUGame add_games(const TUGame& a, const TUGame& b) {
  if (a.num_players() != b.num_players()) {
    throw std::invalid_argument("add_games: player counts differ");
  }
  std::vector<double> table(a.table());
  for (std::size_t s = 0; s < table.size(); ++s) table[s] += b.worth(static_cast<Coalition>(s));
  return TUGame(a.num_players(), std::move(table));
}

inline TUGame scale_game(double alpha, const TUGame& g) {
  std::vector<double> table(g.table());
  for (double& w : table) w *= alpha;
  return TUGame(g.num_players(), std::move(table));
}

// Restriction of g to the nonempty player set s, re-indexed so that the k-th
// smallest member of s becomes player k.
inline TUGame restrict_game(const TUGame& g, Coalition s) {
  if (s == 0) throw std::invalid_argument("restrict_game: player set must be nonempty");
  if (s > g.grand_coalition()) {
    throw std::invalid_argument("restrict_game: player set is outside the game");
  }
  const std::vector<PlayerId> members = coalition_members(s);
  const int k = static_cast<int>(members.size());
  std::vector<double> table(std::size_t{1} << k, 0.0);
  for (Coalition r = 0; r < table.size(); ++r) {
    table[r] = g.worth(expand_subset(r, members));
  }
  return TUGame(k, std::move(table));
}

// v(S) - v(S \ i), requires i in S.
inline double marginal_contribution(const TUGame& g, PlayerId i, Coalition s) {
  if (!contains(s, i)) {
    throw std::invalid_argument("marginal_contribution: player " + std::to_string(i) +
                                " is not in " + coalition_label(s));
  }
  return g.worth(s) - g.worth(s & ~singleton(i));
}

enum class PlayerRole { kNull, kProductive };

inline bool is_null_player(const TUGame& g, PlayerId i, double eps = kEps) {
  const Coalition rest = g.grand_coalition() & ~singleton(i);
  bool null = true;
  for_each_subset(rest, [&](Coalition s) {
    if (std::abs(g.worth(s | singleton(i)) - g.worth(s)) > eps) null = false;
  });
  return null;
}

inline PlayerRole classify_player(const TUGame& g, PlayerId i, double eps = kEps) {
  return is_null_player(g, i, eps) ? PlayerRole::kNull : PlayerRole::kProductive;
}

inline bool are_symmetric(const TUGame& g, PlayerId i, PlayerId j, double eps = kEps) {
  if (i == j) throw std::invalid_argument("are_symmetric: players must differ");
  const Coalition rest = g.grand_coalition() & ~(singleton(i) | singleton(j));
  bool symmetric = true;
  for_each_subset(rest, [&](Coalition s) {
    if (std::abs(g.worth(s | singleton(i)) - g.worth(s | singleton(j))) > eps) {
      symmetric = false;
    }
  });
  return symmetric;
}

// Harsanyi dividends of every coalition; value[0] = 0 and
// sum_{T subseteq S} value[T] recovers v(S).
struct DividendTable {
  int n = 0;
  std::vector<double> value;

  double at(Coalition s) const { return value[s]; }

  // Zeta round-trip: worth of s rebuilt from the dividends of its subsets.
  double worth(Coalition s) const {
    double total = 0.0;
    for_each_subset(s, [&](Coalition t) { total += value[t]; });
    return total;
  }
};

// Alternating-sum form, computed with the standard in-place subset Moebius
// transform: value[S] = sum_{T subseteq S} (-1)^{|S|-|T|} v(T).
inline DividendTable harsanyi_dividends(const TUGame& g) {
  DividendTable d{g.num_players(), g.table()};
  const std::size_t size = d.value.size();
  for (int i = 0; i < d.n; ++i) {
    const Coalition bit = singleton(i);
    for (Coalition s = 0; s < size; ++s) {
      if (s & bit) d.value[s] -= d.value[s ^ bit];
    }
  }
  return d;
}

// Recursive form: Delta(S) = v(S) - sum_{R strictly inside S} Delta(R).
// Cross-check for harsanyi_dividends; costs O(3^n).
inline DividendTable harsanyi_dividends_recursive(const TUGame& g) {
  DividendTable d{g.num_players(), std::vector<double>(g.table_size(), 0.0)};
  for (Coalition s = 1; s < d.value.size(); ++s) {
    double below = 0.0;
    for_each_subset(s, [&](Coalition r) {
      if (r != s) below += d.value[r];
    });
    d.value[s] = g.worth(s) - below;
  }
  return d;
}

enum class ShapleyForm { kDividend, kMarginal, kPermutation };

inline PayoffVector shapley_dividend_form(const TUGame& g) {
  const DividendTable d = harsanyi_dividends(g);
  PayoffVector out(g.num_players(), 0.0);
  for (Coalition s = 1; s < d.value.size(); ++s) {
    const double share = d.value[s] / coalition_size(s);
    for (Coalition rest = s; rest != 0; rest &= rest - 1) {
      out[std::countr_zero(rest)] += share;
    }
  }
  return out;
}

inline PayoffVector shapley_marginal_form(const TUGame& g) {
  const int n = g.num_players();
  std::vector<double> fact(static_cast<std::size_t>(n) + 1, 1.0);
  for (int k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;
  std::vector<double> weight(static_cast<std::size_t>(n), 0.0);
  for (int s = 0; s < n; ++s) weight[s] = fact[s] * fact[n - s - 1] / fact[n];

  PayoffVector out(n, 0.0);
  for (PlayerId i = 0; i < n; ++i) {
    const Coalition bit = singleton(i);
    for (Coalition s = 0; s < g.table_size(); ++s) {
      if (s & bit) continue;
      out[i] += weight[coalition_size(s)] * (g.worth(s | bit) - g.worth(s));
    }
  }
  return out;
}

// Exhaustive average of marginal contributions over all n! entry orders.
inline PayoffVector shapley_permutation_form(const TUGame& g, int oracle_cap = kMaxOraclePlayers) {
  const int n = g.num_players();
  if (n > oracle_cap) {
    throw std::invalid_argument("shapley: permutation form is capped at " +
                                std::to_string(oracle_cap) + " players");
  }
  std::vector<PlayerId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  PayoffVector acc(n, 0.0);
  std::uint64_t count = 0;
  do {
    Coalition s = 0;
    for (PlayerId i : order) {
      s |= singleton(i);
      acc[i] += g.worth(s) - g.worth(s ^ singleton(i));
    }
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  for (double& x : acc) x /= static_cast<double>(count);
  return acc;
}

inline PayoffVector shapley(const TUGame& g, ShapleyForm form = ShapleyForm::kDividend,
                            int oracle_cap = kMaxOraclePlayers) {
  switch (form) {
    case ShapleyForm::kDividend:
      return shapley_dividend_form(g);
    case ShapleyForm::kMarginal:
      return shapley_marginal_form(g);
    case ShapleyForm::kPermutation:
      return shapley_permutation_form(g, oracle_cap);
  }
  throw std::logic_error("shapley: unknown form");
}

// A value evaluated on a subgame: maps (game, active player set) to a payoff
// vector of length n with payoff 0 for every player outside the set.
using ValueOperator = std::function<PayoffVector(const TUGame&, Coalition)>;

inline PayoffVector scatter_subgame_payoffs(const PayoffVector& sub, Coalition s, int n) {
  PayoffVector out(static_cast<std::size_t>(n), 0.0);
  const std::vector<PlayerId> members = coalition_members(s);
  for (std::size_t k = 0; k < members.size(); ++k) out[members[k]] = sub[k];
  return out;
}

inline ValueOperator shapley_operator() {
  return [](const TUGame& g, Coalition s) {
    if (s == 0) return PayoffVector(g.num_players(), 0.0);
    return scatter_subgame_payoffs(shapley(restrict_game(g, s)), s, g.num_players());
  };
}

// Phi_i(S, v) = v(S)/|S| for members of S. Efficient but not standard for
// two-person games; used as a consistency counterexample.
inline ValueOperator equal_split_operator() {
  return [](const TUGame& g, Coalition s) {
    PayoffVector out(g.num_players(), 0.0);
    if (s == 0) return out;
    const double share = g.worth(s) / coalition_size(s);
    for (PlayerId i : coalition_members(s)) out[i] = share;
    return out;
  };
}

// Value dividends Theta^{Phi,i}(S) of a value on every subgame of g:
//   Theta^{Phi,i}({i}) = Phi_i({i}, v)
//   Theta^{Phi,i}(S)   = Phi_i(S, v) - sum_{K strictly inside S, i in K} Theta^{Phi,i}(K)
struct ValueDividends {
  int n = 0;
  std::vector<std::vector<double>> theta;  // theta[i][mask], 0 when i not in mask

  double player(PlayerId i, Coalition s) const { return theta[i][s]; }

  // Theta^{Phi}(S): coalition aggregate over the members of S.
  double coalition(Coalition s) const {
    double total = 0.0;
    for (PlayerId i : coalition_members(s)) total += theta[i][s];
    return total;
  }

  // Theta^{Phi,T}(K): aggregate over the members of T that sit in K.
  double group(Coalition t, Coalition k) const {
    double total = 0.0;
    for (PlayerId i : coalition_members(t & k)) total += theta[i][k];
    return total;
  }
};

inline ValueDividends value_dividends(const TUGame& g, const ValueOperator& phi) {
  const int n = g.num_players();
  ValueDividends vd{n, std::vector<std::vector<double>>(
                           static_cast<std::size_t>(n),
                           std::vector<double>(g.table_size(), 0.0))};
  for (Coalition s = 1; s < g.table_size(); ++s) {
    const PayoffVector pay = phi(g, s);
    for (PlayerId i : coalition_members(s)) {
      double below = 0.0;
      for_each_subset(s, [&](Coalition k) {
        if (k != s && contains(k, i)) below += vd.theta[i][k];
      });
      vd.theta[i][s] = pay[i] - below;
    }
  }
  return vd;
}

// Classical potential P(S, v) for every coalition S, from the recursion
// P(S) = (v(S) + sum_{i in S} P(S \ i)) / |S| seeded at P(empty) = 0.
inline std::vector<double> potential_table(const TUGame& g) {
  std::vector<double> p(g.table_size(), 0.0);
  for (Coalition s = 1; s < p.size(); ++s) {
    double below = 0.0;
    for (Coalition rest = s; rest != 0; rest &= rest - 1) {
      below += p[s ^ (rest & -rest)];
    }
    p[s] = (g.worth(s) + below) / coalition_size(s);
  }
  return p;
}

inline double potential(const TUGame& g) { return potential_table(g)[g.grand_coalition()]; }

// D^i P = P(N, v) - P(N \ i, v); the derivative vector is the Shapley value.
inline double potential_derivative(const TUGame& g, PlayerId i) {
  if (i < 0 || i >= g.num_players()) {
    throw std::invalid_argument("potential_derivative: no such player");
  }
  const std::vector<double> p = potential_table(g);
  return p[g.grand_coalition()] - p[g.grand_coalition() & ~singleton(i)];
}

enum class ReducedForm { kPayoff, kDividend };

// Hart/Mas-Colell reduced game on T, re-indexed to the members of T.
//   payoff form:   v_T(S) = v(S u T^c) - sum_{i in T^c} Phi_i(S u T^c, v)
//   dividend form: v_T(S) = sum_{K1 subseteq S, K1 != empty, K2 subseteq T^c}
//                               Theta^{Phi,K1}(K1 u K2)
// Both vanish at the empty coalition; they coincide for efficient values.
inline TUGame reduced_game(const TUGame& g, Coalition t, const ValueOperator& phi,
                           ReducedForm form = ReducedForm::kPayoff) {
  if (t == 0 || t >= g.grand_coalition()) {
    throw std::invalid_argument("reduced_game: T must be a nonempty proper subset");
  }
  const std::vector<PlayerId> members = coalition_members(t);
  const int k = static_cast<int>(members.size());
  const Coalition complement = g.grand_coalition() ^ t;
  std::vector<double> table(std::size_t{1} << k, 0.0);

  if (form == ReducedForm::kPayoff) {
    for (Coalition r = 1; r < table.size(); ++r) {
      const Coalition joint = expand_subset(r, members) | complement;
      const PayoffVector pay = phi(g, joint);
      double outside = 0.0;
      for (PlayerId i : coalition_members(complement)) outside += pay[i];
      table[r] = g.worth(joint) - outside;
    }
  } else {
    const ValueDividends vd = value_dividends(g, phi);
    for (Coalition r = 1; r < table.size(); ++r) {
      const Coalition s = expand_subset(r, members);
      double total = 0.0;
      for_each_subset(s, [&](Coalition k1) {
        if (k1 == 0) return;
        for_each_subset(complement, [&](Coalition k2) {
          total += vd.group(k1, k1 | k2);
        });
      });
      table[r] = total;
    }
  }
  return TUGame(k, std::move(table));
}

struct ConsistencyViolation {
  std::string check;  // "CON", "*-CON" or "STPG"
  Coalition subset = 0;
  PlayerId player = -1;
  double gap = 0.0;
};

struct ConsistencyReport {
  std::vector<ConsistencyViolation> violations;
  int checks_run = 0;

  bool pass() const { return violations.empty(); }
};

// Verifies Phi_j(T, v_T) = Phi_j(N, v) for every proper nonempty T (both
// reduced-game forms) and the two-person closed form on every player pair.
inline ConsistencyReport check_consistency(const TUGame& g, const ValueOperator& phi,
                                           double eps = kEps) {
  const int n = g.num_players();
  if (n < 2) throw std::invalid_argument("check_consistency: need at least two players");

  ConsistencyReport report;
  const PayoffVector base = phi(g, g.grand_coalition());

  for (Coalition t = 1; t < g.grand_coalition(); ++t) {
    const std::vector<PlayerId> members = coalition_members(t);
    for (ReducedForm form : {ReducedForm::kPayoff, ReducedForm::kDividend}) {
      const TUGame rg = reduced_game(g, t, phi, form);
      const PayoffVector pay = phi(rg, rg.grand_coalition());
      for (std::size_t k = 0; k < members.size(); ++k) {
        const double gap = std::abs(pay[k] - base[members[k]]);
        ++report.checks_run;
        if (gap > eps) {
          report.violations.push_back({form == ReducedForm::kPayoff ? "CON" : "*-CON", t,
                                       members[k], gap});
        }
      }
    }
  }

  // STPG on every two-player restriction: Phi_i = v(i) + (v({i,j}) - v(i) - v(j)) / 2.
  for (PlayerId i = 0; i < n; ++i) {
    for (PlayerId j = i + 1; j < n; ++j) {
      const Coalition pair = singleton(i) | singleton(j);
      const TUGame sub = restrict_game(g, pair);
      const PayoffVector pay = phi(sub, sub.grand_coalition());
      const double surplus = 0.5 * (sub.worth(3) - sub.worth(1) - sub.worth(2));
      const double want[2] = {sub.worth(1) + surplus, sub.worth(2) + surplus};
      const PlayerId ids[2] = {i, j};
      for (int k = 0; k < 2; ++k) {
        const double gap = std::abs(pay[k] - want[k]);
        ++report.checks_run;
        if (gap > eps) report.violations.push_back({"STPG", pair, ids[k], gap});
      }
    }
  }
  return report;
}

}  // namespace coalab
