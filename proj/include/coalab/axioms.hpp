#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coalab/potential.hpp"
#include "coalab/prob.hpp"
#include "coalab/rng.hpp"

namespace coalab {

enum class Axiom { kEE, kENP, kCOM, kADD, kEBC, kPCON, kSTPPG };

inline const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> axioms = {Axiom::kEE,  Axiom::kENP, Axiom::kCOM,
                                            Axiom::kADD, Axiom::kEBC, Axiom::kPCON,
                                            Axiom::kSTPPG};
  return axioms;
}

inline std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::kEE: return "ee";
    case Axiom::kENP: return "enp";
    case Axiom::kCOM: return "com";
    case Axiom::kADD: return "add";
    case Axiom::kEBC: return "ebc";
    case Axiom::kPCON: return "pcon";
    case Axiom::kSTPPG: return "stppg";
  }
  throw std::logic_error("unknown axiom");
}

inline Axiom axiom_from_string(const std::string& id) {
  for (Axiom a : all_axioms()) {
    if (to_string(a) == id) return a;
  }
  throw std::invalid_argument("unknown axiom id: " + id);
}

// Raised by a value that is undefined on an instance (degenerate
// denominator); checkers count the instance as inapplicable.
struct InapplicableValue : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SuiteInstance {
  std::string label;
  ProbGame pg;
  TUGame partner;  // second game on the same (N, p^N); additivity checks use it
};

// Deterministic default suite: seeded random games (worths uniform in
// [-5,5]) with simplex / point-mass / zero-padded partial distributions,
// plus unanimity and identity specials, player counts cycling 1..5.
inline std::vector<SuiteInstance> default_suite(std::uint64_t seed = 42, int count = 200) {
  if (count < 1) throw std::invalid_argument("default_suite: count must be positive");
  Rng rng(seed);
  std::vector<SuiteInstance> out;
  out.reserve(static_cast<std::size_t>(count));
  int specials = 0;
  for (int k = 0; k < count; ++k) {
    const int n = (k / 10) % 5 + 1;
    const int slot = k % 10;
    std::string kind;
    TUGame game = null_game(n);
    CFPD dist = point_mass(n, full_coalition(n));
    switch (slot) {
      case 4: {
        game = random_game(rng, n);
        Coalition s = full_coalition(n);
        if ((k / 10) % 2 == 1) {
          s = static_cast<Coalition>(rng.uniform_int(1, static_cast<int>(full_coalition(n))));
        }
        dist = point_mass(n, s);
        kind = "point-mass";
        break;
      }
      case 5:
      case 9: {
        game = random_game(rng, n);
        dist = random_partial_cfpd(rng, n);
        kind = "partial";
        break;
      }
      case 6: {
        // Symmetric special: unanimity game under the uniform distribution.
        // Alternates the grand coalition (compatible pairs for COM) with a
        // proper subset (p-null players for ENP).
        Coalition t = full_coalition(n);
        if (n >= 2 && specials % 2 == 1) {
          t = static_cast<Coalition>(rng.uniform_int(1, static_cast<int>(full_coalition(n)) - 1));
        }
        ++specials;
        game = unanimity_game(n, t);
        dist = uniform_cfpd(n);
        kind = "unanimity " + coalition_label(t);
        break;
      }
      case 7: {
        const Coalition t =
            static_cast<Coalition>(rng.uniform_int(1, static_cast<int>(full_coalition(n))));
        game = identity_game(n, t);
        dist = random_simplex_cfpd(rng, n);
        kind = "identity " + coalition_label(t);
        break;
      }
      default: {
        game = random_game(rng, n);
        dist = random_simplex_cfpd(rng, n);
        kind = "simplex";
        break;
      }
    }
    TUGame partner = random_game(rng, n);
    out.push_back({"#" + std::to_string(k) + " n=" + std::to_string(n) + " " + kind,
                   ProbGame(std::move(game), std::move(dist)), std::move(partner)});
  }
  return out;
}

struct AxiomWitness {
  std::string instance;
  std::string detail;
  double gap = 0.0;
};

struct AxiomReport {
  Axiom axiom = Axiom::kEE;
  int checked = 0;  // instances the defining equation was evaluated on
  int skipped = 0;  // instances outside the axiom's domain, or inapplicable
  std::vector<AxiomWitness> witnesses;

  bool pass() const { return witnesses.empty(); }
};

// Evaluates the defining equation of one axiom on every suite instance and
// collects |gap| > eps witnesses. COM is checked on full-support instances
// for pairs in the support span, the domain the characterization assumes.
inline AxiomReport check_axiom(const ProbValueOperator& value, Axiom axiom,
                               const std::vector<SuiteInstance>& suite, double eps = kEps) {
  AxiomReport report;
  report.axiom = axiom;
  for (const SuiteInstance& inst : suite) {
    const ProbGame& pg = inst.pg;
    const int n = pg.num_players();
    try {
      switch (axiom) {
        case Axiom::kEE: {
          const PayoffVector pay = value(pg);
          double total = 0.0;
          for (double x : pay) total += x;
          const double gap = std::abs(total - expected_worth(pg));
          ++report.checked;
          if (gap > eps) report.witnesses.push_back({inst.label, "sum of payoffs", gap});
          break;
        }
        case Axiom::kENP: {
          const PayoffVector pay = value(pg);
          ++report.checked;
          for (PlayerId i = 0; i < n; ++i) {
            if (!is_p_null(pg, i, eps)) continue;
            const double gap = std::abs(pay[i]);
            if (gap > eps) {
              report.witnesses.push_back(
                  {inst.label, "p-null player " + std::to_string(i), gap});
            }
          }
          break;
        }
        case Axiom::kCOM: {
          if (!has_full_support(pg.dist)) {
            ++report.skipped;
            break;
          }
          const PayoffVector pay = value(pg);
          ++report.checked;
          for (PlayerId i = 0; i < n; ++i) {
            for (PlayerId j = i + 1; j < n; ++j) {
              if (!in_support_span(pg.dist, i) || !in_support_span(pg.dist, j)) continue;
              if (!are_compatible(pg, i, j, eps)) continue;
              const double gap = std::abs(pay[i] - pay[j]);
              if (gap > eps) {
                report.witnesses.push_back({inst.label,
                                            "compatible players " + std::to_string(i) +
                                                "," + std::to_string(j),
                                            gap});
              }
            }
          }
          break;
        }
        case Axiom::kADD: {
          const ProbGame sum_game(add_games(pg.game, inst.partner), pg.dist);
          const PayoffVector lhs = value(sum_game);
          const PayoffVector a = value(pg);
          const PayoffVector b = value(ProbGame(inst.partner, pg.dist));
          ++report.checked;
          for (PlayerId i = 0; i < n; ++i) {
            const double gap = std::abs(lhs[i] - a[i] - b[i]);
            if (gap > eps) {
              report.witnesses.push_back({inst.label, "player " + std::to_string(i), gap});
            }
          }
          break;
        }
        case Axiom::kEBC: {
          if (n < 2) {
            ++report.skipped;
            break;
          }
          const PayoffVector base = value(pg);
          ++report.checked;
          for (PlayerId i = 0; i < n; ++i) {
            for (PlayerId j = i + 1; j < n; ++j) {
              // dropped distributions stay in the ambient index space
              const PayoffVector minus_j = value(ProbGame(pg.game, drop_player(pg.dist, j)));
              const PayoffVector minus_i = value(ProbGame(pg.game, drop_player(pg.dist, i)));
              const double gap =
                  std::abs((base[i] - minus_j[i]) - (base[j] - minus_i[j]));
              if (gap > eps) {
                report.witnesses.push_back({inst.label,
                                            "players " + std::to_string(i) + "," +
                                                std::to_string(j),
                                            gap});
              }
            }
          }
          break;
        }
        case Axiom::kPCON: {
          if (n < 2) {
            ++report.skipped;
            break;
          }
          const PconReport pcon = check_pcon(pg, value, eps);
          ++report.checked;
          for (const PconViolation& v : pcon.violations) {
            report.witnesses.push_back({inst.label,
                                        "T=" + coalition_label(v.subset) + " player " +
                                            std::to_string(v.player),
                                        v.gap});
          }
          break;
        }
        case Axiom::kSTPPG: {
          if (n != 2) {
            ++report.skipped;
            break;
          }
          const PayoffVector pay = value(pg);
          ++report.checked;
          for (PlayerId i = 0; i < 2; ++i) {
            const double gap = std::abs(pay[i] - stppg_reference(pg, i));
            if (gap > eps) {
              report.witnesses.push_back({inst.label, "player " + std::to_string(i), gap});
            }
          }
          break;
        }
      }
    } catch (const InapplicableValue&) {
      ++report.skipped;
    }
  }
  return report;
}

enum class CounterexampleId {
  kPercapMargin,      // (E - E_{-i}) / |N|
  kEqualSplit,        // E / |N|
  kLowestDrop,        // zero to the lowest-leveled player, rest pro rata
  kExpshShift,        // ExpSh + k
  kPconButNotStppg,   // k * ExpSh
  kStppgButNotPcon,   // ExpSh for |N| <= 2, v(N) p(N) / |N| otherwise
};

inline const std::vector<CounterexampleId>& all_counterexamples() {
  static const std::vector<CounterexampleId> ids = {
      CounterexampleId::kPercapMargin,    CounterexampleId::kEqualSplit,
      CounterexampleId::kLowestDrop,      CounterexampleId::kExpshShift,
      CounterexampleId::kPconButNotStppg, CounterexampleId::kStppgButNotPcon};
  return ids;
}

inline std::string to_string(CounterexampleId id) {
  switch (id) {
    case CounterexampleId::kPercapMargin: return "percap_margin";
    case CounterexampleId::kEqualSplit: return "equal_split";
    case CounterexampleId::kLowestDrop: return "lowest_drop";
    case CounterexampleId::kExpshShift: return "expsh_shift";
    case CounterexampleId::kPconButNotStppg: return "pcon_but_not_stppg";
    case CounterexampleId::kStppgButNotPcon: return "stppg_but_not_pcon";
  }
  throw std::logic_error("unknown counterexample id");
}

inline CounterexampleId counterexample_from_string(const std::string& id) {
  for (CounterexampleId c : all_counterexamples()) {
    if (to_string(c) == id) return c;
  }
  throw std::invalid_argument("unknown value id: " + id);
}

// The axioms each counterexample is constructed to break.
inline std::vector<Axiom> designated_failures(CounterexampleId id) {
  switch (id) {
    case CounterexampleId::kPercapMargin: return {Axiom::kEE};
    case CounterexampleId::kEqualSplit: return {Axiom::kENP, Axiom::kEBC};
    case CounterexampleId::kLowestDrop: return {Axiom::kCOM};
    case CounterexampleId::kExpshShift: return {Axiom::kEE};
    case CounterexampleId::kPconButNotStppg: return {Axiom::kSTPPG};
    case CounterexampleId::kStppgButNotPcon: return {Axiom::kPCON};
  }
  throw std::logic_error("unknown counterexample id");
}

// k is the shift amount for expsh_shift and the scale factor for
// pcon_but_not_stppg; the other values ignore it.
inline ProbValueOperator counterexample_value(CounterexampleId id, double k = 1.0) {
  switch (id) {
    case CounterexampleId::kPercapMargin:
      return [](const ProbGame& pg) {
        const int n = pg.num_players();
        PayoffVector out(static_cast<std::size_t>(n), 0.0);
        for (PlayerId i = 0; i < n; ++i) {
          out[i] = expected_marginal_contribution(pg, i) / n;
        }
        return out;
      };
    case CounterexampleId::kEqualSplit:
      return [](const ProbGame& pg) {
        const int n = pg.num_players();
        return PayoffVector(static_cast<std::size_t>(n), expected_worth(pg) / n);
      };
    case CounterexampleId::kLowestDrop:
      return [](const ProbGame& pg) {
        const int n = pg.num_players();
        // lowest-leveled player: minimal singleton worth, smallest index on ties
        PlayerId lowest = 0;
        for (PlayerId i = 1; i < n; ++i) {
          if (pg.game.worth(singleton(i)) < pg.game.worth(singleton(lowest))) lowest = i;
        }
        PayoffVector x(static_cast<std::size_t>(n), 0.0);
        double denom = 0.0;
        for (PlayerId i = 0; i < n; ++i) {
          x[i] = expected_marginal_contribution(pg, i);
          if (i != lowest) denom += x[i];
        }
        if (n == 1 || std::abs(denom) <= kEps) {
          throw InapplicableValue("lowest_drop: degenerate denominator");
        }
        const double e = expected_worth(pg);
        PayoffVector out(static_cast<std::size_t>(n), 0.0);
        for (PlayerId i = 0; i < n; ++i) {
          if (i != lowest) out[i] = x[i] / denom * e;
        }
        return out;
      };
    case CounterexampleId::kExpshShift:
      return [k](const ProbGame& pg) {
        PayoffVector out = expected_shapley(pg);
        for (double& v : out) v += k;
        return out;
      };
    case CounterexampleId::kPconButNotStppg:
      return [k](const ProbGame& pg) {
        PayoffVector out = expected_shapley(pg);
        for (double& v : out) v *= k;
        return out;
      };
    case CounterexampleId::kStppgButNotPcon:
      return [](const ProbGame& pg) {
        const int n = pg.num_players();
        if (n <= 2) return expected_shapley(pg);
        const double share =
            pg.game.worth(pg.grand_coalition()) * pg.dist.prob(pg.grand_coalition()) / n;
        return PayoffVector(static_cast<std::size_t>(n), share);
      };
  }
  throw std::logic_error("unknown counterexample id");
}

inline double default_counterexample_parameter(CounterexampleId id) {
  return id == CounterexampleId::kPconButNotStppg ? 2.0 : 1.0;
}

// Value lookup for the CLI: "expsh" or a counterexample id.
inline ProbValueOperator prob_value_by_id(const std::string& id) {
  if (id == "expsh") return expected_shapley_operator();
  const CounterexampleId c = counterexample_from_string(id);
  return counterexample_value(c, default_counterexample_parameter(c));
}

struct IndependenceRow {
  std::string value_id;
  std::vector<AxiomReport> cells;  // aligned with all_axioms()
};

struct IndependenceMatrix {
  std::vector<IndependenceRow> rows;  // first row is expsh

  const AxiomReport& cell(const std::string& value_id, Axiom axiom) const {
    for (const IndependenceRow& row : rows) {
      if (row.value_id != value_id) continue;
      for (const AxiomReport& report : row.cells) {
        if (report.axiom == axiom) return report;
      }
    }
    throw std::invalid_argument("independence matrix: no cell " + value_id);
  }

  bool expsh_all_pass() const {
    for (const AxiomReport& report : rows.front().cells) {
      if (!report.pass()) return false;
    }
    return true;
  }

  // Pass is suite-relative; only failures are conclusive. The expected
  // pattern is: the expsh row is all-pass and every counterexample fails
  // each axiom it was built to break.
  bool expected_pattern() const {
    if (!expsh_all_pass()) return false;
    for (CounterexampleId id : all_counterexamples()) {
      for (Axiom axiom : designated_failures(id)) {
        if (cell(to_string(id), axiom).pass()) return false;
      }
    }
    return true;
  }
};

inline IndependenceMatrix independence_matrix(const std::vector<SuiteInstance>& suite,
                                              double eps = kEps) {
  IndependenceMatrix matrix;
  auto add_row = [&](const std::string& id, const ProbValueOperator& value) {
    IndependenceRow row{id, {}};
    for (Axiom axiom : all_axioms()) {
      row.cells.push_back(check_axiom(value, axiom, suite, eps));
    }
    matrix.rows.push_back(std::move(row));
  };
  add_row("expsh", expected_shapley_operator());
  for (CounterexampleId id : all_counterexamples()) {
    add_row(to_string(id),
            counterexample_value(id, default_counterexample_parameter(id)));
  }
  return matrix;
}

}  // namespace coalab
