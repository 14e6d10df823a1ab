#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "betti_table.hpp"
#include "expression.hpp"
#include "hilbert.hpp"
#include "ideal.hpp"
#include "json_io.hpp"
#include "koszul.hpp"
#include "stabilization.hpp"
#include "taylor.hpp"

namespace bettistab {
namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCapacity = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCheckFailure = 3;

namespace detail {

inline std::string join_sequence(const std::vector<std::int64_t>& seq,
                                 const char* separator) {
  std::string out;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k) out += separator;
    out += std::to_string(seq[k]);
  }
  return out;
}

inline std::string sequence_text(const std::vector<std::int64_t>& seq) {
  return "{" + join_sequence(seq, ", ") + "}";
}

inline std::string ideal_text(const std::vector<std::string>& gens) {
  std::string out = "(";
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k) out += ", ";
    out += gens[k];
  }
  out += ")";
  return out;
}

inline std::string linear_text(std::int64_t slope, std::int64_t intercept) {
  std::string out;
  if (slope == 0) return std::to_string(intercept);
  if (slope == 1)
    out = "n";
  else if (slope == -1)
    out = "-n";
  else
    out = std::to_string(slope) + "n";
  if (intercept > 0)
    out += " + " + std::to_string(intercept);
  else if (intercept < 0)
    out += " - " + std::to_string(-intercept);
  return out;
}

inline std::vector<std::string> generator_strings(const MonomialIdeal& I) {
  std::vector<std::string> out;
  out.reserve(I.num_generators());
  for (const Monomial& g : I.generators()) out.push_back(g.str());
  return out;
}

inline nlohmann::ordered_json stab_report_json(const StabReport& r) {
  nlohmann::ordered_json j;
  j["ideal"] = r.generator_strings;
  j["r"] = r.shift_r;
  nlohmann::ordered_json tables = nlohmann::ordered_json::object();
  for (const auto& [d, table] : r.tables)
    tables[std::to_string(d)] = betti_table_to_json(table);
  j["tables"] = std::move(tables);
  j["stab_seq"] = r.stab_seq;
  if (r.estimated_stab)
    j["estimated_stab"] = *r.estimated_stab;
  else
    j["estimated_stab"] = nullptr;
  j["stable_run_length"] = r.stable_run_length;
  j["max_power"] = r.max_power;
  j["lookahead"] = r.lookahead_used;
  j["equigenerated"] = r.equigenerated_degree.has_value();
  nlohmann::ordered_json recurrences = nlohmann::ordered_json::array();
  for (const auto& [d, earlier] : r.shape_recurrences)
    recurrences.push_back({d, earlier});
  j["recurrences"] = std::move(recurrences);
  return j;
}

inline void print_stab_report_text(const StabReport& r, bool include_bettis,
                                   std::ostream& out) {
  out << "ideal: " << ideal_text(r.generator_strings) << "\n";
  out << "r = " << r.shift_r << "\n";
  if (!r.equigenerated_degree)
    out << "note: not equigenerated; r is the lowest generator degree\n";
  out << "stab_seq = " << sequence_text(r.stab_seq) << "\n";
  for (const auto& [d, earlier] : r.shape_recurrences)
    out << "recurrence: shape of power " << d << " previously seen at power " << earlier
        << "\n";
  if (r.estimated_stab)
    out << "estimated_stab = " << *r.estimated_stab << "\n";
  else
    out << "estimated_stab = none\n";
  out << "stable_run_length = " << r.stable_run_length << "\n";
  if (include_bettis)
    for (const auto& [d, table] : r.tables) out << "d = " << d << "\n" << render_m2(table);
}

inline void print_table_csv(const BettiTable& B, std::int64_t d, bool header,
                            std::ostream& out) {
  if (header) out << "d,i,j,multiplicity\n";
  for (const auto& [ij, mult] : B.entries())
    out << d << ',' << ij.first << ',' << ij.second << ',' << mult << "\n";
}

struct CommonOptions {
  unsigned threads = 0;
  std::int64_t lattice_warn = 50'000'000;
};

inline KoszulOptions koszul_options(const CommonOptions& common, std::ostream& err) {
  KoszulOptions k;
  k.workers = common.threads;
  k.lattice_warn_threshold = common.lattice_warn;
  k.warn = [&err](const std::string& message) { err << "warning: " << message << "\n"; };
  return k;
}

// Deterministic bounded integer; avoids distribution differences across
// standard libraries.
inline std::int64_t bounded(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline MonomialIdeal random_ideal(std::mt19937_64& rng, int max_vars, int max_gens,
                                  exp_t max_exp) {
  const int n = static_cast<int>(bounded(rng, 1, max_vars));
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) names.push_back("x" + std::to_string(v + 1));
  RingPtr ring = make_ring(std::move(names));

  const int m = static_cast<int>(bounded(rng, 1, max_gens));
  std::vector<Monomial> gens;
  for (int g = 0; g < m; ++g) {
    std::vector<exp_t> e(n);
    bool nonzero = false;
    for (int v = 0; v < n; ++v) {
      e[v] = bounded(rng, 0, max_exp);
      nonzero |= e[v] != 0;
    }
    if (!nonzero) e[static_cast<std::size_t>(bounded(rng, 0, n - 1))] = 1;
    gens.emplace_back(ring, std::move(e));
  }
  return MonomialIdeal::from_generators(std::move(gens));
}

}  // namespace detail

/// Runs the command line. Everything user-facing goes to `out`; warnings and
/// errors go to `err`. Returns the process exit status.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Betti tables of monomial ideal powers and their shape stabilization"};
  app.name("bettistab");
  app.require_subcommand(1);

  detail::CommonOptions common;

  // ---- betti ----
  auto* betti = app.add_subcommand("betti", "Betti table of an ideal power");
  std::string betti_ring, betti_ideal, betti_format = "m2";
  std::int64_t betti_power = 1;
  bool betti_skeleton = false;
  betti->add_option("--ring", betti_ring, "comma-separated variable names")->required();
  betti->add_option("--ideal", betti_ideal, "comma-separated monomial generators")
      ->required();
  betti->add_option("--power", betti_power, "power d of the ideal (default 1)");
  betti->add_option("--format", betti_format, "m2|json|csv")
      ->check(CLI::IsMember({"m2", "json", "csv"}));
  betti->add_flag("--skeleton", betti_skeleton, "also print the resolution skeleton");
  betti->add_option("--threads", common.threads, "worker count (0 = auto)");
  betti->add_option("--lattice-warn", common.lattice_warn,
                    "lattice size warning threshold");

  // ---- stabseq ----
  auto* stab = app.add_subcommand("stabseq", "stabilization sequence of an ideal");
  std::string stab_ring, stab_ideal, stab_format = "text";
  std::int64_t stab_max_power = 0, stab_lookahead = 7;
  bool include_bettis = false;
  stab->add_option("--ring", stab_ring, "comma-separated variable names")->required();
  stab->add_option("--ideal", stab_ideal, "comma-separated monomial generators")
      ->required();
  stab->add_option("--max-power", stab_max_power, "largest power to examine")->required();
  stab->add_option("--lookahead", stab_lookahead,
                   "same-shape run required before estimating stabilization");
  stab->add_flag("--include-bettis", include_bettis,
                 "print one Betti table per sequence element");
  stab->add_option("--format", stab_format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  stab->add_option("--threads", common.threads, "worker count (0 = auto)");
  stab->add_option("--lattice-warn", common.lattice_warn,
                   "lattice size warning threshold");

  // ---- sweep ----
  auto* sweep = app.add_subcommand("sweep", "stabilization sweep over a linear family");
  std::string sweep_ring, sweep_family, sweep_range, sweep_format = "text";
  std::int64_t sweep_max_power = 0, sweep_lookahead = 7;
  bool sweep_fit = false;
  sweep->add_option("--ring", sweep_ring, "comma-separated variable names")->required();
  sweep->add_option("--family", sweep_family,
                    "generators with exponents linear in n, e.g. a^(2n)*b")
      ->required();
  sweep->add_option("--n", sweep_range, "parameter range A..B (or a single value)")
      ->required();
  sweep->add_option("--max-power", sweep_max_power, "largest power per member")
      ->required();
  sweep->add_option("--lookahead", sweep_lookahead,
                    "same-shape run required before estimating stabilization");
  sweep->add_flag("--fit", sweep_fit, "report exact linear fits over the range");
  sweep->add_option("--format", sweep_format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  sweep->add_option("--threads", common.threads, "worker count (0 = auto)");
  sweep->add_option("--lattice-warn", common.lattice_warn,
                    "lattice size warning threshold");

  // ---- check ----
  auto* check = app.add_subcommand("check", "randomized differential test of backends");
  std::int64_t check_count = 0;
  std::uint64_t check_seed = 0;
  int check_max_vars = 4, check_max_gens = 8;
  std::int64_t check_max_exp = 6;
  std::size_t check_taylor_cap = 14;
  check->add_option("--count", check_count, "number of random ideals")->required();
  check->add_option("--seed", check_seed, "random seed")->required();
  check->add_option("--max-vars", check_max_vars, "max variable count (default 4)");
  check->add_option("--max-gens", check_max_gens, "max generator count (default 8)");
  check->add_option("--max-exp", check_max_exp, "max exponent (default 6)");
  check->add_option("--taylor-cap", check_taylor_cap, "Taylor oracle generator cap");
  check->add_option("--threads", common.threads, "worker count (0 = auto)");

  try {
    std::vector<std::string> argv_copy = args;
    std::reverse(argv_copy.begin(), argv_copy.end());  // CLI11 parses reversed
    app.parse(argv_copy);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (betti->parsed()) {
      RingPtr ring = parse_ring(betti_ring);
      MonomialIdeal I = parse_ideal(betti_ideal, ring);
      const std::int64_t r = min_gen_degree(I);
      MonomialIdeal J = power(I, betti_power);
      const BettiTable B = betti_koszul(J, detail::koszul_options(common, err));
      if (betti_format == "m2") {
        out << render_m2(B);
        if (betti_skeleton) out << resolution_skeleton(B) << "\n";
      } else if (betti_format == "csv") {
        detail::print_table_csv(B, betti_power, /*header=*/true, out);
      } else {
        nlohmann::ordered_json j;
        j["ideal"] = detail::generator_strings(I);
        j["power"] = betti_power;
        j["r"] = r;
        j["table"] = betti_table_to_json(B);
        if (betti_skeleton) j["skeleton"] = resolution_skeleton(B);
        out << j.dump(2) << "\n";
      }
      return kExitOk;
    }

    if (stab->parsed()) {
      RingPtr ring = parse_ring(stab_ring);
      MonomialIdeal I = parse_ideal(stab_ideal, ring);
      StabOptions opt;
      opt.lookahead = stab_lookahead;
      opt.keep = (include_bettis || stab_format == "csv") ? KeepTables::sequence
                                                          : KeepTables::none;
      opt.koszul = detail::koszul_options(common, err);
      const StabReport report = stab_seq(I, stab_max_power, opt);
      if (stab_format == "text") {
        detail::print_stab_report_text(report, include_bettis, out);
      } else if (stab_format == "csv") {
        out << "d,i,j,multiplicity\n";
        for (const auto& [d, table] : report.tables)
          detail::print_table_csv(table, d, /*header=*/false, out);
      } else {
        out << detail::stab_report_json(report).dump(2) << "\n";
      }
      return kExitOk;
    }

    if (sweep->parsed()) {
      RingPtr ring = parse_ring(sweep_ring, /*family_mode=*/true);
      LinearExponentFamily family = parse_family(sweep_family, ring);
      std::int64_t n_lo = 0, n_hi = 0;
      {
        const auto dots = sweep_range.find("..");
        try {
          if (dots == std::string::npos) {
            n_lo = n_hi = std::stoll(sweep_range);
          } else {
            n_lo = std::stoll(sweep_range.substr(0, dots));
            n_hi = std::stoll(sweep_range.substr(dots + 2));
          }
        } catch (const std::exception&) {
          throw error(errc::argument, "--n expects A..B or a single integer");
        }
      }
      StabOptions opt;
      opt.lookahead = sweep_lookahead;
      opt.koszul = detail::koszul_options(common, err);
      const FamilySweepResult result = family_sweep(family, n_lo, n_hi, sweep_max_power, opt);

      if (sweep_format == "text") {
        for (const auto& [n, report] : result.reports) {
          out << "n = " << n << ": stab_seq = " << detail::sequence_text(report.stab_seq)
              << ", estimated_stab = ";
          if (report.estimated_stab)
            out << *report.estimated_stab;
          else
            out << "none";
          out << "\n";
        }
        if (sweep_fit) {
          if (result.stab_fit)
            out << "Stab(I_n) = "
                << detail::linear_text(result.stab_fit->slope, result.stab_fit->intercept)
                << " (exact on n=" << result.stab_fit->n_from << ".."
                << result.stab_fit->n_to << ")\n";
          else
            out << "Stab(I_n): no exact fit\n";
          if (result.cardinality_fit)
            out << "|StabSeq(I_n)| = "
                << detail::linear_text(result.cardinality_fit->slope,
                                       result.cardinality_fit->intercept)
                << " (exact on n=" << result.cardinality_fit->n_from << ".."
                << result.cardinality_fit->n_to << ")\n";
          else
            out << "|StabSeq(I_n)|: no exact fit\n";
        }
      } else if (sweep_format == "csv") {
        out << "n,stab_estimate,seq\n";
        for (const auto& [n, report] : result.reports) {
          out << n << ',';
          if (report.estimated_stab) out << *report.estimated_stab;
          out << ',' << detail::join_sequence(report.stab_seq, ";") << "\n";
        }
      } else {
        nlohmann::ordered_json j;
        j["family"] = [&] {
          std::vector<std::string> rows;
          for (const auto& g : family.generators()) {
            std::string row;
            for (std::size_t v = 0; v < g.size(); ++v) {
              if (g[v].slope == 0 && g[v].offset == 0) continue;
              if (!row.empty()) row += "*";
              row += ring->variable_name(v);
              if (g[v].slope == 0 && g[v].offset == 1) continue;
              row += "^(" + detail::linear_text(g[v].slope, g[v].offset) + ")";
            }
            rows.push_back(row.empty() ? "1" : row);
          }
          return rows;
        }();
        j["n_from"] = n_lo;
        j["n_to"] = n_hi;
        j["max_power"] = sweep_max_power;
        nlohmann::ordered_json reports = nlohmann::ordered_json::object();
        for (const auto& [n, report] : result.reports)
          reports[std::to_string(n)] = detail::stab_report_json(report);
        j["reports"] = std::move(reports);
        auto fit_json = [](const std::optional<LinearFit>& fit) -> nlohmann::ordered_json {
          if (!fit) return nullptr;
          return nlohmann::ordered_json{{"slope", fit->slope},
                                        {"intercept", fit->intercept},
                                        {"n_from", fit->n_from},
                                        {"n_to", fit->n_to}};
        };
        j["stab_fit"] = fit_json(result.stab_fit);
        j["cardinality_fit"] = fit_json(result.cardinality_fit);
        out << j.dump(2) << "\n";
      }
      return kExitOk;
    }

    if (check->parsed()) {
      std::mt19937_64 rng(check_seed);
      KoszulOptions kopt = detail::koszul_options(common, err);
      TaylorOptions topt;
      topt.generator_cap = check_taylor_cap;
      for (std::int64_t k = 0; k < check_count; ++k) {
        const MonomialIdeal I =
            detail::random_ideal(rng, check_max_vars, check_max_gens, check_max_exp);
        const BettiTable via_koszul = betti_koszul(I, kopt);
        const BettiTable via_taylor = betti_taylor(I, topt);
        std::int64_t max_shift = 0;
        for (const auto& [ij, mult] : via_koszul.entries())
          max_shift = std::max(max_shift, ij.second);
        const bool hilbert_ok = hilbert_consistency(
            I, via_koszul, max_shift + static_cast<std::int64_t>(I.num_vars()));
        if (!(via_koszul == via_taylor) || !hilbert_ok) {
          err << "error: check: backend disagreement on ideal " << k + 1 << " of "
              << check_count << ": ring = (";
          for (std::size_t v = 0; v < I.num_vars(); ++v) {
            if (v) err << ", ";
            err << I.ring().variable_name(v);
          }
          err << "); ideal = " << detail::ideal_text(detail::generator_strings(I)) << "\n";
          return kExitCheckFailure;
        }
      }
      out << "checked " << check_count << " random ideals (seed " << check_seed
          << "): koszul == taylor, hilbert consistent\n";
      return kExitOk;
    }
  } catch (const parse_error& e) {
    err << "error: parse: " << e.what() << "\n";
    return kExitUsage;
  } catch (const error& e) {
    if (e.code() == errc::capacity) {
      err << "error: capacity: " << e.what() << "\n";
      return kExitCapacity;
    }
    err << "error: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return kExitCapacity;
  }

  err << "error: usage: no subcommand\n";
  return kExitUsage;
}

}  // namespace cli
}  // namespace bettistab
