// Acceptance suite: one criterion per reported line, each with its wall-time
// budget. Exits nonzero when any criterion fails. --stretch adds the long
// family and deep-power confirmations; --criterion N runs a single one.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bettistab/cli.hpp"
#include "bettistab/expression.hpp"
#include "bettistab/hilbert.hpp"
#include "bettistab/koszul.hpp"
#include "bettistab/stabilization.hpp"
#include "bettistab/taylor.hpp"
#include "test_util.hpp"

using namespace bettistab;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      notes.push_back(what);
    }
  }
};

std::string seq_text(const std::vector<std::int64_t>& seq) {
  return cli::detail::sequence_text(seq);
}

// ---- frozen grids from the worked examples ----

MonomialIdeal cubic_ideal() {
  return parse_ideal("x1*x2^2, x1*x3^2, x2^3, x1^3", parse_ring("x1,x2,x3"));
}
BettiTable cubic_table() {
  return BettiTable::from_entries({{0, 3, 4}, {1, 4, 1}, {1, 5, 3}, {2, 7, 1}});
}
const char* cubic_grid() {
  return
      "     - 0 1 2\n"
      "total: 4 4 1\n"
      "    3: 4 1 .\n"
      "    4: . 3 .\n"
      "    5: . . 1\n";
}

MonomialIdeal square_ci_ideal() {
  return parse_ideal("x1^2, x2^2, x3^2, x4^2", parse_ring("x1,x2,x3,x4"));
}
BettiTable square_ci_d1() {
  return BettiTable::from_entries({{0, 2, 4}, {1, 4, 6}, {2, 6, 4}, {3, 8, 1}});
}
BettiTable square_ci_d2() {
  return BettiTable::from_entries({{0, 4, 10}, {1, 6, 20}, {2, 8, 15}, {3, 10, 4}});
}

MonomialIdeal quartic4v_ideal() {
  return parse_ideal("x1*x2*x3*x4, x2^4, x1*x4^3", parse_ring("x1,x2,x3,x4"));
}
std::map<std::int64_t, BettiTable> quartic4v_tables() {
  std::map<std::int64_t, BettiTable> t;
  t[1] = BettiTable::from_entries({{0, 4, 3}, {1, 6, 1}, {1, 7, 1}, {1, 8, 1}, {2, 9, 1}});
  t[2] = BettiTable::from_entries(
      {{0, 8, 6}, {1, 10, 3}, {1, 11, 4}, {2, 12, 2}, {1, 12, 2}, {2, 13, 2}});
  t[3] = BettiTable::from_entries(
      {{0, 12, 10}, {1, 14, 6}, {1, 15, 9}, {2, 16, 6}, {1, 16, 3}, {2, 17, 3}});
  return t;
}

MonomialIdeal quartic3v_ideal() {
  return parse_ideal("x1^3*x2, x2^4, x1^2*x3^2, x2^3*x3", parse_ring("x1,x2,x3"));
}
std::map<std::int64_t, BettiTable> quartic3v_tables() {
  std::map<std::int64_t, BettiTable> t;
  t[1] = BettiTable::from_entries(
      {{0, 4, 4}, {1, 5, 1}, {1, 6, 1}, {1, 7, 3}, {2, 8, 2}});
  t[2] = BettiTable::from_entries(
      {{0, 8, 10}, {1, 9, 5}, {1, 10, 3}, {1, 11, 7}, {2, 12, 6}});
  t[3] = BettiTable::from_entries({{0, 12, 20},
                                   {1, 13, 14},
                                   {2, 14, 1},
                                   {1, 14, 7},
                                   {2, 15, 1},
                                   {1, 15, 11},
                                   {2, 16, 11}});
  return t;
}

MonomialIdeal nonic_ideal() {
  return parse_ideal("x1^3*x2^3*x3^3, x2^6*x3^3, x1^4*x3^5, x1^8*x2",
                     parse_ring("x1,x2,x3"));
}
std::map<std::int64_t, BettiTable> nonic_tables() {
  std::map<std::int64_t, BettiTable> t;
  t[1] = BettiTable::from_entries({{0, 9, 4}, {1, 12, 2}, {1, 14, 2}, {2, 16, 1}});
  t[2] = BettiTable::from_entries({{0, 18, 10},
                                   {1, 20, 1},
                                   {1, 21, 8},
                                   {2, 23, 1},
                                   {1, 23, 6},
                                   {2, 24, 2},
                                   {2, 25, 3}});
  t[3] = BettiTable::from_entries({{0, 27, 20},
                                   {1, 29, 4},
                                   {1, 30, 21},
                                   {2, 31, 1},
                                   {2, 32, 5},
                                   {1, 32, 10},
                                   {2, 33, 5},
                                   {2, 34, 5}});
  t[4] = BettiTable::from_entries({{0, 36, 35},
                                   {1, 37, 1},
                                   {1, 38, 10},
                                   {1, 39, 41},
                                   {2, 40, 4},
                                   {2, 41, 13},
                                   {1, 41, 14},
                                   {2, 42, 8},
                                   {2, 43, 7}});
  t[6] = BettiTable::from_entries({{0, 54, 84},
                                   {1, 55, 10},
                                   {1, 56, 39},
                                   {2, 57, 1},
                                   {1, 57, 95},
                                   {2, 58, 20},
                                   {2, 59, 37},
                                   {1, 59, 22},
                                   {2, 60, 14},
                                   {2, 61, 11}});
  t[13] = BettiTable::from_entries({{0, 117, 560},
                                    {1, 118, 255},
                                    {2, 119, 1},
                                    {1, 119, 460},
                                    {2, 120, 130},
                                    {1, 120, 336},
                                    {2, 121, 216},
                                    {2, 122, 135},
                                    {1, 122, 50},
                                    {2, 123, 35},
                                    {2, 124, 25}});
  return t;
}

MonomialIdeal deg24_ideal() {
  return parse_ideal("x1^8*x2^8*x3^8, x1^4*x2^16*x3^4, x1*x2^23, x2^12*x3^12",
                     parse_ring("x1,x2,x3"));
}

const char* family_text() {
  return "a^(2n)*b^(2n)*c^(2n), b^(4n)*c^(2n), a^(3n)*c^(3n), a^(6n-1)*b";
}
LinearExponentFamily linear_family() {
  return parse_family(family_text(), parse_ring("a,b,c", /*family_mode=*/true));
}

// ---- harness ----

struct Harness {
  bool stretch = false;
  KoszulOptions koszul;
  std::vector<std::pair<MonomialIdeal, BettiTable>> produced;  // criteria 1-7
  std::vector<MonomialIdeal> corpus;                           // criterion 8
  std::vector<BettiTable> corpus_tables;

  StabReport run_stab(const MonomialIdeal& I, std::int64_t max_power) {
    StabOptions opt;
    opt.keep = KeepTables::all;
    opt.koszul = koszul;
    StabReport report = stab_seq(I, max_power, opt);
    const auto powers = powers_up_to(I, max_power);
    for (const auto& [d, table] : report.tables)
      produced.push_back({powers[d - 1], table});
    return report;
  }

  static BettiTable table_of(const StabReport& report, std::int64_t d) {
    for (const auto& [power, table] : report.tables)
      if (power == d) return table;
    throw error(errc::argument, "power not retained");
  }
};

bool tables_equal(Check& check, const BettiTable& got, const BettiTable& want,
                  const std::string& label) {
  if (got == want) return true;
  std::ostringstream detail;
  detail << label << " differs; got\n" << render_m2(got) << "want\n" << render_m2(want);
  check.expect(false, detail.str());
  return false;
}

// ---- criteria ----

Check criterion1(Harness& h) {
  Check c;
  const auto I = cubic_ideal();
  const auto B = betti_koszul(I, h.koszul);
  tables_equal(c, B, cubic_table(), "betti table of the worked example");
  c.expect(B.total_betti(0) == 4 && B.total_betti(1) == 4 && B.total_betti(2) == 1,
           "total Betti numbers (4, 4, 1)");
  c.expect(render_m2(B) == cubic_grid(), "rendered grid byte-for-byte");
  h.produced.push_back({I, B});
  return c;
}

Check criterion2(Harness& h) {
  Check c;
  const auto I = square_ci_ideal();
  const auto B1 = betti_koszul(I, h.koszul);
  const auto B2 = betti_koszul(power(I, 2), h.koszul);
  tables_equal(c, B1, square_ci_d1(), "first power");
  tables_equal(c, B2, square_ci_d2(), "second power");
  c.expect(same_shape(B1, 1, B2, 2, 2), "shapes agree with r = 2");
  h.produced.push_back({I, B1});
  h.produced.push_back({power(I, 2), B2});
  return c;
}

Check criterion3(Harness& h) {
  Check c;
  StabOptions opt;
  opt.koszul = h.koszul;
  const auto report = h.run_stab(quartic4v_ideal(), 10);
  for (const auto& [d, want] : quartic4v_tables())
    tables_equal(c, Harness::table_of(report, d), want,
                 "power " + std::to_string(d));
  c.expect(report.stab_seq == std::vector<std::int64_t>{1, 2},
           "stab_seq " + seq_text(report.stab_seq) + " != {1, 2}");
  c.expect(report.estimated_stab == 2, "estimated stabilization at 2");
  return c;
}

Check criterion4(Harness& h) {
  Check c;
  const auto report = h.run_stab(quartic3v_ideal(), 25);
  const auto frozen = quartic3v_tables();
  for (const auto& [d, want] : frozen)
    tables_equal(c, Harness::table_of(report, d), want, "power " + std::to_string(d));
  c.expect(report.stab_seq == std::vector<std::int64_t>{1, 3},
           "stab_seq " + seq_text(report.stab_seq) + " != {1, 3}");
  const auto B1 = Harness::table_of(report, 1);
  const auto B2 = Harness::table_of(report, 2);
  const auto B3 = Harness::table_of(report, 3);
  c.expect(same_shape(B1, 1, B2, 2, 4), "powers 1 and 2 share a shape");
  c.expect(!same_shape(B2, 2, B3, 3, 4), "powers 2 and 3 differ in shape");
  return c;
}

Check criterion5(Harness& h) {
  Check c;
  const auto report = h.run_stab(nonic_ideal(), 25);
  const std::vector<std::int64_t> want_seq{1, 2, 3, 4, 6, 13};
  c.expect(report.stab_seq == want_seq,
           "stab_seq " + seq_text(report.stab_seq) + " != " + seq_text(want_seq));
  for (const auto& [d, want] : nonic_tables())
    tables_equal(c, Harness::table_of(report, d), want, "power " + std::to_string(d));
  if (h.stretch) {
    StabOptions opt;
    opt.koszul = h.koszul;
    const auto deep = stab_seq(nonic_ideal(), 100, opt);
    c.expect(deep.stab_seq == want_seq, "shape fixed through power 100 (stretch)");
  }
  return c;
}

Check criterion6(Harness& h) {
  Check c;
  const auto report = h.run_stab(deg24_ideal(), 20);
  const std::vector<std::int64_t> want_seq{1, 2, 3, 5, 7, 9, 15, 17, 19};
  c.expect(report.stab_seq == want_seq,
           "stab_seq " + seq_text(report.stab_seq) + " != " + seq_text(want_seq));
  return c;
}

Check criterion7(Harness& h) {
  Check c;
  const auto F = linear_family();
  c.expect(instantiate(F, 1) ==
               parse_ideal("a^2*b^2*c^2, b^4*c^2, a^3*c^3, a^5*b",
                           parse_ring("a,b,c")),
           "family at n = 1");

  const std::vector<std::pair<std::int64_t, std::int64_t>> runs{{1, 13}, {2, 18}, {3, 30}};
  const std::map<std::int64_t, std::vector<std::int64_t>> want{
      {1, {1, 2, 6}},
      {2, {1, 2, 3, 5, 6, 11}},
      {3, {1, 2, 3, 5, 6, 11, 17, 23}}};
  for (const auto& [n, max_power] : runs) {
    const auto report = h.run_stab(instantiate(F, n), max_power);
    c.expect(report.stab_seq == want.at(n),
             "n = " + std::to_string(n) + ": stab_seq " + seq_text(report.stab_seq) +
                 " != " + seq_text(want.at(n)));
  }

  StabOptions opt;
  opt.koszul = h.koszul;
  const auto sweep = family_sweep(F, 2, 3, 30, opt);
  c.expect(sweep.stab_fit && sweep.stab_fit->slope == 12 &&
               sweep.stab_fit->intercept == -13,
           "stabilization index fit 12n - 13");
  c.expect(sweep.cardinality_fit && sweep.cardinality_fit->slope == 2 &&
               sweep.cardinality_fit->intercept == 2,
           "cardinality fit 2n + 2");
  c.expect(stab_seq_closed_form_check(3, want.at(3)), "closed form at n = 3");

  if (h.stretch) {
    const auto report4 = h.run_stab(instantiate(F, 4), 42);
    const std::vector<std::int64_t> want4{1, 2, 3, 5, 6, 11, 17, 23, 29, 35};
    c.expect(report4.stab_seq == want4, "n = 4 sequence (stretch)");
    c.expect(stab_seq_closed_form_check(4, report4.stab_seq),
             "closed form at n = 4 (stretch)");
    const auto sweep4 = family_sweep(F, 2, 4, 42, opt);
    c.expect(sweep4.stab_fit && sweep4.stab_fit->slope == 12 &&
                 sweep4.stab_fit->intercept == -13 && sweep4.stab_fit->n_to == 4,
             "stabilization fit over n = 2..4 (stretch)");
  }
  return c;
}

Check criterion8(Harness& h) {
  Check c;
  std::mt19937_64 rng(20250808);
  TaylorOptions taylor_opt;
  for (int round = 0; round < 200; ++round) {
    const auto I = testutil::random_ideal(rng, 4, 8, 6);
    const auto via_koszul = betti_koszul(I, h.koszul);
    const auto via_taylor = betti_taylor(I, taylor_opt);
    if (!(via_koszul == via_taylor)) {
      std::string gens;
      for (const auto& g : I.generators()) gens += g.str() + " ";
      c.expect(false, "backend mismatch on corpus ideal " + std::to_string(round) +
                          ": " + gens);
    }
    h.corpus.push_back(I);
    h.corpus_tables.push_back(via_koszul);
  }
  return c;
}

Check criterion9(Harness& h) {
  Check c;
  std::size_t index = 0;
  auto check_one = [&](const MonomialIdeal& I, const BettiTable& B) {
    std::int64_t max_shift = 0;
    for (const auto& [ij, mult] : B.entries()) max_shift = std::max(max_shift, ij.second);
    const std::int64_t j_max = max_shift + static_cast<std::int64_t>(I.num_vars());
    if (!hilbert_consistency(I, B, j_max))
      c.expect(false, "hilbert mismatch on table " + std::to_string(index));
    ++index;
  };
  for (const auto& [I, B] : h.produced) check_one(I, B);
  for (std::size_t k = 0; k < h.corpus.size(); ++k)
    check_one(h.corpus[k], h.corpus_tables[k]);
  c.expect(index > 0, "tables were collected");
  return c;
}

Check criterion10(Harness& h) {
  Check c;
  for (std::size_t k = 0; k < h.corpus.size(); ++k) {
    const auto& I = h.corpus[k];
    const auto& B = h.corpus_tables[k];
    const auto n = static_cast<int>(I.num_vars());

    std::map<std::int64_t, std::int64_t> by_degree;
    for (const auto& g : I.generators()) ++by_degree[g.total_degree()];
    for (const auto& [j, count] : by_degree)
      if (B.at(0, j) != count)
        c.expect(false, "column-zero generator count, corpus " + std::to_string(k));
    for (const auto& [ij, mult] : B.entries())
      if (ij.first == 0 && by_degree[ij.second] != mult)
        c.expect(false, "stray column-zero entry, corpus " + std::to_string(k));

    if (B.max_i() >= n)
      c.expect(false, "projective dimension bound, corpus " + std::to_string(k));

    const auto refined = multigraded_betti(I);
    const auto lattice = testutil::brute_force_lattice(I);
    BettiTable summed;
    for (const auto& [key, mult] : refined.entries) {
      if (!lattice.count(key.second)) {
        c.expect(false, "multigraded support outside lattice, corpus " +
                            std::to_string(k));
        continue;
      }
      std::int64_t deg = 0;
      for (exp_t e : key.second) deg += e;
      summed.add(key.first, deg, mult);
    }
    if (!(summed == B))
      c.expect(false, "multigraded sum != graded table, corpus " + std::to_string(k));
  }
  return c;
}

Check criterion11(Harness&) {
  Check c;

  struct Golden {
    std::string name;
    std::vector<std::string> args;
    std::string expected;
  };
  std::vector<Golden> goldens;

  goldens.push_back(
      {"betti",
       {"betti", "--ring", "x1,x2,x3", "--ideal", "x1*x2^2, x1*x3^2, x2^3, x1^3"},
       cubic_grid()});

  goldens.push_back({"stabseq",
                     {"stabseq", "--ring", "x1,x2,x3", "--ideal",
                      "x1^3*x2, x2^4, x1^2*x3^2, x2^3*x3", "--max-power", "25"},
                     "ideal: (x2^3*x3, x2^4, x1^2*x3^2, x1^3*x2)\n"
                     "r = 4\n"
                     "stab_seq = {1, 3}\n"
                     "estimated_stab = 3\n"
                     "stable_run_length = 22\n"});

  goldens.push_back(
      {"sweep",
       {"sweep", "--ring", "a,b,c", "--family", family_text(), "--n", "2..4",
        "--max-power", "42", "--fit"},
       "n = 2: stab_seq = {1, 2, 3, 5, 6, 11}, estimated_stab = 11\n"
       "n = 3: stab_seq = {1, 2, 3, 5, 6, 11, 17, 23}, estimated_stab = 23\n"
       "n = 4: stab_seq = {1, 2, 3, 5, 6, 11, 17, 23, 29, 35}, estimated_stab = 35\n"
       "Stab(I_n) = 12n - 13 (exact on n=2..4)\n"
       "|StabSeq(I_n)| = 2n + 2 (exact on n=2..4)\n"});

  for (const auto& golden : goldens) {
    std::string first;
    for (const std::string threads : {"1", "2", "8"}) {
      auto args = golden.args;
      args.push_back("--threads");
      args.push_back(threads);
      std::ostringstream out, err;
      const int status = cli::run_cli(args, out, err);
      c.expect(status == 0, golden.name + ": exit status with " + threads + " workers");
      c.expect(err.str().empty(), golden.name + ": stderr clean");
      if (first.empty())
        first = out.str();
      else
        c.expect(out.str() == first,
                 golden.name + ": byte-identical across worker counts");
      c.expect(out.str() == golden.expected, golden.name + ": matches the golden text");
    }
    // repeated run with identical arguments
    std::ostringstream out, err;
    auto args = golden.args;
    args.push_back("--threads");
    args.push_back("2");
    (void)cli::run_cli(args, out, err);
    c.expect(out.str() == first, golden.name + ": repeated run is byte-identical");
  }
  return c;
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // 0 = no budget
  std::function<Check(Harness&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  Harness harness;
  int only = 0;
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--stretch") harness.stretch = true;
    else if (arg == "--criterion" && a + 1 < argc) only = std::atoi(argv[++a]);
    else {
      std::cerr << "usage: acceptance [--stretch] [--criterion N]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "worked example exactness and rendering", 1.0, criterion1},
      {2, "complete intersection pair and shared shape", 5.0, criterion2},
      {3, "three powers and the {1, 2} sequence", 30.0, criterion3},
      {4, "shape recurrence pitfall at power 3", 120.0, criterion4},
      {5, "six-element sequence with lookahead seven", 600.0, criterion5},
      {6, "nine-element sequence up to power 20", 1200.0, criterion6},
      {7, "linear family sweep and exact fits", 1800.0, criterion7},
      {8, "backend agreement on 200 random ideals", 300.0, criterion8},
      {9, "hilbert consistency of every produced table", 0.0, criterion9},
      {10, "structural invariants on the random corpus", 0.0, criterion10},
      {11, "CLI goldens across worker counts", 0.0, criterion11},
  };

  bool all_ok = true;
  for (const auto& criterion : criteria) {
    if (only != 0 && criterion.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Check check;
    try {
      check = criterion.run(harness);
    } catch (const std::exception& e) {
      check.ok = false;
      check.notes.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = criterion.budget_seconds == 0.0 ||
                           elapsed <= criterion.budget_seconds;
    const bool pass = check.ok && in_budget;
    all_ok = all_ok && pass;

    std::ostringstream line;
    line << "criterion " << (criterion.id < 10 ? " " : "") << criterion.id << ": "
         << (pass ? "PASS" : "FAIL") << "  " << std::fixed;
    line.precision(2);
    line << elapsed << "s";
    if (criterion.budget_seconds > 0) line << " (budget " << criterion.budget_seconds << "s)";
    line << "  " << criterion.name;
    std::cout << line.str() << "\n";
    if (!in_budget) std::cout << "    over budget\n";
    for (const auto& note : check.notes) std::cout << "    " << note << "\n";
  }
  return all_ok ? 0 : 1;
}
