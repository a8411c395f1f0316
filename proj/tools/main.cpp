// main.cpp - bruhatkit command line: enumeration, verification, export.
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bruhatkit/errors.hpp"
#include "bruhatkit/export.hpp"
#include "bruhatkit/verify.hpp"

using namespace bruhatkit;

namespace {

std::size_t group_cap() {
  const char* env = std::getenv("BRUHATKIT_MAX_GROUP");
  if (env == nullptr || *env == '\0') return WeylGroup::kDefaultCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0' || v == 0)
    throw ConfigError("BRUHATKIT_MAX_GROUP must be a positive integer");
  return static_cast<std::size_t>(v);
}

// Comma-separated 1-based indices ("1,2,1"); empty string means empty list.
std::vector<int> parse_csv(const std::string& s, const std::string& what) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t comma = s.find(',', pos);
    std::string tok =
        comma == std::string::npos ? s.substr(pos) : s.substr(pos, comma - pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.empty() || v < 1)
      throw ConfigError("bad " + what + " entry '" + tok + "' in '" + s + "'");
    out.push_back(v - 1);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

SimpleSubset parse_subset(const std::string& s, const RootSystem& rs, const char* name) {
  SimpleSubset out{};
  for (int i : parse_csv(s, "subset")) {
    if (i >= rs.rank)
      throw ConfigError(std::string(name) + " index " + std::to_string(i + 1) +
                        " exceeds rank " + std::to_string(rs.rank));
    out = out.with(i);
  }
  return out;
}

std::string label(const WeylGroup& g, WeylGroup::Id w) {
  const Word& word = g.word(w);
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(word[k] + 1);
  }
  return out;
}

std::string sys_name(const RootSystem& rs) {
  return to_string(rs.type) + "_" + std::to_string(rs.rank);
}

int cmd_roots(const std::string& type, int rank, bool json_out) {
  RootSystem rs = build_root_system(parse_cartan_type(type), rank);
  if (json_out) {
    std::cout << roots_json(rs);
    return 0;
  }
  std::cout << sys_name(rs) << ": " << rs.roots.size() << " roots, "
            << rs.positive.size() << " positive, " << rs.nondivisible.size()
            << " nondivisible\n";
  std::cout << "positive roots (coords in simple basis):\n";
  for (const Root& r : rs.positive) {
    std::cout << " ";
    for (int c : r.c) std::cout << ' ' << c;
    std::cout << '\n';
  }
  std::cout << "theta on simples:";
  for (int i = 0; i < rs.rank; ++i) std::cout << ' ' << rs.theta_simple[i] + 1;
  std::cout << '\n';
  return 0;
}

int cmd_weyl(const std::string& type, int rank, bool json_out) {
  RootSystem rs = build_root_system(parse_cartan_type(type), rank);
  WeylGroup g = WeylGroup::enumerate(rs, group_cap());
  if (json_out) {
    std::cout << weyl_json(g);
    return 0;
  }
  std::cout << sys_name(rs) << ": " << g.size() << " elements\n";
  for (WeylGroup::Id w = 0; w < g.size(); ++w)
    std::cout << w << ' ' << g.len(w) << ' ' << label(g, w) << '\n';
  return 0;
}

int cmd_bruhat_check(const std::string& type, int rank, const std::string& word_s,
                     const std::string& target_s) {
  RootSystem rs = build_root_system(parse_cartan_type(type), rank);
  WeylGroup g = WeylGroup::enumerate(rs, group_cap());
  BruhatOrder order(g);
  Word word = parse_csv(word_s, "word");
  WeylGroup::Id target = g.id_of(evaluate_word(rs, parse_csv(target_s, "word")));
  Subexpression sub = find_distinguished(order, word, target);
  std::cout << "distinguished stages for target " << label(g, target) << " in word "
            << (word_s.empty() ? "e" : word_s) << ":\n";
  for (std::size_t k = 0; k < sub.stages.size(); ++k)
    std::cout << (k ? " -> " : "") << label(g, sub.stages[k]);
  std::cout << '\n';
  return 0;
}

int cmd_bruhat_matrix(const std::string& type, int rank, bool dot_out, bool json_out) {
  RootSystem rs = build_root_system(parse_cartan_type(type), rank);
  WeylGroup g = WeylGroup::enumerate(rs, group_cap());
  BruhatOrder order(g);
  if (dot_out) {
    std::cout << bruhat_dot(order);
    return 0;
  }
  if (json_out) {
    std::cout << bruhat_matrix_json(order);
    return 0;
  }
  std::cout << sys_name(rs) << ": row a, column b, 1 iff a <= b\n";
  for (WeylGroup::Id a = 0; a < g.size(); ++a) {
    for (WeylGroup::Id b = 0; b < g.size(); ++b)
      std::cout << (order.leq(a, b) ? '1' : '0');
    std::cout << '\n';
  }
  return 0;
}

int cmd_dcosets(const std::string& type, int rank, const std::string& S_s,
                const std::string& T_s, bool json_out) {
  RootSystem rs = build_root_system(parse_cartan_type(type), rank);
  WeylGroup g = WeylGroup::enumerate(rs, group_cap());
  SimpleSubset S = parse_subset(S_s, rs, "S"), T = parse_subset(T_s, rs, "T");
  DoubleCosetTable table = enumerate_WST(g, S, T);
  if (json_out) {
    std::cout << dcosets_json(table);
    return 0;
  }
  std::cout << sys_name(rs) << " S=" << to_string(S, rs.rank)
            << " T=" << to_string(T, rs.rank) << ": " << table.r()
            << " minimal representatives\n";
  for (int k = 0; k < table.r(); ++k)
    std::cout << "  " << label(g, table.reps[k]) << " length " << g.len(table.reps[k])
              << " omega " << label(g, table.omega[k]) << '\n';
  return 0;
}

int cmd_omega(const std::string& type, int rank, const std::string& S_s,
              const std::string& T_s, const std::string& u_s, bool json_out) {
  RootSystem rs = build_root_system(parse_cartan_type(type), rank);
  WeylGroup g = WeylGroup::enumerate(rs, group_cap());
  SimpleSubset S = parse_subset(S_s, rs, "S"), T = parse_subset(T_s, rs, "T");
  if (!u_s.empty()) {
    WeylGroup::Id u = g.id_of(evaluate_word(rs, parse_csv(u_s, "word")));
    std::cout << label(g, omega(g, u, S, T)) << '\n';
    return 0;
  }
  DoubleCosetTable table = enumerate_WST(g, S, T);
  if (json_out) {
    std::cout << dcosets_json(table);
    return 0;
  }
  for (int k = 0; k < table.r(); ++k)
    std::cout << label(g, table.reps[k]) << " -> " << label(g, table.omega[k]) << '\n';
  return 0;
}

int cmd_orbits(const std::string& type, int rank, const std::string& S_s,
               const std::string& T_s, const std::string& side_s, bool dot_out,
               bool json_out) {
  RootSystem rs = build_root_system(parse_cartan_type(type), rank);
  WeylGroup g = WeylGroup::enumerate(rs, group_cap());
  BruhatOrder order(g);
  SimpleSubset S = parse_subset(S_s, rs, "S"), T = parse_subset(T_s, rs, "T");
  Side side = side_s == "minus" ? Side::Qminus : Side::Q;
  OrbitPoset poset = orbit_poset(order, S, T, side);
  if (dot_out) {
    std::cout << orbit_dot(poset);
    return 0;
  }
  if (json_out) {
    std::cout << orbit_json(poset);
    return 0;
  }
  std::cout << sys_name(rs) << " side " << to_string(side) << " S=" << to_string(S, rs.rank)
            << " T=" << to_string(T, rs.rank) << ": " << poset.r() << " orbits\n";
  std::cout << "reps:";
  for (int k = 0; k < poset.r(); ++k) std::cout << ' ' << label(g, poset.table.reps[k]);
  std::cout << '\n';
  for (std::size_t k = 0; k < poset.opens.size(); ++k) {
    std::cout << "open[" << k << "]:";
    for (int idx : poset.opens[k]) std::cout << ' ' << idx;
    std::cout << '\n';
  }
  return 0;
}

int cmd_match(const std::string& type, int rank, const std::string& S_s,
              const std::string& T_s, bool all, bool json_out) {
  RootSystem rs = build_root_system(parse_cartan_type(type), rank);
  WeylGroup g = WeylGroup::enumerate(rs, group_cap());
  BruhatOrder order(g);
  std::vector<MatchReport> reports;
  if (all) {
    for (std::uint32_t sb = 0; sb < (1u << rs.rank); ++sb)
      for (std::uint32_t tb = 0; tb < (1u << rs.rank); ++tb)
        reports.push_back(dual_filtration_match(order, SimpleSubset{sb}, SimpleSubset{tb}));
  } else {
    reports.push_back(dual_filtration_match(order, parse_subset(S_s, rs, "S"),
                                            parse_subset(T_s, rs, "T")));
  }
  int failures = 0;
  for (const MatchReport& rep : reports)
    if (!rep.ok()) ++failures;
  if (json_out) {
    std::cout << (reports.size() == 1 ? match_json(reports[0]) : match_list_json(reports));
  } else {
    for (const MatchReport& rep : reports) std::cout << rep.detail << '\n';
    std::cout << reports.size() << " tables, " << failures << " mismatches\n";
  }
  return failures == 0 ? 0 : 1;
}

int cmd_oracle_verify(int n, int q, const std::string& S_s, const std::string& T_s,
                      bool json_out) {
  RichardsonReport rep = verify_richardson(n, q);
  if (!S_s.empty() || !T_s.empty()) {
    if (n < 2) throw ConfigError("parabolic narrowing needs n >= 2");
    RootSystem rs = build_root_system(CartanType::A, n - 1);
    SimpleSubset S = parse_subset(S_s, rs, "S"), T = parse_subset(T_s, rs, "T");
    for (const ParabolicCheck& pc : rep.parabolic) {
      if (pc.S.bits != S.bits || pc.T.bits != T.bits) continue;
      std::cout << "S=" << to_string(pc.S, rs.rank) << " T=" << to_string(pc.T, rs.rank)
                << " realized " << pc.realized_pairs << " expected " << pc.expected_pairs
                << (pc.pair_set_ok ? " ok" : " MISMATCH") << '\n';
      return pc.pair_set_ok ? 0 : 1;
    }
    throw ConfigError("no parabolic entry for the requested (S,T)");
  }
  if (json_out) {
    std::cout << richardson_json(rep);
    return rep.ok() ? 0 : 1;
  }
  std::cout << "GL_" << rep.n << "(F_" << rep.q << "): " << rep.group_order
            << " invertible matrices\n";
  std::cout << "borel pairs: " << (rep.borel_pairs_ok ? "ok" : "MISMATCH") << " (realized "
            << rep.realized_borel_pairs << ", expected " << rep.expected_borel_pairs
            << ")\n";
  std::cout << "cell partitions: " << (rep.partitions_ok ? "ok" : "BROKEN") << '\n';
  int par_ok = 0;
  for (const ParabolicCheck& pc : rep.parabolic)
    if (pc.pair_set_ok) ++par_ok;
  std::cout << "parabolic sweeps: " << par_ok << "/" << rep.parabolic.size() << " ok\n";
  std::cout << "overall: " << (rep.ok() ? "ok" : "FAILED") << '\n';
  return rep.ok() ? 0 : 1;
}

int cmd_oracle_witness(int n, int q, const std::string& w_s, const std::string& wp_s,
                       bool json_out) {
  Perm w = parse_csv(w_s, "permutation"), wp = parse_csv(wp_s, "permutation");
  FqMatrix m = witness(n, q, w, wp);
  if (json_out) {
    std::cout << matrix_json(m);
    return 0;
  }
  for (int r = 0; r < m.n; ++r) {
    for (int c = 0; c < m.n; ++c) std::cout << static_cast<int>(m.at(r, c));
    std::cout << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& type, int rank) {
  std::vector<CheckResult> results =
      type.empty() ? run_acceptance()
                   : run_system_checks(parse_cartan_type(type), rank, group_cap());
  std::vector<std::string> failed;
  for (const CheckResult& res : results) {
    std::cout << (res.pass ? "PASS " : "FAIL ") << res.name << ": " << res.detail << '\n';
    if (!res.pass) failed.push_back(res.name);
  }
  if (!failed.empty()) {
    std::cerr << "failures:";
    for (const std::string& name : failed) std::cerr << ' ' << name;
    std::cerr << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl group and Bruhat cell combinatorics toolkit"};
  app.require_subcommand(1);

  std::function<int()> action;
  std::string type, word_s, target_s, S_s, T_s, side_s = "q", u_s, selector = "all";
  std::string w_s, wp_s;
  int rank = 0, n = 0, q = 2;
  bool json_out = false, dot_out = false, all_flag = false;

  auto add_system = [&](CLI::App* cmd) {
    cmd->add_option("--type", type, "Cartan type: A, B, C, D, G2, F4, BC")->required();
    cmd->add_option("--rank", rank, "rank of the system")->required();
  };

  CLI::App* roots = app.add_subcommand("roots", "list the roots of one system");
  add_system(roots);
  roots->add_flag("--json", json_out, "emit JSON");
  roots->callback([&] { action = [&] { return cmd_roots(type, rank, json_out); }; });

  CLI::App* weyl = app.add_subcommand("weyl", "Weyl group tables");
  weyl->require_subcommand(1);
  CLI::App* weyl_enum = weyl->add_subcommand("enumerate", "list all elements");
  add_system(weyl_enum);
  weyl_enum->add_flag("--json", json_out, "emit JSON");
  weyl_enum->callback([&] { action = [&] { return cmd_weyl(type, rank, json_out); }; });

  CLI::App* bruhat = app.add_subcommand("bruhat", "Bruhat order queries");
  bruhat->require_subcommand(1);
  CLI::App* bcheck = bruhat->add_subcommand(
      "check", "distinguished subexpression for a target below a word");
  add_system(bcheck);
  bcheck->add_option("--word", word_s, "reduced word, 1-based")->required();
  bcheck->add_option("--target", target_s, "target element as a word");
  bcheck->callback(
      [&] { action = [&] { return cmd_bruhat_check(type, rank, word_s, target_s); }; });
  CLI::App* bmatrix = bruhat->add_subcommand("matrix", "full order matrix");
  add_system(bmatrix);
  CLI::Option* bm_dot = bmatrix->add_flag("--dot", dot_out, "emit the Hasse diagram as DOT");
  bmatrix->add_flag("--json", json_out, "emit JSON")->excludes(bm_dot);
  bmatrix->callback(
      [&] { action = [&] { return cmd_bruhat_matrix(type, rank, dot_out, json_out); }; });

  CLI::App* dcosets = app.add_subcommand("dcosets", "minimal double coset representatives");
  add_system(dcosets);
  dcosets->add_option("--S", S_s, "left subset, 1-based indices");
  dcosets->add_option("--T", T_s, "right subset, 1-based indices");
  dcosets->add_flag("--json", json_out, "emit JSON");
  dcosets->callback(
      [&] { action = [&] { return cmd_dcosets(type, rank, S_s, T_s, json_out); }; });

  CLI::App* omega_cmd = app.add_subcommand("omega", "order-reversing coset bijection");
  add_system(omega_cmd);
  omega_cmd->add_option("--S", S_s, "left subset");
  omega_cmd->add_option("--T", T_s, "right subset");
  omega_cmd->add_option("--u", u_s, "one minimal representative as a word");
  omega_cmd->add_flag("--json", json_out, "emit JSON");
  omega_cmd->callback(
      [&] { action = [&] { return cmd_omega(type, rank, S_s, T_s, u_s, json_out); }; });

  CLI::App* orbits = app.add_subcommand("orbits", "orbit closure poset and filtration");
  add_system(orbits);
  orbits->add_option("--S", S_s, "left subset");
  orbits->add_option("--T", T_s, "right subset");
  orbits->add_option("--side", side_s, "q or minus")
      ->check(CLI::IsMember({"q", "minus"}));
  CLI::Option* or_dot = orbits->add_flag("--dot", dot_out, "emit the Hasse diagram as DOT");
  orbits->add_flag("--json", json_out, "emit JSON")->excludes(or_dot);
  orbits->callback([&] {
    action = [&] { return cmd_orbits(type, rank, S_s, T_s, side_s, dot_out, json_out); };
  });

  CLI::App* match = app.add_subcommand("match", "dual filtration comparison");
  add_system(match);
  match->add_option("--S", S_s, "left subset");
  match->add_option("--T", T_s, "right subset");
  match->add_flag("--all", all_flag, "sweep every (S,T)");
  match->add_flag("--json", json_out, "emit JSON");
  match->callback([&] {
    action = [&] { return cmd_match(type, rank, S_s, T_s, all_flag, json_out); };
  });

  CLI::App* oracle = app.add_subcommand("oracle", "finite field flag oracle");
  oracle->require_subcommand(1);
  CLI::App* overify = oracle->add_subcommand("verify", "exhaustive cell sweep");
  overify->add_option("--n", n, "matrix size")->required();
  overify->add_option("--q", q, "field size");
  overify->add_option("--S", S_s, "narrow to one left subset");
  overify->add_option("--T", T_s, "narrow to one right subset");
  overify->add_flag("--json", json_out, "emit JSON");
  overify->callback(
      [&] { action = [&] { return cmd_oracle_verify(n, q, S_s, T_s, json_out); }; });
  CLI::App* owitness = oracle->add_subcommand("witness", "matrix in both cells");
  owitness->add_option("--n", n, "matrix size")->required();
  owitness->add_option("--q", q, "field size");
  owitness->add_option("--w", w_s, "upper cell permutation, one-line")->required();
  owitness->add_option("--wprime", wp_s, "lower cell permutation, one-line")->required();
  owitness->add_flag("--json", json_out, "emit JSON");
  owitness->callback(
      [&] { action = [&] { return cmd_oracle_witness(n, q, w_s, wp_s, json_out); }; });

  CLI::App* verify = app.add_subcommand("verify", "property suites");
  verify->add_option("selector", selector, "which suite (all)")
      ->check(CLI::IsMember({"all"}));
  verify->add_option("--type", type, "narrow to one Cartan type");
  verify->add_option("--rank", rank, "rank for the narrowed suite");
  verify->callback([&] { action = [&] { return cmd_verify(type, rank); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const NotComparableError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
