// verify.cpp - acceptance battery and per-system property checks.
#include "bruhatkit/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bruhatkit/errors.hpp"
#include "bruhatkit/flag_oracle.hpp"

namespace bruhatkit {

namespace {

// Root system, group table, and order matrix with stable addresses.
struct Sys {
  RootSystem rs;
  std::optional<WeylGroup> g;
  std::optional<BruhatOrder> o;

  Sys(CartanType t, int r, std::size_t cap = WeylGroup::kDefaultCap) {
    rs = build_root_system(t, r);
    g.emplace(WeylGroup::enumerate(rs, cap));
    o.emplace(*g);
  }
  Sys(const Sys&) = delete;
  Sys& operator=(const Sys&) = delete;

  std::string name() const { return to_string(rs.type) + "_" + std::to_string(rs.rank); }
};

std::vector<WeylGroup::Id> downset_by_subwords(const WeylGroup& g, WeylGroup::Id w) {
  return subexpression_endpoints(g, g.word(w));
}

std::uint32_t subset_count(int rank) { return 1u << rank; }

// Elements below b per the order matrix, ascending.
std::vector<WeylGroup::Id> downset_by_matrix(const BruhatOrder& o, WeylGroup::Id b) {
  std::vector<WeylGroup::Id> out;
  for (WeylGroup::Id a = 0; a < o.group().size(); ++a)
    if (o.leq(a, b)) out.push_back(a);
  return out;
}

CheckResult check_group_orders() {
  CheckResult res{"weyl-group-orders", true, ""};
  const std::vector<std::tuple<CartanType, int, int>> expected = {
      {CartanType::A, 3, 24},
      {CartanType::B, 3, 48},
      {CartanType::G2, 2, 12},
      {CartanType::F4, 4, 1152},
  };
  for (const auto& [t, r, n] : expected) {
    RootSystem rs = build_root_system(t, r);
    WeylGroup g = WeylGroup::enumerate(rs);
    if (!res.detail.empty()) res.detail += ", ";
    res.detail += to_string(t) + "_" + std::to_string(r) + " " + std::to_string(g.size());
    if (g.size() != n) {
      res.pass = false;
      res.detail += " (expected " + std::to_string(n) + ")";
    }
  }
  return res;
}

CheckResult check_order_vs_subwords(const std::vector<const Sys*>& systems) {
  CheckResult res{"bruhat-order-vs-subword-oracle", true, ""};
  long long pairs = 0, mismatches = 0;
  for (const Sys* sys : systems) {
    for (WeylGroup::Id b = 0; b < sys->g->size(); ++b) {
      pairs += sys->g->size();
      if (downset_by_subwords(*sys->g, b) != downset_by_matrix(*sys->o, b)) ++mismatches;
    }
  }
  res.pass = mismatches == 0;
  res.detail = std::to_string(pairs) + " pairs, " + std::to_string(mismatches) +
               " mismatched columns";
  return res;
}

CheckResult check_distinguished_endpoints(const std::vector<const Sys*>& systems) {
  CheckResult res{"distinguished-endpoints-vs-subwords", true, ""};
  long long words = 0, mismatches = 0;
  for (const Sys* sys : systems) {
    for (WeylGroup::Id w = 0; w < sys->g->size(); ++w) {
      ++words;
      if (distinguished_endpoints(*sys->o, sys->g->word(w)) !=
          downset_by_subwords(*sys->g, w))
        ++mismatches;
    }
  }
  res.pass = mismatches == 0;
  res.detail = std::to_string(words) + " canonical words, " + std::to_string(mismatches) +
               " mismatches";
  return res;
}

CheckResult check_spart_monotonicity(const std::vector<const Sys*>& systems) {
  CheckResult res{"minimal-representative-monotonicity", true, ""};
  long long checked = 0, violations = 0;
  for (const Sys* sys : systems) {
    const WeylGroup& g = *sys->g;
    const BruhatOrder& o = *sys->o;
    const int n = g.size();
    for (std::uint32_t bits = 0; bits < subset_count(g.rs().rank); ++bits) {
      SimpleSubset S{bits};
      std::vector<WeylGroup::Id> spr(n), spl(n);
      for (WeylGroup::Id w = 0; w < n; ++w) {
        spr[w] = s_part_right(g, w, S);
        spl[w] = s_part_left(g, w, S);
      }
      for (WeylGroup::Id u = 0; u < n; ++u)
        for (WeylGroup::Id w = 0; w < n; ++w) {
          if (!o.leq(u, w)) continue;
          ++checked;
          if (!o.leq(spr[u], spr[w]) || !o.leq(spl[u], spl[w])) ++violations;
        }
    }
    for (std::uint32_t sb = 0; sb < subset_count(g.rs().rank); ++sb)
      for (std::uint32_t tb = 0; tb < subset_count(g.rs().rank); ++tb) {
        SimpleSubset S{sb}, T{tb};
        std::vector<WeylGroup::Id> mdr(n);
        for (WeylGroup::Id w = 0; w < n; ++w) mdr[w] = min_double_rep(g, w, S, T);
        for (WeylGroup::Id u = 0; u < n; ++u)
          for (WeylGroup::Id w = 0; w < n; ++w) {
            if (!o.leq(u, w)) continue;
            ++checked;
            if (!o.leq(mdr[u], mdr[w])) ++violations;
          }
      }
  }
  res.pass = violations == 0;
  res.detail = std::to_string(checked) + " ordered pairs swept, " +
               std::to_string(violations) + " violations";
  return res;
}

CheckResult check_wot_conjugation(const std::vector<const Sys*>& systems) {
  CheckResult res{"longest-coset-rep-conjugates-parabolic", true, ""};
  int subsets = 0, failures = 0;
  for (const Sys* sys : systems) {
    const WeylGroup& g = *sys->g;
    for (std::uint32_t tb = 0; tb < subset_count(g.rs().rank); ++tb) {
      SimpleSubset T{tb};
      ++subsets;
      WeylGroup::Id wot = w_o_T(g, T);
      WeylGroup::Id wot_inv = g.inverse(wot);
      std::vector<WeylGroup::Id> conj;
      for (WeylGroup::Id x : g.subgroup(T))
        conj.push_back(g.mul_ids(g.mul_ids(wot_inv, x), wot));
      std::sort(conj.begin(), conj.end());
      if (conj != g.subgroup(theta_subset(g.rs(), T))) ++failures;
    }
  }
  res.pass = failures == 0;
  res.detail = std::to_string(subsets) + " subsets, " + std::to_string(failures) +
               " conjugation failures";
  return res;
}

CheckResult check_omega(const std::vector<const Sys*>& systems) {
  CheckResult res{"omega-order-reversing-bijection", true, ""};
  int tables = 0, failures = 0;
  for (const Sys* sys : systems) {
    const WeylGroup& g = *sys->g;
    const BruhatOrder& o = *sys->o;
    for (std::uint32_t sb = 0; sb < subset_count(g.rs().rank); ++sb)
      for (std::uint32_t tb = 0; tb < subset_count(g.rs().rank); ++tb) {
        ++tables;
        DoubleCosetTable table = enumerate_WST(g, SimpleSubset{sb}, SimpleSubset{tb});
        DoubleCosetTable target = enumerate_WST(g, SimpleSubset{sb}, table.thetaT);
        std::vector<WeylGroup::Id> image = table.omega;
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        bool ok = image == target.reps;
        for (int i = 0; ok && i < table.r(); ++i)
          for (int k = 0; ok && k < table.r(); ++k)
            if (o.leq(table.reps[i], table.reps[k]) &&
                !o.leq(table.omega[k], table.omega[i]))
              ok = false;
        if (!ok) ++failures;
      }
  }
  res.pass = failures == 0;
  res.detail = std::to_string(tables) + " (S,T) tables, " + std::to_string(failures) +
               " failures";
  return res;
}

std::vector<RichardsonReport> sweep_reports() {
  std::vector<RichardsonReport> out;
  out.push_back(verify_richardson(2, 2));
  out.push_back(verify_richardson(2, 3));
  out.push_back(verify_richardson(3, 2));
  return out;
}

CheckResult check_richardson_borel(const std::vector<RichardsonReport>& reports) {
  CheckResult res{"cell-intersection-pairs-borel", true, ""};
  const std::vector<long long> orders = {6, 48, 168};
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const RichardsonReport& rep = reports[k];
    bool ok = rep.borel_pairs_ok && rep.partitions_ok && rep.group_order == orders[k];
    if (!res.detail.empty()) res.detail += ", ";
    res.detail += "GL_" + std::to_string(rep.n) + "(F_" + std::to_string(rep.q) + ") " +
                  std::to_string(rep.group_order) + " matrices " + (ok ? "ok" : "BAD");
    if (!ok) res.pass = false;
  }
  const RichardsonReport& gl22 = reports[0];
  long long open_cell = gl22.bwbminus_sizes.count(Perm{0, 1})
                            ? gl22.bwbminus_sizes.at(Perm{0, 1})
                            : -1;
  long long small_cell = gl22.bwbminus_sizes.count(Perm{1, 0})
                             ? gl22.bwbminus_sizes.at(Perm{1, 0})
                             : -1;
  if (open_cell != 4 || small_cell != 2) {
    res.pass = false;
    res.detail += ", GL_2(F_2) opposite cell sizes " + std::to_string(open_cell) + "/" +
                  std::to_string(small_cell) + " (expected 4/2)";
  } else {
    res.detail += ", GL_2(F_2) opposite cells 4/2";
  }
  return res;
}

CheckResult check_richardson_parabolic(const std::vector<RichardsonReport>& reports) {
  CheckResult res{"cell-intersection-pairs-parabolic", true, ""};
  int tables = 0, failures = 0;
  for (const RichardsonReport& rep : reports)
    for (const ParabolicCheck& pc : rep.parabolic) {
      ++tables;
      if (!pc.pair_set_ok) ++failures;
    }
  res.pass = failures == 0;
  res.detail = std::to_string(tables) + " (S,T) sweeps, " + std::to_string(failures) +
               " pair-set mismatches";
  return res;
}

CheckResult check_witnesses() {
  CheckResult res{"witness-lands-in-both-cells", true, ""};
  const std::vector<std::pair<int, long long>> plans = {{3, 19}, {4, -1}};
  for (const auto& [n, expected_pairs] : plans) {
    Sys sys(CartanType::A, n - 1);
    const WeylGroup& g = *sys.g;
    long long matrix_pairs = 0, oracle_pairs = 0, bad_cells = 0;
    for (WeylGroup::Id w = 0; w < g.size(); ++w) {
      matrix_pairs += static_cast<long long>(downset_by_matrix(*sys.o, w).size());
      oracle_pairs += static_cast<long long>(downset_by_subwords(g, w).size());
    }
    bool count_ok =
        matrix_pairs == oracle_pairs && (expected_pairs < 0 || matrix_pairs == expected_pairs);
    for (WeylGroup::Id w = 0; w < g.size(); ++w) {
      Perm pw = elem_to_perm(g.elem(w));
      for (WeylGroup::Id wp : downset_by_matrix(*sys.o, w)) {
        Perm pwp = elem_to_perm(g.elem(wp));
        FqMatrix m = witness(n, 2, pw, pwp);
        if (cell_BwB(m) != pw || cell_BwBminus(m) != pwp) ++bad_cells;
      }
    }
    if (!res.detail.empty()) res.detail += ", ";
    res.detail += "S_" + std::to_string(n) + " " + std::to_string(matrix_pairs) +
                  " comparable pairs";
    if (!count_ok || bad_cells != 0) {
      res.pass = false;
      res.detail += " (count cross-check " + std::string(count_ok ? "ok" : "FAILED") + ", " +
                    std::to_string(bad_cells) + " bad cells)";
    }
  }
  return res;
}

CheckResult check_dual_filtration(const std::vector<const Sys*>& systems) {
  CheckResult res{"dual-filtration-match", true, ""};
  int tables = 0, failures = 0;
  for (const Sys* sys : systems) {
    const WeylGroup& g = *sys->g;
    for (std::uint32_t sb = 0; sb < subset_count(g.rs().rank); ++sb)
      for (std::uint32_t tb = 0; tb < subset_count(g.rs().rank); ++tb) {
        ++tables;
        if (!dual_filtration_match(*sys->o, SimpleSubset{sb}, SimpleSubset{tb}).ok())
          ++failures;
      }
  }
  res.pass = failures == 0;
  res.detail = std::to_string(tables) + " (S,T) tables, " + std::to_string(failures) +
               " mismatches";
  return res;
}

CheckResult check_rank_one_picture() {
  CheckResult res{"rank-one-opposite-filtrations", true, ""};
  Sys a1(CartanType::A, 1);
  OrbitPoset qm = orbit_poset(*a1.o, SimpleSubset{}, SimpleSubset{}, Side::Qminus);
  OrbitPoset qq = orbit_poset(*a1.o, SimpleSubset{}, SimpleSubset{}, Side::Q);
  bool ok = qm.r() == 2 && qq.r() == 2;
  ok = ok && qm.table.reps[0] == a1.g->identity_id();
  ok = ok && qm.opens[0] == std::vector<int>{0} && qm.is_open({0});
  ok = ok && qq.opens[1] == std::vector<int>{1} && qq.is_open({1});
  ok = ok && dual_filtration_match(*a1.o, SimpleSubset{}, SimpleSubset{}).ok();
  res.pass = ok;
  res.detail = ok ? "identity orbit opens the opposite-side filtration, big cell opens the "
                    "plain side"
                  : "rank-one filtration shape broken";
  return res;
}

CheckResult check_fiber_partition(const std::vector<const Sys*>& systems) {
  CheckResult res{"unipotent-fiber-root-partition", true, ""};
  long long reps = 0, violations = 0;
  bool endpoints_ok = true;
  for (const Sys* sys : systems) {
    const WeylGroup& g = *sys->g;
    for (std::uint32_t sb = 0; sb < subset_count(g.rs().rank); ++sb)
      for (std::uint32_t tb = 0; tb < subset_count(g.rs().rank); ++tb) {
        SimpleSubset S{sb}, T{tb};
        DoubleCosetTable table = enumerate_WST(g, S, T);
        for (int k = 0; k < table.r(); ++k) {
          ++reps;
          GeomLemmaDatum datum = geometric_lemma_datum(g, table.reps[k], S, T);
          if (datum.roots_Uw.size() + datum.roots_P_cap_wUQw.size() !=
              datum.roots_UQ.size())
            ++violations;
          if (table.reps[k] == g.identity_id() && !datum.roots_Uw.empty())
            endpoints_ok = false;
        }
        if (sb == 0 && tb == 0) {
          GeomLemmaDatum top =
              geometric_lemma_datum(g, table.reps[table.r() - 1], S, T);
          if (top.roots_Uw.size() != g.rs().positive_nd.size()) endpoints_ok = false;
        }
      }
  }
  res.pass = violations == 0 && endpoints_ok;
  res.detail = std::to_string(reps) + " representatives, " + std::to_string(violations) +
               " partition violations" + (endpoints_ok ? "" : ", endpoint shape broken");
  return res;
}

CheckResult guarded(const std::string& name, const std::function<CheckResult()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return CheckResult{name, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

std::vector<CheckResult> run_acceptance() {
  std::vector<CheckResult> out;
  out.push_back(guarded("weyl-group-orders", check_group_orders));

  Sys a3(CartanType::A, 3);
  Sys b3(CartanType::B, 3);
  Sys g2(CartanType::G2, 2);
  const std::vector<const Sys*> abg = {&a3, &b3, &g2};
  const std::vector<const Sys*> ab = {&a3, &b3};

  out.push_back(guarded("bruhat-order-vs-subword-oracle",
                        [&] { return check_order_vs_subwords(abg); }));
  out.push_back(guarded("distinguished-endpoints-vs-subwords",
                        [&] { return check_distinguished_endpoints(abg); }));
  out.push_back(guarded("minimal-representative-monotonicity",
                        [&] { return check_spart_monotonicity(ab); }));
  out.push_back(guarded("longest-coset-rep-conjugates-parabolic",
                        [&] { return check_wot_conjugation(abg); }));
  out.push_back(
      guarded("omega-order-reversing-bijection", [&] { return check_omega(ab); }));

  std::vector<RichardsonReport> reports;
  out.push_back(guarded("cell-intersection-pairs-borel", [&] {
    reports = sweep_reports();
    return check_richardson_borel(reports);
  }));
  out.push_back(guarded("cell-intersection-pairs-parabolic", [&] {
    if (reports.empty()) reports = sweep_reports();
    return check_richardson_parabolic(reports);
  }));
  out.push_back(guarded("witness-lands-in-both-cells", check_witnesses));
  out.push_back(
      guarded("dual-filtration-match", [&] { return check_dual_filtration(ab); }));
  out.push_back(guarded("rank-one-opposite-filtrations", check_rank_one_picture));
  out.push_back(
      guarded("unipotent-fiber-root-partition", [&] { return check_fiber_partition(ab); }));
  return out;
}

std::vector<CheckResult> run_system_checks(CartanType type, int rank, std::size_t cap) {
  std::vector<CheckResult> out;
  Sys sys(type, rank, cap);
  const WeylGroup& g = *sys.g;
  const std::vector<const Sys*> one = {&sys};

  out.push_back(guarded("enumeration-self-consistency", [&] {
    CheckResult res{"enumeration-self-consistency", true, ""};
    long long bad = 0;
    for (WeylGroup::Id w = 0; w < g.size(); ++w) {
      if (g.inverse(g.inverse(w)) != w) ++bad;
      if (static_cast<int>(g.word(w).size()) != g.len(w)) ++bad;
      if (g.id_of(evaluate_word(g.rs(), g.word(w))) != w) ++bad;
    }
    if (g.len(g.longest_id()) != static_cast<int>(g.rs().positive_nd.size())) ++bad;
    res.pass = bad == 0;
    res.detail = std::to_string(g.size()) + " elements, " + std::to_string(bad) +
                 " inconsistencies";
    return res;
  }));
  out.push_back(guarded("bruhat-order-vs-subword-oracle",
                        [&] { return check_order_vs_subwords(one); }));
  out.push_back(guarded("distinguished-endpoints-vs-subwords",
                        [&] { return check_distinguished_endpoints(one); }));
  out.push_back(guarded("longest-coset-rep-conjugates-parabolic",
                        [&] { return check_wot_conjugation(one); }));

  const bool sweep = g.size() <= 400;
  const std::vector<std::pair<std::string, std::function<CheckResult()>>> heavy = {
      {"minimal-representative-monotonicity", [&] { return check_spart_monotonicity(one); }},
      {"omega-order-reversing-bijection", [&] { return check_omega(one); }},
      {"dual-filtration-match", [&] { return check_dual_filtration(one); }},
      {"unipotent-fiber-root-partition", [&] { return check_fiber_partition(one); }},
  };
  for (const auto& [name, f] : heavy) {
    if (sweep) {
      out.push_back(guarded(name, f));
    } else {
      out.push_back(CheckResult{name, true,
                                "skipped: " + std::to_string(g.size()) +
                                    " elements exceed the per-system sweep budget"});
    }
  }
  return out;
}

}  // namespace bruhatkit
