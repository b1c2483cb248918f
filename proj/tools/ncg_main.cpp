#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncg/audit.hpp"
#include "ncg/deviations.hpp"
#include "ncg/profile_io.hpp"
#include "ncg/search.hpp"

namespace {

std::string rat_pq(const ncg::Rat& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// "3/2", "n", "4n+1", "n/4", "20n" -> exact rational, n substituted.
ncg::Rat alpha_expr(const std::string& text, int n) {
  auto pos = text.find('n');
  if (pos == std::string::npos) return ncg::parse_rational(text);
  ncg::Rat coef =
      pos == 0 ? ncg::Rat(1) : ncg::parse_rational(text.substr(0, pos));
  ncg::Rat base = coef * ncg::Rat(n);
  std::string rest = text.substr(pos + 1);
  if (rest.empty()) return base;
  if (rest[0] == '+') return base + ncg::parse_rational(rest.substr(1));
  if (rest[0] == '-') return base - ncg::parse_rational(rest.substr(1));
  if (rest[0] == '/') return base / ncg::parse_rational(rest.substr(1));
  throw std::invalid_argument("bad alpha expression '" + text + "'");
}

std::string strategies_inline(const ncg::StrategyVector& s) {
  std::ostringstream out;
  for (int u = 0; u < s.n; ++u) {
    if (u) out << ' ';
    out << u << ":{";
    for (size_t i = 0; i < s.strategies[u].size(); ++i) {
      if (i) out << ',';
      out << s.strategies[u][i];
    }
    out << '}';
  }
  return out.str();
}

int run_verify(const std::string& file, const std::string& mode, int limit) {
  ncg::StrategyVector s = ncg::read_profile_file(file);
  bool family = mode == "family";
  auto v = ncg::is_nash(
      s, family ? ncg::VerifyMode::FamilyRestricted : ncg::VerifyMode::Exact,
      limit);
  if (!v.is_equilibrium) {
    std::cout << "not an equilibrium: "
              << ncg::describe(*v.witness, s, v.witness_delta) << "\n";
    return 2;
  }
  if (family) {
    std::cout << "undecided: no improving deviation in the checked families "
                 "(rerun with --mode exact to certify)\n";
    return 3;
  }
  std::cout << "equilibrium: no improving deviation exists\n";
  return 0;
}

int run_audit(const std::string& file, const std::vector<std::string>& checks,
              const std::string& dau_c) {
  ncg::StrategyVector s = ncg::read_profile_file(file);
  ncg::AuditOptions opt;
  for (const auto& c : checks)
    if (c != "all") opt.checks.push_back(c);
  if (!dau_c.empty()) opt.dau_c = ncg::parse_rational(dau_c);
  ncg::AuditReport report = ncg::run_audit(s, opt);

  std::cout << "audit " << file << " (n=" << s.n
            << ", alpha=" << rat_pq(s.alpha) << ")\n";
  for (const auto& ck : report.checks) {
    std::cout << ck.name << ": " << ncg::to_string(ck.verdict) << "\n";
    for (const auto& p : ck.preconditions) std::cout << "  requires " << p << "\n";
    for (const auto& nt : ck.notes) std::cout << "  note: " << nt << "\n";
    if (!ck.witness.empty()) std::cout << "  witness: " << ck.witness << "\n";
  }
  // Machine-readable mirror: fixed field order, tab separated.
  for (const auto& ck : report.checks) {
    std::string pre;
    for (size_t i = 0; i < ck.preconditions.size(); ++i) {
      if (i) pre += "; ";
      pre += ck.preconditions[i];
    }
    std::cout << "check\t" << ck.name << "\t" << ncg::to_string(ck.verdict)
              << "\t" << pre << "\t" << ck.witness << "\n";
  }
  return report.ok() ? 0 : 2;
}

int run_dynamics(const std::string& seedfile, int rounds) {
  ncg::StrategyVector s0 = ncg::read_profile_file(seedfile);
  ncg::DynamicsResult r = ncg::best_response_dynamics(s0, rounds);
  for (size_t i = 0; i < r.trajectory.size(); ++i) {
    const auto& s = r.trajectory[i];
    std::cout << "step " << i << ": " << strategies_inline(s)
              << "  social=" << ncg::social_cost(s).str() << "\n";
  }
  switch (r.status) {
    case ncg::DynamicsStatus::ConvergedNe:
      std::cout << "converged: equilibrium after " << r.rounds
                << " improving round(s)\n";
      break;
    case ncg::DynamicsStatus::Cycle:
      std::cout << "cycle: the last state repeats an earlier one\n";
      break;
    case ncg::DynamicsStatus::RoundCap:
      std::cout << "no convergence within " << rounds << " rounds\n";
      break;
  }
  return 0;
}

int run_table(const std::vector<int>& ns, const std::vector<std::string>& alphas,
              bool include_disconnected, int limit) {
  std::vector<ncg::PoaRow> rows;
  for (int n : ns) {
    for (const auto& ax : alphas) {
      ncg::SearchSpec sp;
      sp.n = n;
      sp.alpha = alpha_expr(ax, n);
      sp.include_disconnected = include_disconnected;
      sp.node_limit = limit;
      auto nes = ncg::enumerate_ne(sp);
      ncg::PoaRow row;
      row.n = n;
      row.alpha = sp.alpha;
      row.ne_classes = static_cast<int>(nes.size());
      row.opt_cost = ncg::optimum_cost(n, sp.alpha).cost.value();
      for (const auto& s : nes) {
        row.max_cost = std::max(row.max_cost, ncg::social_cost(s).value());
        if (ncg::build_comm_graph(s).graph().edge_count() != n - 1) {
          row.all_trees = false;
          if (sp.alpha > ncg::Rat(n)) row.nontree_above_n = true;
        }
      }
      if (row.ne_classes > 0) row.poa = row.max_cost / row.opt_cost;
      rows.push_back(std::move(row));
    }
  }

  const char* headers[7] = {"n",        "alpha", "ne_classes", "max_cost",
                            "opt_cost", "poa",   "all_trees"};
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    bool some = r.ne_classes > 0;
    cells.push_back({std::to_string(r.n), rat_pq(r.alpha),
                     std::to_string(r.ne_classes),
                     some ? ncg::to_string(r.max_cost) : "-",
                     ncg::to_string(r.opt_cost),
                     some ? ncg::to_string(r.poa) : "-",
                     some ? (r.all_trees ? "yes" : "no") : "-"});
  }
  size_t width[7];
  for (int c = 0; c < 7; ++c) {
    width[c] = std::string(headers[c]).size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  auto emit = [&](const std::vector<std::string>& row) {
    for (int c = 0; c < 7; ++c) {
      std::cout << row[c] << std::string(width[c] - row[c].size(), ' ');
      std::cout << (c == 6 ? "\n" : "  ");
    }
  };
  emit({headers[0], headers[1], headers[2], headers[3], headers[4], headers[5],
        headers[6]});
  for (const auto& row : cells) emit(row);
  // CSV mirror for tooling.
  std::cout << "n,alpha,ne_classes,max_cost,opt_cost,poa,all_trees\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& c = cells[i];
    std::cout << c[0] << ',' << c[1] << ',' << c[2] << ','
              << (rows[i].ne_classes ? c[3] : "") << ',' << c[4] << ','
              << (rows[i].ne_classes ? c[5] : "") << ','
              << (rows[i].ne_classes ? c[6] : "") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sum-distance network creation game toolkit"};
  app.require_subcommand(1);

  std::string vfile, vmode = "exact";
  int vlimit = ncg::kDefaultExhaustiveNodeLimit;
  auto* verify =
      app.add_subcommand("verify", "decide whether a profile is an equilibrium");
  verify->add_option("file", vfile, "profile file")->required();
  verify->add_option("--mode", vmode, "exact or family")
      ->check(CLI::IsMember({"exact", "family"}));
  verify->add_option("--exhaustive-limit", vlimit, "max n for exact mode");

  std::string afile, dau_c;
  std::vector<std::string> achecks;
  auto* audit =
      app.add_subcommand("audit", "run equilibrium structure checks on a profile");
  audit->add_option("file", afile, "profile file")->required();
  audit->add_option("--checks", achecks, "substring selectors, or 'all'")
      ->delimiter(',');
  audit->add_option("--dau-c", dau_c, "constant C > 4 for the density check");

  std::vector<int> sns;
  std::vector<std::string> salphas;
  std::string seedfile;
  bool table = false, include_disconnected = false;
  int slimit = 6, srounds = 100;
  auto* search =
      app.add_subcommand("search", "enumerate equilibria or run dynamics");
  search->add_option("--n", sns, "player counts")->delimiter(',');
  search->add_option("--alpha", salphas,
                     "link prices; rationals or n-expressions like 4n+1")
      ->delimiter(',');
  search->add_flag("--table", table, "print the equilibrium/PoA table");
  search->add_option("--dynamics", seedfile,
                     "run best-response dynamics from this profile");
  search->add_flag("--include-disconnected", include_disconnected,
                   "also enumerate disconnected graphs");
  search->add_option("--exhaustive-limit", slimit, "max n for enumeration");
  search->add_option("--rounds", srounds, "dynamics round cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify(vfile, vmode, vlimit);
    if (audit->parsed()) return run_audit(afile, achecks, dau_c);
    if (search->parsed()) {
      if (!seedfile.empty()) return run_dynamics(seedfile, srounds);
      // The limit answer does not depend on alpha, so report it first.
      for (int n : sns)
        if (n > slimit)
          throw ncg::EnumerationLimitError(
              "n=" + std::to_string(n) + " exceeds the exhaustive limit " +
              std::to_string(slimit) +
              " (raise --exhaustive-limit up to 6, or use --dynamics)");
      if (sns.empty() || salphas.empty()) {
        std::cerr << "search needs either --dynamics <seed> or --n and "
                     "--alpha\n";
        return 1;
      }
      (void)table;  // --n/--alpha alone already means table mode
      return run_table(sns, salphas, include_disconnected, slimit);
    }
  } catch (const ncg::EnumerationLimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return 4;
  } catch (const ncg::ProfileParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
