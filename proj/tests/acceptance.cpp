// Acceptance run: one PASS/FAIL line per criterion. Exit status is 0 only when
// the failing set equals the --expect-fail set (empty by default), so a known
// failure stays visible and a surprise pass or new failure still breaks ctest.
// Every criterion starts from a cold cache so the timings are honest.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hecke/abacus.hpp"
#include "hecke/fixtures.hpp"
#include "hecke/jantzen.hpp"
#include "hecke/llt.hpp"
#include "hecke/mullineux.hpp"
#include "hecke/notation.hpp"
#include "hecke/partition.hpp"
#include "hecke/verifier.hpp"

using namespace hecke;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> notes;
};

const std::string kFixtures = HECKE_FIXTURE_DIR;

std::vector<DTableRow> d_rows(const char* file, int e_min, int e_max) {
  return expand_d_table(read_csv(kFixtures + "/" + file), e_min, e_max);
}

// Shared by criteria 1 and 2. Printed d-cells are compared on the printed
// labels. Label cells that disagree with the computed Mullineux image are
// listed; they must be exactly the known misprints.
Outcome check_d_table(const std::vector<DTableRow>& rows, const std::set<std::pair<std::size_t, int>>& known_label_errata) {
  Outcome out;
  CanonicalCache cache;
  int cells = 0, bad = 0;
  std::set<std::pair<std::size_t, int>> label_errata;
  std::map<int, VerifierReport> reports;
  for (const auto& row : rows) {
    const BlockId b = principal_5e(row.e);
    const Partition l = decode(row.lambda, b), m = decode(row.mu, b);
    const Partition ld = decode(row.lambda_dual, b), md = decode(row.mu_dual, b);
    auto compare = [&](const Partition& x, const Partition& y, const LaurentPoly& printed, const char* which) {
      ++cells;
      const LaurentPoly got = v_decomp(x, y, row.e, cache);
      if (got == printed) return;
      ++bad;
      std::ostringstream s;
      s << "line " << row.line << " e=" << row.e << " " << which << ": printed " << to_string(printed) << ", computed "
        << to_string(got);
      out.notes.push_back(s.str());
    };
    if (row.d) compare(l, m, *row.d, "d");
    if (row.d_dual) compare(ld, md, *row.d_dual, "d dual");
    if (mullineux(l, row.e) != ld || mullineux(m, row.e) != md) {
      label_errata.insert({row.line, row.e});
      std::ostringstream s;
      s << "line " << row.line << " e=" << row.e << ": printed duals " << row.lambda_dual << ", " << row.mu_dual
        << "; computed " << encode_string(mullineux(l, row.e), b) << ", " << encode_string(mullineux(m, row.e), b);
      out.notes.push_back(s.str());
    }
    // Rows without printed values must still be resolved to zero by the engine.
    if (!row.d && !row.d_dual) {
      auto it = reports.find(row.e);
      if (it == reports.end()) it = reports.emplace(row.e, report(row.e, cache)).first;
      const AdjStatus s = it->second.entry(l, m);
      ++cells;
      if (s.status != Status::Zero) {
        ++bad;
        out.notes.push_back("line " + std::to_string(row.line) + " e=" + std::to_string(row.e) + ": not resolved");
      }
    }
  }
  out.pass = bad == 0 && label_errata == known_label_errata;
  std::ostringstream s;
  s << rows.size() << " rows, " << cells << " cells, " << bad << " mismatched, " << label_errata.size()
    << " known label misprints";
  out.detail = s.str();
  return out;
}

Outcome criterion1() {
  const auto rows = d_rows("table31.csv", 2, 4);
  // Row 6 misprints mu dual; its printed d dual is right for the printed pair.
  auto out = check_d_table(rows, {{rows.back().line, 4}});
  out.pass = out.pass && rows.size() == 6;
  return out;
}

Outcome criterion2() {
  const auto rows = d_rows("table32.csv", 4, 6);
  std::size_t misprint = 0;
  for (const auto& r : rows) {
    if (r.e == 4 && r.mu == "<1_3,2_2>") misprint = r.line;
  }
  std::set<std::size_t> lines;
  for (const auto& r : rows) lines.insert(r.line);
  auto out = check_d_table(rows, {{misprint, 4}});
  out.pass = out.pass && lines.size() == 10;
  return out;
}

Outcome criterion3() {
  Outcome out;
  const auto table = read_csv(kFixtures + "/tableA.csv");
  const auto checks = check_mullineux_table(expand_mullineux_table(table, 2, 8));
  std::set<std::size_t> lines;
  int bad = 0;
  bool self_dual_seen = false;
  for (const auto& c : checks) {
    lines.insert(c.row.line);
    if (c.ok && c.row.note == "self-dual" && c.mu == c.computed) self_dual_seen = true;
    if (c.ok) continue;
    ++bad;
    std::ostringstream s;
    s << "line " << c.row.line << " e=" << c.row.vars.at('e') << " " << c.row.mu << ": printed " << c.row.mu_dual
      << ", computed " << (c.computed_text.empty() ? "?" : c.computed_text);
    if (!c.error.empty()) s << " (" << c.error << ")";
    out.notes.push_back(s.str());
  }
  out.pass = bad == 0 && lines.size() == table.rows.size() && self_dual_seen;
  std::ostringstream s;
  s << checks.size() << " instances of " << table.rows.size() << " rows, " << bad << " mismatched";
  out.detail = s.str();
  return out;
}

std::set<Partition> three_families(int e) {
  const BlockId b = principal_5e(e);
  std::set<Partition> out;
  for (int i = 1; i < e; ++i) {
    const std::string si = std::to_string(i);
    out.insert(decode("<" + si + "_{3,2}>", b));
    for (int j = 0; j < e; ++j) {
      const std::string sj = std::to_string(j);
      if (i <= j - 1) out.insert(decode("<" + si + "_{2^2}," + sj + ">", b));
      if (j <= i - 2) out.insert(decode("<" + sj + "," + si + "_{2^2}>", b));
    }
  }
  return out;
}

Outcome criterion4() {
  Outcome out;
  out.pass = true;
  std::ostringstream s;
  for (int e = 2; e <= 7; ++e) {
    const auto found = classify_reducible(e);
    const std::set<Partition> got(found.begin(), found.end());
    const bool ok = got == three_families(e) && got.size() == found.size();
    out.pass = out.pass && ok;
    s << "e=" << e << ":" << found.size() << (ok ? "" : "!") << ' ';
  }
  out.detail = s.str();
  return out;
}

Outcome criterion5() {
  CanonicalCache cache;
  const auto summary = ryom_hansen_sweep(10, {2, 3, 4}, cache);
  Outcome out;
  out.pass = summary.pairs > 0 && summary.mismatches.empty() && summary.zero_mismatches == 0;
  std::ostringstream s;
  s << summary.pairs << " pairs, " << summary.mismatches.size() << " mismatches";
  out.detail = s.str();
  return out;
}

Outcome criterion6() {
  std::size_t count = 0, bad = 0;
  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (int e = 2; e <= 6; ++e) {
        if (!is_e_regular(p, e)) continue;
        ++count;
        const Partition d = mullineux(p, e);
        if (d != mullineux_kleshchev(p, e) || mullineux(d, e) != p) ++bad;
      }
    }
  }
  Outcome out;
  out.pass = bad == 0 && count > 0;
  out.detail = std::to_string(count) + " partitions, " + std::to_string(bad) + " mismatches";
  return out;
}

Outcome criterion7() {
  CanonicalCache cache, shifted;
  std::size_t count = 0, bad = 0;
  for (int n = 0; n <= 12; ++n) {
    for (const auto& mu : partitions_of(n)) {
      for (int e = 2; e <= 6; ++e) {
        if (!is_e_regular(mu, e)) continue;
        ++count;
        const int r = default_bead_count(n, e);
        const FockVector g = canonical_basis(mu, e, r, cache);
        bool ok = g.coefficient(mu) == LaurentPoly::constant(1);
        for (const auto& [lambda, c] : g.terms()) {
          const Dominance dom = dominance_cmp(lambda, mu);
          ok = ok && (dom == Dominance::Less || dom == Dominance::Equal) && c.in_nonneg_polys();
        }
        ok = ok && canonical_basis(mu, e, r + e, shifted) == g;
        if (!ok) ++bad;
      }
    }
  }
  Outcome out;
  out.pass = bad == 0 && count > 0;
  out.detail = std::to_string(count) + " canonical basis vectors, " + std::to_string(bad) + " failures";
  return out;
}

Outcome criterion8() {
  Outcome out;
  out.pass = true;
  std::ostringstream s;
  CanonicalCache cache;
  for (int e = 4; e <= 6; ++e) {
    const Prop33Result r = prop33_check(e, cache);
    bool positive = true;
    for (const auto& [nu, a] : r.expansion) positive = positive && a.in_nonneg_symmetric();
    const bool ok = r.ok() && r.a_lambda_zero && r.positivity && positive && r.d_lambda0_mutilde.is_zero();
    out.pass = out.pass && ok;
    s << "e=" << e << ":" << (ok ? "ok" : "bad") << " (" << r.expansion.size() << " terms) ";
  }
  out.detail = s.str();
  return out;
}

struct Run {
  int code = -1;
  std::string output;
};

Run run_cli(const std::string& args) {
  Run run;
  const std::string cmd = std::string("\"") + HECKE_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return run;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) run.output.append(buf, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) run.code = WEXITSTATUS(status);
  return run;
}

Outcome criterion9() {
  Outcome out;
  out.pass = true;
  std::ostringstream s;
  for (int e = 2; e <= 6; ++e) {
    const Run run = run_cli("verify --e " + std::to_string(e) + " --format json");
    bool ok = run.code == 0;
    std::string verdict = "?";
    try {
      const auto doc = nlohmann::json::parse(run.output);
      const auto& summary = doc.at("summary");
      verdict = summary.at("verdict").get<std::string>();
      std::set<std::pair<std::string, std::string>> unknown;
      for (const auto& u : summary.at("unknown")) unknown.emplace(u.at(0).get<std::string>(), u.at(1).get<std::string>());
      if (e == 4) {
        ok = ok && !summary.at("identity").get<bool>() &&
             unknown == std::set<std::pair<std::string, std::string>>{{"<1_{2^2},3>", "<1_2,2_2,3>"},
                                                                      {"<1,3_{2^2}>", "<3_5>"}};
      } else {
        ok = ok && summary.at("identity").get<bool>() && unknown.empty();
      }
    } catch (const std::exception& err) {
      ok = false;
      out.notes.push_back("e=" + std::to_string(e) + ": " + err.what());
    }
    out.pass = out.pass && ok;
    s << "e=" << e << ": " << verdict << " (exit " << run.code << ")  ";
  }
  // Usage errors are exit 2.
  const Run usage = run_cli("verify");
  out.pass = out.pass && usage.code == 2;
  s << "usage error exit " << usage.code;
  out.detail = s.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> expect_fail;
  CLI::App app{"acceptance criteria"};
  app.add_option("--expect-fail", expect_fail, "criterion ids known to fail");
  CLI11_PARSE(app, argc, argv);
  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::set<int> failed;
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "first d-value table", 300, criterion1},
      {2, "second d-value table", 1800, criterion2},
      {3, "published Mullineux tables", 120, criterion3},
      {4, "reducible-restriction families, e = 2..7", 600, criterion4},
      {5, "Ryom-Hansen equivalence, n <= 10, e = 2..4", 300, criterion5},
      {6, "Mullineux algorithms and involution, n <= 12", 600, criterion6},
      {7, "canonical basis structure, n <= 12", 600, criterion7},
      {8, "Fock-space proposition, e = 4..6", 7200, criterion8},
      {9, "verify verdicts, e = 2..6", 600, criterion9},
  };
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& err) {
      out.pass = false;
      out.detail = std::string("exception: ") + err.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = out.pass && secs <= c.budget_s;
    if (!pass) failed.insert(c.id);
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(2);
    t << secs;
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << out.detail
              << "; " << t.str() << "s]\n";
    for (const auto& n : out.notes) std::cout << "    " << n << '\n';
  }
  std::cout << (failed.empty() ? "all criteria pass" : std::to_string(failed.size()) + " criteria fail") << '\n';
  if (!expected.empty()) std::cout << "failing set " << (failed == expected ? "matches" : "differs from") << " --expect-fail\n";
  return failed == expected ? 0 : 1;
}
