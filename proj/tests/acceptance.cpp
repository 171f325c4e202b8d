/*
 * Copyright (c) 2026, The denserank Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "denserank/axioms.hpp"
#include "denserank/enumerate.hpp"
#include "denserank/operators.hpp"
#include "oracles.hpp"

using namespace denserank;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<void(Check&)>& body) {
  Check check;
  const auto start = Clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0) {
    std::ostringstream os;
    os << "runtime " << elapsed << " s exceeds " << limit_seconds << " s";
    check.expect(elapsed < limit_seconds, os.str());
  }
  if (!check.ok) ++failures;
  std::printf("[%s] AC%d %s (%.3f s)%s%s\n", check.ok ? "PASS" : "FAIL", number, title.c_str(), elapsed,
              check.ok ? "" : ": ", check.ok ? "" : check.detail.str().c_str());
  std::fflush(stdout);
}

Position q(std::int64_t n, std::int64_t d = 1) { return Position(n, d); }

bool positions_are(const PositionAssignment& got, const std::vector<std::pair<const char*, Position>>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& [label, p] : want) {
    if (!got.contains(AltId(label)) || got.at(AltId(label)) != p) return false;
  }
  return true;
}

bool fails_with_small_witness(const PositionOperator& op, Axiom axiom, int max_n) {
  const auto report = check_axiom(op, axiom, max_n);
  return report.verdict == Verdict::fail && report.witness && report.witness->base.size() <= 3 &&
         reproduces_violation(op, axiom, *report.witness);
}

struct Process {
  int code = -1;
  std::string out;
};

Process run_cli(const std::string& args, const std::string& stdin_path = {}) {
  std::string cmd = std::string("'") + DENSERANK_CLI_PATH + "' " + args;
  if (!stdin_path.empty()) cmd += " < '" + stdin_path + "'";
  Process p;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return p;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

}  // namespace

int main() {
  const auto table = WeakOrder::from_tiers({{"x", "y"}, {"z"}});

  criterion(1, "table reproduction", 1.0, [&](Check& c) {
    c.expect(positions_are(standard(table), {{"x", 1}, {"y", 1}, {"z", 3}}), "standard");
    c.expect(positions_are(modified(table), {{"x", 2}, {"y", 2}, {"z", 3}}), "modified");
    c.expect(positions_are(fractional(table), {{"x", q(3, 2)}, {"y", q(3, 2)}, {"z", 3}}), "fractional");
    c.expect(positions_are(dense(table), {{"x", 1}, {"y", 1}, {"z", 2}}), "dense");
  });

  criterion(2, "ten-alternative dense example", 1.0, [&](Check& c) {
    const auto r = WeakOrder::from_tiers({{"x3"}, {"x6", "x8"}, {"x1", "x4", "x7", "x10"}, {"x2", "x5", "x9"}});
    c.expect(positions_are(dense(r), {{"x3", 1},
                                      {"x6", 2},
                                      {"x8", 2},
                                      {"x1", 3},
                                      {"x4", 3},
                                      {"x7", 3},
                                      {"x10", 3},
                                      {"x2", 4},
                                      {"x5", 4},
                                      {"x9", 4}}),
             "dense positions");
  });

  criterion(3, "sequentiality and duplication evidence", 0, [&](Check& c) {
    const auto d = find_operator("dense");
    const auto seq = check_sequentiality(d, 5);
    c.expect(seq.verdict == Verdict::pass && seq.cases_checked == 1 + 2 + 6 + 24 + 120, "dense sequentiality");
    const auto dup = check_duplication(d, 5);
    c.expect(dup.verdict == Verdict::pass && dup.cases_checked == 1 * 1 + 2 * 3 + 3 * 13 + 4 * 75 + 5 * 541,
             "dense duplication");
    c.expect(fails_with_small_witness(find_operator("quotient"), Axiom::duplication, 3), "quotient duplication");
    c.expect(fails_with_small_witness(find_operator("affine:a=2/1,b=1/1"), Axiom::sequentiality, 3),
             "affine(2,1) sequentiality");
  });

  criterion(4, "sequentiality, truncation and ud-independency evidence", 0, [&](Check& c) {
    const auto d = find_operator("dense");
    c.expect(check_sequentiality(d, 5).verdict == Verdict::pass, "dense sequentiality");
    c.expect(check_truncation(d, 5).verdict == Verdict::pass, "dense truncation");
    c.expect(check_ud_independency(d, 5).verdict == Verdict::pass, "dense ud-independency");
    c.expect(fails_with_small_witness(find_operator("quotient"), Axiom::ud_independency, 3), "quotient ud");
    c.expect(fails_with_small_witness(find_operator("plus-n"), Axiom::truncation, 3), "plus-n truncation");
    c.expect(fails_with_small_witness(find_operator("list-index"), Axiom::sequentiality, 3),
             "list-index sequentiality");
    const auto ratio = find_operator("dense-over-tiercount");
    c.expect(check_duplication(ratio, 4).verdict == Verdict::pass, "dense-over-tiercount duplication");
    c.expect(fails_with_small_witness(ratio, Axiom::truncation, 3), "dense-over-tiercount truncation");
  });

  criterion(5, "implication instances at maxN=4", 0, [&](Check& c) {
    const auto results = verify_implications(4);
    c.expect(registered_operators().size() == 11, "eleven registered operators");
    std::size_t violated = 0;
    for (const auto& r : results) violated += r.status == ImplicationStatus::violated ? 1 : 0;
    c.expect(violated == 0, std::to_string(violated) + " violations");
    c.expect(results.size() == 11 * implications().size(), "instance count");
  });

  criterion(6, "dense equals chain construction on 633 orders", 10.0, [&](Check& c) {
    std::size_t orders = 0;
    std::size_t mismatches = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
      for_each_weak_order(standard_ground(n), [&](const WeakOrder& r) {
        ++orders;
        mismatches += dense(r) == dense_via_chain(r) ? 0 : 1;
        return true;
      });
    }
    c.expect(orders == 633, "order count " + std::to_string(orders));
    c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  });

  criterion(7, "enumeration counts", 5.0, [&](Check& c) {
    const std::array<std::uint64_t, 5> frozen = {1, 3, 13, 75, 541};
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto count = for_each_weak_order(standard_ground(n), [](const WeakOrder&) { return true; });
      c.expect(count == oracle::fubini(n) && count == frozen[n - 1], "n=" + std::to_string(n));
    }
  });

  criterion(8, "midrank identity and pointwise ordering", 0, [&](Check& c) {
    std::size_t bad = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
      for_each_weak_order(standard_ground(n), [&](const WeakOrder& r) {
        const auto d = dense(r);
        const auto s = standard(r);
        const auto f = fractional(r);
        const auto m = modified(r);
        for (const auto& a : r.ground()) {
          const bool ok = f.at(a) == (s.at(a) + m.at(a)) / 2 && d.at(a) <= s.at(a) && s.at(a) <= f.at(a) &&
                          f.at(a) <= m.at(a);
          bad += ok ? 0 : 1;
        }
        return true;
      });
    }
    c.expect(bad == 0, std::to_string(bad) + " violations");
  });

  criterion(9, "duplication shift patterns", 0, [&](Check& c) {
    std::size_t events = 0;
    std::size_t bad = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      for_each_weak_order(standard_ground(n), [&](const WeakOrder& r) {
        const auto clone = fresh_clone_id(r);
        const auto before_s = standard(r);
        const auto before_m = modified(r);
        const auto before_f = fractional(r);
        const auto before_d = dense(r);
        for (const auto& pattern : r.ground()) {
          ++events;
          const auto t = r.tier_of(pattern);
          const auto e = duplicate(r, pattern, clone);
          const auto s = standard(e);
          const auto m = modified(e);
          const auto f = fractional(e);
          const auto d = dense(e);
          for (const auto& a : r.ground()) {
            const auto tier = r.tier_of(a);
            if ((s.at(a) != before_s.at(a)) && tier <= t) ++bad;
            if ((m.at(a) != before_m.at(a)) && tier < t) ++bad;
            if ((f.at(a) != before_f.at(a)) && tier < t) ++bad;
            if (d.at(a) != before_d.at(a)) ++bad;
          }
        }
        return true;
      });
    }
    c.expect(events == 1 * 1 + 2 * 3 + 3 * 13 + 4 * 75, "event count");
    c.expect(bad == 0, std::to_string(bad) + " unexpected changes");
  });

  criterion(10, "command line end to end", 0, [&](Check& c) {
    const auto dir = std::filesystem::temp_directory_path() / ("denserank_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const auto csv = dir / "table.csv";
    std::ofstream(csv, std::ios::binary) << "x,10\ny,10\nz,7\n";

    const auto rank = run_cli("rank --method dense", csv.string());
    c.expect(rank.code == 0, "rank exit " + std::to_string(rank.code));
    c.expect(rank.out == "id,position\nx,1\ny,1\nz,2\n", "rank output");

    const auto first = run_cli("verify --max-n 4 --report '" + (dir / "a.json").string() + "'");
    const auto second = run_cli("verify --max-n 4 --report '" + (dir / "b.json").string() + "'");
    c.expect(first.code == 0, "verify exit " + std::to_string(first.code));
    c.expect(second.code == 0, "second verify exit " + std::to_string(second.code));
    const auto a = slurp(dir / "a.json");
    c.expect(!a.empty() && a == slurp(dir / "b.json"), "reports differ");
    std::filesystem::remove_all(dir);
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
