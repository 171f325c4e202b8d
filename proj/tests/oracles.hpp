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

#pragma once

// Test-only reference computations. Nothing here calls into the operator or
// enumeration code it is used to check.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace oracle {

using Rational = boost::rational<std::int64_t>;
using Tiers = std::vector<std::vector<std::string>>;

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Ordered Bell numbers from a(n) = sum_k C(n,k) a(n-k), a(0) = 1.
inline std::uint64_t fubini(std::uint64_t n) {
  std::vector<std::uint64_t> a(n + 1, 0);
  a[0] = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    for (std::uint64_t k = 1; k <= m; ++k) a[m] += binomial(m, k) * a[m - k];
  }
  return a[n];
}

inline std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

/// Stirling numbers of the second kind by the usual recurrence.
inline std::uint64_t stirling2(std::uint64_t n, std::uint64_t k) {
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0) return 0;
  return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

/// Relation-level brute force: a R b iff a's tier index <= b's.
struct Relation {
  std::vector<std::string> alts;
  std::map<std::string, std::size_t> tier;

  explicit Relation(const Tiers& tiers) {
    for (std::size_t t = 0; t < tiers.size(); ++t) {
      for (const auto& a : tiers[t]) {
        alts.push_back(a);
        tier[a] = t;
      }
    }
  }
  bool R(const std::string& a, const std::string& b) const { return tier.at(a) <= tier.at(b); }
  bool P(const std::string& a, const std::string& b) const { return R(a, b) && !R(b, a); }

  std::int64_t count_if_pref(const std::string& a, bool strict_above) const {
    std::int64_t c = 0;
    for (const auto& b : alts) c += strict_above ? P(b, a) : R(b, a);
    return c;
  }

  Rational standard(const std::string& a) const { return 1 + count_if_pref(a, true); }
  Rational modified(const std::string& a) const { return count_if_pref(a, false); }

  /// Mean of the integer ranks standard..modified, summed explicitly.
  Rational fractional(const std::string& a) const {
    const auto lo = 1 + count_if_pref(a, true);
    const auto hi = count_if_pref(a, false);
    std::int64_t sum = 0;
    for (auto r = lo; r <= hi; ++r) sum += r;
    return Rational(sum, hi - lo + 1);
  }

  /// 1 + number of distinct indifference classes strictly above a.
  Rational dense(const std::string& a) const {
    std::set<std::set<std::string>> classes;
    for (const auto& b : alts) {
      if (!P(b, a)) continue;
      std::set<std::string> cls;
      for (const auto& c : alts) {
        if (R(b, c) && R(c, b)) cls.insert(c);
      }
      classes.insert(cls);
    }
    return 1 + static_cast<std::int64_t>(classes.size());
  }
};

/// The ten-alternative order used throughout the tests.
inline Tiers worked_example() { return {{"x3"}, {"x6", "x8"}, {"x1", "x4", "x7", "x10"}, {"x2", "x5", "x9"}}; }

}  // namespace oracle
