// Copyright 2026 The graev Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Independent reference implementations used as test oracles. They follow
// the definitions literally and share no code with the library beyond the
// value types.

#include <algorithm>
#include <cstdint>
#include <bit>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graev/metrics.hpp"
#include "graev/rational.hpp"
#include "graev/topology.hpp"
#include "graev/words.hpp"

namespace graev::testing {

inline Rational R(long p, long q = 1) { return Rational(p, q); }

inline QuasiPseudometric metric(std::size_t n, std::vector<Rational> table) {
  return QuasiPseudometric::validate(PointSet::standard(n), std::move(table));
}

inline Letter pos(PointId p) { return Letter::positive(p); }
inline Letter neg(PointId p) { return Letter::negative(p); }
inline Letter eps() { return Letter::identity(); }

inline ReducedWord rw(std::vector<Letter> letters) {
  return ReducedWord::from_letters(std::move(letters));
}

// ---- words -------------------------------------------------------------

inline bool cancels(const Letter& a, const Letter& b) {
  return !a.is_identity() && a.point == b.point && a.sign == -b.sign;
}

/// Deletes e, then repeatedly deletes the leftmost cancelling pair.
inline std::vector<Letter> oracle_reduce(std::vector<Letter> w) {
  std::erase_if(w, [](const Letter& l) { return l.is_identity(); });
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (cancels(w[i], w[i + 1])) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

/// Every word of exactly `length` letters over `alphabet`, odometer order.
inline void for_each_word(const std::vector<Letter>& alphabet, std::size_t length,
                          const std::function<void(const std::vector<Letter>&)>& f) {
  std::vector<std::size_t> digits(length, 0);
  std::vector<Letter> w(length);
  if (alphabet.empty()) {
    if (length == 0) f(w);
    return;
  }
  while (true) {
    for (std::size_t i = 0; i < length; ++i) w[i] = alphabet[digits[i]];
    f(w);
    std::size_t pos = 0;
    while (pos < length && ++digits[pos] == alphabet.size()) digits[pos++] = 0;
    if (pos == length) return;
  }
}

/// x_1..x_k and their inverses; with_identity adds e.
inline std::vector<Letter> alphabet(std::size_t k, bool with_identity) {
  std::vector<Letter> a;
  for (PointId p = 0; p < k; ++p) {
    a.push_back(pos(p));
    a.push_back(neg(p));
  }
  if (with_identity) a.push_back(eps());
  return a;
}

/// Reduced words of length <= n, found by reducing every word of length
/// <= n and keeping the distinct results.
inline std::set<std::vector<Letter>> oracle_fpn(std::size_t k, std::size_t n) {
  std::set<std::vector<Letter>> out;
  for (std::size_t len = 0; len <= n; ++len) {
    for_each_word(alphabet(k, false), len, [&](const std::vector<Letter>& w) {
      auto r = oracle_reduce(w);
      if (r.size() <= n) out.insert(r);
    });
  }
  return out;
}

// ---- schemes -----------------------------------------------------------

/// Every involution on m points (fixed points allowed), as partner maps.
inline std::vector<std::vector<std::size_t>> all_involutions(std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> map(m, m);
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    while (i < m && map[i] != m) ++i;
    if (i == m) {
      out.push_back(map);
      return;
    }
    map[i] = i;
    fill(i + 1);
    for (std::size_t j = i + 1; j < m; ++j) {
      if (map[j] != m) continue;
      map[i] = j;
      map[j] = i;
      fill(i + 1);
      map[j] = m;
    }
    map[i] = m;
  };
  fill(0);
  return out;
}

/// No fixed point and no i < j < map[i] < map[j], checked pairwise.
inline bool oracle_is_scheme(const std::vector<std::size_t>& map) {
  const std::size_t m = map.size();
  if (m % 2 != 0) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (map[i] == i || map[map[i]] != i) return false;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i < j && j < map[i] && map[i] < map[j]) return false;
    }
  }
  return true;
}

inline std::vector<std::vector<std::size_t>> oracle_schemes(std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  for (auto& map : all_involutions(m)) {
    if (oracle_is_scheme(map)) out.push_back(map);
  }
  return out;
}

// ---- metrics -----------------------------------------------------------

/// d* read straight off the case table, through d_e.
inline Rational oracle_dstar(const QuasiPseudometric& d, const Letter& x, const Letter& y) {
  auto d_e = [&](const Letter& a, const Letter& b) -> Rational {
    if (a == b) return 0;
    if (!a.is_identity() && !b.is_identity()) return d(a.point, b.point);
    return 1;
  };
  if (x == y) return 0;
  if (x.sign >= 0 && y.sign >= 0) return d_e(x, y);
  if (x.sign <= 0 && y.sign <= 0) return d_e(y.inverse(), x.inverse());
  return 2;
}

inline Rational oracle_gamma(const QuasiPseudometric& d, const std::vector<Letter>& w,
                             const std::vector<std::size_t>& map) {
  Rational sum = 0;
  for (std::size_t i = 0; i < w.size(); ++i) sum += oracle_dstar(d, w[i].inverse(), w[map[i]]);
  return sum / 2;
}

/// Minimum of the scheme cost over e-insertions into distinct gaps
/// (k = length mod 2, k <= length) and all schemes.
inline Rational oracle_prenorm(const QuasiPseudometric& d, const std::vector<Letter>& g) {
  if (g.empty()) return 0;
  const std::size_t len = g.size();
  std::optional<Rational> best;
  for (std::uint32_t mask = 0; mask < (1u << (len + 1)); ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    if (k > len || k % 2 != len % 2) continue;
    std::vector<Letter> w;
    for (std::size_t gap = 0; gap <= len; ++gap) {
      if ((mask >> gap) & 1u) w.push_back(eps());
      if (gap < len) w.push_back(g[gap]);
    }
    for (auto& map : oracle_schemes(w.size())) {
      auto c = oracle_gamma(d, w, map);
      if (!best || c < *best) best = c;
    }
  }
  return *best;
}

/// Zero diagonal and triangle inequality, checked directly.
inline bool oracle_is_qpm(std::size_t n, const std::vector<Rational>& t) {
  for (std::size_t x = 0; x < n; ++x) {
    if (t[x * n + x] != 0) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (t[x * n + y] < 0) return false;
      for (std::size_t z = 0; z < n; ++z) {
        if (t[x * n + y] > t[x * n + z] + t[z * n + y]) return false;
      }
    }
  }
  return true;
}

inline std::vector<Rational> rho_table(std::size_t n, std::uint64_t u) {
  std::vector<Rational> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (((u >> x) & 1u) && !((u >> y) & 1u)) t[x * n + y] = 1;
    }
  }
  return t;
}

/// The test battery on n points: rho_U for every U (each U is open in some
/// topology), the discrete metric, then {0, 1/2, 1}-valued metrics taken
/// every `stride`-th in odometer order, up to `samples` of them; duplicates
/// dropped.
inline std::vector<QuasiPseudometric> battery(std::size_t n, std::size_t samples,
                                              std::size_t stride) {
  std::vector<QuasiPseudometric> out;
  std::set<std::vector<Rational>> seen;
  auto add = [&](std::vector<Rational> t) {
    if (!seen.insert(t).second) return;
    out.push_back(metric(n, std::move(t)));
  };
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u) add(rho_table(n, u));
  {
    std::vector<Rational> t(n * n, Rational(1));
    for (std::size_t x = 0; x < n; ++x) t[x * n + x] = 0;
    add(t);
  }
  const Rational values[] = {R(0), R(1, 2), R(1)};
  const std::size_t off = n * (n - 1);
  std::vector<std::size_t> digits(off, 0);
  std::size_t valid = 0, taken = 0;
  while (taken < samples) {
    std::vector<Rational> t(n * n);
    for (std::size_t x = 0, k = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y) t[x * n + y] = values[digits[k++]];
      }
    }
    if (oracle_is_qpm(n, t) && valid++ % stride == 0) {
      const bool fresh = !seen.contains(t);
      add(t);
      if (fresh) ++taken;
    }
    std::size_t p = 0;
    while (p < off && ++digits[p] == 3) digits[p++] = 0;
    if (p == off) break;
  }
  return out;
}

// ---- topologies --------------------------------------------------------

/// All topologies on n <= 4 labelled points by filtering every family of
/// subsets that contains the empty and full sets.
inline std::vector<std::vector<std::uint64_t>> oracle_topologies(std::size_t n) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    if (!((fam >> 0) & 1u) || !((fam >> full) & 1u)) continue;
    bool ok = true;
    for (std::uint64_t a = 0; a < subsets && ok; ++a) {
      if (!((fam >> a) & 1u)) continue;
      for (std::uint64_t b = 0; b < subsets && ok; ++b) {
        if (!((fam >> b) & 1u)) continue;
        ok = ((fam >> (a | b)) & 1u) && ((fam >> (a & b)) & 1u);
      }
    }
    if (!ok) continue;
    std::vector<std::uint64_t> opens;
    for (std::uint64_t a = 0; a < subsets; ++a) {
      if ((fam >> a) & 1u) opens.push_back(a);
    }
    out.push_back(opens);
  }
  return out;
}

/// Smallest closed set containing x: intersection of all closed supersets.
inline std::uint64_t oracle_closure(const std::vector<std::uint64_t>& opens, std::size_t n,
                                    std::size_t x) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::uint64_t c = full;
  for (auto u : opens) {
    const std::uint64_t closed = full & ~u;
    if ((closed >> x) & 1u) c &= closed;
  }
  return c;
}

}  // namespace graev::testing
