#pragma once

// Slow, definition-level reimplementations used to cross-check the library.

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "permdyck/permutation.hpp"

namespace oracle {

using permdyck::Permutation;

inline std::vector<int> entries(const Permutation& p) { return {p.values().begin(), p.values().end()}; }

// a_i: largest j < i with p_j > p_i, else 0.
inline std::vector<int> left_borders(const Permutation& p) {
  const int n = p.size();
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j)
      if (p(j) > p(i)) a[static_cast<std::size_t>(i - 1)] = j;
  return a;
}

// b_i: smallest j > i with p_j > p_i, else n + 1.
inline std::vector<int> right_borders(const Permutation& p) {
  const int n = p.size();
  std::vector<int> b(static_cast<std::size_t>(n), n + 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (p(j) > p(i)) {
        b[static_cast<std::size_t>(i - 1)] = j;
        break;
      }
    }
  }
  return b;
}

inline long long inversions(const Permutation& p) {
  long long c = 0;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j) c += p(i) > p(j);
  return c;
}

// Occurrences of a pattern, by trying every index subset of the right size.
inline long long pattern_count(const Permutation& p, const std::vector<int>& pattern) {
  const int n = p.size(), k = static_cast<int>(pattern.size());
  if (k > n) return 0;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  long long count = 0;
  do {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)]) sub.push_back(p(i + 1));
    bool match = true;
    for (int x = 0; x < k && match; ++x)
      for (int y = 0; y < k && match; ++y)
        match = (pattern[static_cast<std::size_t>(x)] < pattern[static_cast<std::size_t>(y)]) ==
                (sub[static_cast<std::size_t>(x)] < sub[static_cast<std::size_t>(y)]);
    count += match;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

// Pairs a < c with p_a < p_c and some entry larger than p_c strictly between them.
inline long long barred_132(const Permutation& p) {
  const int n = p.size();
  long long count = 0;
  for (int a = 1; a <= n; ++a) {
    for (int c = a + 2; c <= n; ++c) {
      if (p(a) > p(c)) continue;
      bool blocked = false;
      for (int b = a + 1; b < c; ++b) blocked |= p(b) > p(c);
      count += blocked;
    }
  }
  return count;
}

inline std::vector<int> descents(const Permutation& p) {
  std::vector<int> d;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) d.push_back(i);
  return d;
}

inline int lrmax(const Permutation& p) {
  int best = 0, count = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) > best) {
      best = p(i);
      ++count;
    }
  }
  return count;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> base(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> all;
  do all.emplace_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  return all;
}

// Bruhat order as the reflexive transitive closure of "swap an inversion-free pair
// and raise the inversion number by exactly one".
inline std::map<Permutation, std::set<Permutation>> bruhat_by_closure(int n) {
  const auto all = all_permutations(n);
  std::map<Permutation, std::vector<Permutation>> up;
  for (const auto& p : all) {
    const long long inv = oracle::inversions(p);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        auto e = entries(p);
        if (e[static_cast<std::size_t>(i)] > e[static_cast<std::size_t>(j)]) continue;
        std::swap(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(j)]);
        Permutation q(e);
        if (oracle::inversions(q) == inv + 1) up[p].push_back(q);
      }
    }
  }
  std::map<Permutation, std::set<Permutation>> above;
  for (const auto& p : all) {
    auto& seen = above[p];
    std::queue<Permutation> work;
    work.push(p);
    seen.insert(p);
    while (!work.empty()) {
      const auto cur = work.front();
      work.pop();
      for (const auto& q : up[cur])
        if (seen.insert(q).second) work.push(q);
    }
  }
  return above;
}

}  // namespace oracle
