#pragma once

// Exhaustive enumeration of S_n and the brute-force distributions used as
// reference values.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "permdyck/dyck.hpp"
#include "permdyck/permutation.hpp"

namespace permdyck {

inline constexpr int kMaxEnumerationN = 11;

std::uint64_t factorial(int n);

/// The permutation with the given 0-based lexicographic rank in S_n.
Permutation unrank(int n, std::uint64_t rank);

/// Lexicographic stream over the ranks [first, last) of S_n.
class PermutationStream {
 public:
  /// Throws std::out_of_range if n exceeds kMaxEnumerationN.
  explicit PermutationStream(int n);
  PermutationStream(int n, std::uint64_t first, std::uint64_t last);

  /// Fills `out` with the next permutation; false once the range is exhausted.
  bool next(Permutation& out);
  std::uint64_t rank() const { return rank_; }

 private:
  Permutation current_;
  std::uint64_t rank_;
  std::uint64_t last_;
};

std::vector<Permutation> enumerate(int n);

/// Splits the ranks of S_n into `workers` contiguous chunks and runs
/// fn(worker_state, permutation, rank) over each chunk on its own thread.
/// States are returned in chunk order for merging.
template <class State, class Fn>
std::vector<State> run_partitioned(int n, int workers, Fn fn) {
  const std::uint64_t total = factorial(n);
  workers = std::max(1, workers);
  std::vector<State> states(static_cast<std::size_t>(workers));
  auto chunk = [&](int w) {
    const std::uint64_t first = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
    const std::uint64_t last = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
    PermutationStream stream(n, first, last);
    Permutation p;
    while (true) {
      const std::uint64_t r = stream.rank();
      if (!stream.next(p)) break;
      fn(states[static_cast<std::size_t>(w)], p, r);
    }
  };
  if (workers == 1) {
    chunk(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(chunk, w);
    for (auto& t : pool) t.join();
  }
  return states;
}

/// 1-3-2 avoiders of length n: n splits them into a left part above a right part.
std::vector<Permutation> avoiders_132(int n);
/// 2-3-1 avoiders of length n: the left part lies below the right part.
std::vector<Permutation> avoiders_231(int n);

BigInt catalan(int n);

enum class Statistic { lbsum, des, maj, lrmax, maxdes, inv };
enum class AvoidFilter { none, avoid132, avoid231 };

Statistic parse_statistic(std::string_view name);
AvoidFilter parse_filter(std::string_view name);  // "", "none", "132", "231"
std::string_view name_of(Statistic s);
std::string_view name_of(AvoidFilter f);

std::int64_t statistic_value(const Permutation& p, Statistic s);
bool passes(const Permutation& p, AvoidFilter f);

struct Distribution {
  int n = 0;
  Statistic statistic = Statistic::lbsum;
  AvoidFilter filter = AvoidFilter::none;
  std::map<std::int64_t, BigInt> counts;

  BigInt total() const;
  /// Adds the counts of another distribution over the same statistic.
  Distribution& merge(const Distribution& other);
  UniPolynomial as_polynomial() const;
};

Distribution distribution(int n, Statistic s, AvoidFilter f = AvoidFilter::none, int workers = 1);

/// Canonical shape text -> number of permutations in S_n with that shape.
using ShapeCensus = std::map<std::string, std::uint64_t>;

ShapeCensus shape_census(int n, int workers = 1);

nlohmann::json to_json(const Distribution& d);
std::string to_csv(const Distribution& d);
nlohmann::json to_json(const ShapeCensus& c);
std::string to_csv(const ShapeCensus& c);

}  // namespace permdyck
