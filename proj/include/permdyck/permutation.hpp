#pragma once

// Permutations in one-line notation together with the border-number
// statistics, classical pattern counts and the decreasing binary tree.
//
// Positions and values are 1-indexed throughout: p(i) is the entry at
// position i, a border number is a position, a descent i means p(i) > p(i+1).

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permdyck {

/// Raised for malformed textual input; the message names the bad token.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `entries` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  /// Entry at 1-indexed position i.
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> values() const { return entries_; }

  /// Position of value v (1-indexed).
  int position_of(int v) const;

  Permutation reversed() const;
  Permutation inverse() const;

  /// Transposes the entries at positions i and j.
  Permutation swapped(int i, int j) const;

  /// Advances to the lexicographic successor; false (and unchanged) at the last one.
  bool next_lexicographic();

  std::string to_string() const;  // "5 3 1 4 8 2 7 6"
  std::string to_compact() const; // "53148276" when n <= 9, otherwise comma separated

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

/// Accepts "5 3 1 4", "5,3,1,4" or the compact digit form "5314".
Permutation parse_permutation(std::string_view text);

/// Order-isomorphic permutation of a word of distinct integers.
Permutation standardize(std::span<const int> word);

/// a_i: position of the rightmost entry left of position i that exceeds p(i), 0 if none.
std::vector<int> left_border_numbers(const Permutation& p);

/// b_i: smallest j > i with p(i) < p(j), n+1 if none.
std::vector<int> right_border_numbers(const Permutation& p);

struct BorderProfile {
  std::vector<int> left;
  std::vector<int> right;
};

BorderProfile border_profile(const Permutation& p);

struct StatVector {
  int des = 0;
  int maj = 0;
  int lrmax = 0;
  int maxdes = 0;
  std::int64_t lbsum = 0;
  std::int64_t inv = 0;
  std::vector<int> descent_set;

  friend bool operator==(const StatVector&, const StatVector&) = default;
};

StatVector stats(const Permutation& p);

std::vector<int> descent_set(const Permutation& p);
std::int64_t inversions(const Permutation& p);

/// Number of classical (all gaps allowed) occurrences of a pattern of length 2 or 3.
std::int64_t count_classical_pattern(const Permutation& p, const Permutation& pattern);

/// 1-3-2 occurrences (a<b<c, p(a)<p(c)<p(b)) with no entry larger than p(b)
/// strictly between positions a and c.
std::int64_t count_barred_132(const Permutation& p);

bool avoids(const Permutation& p, const Permutation& pattern);

/// Frequently used patterns.
const Permutation& pattern_21();
const Permutation& pattern_132();
const Permutation& pattern_231();

/// Decreasing binary tree: root n, left and right subtrees built from the
/// parts before and after n. Links are stored per value; 0 means absent.
struct DecreasingTree {
  int root = 0;
  std::vector<int> left;    // indexed by value, size n+1
  std::vector<int> right;
  std::vector<int> parent;

  int size() const { return static_cast<int>(left.size()) - 1; }
  std::vector<int> inorder() const;
};

DecreasingTree decreasing_tree(const Permutation& p);

}  // namespace permdyck
