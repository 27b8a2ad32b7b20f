#pragma once

// The map from permutations to Dyck paths, the associated shape and its
// rectangle decomposition.

#include <string>
#include <string_view>
#include <vector>

#include "permdyck/permutation.hpp"
#include "permdyck/polynomial.hpp"

namespace permdyck {

/// Balanced word over {u, r}; every prefix has at least as many u as r.
class DyckPath {
 public:
  DyckPath() = default;
  /// Throws std::invalid_argument for foreign letters or an unbalanced word.
  explicit DyckPath(std::string steps);

  const std::string& steps() const { return steps_; }
  int semilength() const { return static_cast<int>(steps_.size() / 2); }
  bool empty() const { return steps_.empty(); }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::string steps_;
};

/// Partition with exactly n-1 weakly decreasing parts (zeros kept) that fits
/// inside the staircase (n-1, n-2, ..., 1).
class ShapePartition {
 public:
  ShapePartition() = default;
  ShapePartition(int n, std::vector<int> parts);

  static ShapePartition empty_shape(int n);
  static ShapePartition staircase(int n);

  int n() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }
  int largest_part() const { return parts_.empty() ? 0 : parts_.front(); }
  long long area() const;
  /// Number of nonzero parts.
  int rows() const;

  /// "7,5,5,2,1,1,0"
  std::string to_string() const;

  friend bool operator==(const ShapePartition&, const ShapePartition&) = default;
  friend auto operator<=>(const ShapePartition&, const ShapePartition&) = default;

 private:
  int n_ = 0;
  std::vector<int> parts_;
};

/// Parses the comma separated form; n is one more than the number of parts.
ShapePartition parse_shape(std::string_view text);

DyckPath dyck_path(const Permutation& p);
ShapePartition shape(const Permutation& p);
ShapePartition shape_from_path(const DyckPath& d);

/// Left border numbers a_1..a_n recovered from the shape alone.
std::vector<int> borders_from_shape(const ShapePartition& s);

/// Diagonal coordinates 2i of the valleys ("ru" factors).
std::vector<int> valleys(const DyckPath& d);

/// 2k where the path first returns to the diagonal.
int first_return(const DyckPath& d);

struct Rectangle {
  int corner_column = 0;  // column of the bottom right cell, 1-indexed
  int width = 0;
  int height = 0;
  int top_row = 0;        // 1-indexed, rows counted from the longest part

  int left_column() const { return corner_column - width + 1; }
  int bottom_row() const { return top_row + height - 1; }

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

struct RectangleDecomposition {
  std::vector<Rectangle> rectangles;
  /// owner[r-1][c-1] is the index into `rectangles` of the cell in row r, column c.
  std::vector<std::vector<int>> owner;
};

/// Cuts the shape at the leftmost corner of maximal reverse hook length, then
/// recurses into the part below and then the part to the right.
RectangleDecomposition rectangle_decomposition(const ShapePartition& s);

/// Corners of a shape as (row, column), top to bottom.
std::vector<std::pair<int, int>> corners(const ShapePartition& s);

BigInt binomial(int n, int k);

/// Product over rectangles of C(w + h - 1, w - 1).
BigInt count_permutations_with_shape(const ShapePartition& s);

}  // namespace permdyck
