#pragma once

// Dotted fillings of the shape of a permutation. Columns are labelled 1..k
// from the left, each nonzero row carries the position j whose left border
// number is the row length, and a dot at (i, j) marks the inversion (i, j).

#include <compare>
#include <set>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "permdyck/dyck.hpp"
#include "permdyck/permutation.hpp"

namespace permdyck {

/// A filling that cannot be decoded or that disagrees with its own decoding.
class InvalidFilling : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Dot {
  int column = 0;
  int row_label = 0;
  friend auto operator<=>(const Dot&, const Dot&) = default;
};

struct FilledTableau {
  ShapePartition shape;
  std::vector<int> row_labels;  // bottom to top, one per nonzero row
  std::set<Dot> dots;

  int n() const { return shape.n(); }
  int columns() const { return shape.largest_part(); }

  friend bool operator==(const FilledTableau&, const FilledTableau&) = default;
};

/// Row labels of a shape, bottom to top: shorter rows first, equal lengths by
/// increasing label.
std::vector<int> row_labels_for(const ShapePartition& s);

/// Length of every labelled row, indexed by label (size n+1; 0 for unused labels).
std::vector<int> row_lengths_by_label(const FilledTableau& t);

/// Throws InvalidFilling if labels or dots do not fit the shape.
void validate_structure(const FilledTableau& t);

FilledTableau encode_tableau(const Permutation& p);

/// Lehmer decoding from the column dot counts, followed by a consistency
/// check of the full dot set and the shape against the decoded permutation.
Permutation decode_tableau(const FilledTableau& t);

/// Dots on the rightmost column of every rectangle of the decomposition.
FilledTableau min_filling(const ShapePartition& s);

/// Every cell dotted.
FilledTableau max_filling(const ShapePartition& s);

/// Maps a 1-3-2 avoider to the 2-3-1 avoider with the same shape.
Permutation bijection_132_to_231(const Permutation& p);

/// Pairs (empty cell, dotted cell) in one row with the empty cell further left.
std::int64_t count_132_from_tableau(const FilledTableau& t);

/// Pairs of dots (i, k), (j, k) with i < j where cell (i, j) is absent or empty.
std::int64_t count_231_from_tableau(const FilledTableau& t);

nlohmann::json to_json(const FilledTableau& t);
FilledTableau tableau_from_json(const nlohmann::json& j);

}  // namespace permdyck
