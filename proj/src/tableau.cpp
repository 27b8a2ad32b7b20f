#include "permdyck/tableau.hpp"

#include <algorithm>
#include <string>

namespace permdyck {

std::vector<int> row_labels_for(const ShapePartition& s) {
  const auto a = borders_from_shape(s);
  std::vector<int> labels;
  for (int j = 2; j <= s.n(); ++j)
    if (a[static_cast<std::size_t>(j - 1)] > 0) labels.push_back(j);
  std::stable_sort(labels.begin(), labels.end(), [&](int x, int y) {
    return a[static_cast<std::size_t>(x - 1)] < a[static_cast<std::size_t>(y - 1)];
  });
  return labels;
}

std::vector<int> row_lengths_by_label(const FilledTableau& t) {
  const auto a = borders_from_shape(t.shape);
  std::vector<int> len(static_cast<std::size_t>(t.n()) + 1, 0);
  for (int j = 1; j <= t.n(); ++j) len[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j - 1)];
  return len;
}

void validate_structure(const FilledTableau& t) {
  if (t.row_labels != row_labels_for(t.shape)) {
    throw InvalidFilling("invalid filling: row labels do not match the shape");
  }
  const auto len = row_lengths_by_label(t);
  for (const auto& d : t.dots) {
    if (d.row_label < 1 || d.row_label > t.n() || d.column < 1 ||
        d.column > len[static_cast<std::size_t>(d.row_label)]) {
      throw InvalidFilling("invalid filling: dot (" + std::to_string(d.column) + "," +
                           std::to_string(d.row_label) + ") lies outside the shape");
    }
  }
}

FilledTableau encode_tableau(const Permutation& p) {
  FilledTableau t;
  t.shape = shape(p);
  t.row_labels = row_labels_for(t.shape);
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p(i) > p(j)) t.dots.insert({i, j});
  return t;
}

Permutation decode_tableau(const FilledTableau& t) {
  validate_structure(t);
  const int n = t.n();
  std::vector<int> code(static_cast<std::size_t>(n), 0);
  for (const auto& d : t.dots) ++code[static_cast<std::size_t>(d.column - 1)];

  std::vector<int> unused(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) unused[static_cast<std::size_t>(v - 1)] = v;
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int c = code[static_cast<std::size_t>(i - 1)];
    if (c >= static_cast<int>(unused.size())) {
      throw InvalidFilling("invalid filling: column " + std::to_string(i) + " has " + std::to_string(c) +
                           " dots but only " + std::to_string(unused.size()) + " values remain");
    }
    entries.push_back(unused[static_cast<std::size_t>(c)]);
    unused.erase(unused.begin() + c);
  }
  Permutation p(std::move(entries));

  const auto reencoded = encode_tableau(p);
  if (reencoded.dots != t.dots) {
    throw InvalidFilling("inconsistent filling: dots differ from the inversions of " + p.to_string());
  }
  if (reencoded.shape != t.shape) {
    throw InvalidFilling("inconsistent filling: " + p.to_string() + " has shape " +
                         reencoded.shape.to_string());
  }
  return p;
}

namespace {

// Label of geometric row r, counted from the top.
int label_of_row(const FilledTableau& t, int r) {
  const int m = static_cast<int>(t.row_labels.size());
  return t.row_labels[static_cast<std::size_t>(m - r)];
}

}  // namespace

FilledTableau min_filling(const ShapePartition& s) {
  FilledTableau t;
  t.shape = s;
  t.row_labels = row_labels_for(s);
  for (const auto& rect : rectangle_decomposition(s).rectangles)
    for (int r = rect.top_row; r <= rect.bottom_row(); ++r)
      t.dots.insert({rect.corner_column, label_of_row(t, r)});
  return t;
}

FilledTableau max_filling(const ShapePartition& s) {
  FilledTableau t;
  t.shape = s;
  t.row_labels = row_labels_for(s);
  const auto len = row_lengths_by_label(t);
  for (int label : t.row_labels)
    for (int c = 1; c <= len[static_cast<std::size_t>(label)]; ++c) t.dots.insert({c, label});
  return t;
}

Permutation bijection_132_to_231(const Permutation& p) {
  if (!avoids(p, pattern_132())) {
    throw std::domain_error("bijection_132_to_231: " + p.to_string() + " contains 1-3-2");
  }
  return decode_tableau(min_filling(shape(p)));
}

std::int64_t count_132_from_tableau(const FilledTableau& t) {
  const auto len = row_lengths_by_label(t);
  std::int64_t total = 0;
  for (int label : t.row_labels) {
    int empties = 0;
    for (int c = 1; c <= len[static_cast<std::size_t>(label)]; ++c) {
      if (t.dots.count({c, label})) total += empties;
      else ++empties;
    }
  }
  return total;
}

std::int64_t count_231_from_tableau(const FilledTableau& t) {
  const auto len = row_lengths_by_label(t);
  std::int64_t total = 0;
  for (int k : t.row_labels) {
    std::vector<int> filled;
    for (int c = 1; c <= len[static_cast<std::size_t>(k)]; ++c)
      if (t.dots.count({c, k})) filled.push_back(c);
    for (std::size_t x = 0; x < filled.size(); ++x)
      for (std::size_t y = x + 1; y < filled.size(); ++y) {
        const int i = filled[x], j = filled[y];
        const bool cell_exists = j <= t.n() && i <= len[static_cast<std::size_t>(j)];
        if (!cell_exists || !t.dots.count({i, j})) ++total;
      }
  }
  return total;
}

nlohmann::json to_json(const FilledTableau& t) {
  nlohmann::json dots = nlohmann::json::array();
  for (const auto& d : t.dots) dots.push_back({d.column, d.row_label});
  return {{"n", t.n()}, {"shape", t.shape.parts()}, {"row_labels", t.row_labels}, {"dots", dots}};
}

FilledTableau tableau_from_json(const nlohmann::json& j) {
  FilledTableau t;
  try {
    t.shape = ShapePartition(j.at("n").get<int>(), j.at("shape").get<std::vector<int>>());
    t.row_labels = j.at("row_labels").get<std::vector<int>>();
    for (const auto& d : j.at("dots")) {
      if (!d.is_array() || d.size() != 2) throw ParseError("tableau dot must be [column, row_label]");
      t.dots.insert({d[0].get<int>(), d[1].get<int>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("tableau json: ") + e.what());
  }
  validate_structure(t);
  return t;
}

}  // namespace permdyck
