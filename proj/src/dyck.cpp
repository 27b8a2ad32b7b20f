#include "permdyck/dyck.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>

namespace permdyck {

DyckPath::DyckPath(std::string steps) : steps_(std::move(steps)) {
  int height = 0;
  for (char c : steps_) {
    if (c == 'u') {
      ++height;
    } else if (c == 'r') {
      if (--height < 0) throw std::invalid_argument("Dyck word dips below the diagonal: " + steps_);
    } else {
      throw std::invalid_argument(std::string("Dyck word has a letter other than u/r: '") + c + "'");
    }
  }
  if (height != 0) throw std::invalid_argument("unbalanced Dyck word: " + steps_);
}

ShapePartition::ShapePartition(int n, std::vector<int> parts) : n_(n), parts_(std::move(parts)) {
  if (n < 0) throw std::invalid_argument("shape: negative n");
  const auto expected = static_cast<std::size_t>(std::max(n - 1, 0));
  if (parts_.size() != expected) {
    throw std::invalid_argument("shape must have exactly n-1 = " + std::to_string(expected) + " parts");
  }
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] < 0) throw std::invalid_argument("shape: negative part");
    if (j && parts_[j] > parts_[j - 1]) throw std::invalid_argument("shape parts must be weakly decreasing");
    // Row j+1 (1-indexed) holds at most n-(j+1) cells.
    if (parts_[j] > n - 1 - static_cast<int>(j)) {
      throw std::invalid_argument("shape does not fit in the staircase: " + to_string());
    }
  }
}

ShapePartition ShapePartition::empty_shape(int n) {
  return ShapePartition(n, std::vector<int>(static_cast<std::size_t>(std::max(n - 1, 0)), 0));
}

ShapePartition ShapePartition::staircase(int n) {
  std::vector<int> parts;
  for (int j = n - 1; j >= 1; --j) parts.push_back(j);
  return ShapePartition(n, std::move(parts));
}

long long ShapePartition::area() const {
  long long a = 0;
  for (int x : parts_) a += x;
  return a;
}

int ShapePartition::rows() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int x) { return x > 0; }));
}

std::string ShapePartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

ShapePartition parse_shape(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '(')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ')')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  while (i <= text.size() && !text.empty()) {
    std::size_t j = text.find(',', i);
    if (j == std::string_view::npos) j = text.size();
    auto tok = trim(text.substr(i, j - i));
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("not an integer part: '" + std::string(tok) + "'");
    }
    parts.push_back(v);
    i = j + 1;
  }
  const int n = static_cast<int>(parts.size()) + 1;
  try {
    return ShapePartition(n, std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

DyckPath dyck_path(const Permutation& p) {
  // Before the r of position j come as many u's as there are positions whose
  // left border number is j-1; this is the preorder reading of the recursion.
  const int n = p.size();
  std::vector<int> ups(static_cast<std::size_t>(n) + 1, 0);
  for (int a : left_border_numbers(p)) ++ups[a];
  std::string w;
  w.reserve(2 * static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    w.append(static_cast<std::size_t>(ups[j - 1]), 'u');
    w.push_back('r');
  }
  return DyckPath(std::move(w));
}

ShapePartition shape(const Permutation& p) {
  const int n = p.size();
  if (n <= 1) return ShapePartition::empty_shape(n);
  auto a = left_border_numbers(p);
  std::vector<int> parts(a.begin() + 1, a.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return ShapePartition(n, std::move(parts));
}

ShapePartition shape_from_path(const DyckPath& d) {
  const int n = d.semilength();
  // Row k from the bottom (k = 1..n) has as many cells as r steps precede the k-th u.
  std::vector<int> before_up;
  int rs = 0;
  for (char c : d.steps()) {
    if (c == 'u') before_up.push_back(rs);
    else ++rs;
  }
  std::vector<int> parts;
  for (int k = n; k >= 2; --k) parts.push_back(before_up[static_cast<std::size_t>(k - 1)]);
  return ShapePartition(n, std::move(parts));
}

std::vector<int> borders_from_shape(const ShapePartition& s) {
  const int n = s.n();
  std::vector<int> a(static_cast<std::size_t>(n), -1);
  if (n == 0) return a;
  a[0] = 0;
  std::multiset<int> remaining(s.parts().begin(), s.parts().end());
  std::set<int> distinct;
  for (int x : s.parts())
    if (x > 0) distinct.insert(x);
  for (int i : distinct) {
    a[static_cast<std::size_t>(i)] = i;  // a_{i+1} = i
    remaining.erase(remaining.find(i));
  }
  for (int j = 2; j <= n; ++j) {
    if (a[j - 1] >= 0) continue;
    auto it = remaining.lower_bound(j);  // first part >= j
    if (it == remaining.begin()) {
      throw std::invalid_argument("borders_from_shape: no part smaller than " + std::to_string(j));
    }
    --it;
    a[j - 1] = *it;
    remaining.erase(it);
  }
  return a;
}

std::vector<int> valleys(const DyckPath& d) {
  std::vector<int> out;
  const auto& w = d.steps();
  int rs = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 'r') {
      ++rs;
      if (i + 1 < w.size() && w[i + 1] == 'u') out.push_back(2 * rs);
    }
  }
  return out;
}

int first_return(const DyckPath& d) {
  if (d.empty()) throw std::invalid_argument("first_return: empty path");
  int height = 0;
  const auto& w = d.steps();
  for (std::size_t i = 0; i < w.size(); ++i) {
    height += w[i] == 'u' ? 1 : -1;
    if (height == 0) return static_cast<int>(i) + 1;
  }
  return static_cast<int>(w.size());
}

std::vector<std::pair<int, int>> corners(const ShapePartition& s) {
  std::vector<std::pair<int, int>> out;
  const auto& parts = s.parts();
  for (std::size_t r = 0; r < parts.size(); ++r) {
    const int below = r + 1 < parts.size() ? parts[r + 1] : 0;
    if (parts[r] > below) out.emplace_back(static_cast<int>(r) + 1, parts[r]);
  }
  return out;
}

namespace {

// `rows` are the lengths of a sub-shape whose top-left cell sits just below
// row `row_offset` and right of column `col_offset`.
void decompose(std::vector<int> rows, int row_offset, int col_offset, RectangleDecomposition& out) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  if (rows.empty()) return;

  int best_row = 0, best_hook = -1;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const int below = r + 1 < rows.size() ? rows[r + 1] : 0;
    if (rows[r] == below) continue;
    // Reverse hook of the corner: itself, r cells above, rows[r]-1 to the left.
    const int hook = static_cast<int>(r) + rows[r];
    // Corners further down sit in columns further left, so ">=" keeps the leftmost.
    if (hook >= best_hook) {
      best_hook = hook;
      best_row = static_cast<int>(r);
    }
  }
  const int width = rows[static_cast<std::size_t>(best_row)];
  const int height = best_row + 1;
  Rectangle rect{col_offset + width, width, height, row_offset + 1};
  const int index = static_cast<int>(out.rectangles.size());
  out.rectangles.push_back(rect);
  for (int r = rect.top_row; r <= rect.bottom_row(); ++r)
    for (int c = rect.left_column(); c <= rect.corner_column; ++c)
      out.owner[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = index;

  std::vector<int> below(rows.begin() + height, rows.end());
  decompose(std::move(below), row_offset + height, col_offset, out);

  std::vector<int> right;
  for (int r = 0; r < best_row; ++r) right.push_back(rows[static_cast<std::size_t>(r)] - width);
  decompose(std::move(right), row_offset, col_offset + width, out);
}

}  // namespace

RectangleDecomposition rectangle_decomposition(const ShapePartition& s) {
  RectangleDecomposition out;
  for (int len : s.parts()) out.owner.emplace_back(static_cast<std::size_t>(len), -1);
  decompose(s.parts(), 0, 0, out);
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt count_permutations_with_shape(const ShapePartition& s) {
  BigInt total = 1;
  for (const auto& rect : rectangle_decomposition(s).rectangles) {
    total *= binomial(rect.width + rect.height - 1, rect.width - 1);
  }
  return total;
}

}  // namespace permdyck
