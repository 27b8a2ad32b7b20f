#include "permdyck/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace permdyck {

namespace {

void check_is_permutation(const std::vector<int>& entries) {
  const int n = static_cast<int>(entries.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : entries) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " out of range for a permutation of length " +
                                  std::to_string(n));
    }
    if (seen[v]) throw std::invalid_argument("duplicate value " + std::to_string(v));
    seen[v] = 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  check_is_permutation(entries_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

int Permutation::position_of(int v) const {
  auto it = std::find(entries_.begin(), entries_.end(), v);
  if (it == entries_.end()) throw std::out_of_range("value not in permutation");
  return static_cast<int>(it - entries_.begin()) + 1;
}

Permutation Permutation::reversed() const {
  Permutation r = *this;
  std::reverse(r.entries_.begin(), r.entries_.end());
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r = *this;
  for (int i = 1; i <= size(); ++i) r.entries_[(*this)(i) - 1] = i;
  return r;
}

Permutation Permutation::swapped(int i, int j) const {
  if (i < 1 || j < 1 || i > size() || j > size()) throw std::out_of_range("swap position");
  Permutation r = *this;
  std::swap(r.entries_[i - 1], r.entries_[j - 1]);
  return r;
}

bool Permutation::next_lexicographic() {
  auto saved = entries_;
  if (std::next_permutation(entries_.begin(), entries_.end())) return true;
  entries_ = std::move(saved);
  return false;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::string Permutation::to_compact() const {
  if (size() > 9) {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(entries_[i]);
    }
    return out;
  }
  std::string out;
  for (int v : entries_) out += static_cast<char>('0' + v);
  return out;
}

Permutation parse_permutation(std::string_view text) {
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  std::vector<std::string_view> tokens;
  const bool has_sep = std::any_of(text.begin(), text.end(), is_sep);
  if (has_sep) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_sep(text[i])) ++i;
      std::size_t j = i;
      while (j < text.size() && !is_sep(text[j])) ++j;
      if (j > i) tokens.push_back(text.substr(i, j - i));
      i = j;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) tokens.push_back(text.substr(i, 1));
  }

  std::vector<int> entries;
  entries.reserve(tokens.size());
  for (auto tok : tokens) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("not an integer: '" + std::string(tok) + "'");
    }
    entries.push_back(v);
  }
  const int n = static_cast<int>(entries.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const int v = entries[i];
    if (v < 1 || v > n) {
      throw ParseError("value '" + std::string(tokens[i]) + "' out of range 1.." + std::to_string(n));
    }
    if (seen[v]) throw ParseError("duplicate value '" + std::string(tokens[i]) + "'");
    seen[v] = 1;
  }
  return Permutation(std::move(entries));
}

Permutation standardize(std::span<const int> word) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("standardize: word has repeated values");
  }
  std::vector<int> out;
  out.reserve(word.size());
  for (int w : word) {
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), w) - sorted.begin()) + 1);
  }
  return Permutation(std::move(out));
}

std::vector<int> left_border_numbers(const Permutation& p) {
  const int n = p.size();
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  // Stack of positions whose entries decrease from bottom to top.
  std::vector<int> stack;
  for (int i = 1; i <= n; ++i) {
    while (!stack.empty() && p(stack.back()) < p(i)) stack.pop_back();
    a[i - 1] = stack.empty() ? 0 : stack.back();
    stack.push_back(i);
  }
  return a;
}

std::vector<int> right_border_numbers(const Permutation& p) {
  const int n = p.size();
  std::vector<int> b(static_cast<std::size_t>(n), n + 1);
  std::vector<int> stack;
  for (int i = n; i >= 1; --i) {
    while (!stack.empty() && p(stack.back()) < p(i)) stack.pop_back();
    b[i - 1] = stack.empty() ? n + 1 : stack.back();
    stack.push_back(i);
  }
  return b;
}

BorderProfile border_profile(const Permutation& p) {
  return {left_border_numbers(p), right_border_numbers(p)};
}

std::vector<int> descent_set(const Permutation& p) {
  std::vector<int> d;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) d.push_back(i);
  return d;
}

std::int64_t inversions(const Permutation& p) {
  std::int64_t inv = 0;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p(i) > p(j)) ++inv;
  return inv;
}

StatVector stats(const Permutation& p) {
  StatVector s;
  s.descent_set = descent_set(p);
  s.des = static_cast<int>(s.descent_set.size());
  for (int d : s.descent_set) s.maj += d;
  s.maxdes = s.descent_set.empty() ? 0 : s.descent_set.back();
  int running_max = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) > running_max) {
      running_max = p(i);
      ++s.lrmax;
    }
  }
  for (int a : left_border_numbers(p)) s.lbsum += a;
  s.inv = inversions(p);
  return s;
}

std::int64_t count_classical_pattern(const Permutation& p, const Permutation& pattern) {
  const int n = p.size();
  if (pattern.size() == 2) {
    const bool want_desc = pattern(1) > pattern(2);
    std::int64_t c = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if ((p(i) > p(j)) == want_desc) ++c;
    return c;
  }
  if (pattern.size() != 3) {
    throw std::invalid_argument("count_classical_pattern: pattern length must be 2 or 3");
  }
  auto order_matches = [&](int x, int y, int z) {
    const int v[3] = {x, y, z};
    for (int s = 0; s < 3; ++s)
      for (int t = s + 1; t < 3; ++t)
        if ((v[s] < v[t]) != (pattern(s + 1) < pattern(t + 1))) return false;
    return true;
  };
  std::int64_t c = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (order_matches(p(i), p(j), p(k))) ++c;
  return c;
}

std::int64_t count_barred_132(const Permutation& p) {
  const int n = p.size();
  std::int64_t c = 0;
  for (int a = 1; a <= n; ++a) {
    for (int cpos = a + 2; cpos <= n; ++cpos) {
      if (p(a) >= p(cpos)) continue;
      // The middle entry must be the strict window maximum, so at most one b qualifies.
      int best = a + 1;
      for (int d = a + 1; d < cpos; ++d)
        if (p(d) > p(best)) best = d;
      if (p(best) > p(cpos)) ++c;
    }
  }
  return c;
}

bool avoids(const Permutation& p, const Permutation& pattern) {
  return count_classical_pattern(p, pattern) == 0;
}

const Permutation& pattern_21() {
  static const Permutation p({2, 1});
  return p;
}
const Permutation& pattern_132() {
  static const Permutation p({1, 3, 2});
  return p;
}
const Permutation& pattern_231() {
  static const Permutation p({2, 3, 1});
  return p;
}

namespace {

int build_subtree(const Permutation& p, int lo, int hi, int parent, DecreasingTree& t) {
  if (lo > hi) return 0;
  int m = lo;
  for (int i = lo + 1; i <= hi; ++i)
    if (p(i) > p(m)) m = i;
  const int v = p(m);
  t.parent[v] = parent;
  t.left[v] = build_subtree(p, lo, m - 1, v, t);
  t.right[v] = build_subtree(p, m + 1, hi, v, t);
  return v;
}

void walk_inorder(const DecreasingTree& t, int v, std::vector<int>& out) {
  if (!v) return;
  walk_inorder(t, t.left[v], out);
  out.push_back(v);
  walk_inorder(t, t.right[v], out);
}

}  // namespace

std::vector<int> DecreasingTree::inorder() const {
  std::vector<int> out;
  walk_inorder(*this, root, out);
  return out;
}

DecreasingTree decreasing_tree(const Permutation& p) {
  if (p.empty()) throw std::invalid_argument("decreasing_tree: empty permutation");
  const auto n = static_cast<std::size_t>(p.size());
  DecreasingTree t;
  t.left.assign(n + 1, 0);
  t.right.assign(n + 1, 0);
  t.parent.assign(n + 1, 0);
  t.root = build_subtree(p, 1, p.size(), 0, t);
  return t;
}

}  // namespace permdyck
