#include "permdyck/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "permdyck/bruhat.hpp"
#include "permdyck/genfun.hpp"
#include "permdyck/oracle.hpp"
#include "permdyck/tableau.hpp"

namespace permdyck {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

struct Failure {
  std::uint64_t rank = 0;
  std::string message;
};

struct Tally {
  std::uint64_t checks = 0;
  std::optional<Failure> failure;
};

using Check = std::function<std::optional<std::string>(const Permutation&)>;

// Runs `check` on every permutation of S_n; reports the lexicographically first failure.
Tally exhaustive(int n, int workers, const Check& check) {
  auto parts = run_partitioned<Tally>(n, workers, [&](Tally& t, const Permutation& p, std::uint64_t rank) {
    if (t.failure) return;
    ++t.checks;
    if (auto msg = check(p)) t.failure = Failure{rank, p.to_compact() + ": " + *msg};
  });
  Tally total;
  for (auto& t : parts) {
    total.checks += t.checks;
    if (t.failure && (!total.failure || t.failure->rank < total.failure->rank)) total.failure = t.failure;
  }
  return total;
}

// Returns false (and records the failure) when `t` failed.
bool absorb(SuiteResult& r, const Tally& t, int n) {
  r.checks += t.checks;
  r.max_n_reached = std::max(r.max_n_reached, n);
  if (t.failure) {
    r.passed = false;
    r.counterexample = "n=" + std::to_string(n) + " " + t.failure->message;
    return false;
  }
  return true;
}

bool expect(SuiteResult& r, bool ok, const std::string& what) {
  ++r.checks;
  if (!ok && r.passed) {
    r.passed = false;
    r.counterexample = what;
  }
  return ok;
}

void suite_stats(const VerifyOptions& o, SuiteResult& r) {
  for (int n = 0; n <= std::min(o.max_n, kMaxEnumerationN); ++n) {
    auto t = exhaustive(n, o.workers, [n](const Permutation& p) -> std::optional<std::string> {
      const auto st = stats(p);
      const auto s = shape(p);
      std::set<int> distinct;
      int nonzero = 0;
      for (int x : s.parts()) {
        if (x > 0) {
          distinct.insert(x);
          ++nonzero;
        }
      }
      long long distinct_sum = 0;
      for (int x : distinct) distinct_sum += x;
      if (static_cast<int>(distinct.size()) != st.des) return "distinct nonzero parts != des";
      if (nonzero != n - st.lrmax) return "nonzero parts != n - lrmax";
      if (s.largest_part() != st.maxdes) return "largest part != maxdes";
      if (distinct_sum != st.maj) return "sum of distinct parts != maj";
      if (s.area() != st.lbsum) return "area != lbsum";

      const auto a = left_border_numbers(p);
      std::set<int> nonzero_borders;
      for (int x : a)
        if (x > 0) nonzero_borders.insert(x);
      if (std::vector<int>(nonzero_borders.begin(), nonzero_borders.end()) != st.descent_set) {
        return "nonzero left border numbers != descent set";
      }
      const auto b = right_border_numbers(p);
      std::vector<int> mirrored;
      for (int i = n; i >= 1; --i) mirrored.push_back(n + 1 - b[static_cast<std::size_t>(i - 1)]);
      if (mirrored != left_border_numbers(p.reversed())) return "right border reversal law fails";

      const auto d = dyck_path(p);
      std::vector<int> doubled;
      for (int x : st.descent_set) doubled.push_back(2 * x);
      if (valleys(d) != doubled) return "valleys " + join(valleys(d)) + " != 2*descents";
      if (n >= 1 && first_return(d) != 2 * p.position_of(n)) return "first return != 2 * position of n";
      return std::nullopt;
    });
    if (!absorb(r, t, n)) return;
  }
}

void suite_cp_pattern(const VerifyOptions& o, SuiteResult& r) {
  for (int n = 0; n <= std::min(o.max_n, kMaxEnumerationN); ++n) {
    auto t = exhaustive(n, o.workers, [](const Permutation& p) -> std::optional<std::string> {
      const auto st = stats(p);
      const auto barred = count_barred_132(p);
      if (st.lbsum != st.inv + barred) {
        return "lbsum " + std::to_string(st.lbsum) + " != inv " + std::to_string(st.inv) + " + barred " +
               std::to_string(barred);
      }
      if (avoids(p, pattern_132()) && st.lbsum != st.inv) return "1-3-2 avoider with lbsum != inv";
      return std::nullopt;
    });
    if (!absorb(r, t, n)) return;
  }
}

void suite_shapes(const VerifyOptions& o, SuiteResult& r) {
  for (int n = 0; n <= std::min(o.max_n, kMaxEnumerationN); ++n) {
    auto t = exhaustive(n, o.workers, [n](const Permutation& p) -> std::optional<std::string> {
      const auto d = dyck_path(p);
      if (d != dyck_path_by_recursion(p)) return "fast Dyck word " + d.steps() + " != recursive definition";
      const auto s = shape(p);
      if (shape_from_path(d) != s) return "shape_from_path != shape";
      if (borders_from_shape(s) != left_border_numbers(p)) return "borders_from_shape != left border numbers";
      if (n >= 1) {
        const auto tree = decreasing_tree(p);
        const auto in = tree.inorder();
        if (!std::equal(in.begin(), in.end(), p.values().begin(), p.values().end())) return "tree inorder != p";
        const auto a = left_border_numbers(p);
        const auto b = right_border_numbers(p);
        for (int i = 1; i <= n; ++i) {
          const int v = p(i);
          const int lp = a[static_cast<std::size_t>(i - 1)] ? p(a[static_cast<std::size_t>(i - 1)]) : 0;
          const int rp = b[static_cast<std::size_t>(i - 1)] <= n ? p(b[static_cast<std::size_t>(i - 1)]) : 0;
          // The parent is the smaller of the two border neighbours; v hangs right of lp or left of rp.
          int expected = lp && rp ? std::min(lp, rp) : std::max(lp, rp);
          if (tree.parent[static_cast<std::size_t>(v)] != expected) return "tree parent law fails";
          if (expected && expected == lp && tree.right[static_cast<std::size_t>(lp)] != v) return "tree right child";
          if (expected && expected == rp && tree.left[static_cast<std::size_t>(rp)] != v) return "tree left child";
        }
      }
      return std::nullopt;
    });
    if (!absorb(r, t, n)) return;

    // Restricted to 2-3-1 avoiders the map is a bijection onto Dyck words.
    const auto av = avoiders_231(n);
    std::set<DyckPath> words;
    for (const auto& p : av) words.insert(dyck_path(p));
    if (!expect(r, words.size() == av.size() && BigInt(words.size()) == catalan(n),
                "n=" + std::to_string(n) + ": Dyck map is not a bijection on 2-3-1 avoiders")) {
      return;
    }
  }
}

void suite_count(const VerifyOptions& o, SuiteResult& r) {
  for (int n = 0; n <= std::min(o.max_n, 9); ++n) {
    const auto census = shape_census(n, o.workers);
    r.max_n_reached = n;
    if (!expect(r, BigInt(census.size()) == catalan(n), "n=" + std::to_string(n) + ": shape count != Catalan")) return;
    std::uint64_t sum = 0;
    for (const auto& [text, count] : census) {
      sum += count;
      const auto s = n <= 1 ? ShapePartition::empty_shape(n) : parse_shape(text);
      const auto predicted = count_permutations_with_shape(s);
      if (!expect(r, predicted == count,
                  "n=" + std::to_string(n) + " shape " + text + ": census " + std::to_string(count) +
                      " != product " + predicted.str())) {
        return;
      }
      const auto dec = rectangle_decomposition(s);
      long long area = 0;
      for (const auto& rect : dec.rectangles) area += static_cast<long long>(rect.width) * rect.height;
      bool every_cell_owned = true;
      for (const auto& row : dec.owner)
        for (int owner : row) every_cell_owned &= owner >= 0;
      if (!expect(r, area == s.area() && every_cell_owned && dec.rectangles.size() == corners(s).size(),
                  "shape " + text + ": rectangles do not tile the diagram")) {
        return;
      }
    }
    if (!expect(r, sum == factorial(n), "n=" + std::to_string(n) + ": census does not sum to n!")) return;
  }
}

void suite_tableau(const VerifyOptions& o, SuiteResult& r) {
  for (int n = 0; n <= std::min(o.max_n, 9); ++n) {
    auto t = exhaustive(n, o.workers, [](const Permutation& p) -> std::optional<std::string> {
      const auto tab = encode_tableau(p);
      if (decode_tableau(tab) != p) return "decode(encode(p)) != p";
      if (count_132_from_tableau(tab) != count_classical_pattern(p, pattern_132())) return "1-3-2 count from tableau";
      if (count_231_from_tableau(tab) != count_classical_pattern(p, pattern_231())) return "2-3-1 count from tableau";
      return std::nullopt;
    });
    if (!absorb(r, t, n)) return;

    if (n <= 8) {
      std::set<std::pair<ShapePartition, std::set<Dot>>> seen;
      PermutationStream stream(n);
      Permutation p;
      while (stream.next(p)) {
        auto tab = encode_tableau(p);
        seen.emplace(std::move(tab.shape), std::move(tab.dots));
      }
      if (!expect(r, seen.size() == factorial(n), "n=" + std::to_string(n) + ": encoding is not injective")) return;
    }

    const auto census = shape_census(n, o.workers);
    for (const auto& [text, count] : census) {
      const auto s = n <= 1 ? ShapePartition::empty_shape(n) : parse_shape(text);
      const auto lo = decode_tableau(min_filling(s));
      const auto hi = decode_tableau(max_filling(s));
      if (!expect(r, avoids(lo, pattern_231()) && shape(lo) == s,
                  "shape " + text + ": minimal filling decodes to " + lo.to_compact())) {
        return;
      }
      if (!expect(r, avoids(hi, pattern_132()) && shape(hi) == s,
                  "shape " + text + ": maximal filling decodes to " + hi.to_compact())) {
        return;
      }
    }
  }
}

void suite_bijection(const VerifyOptions& o, SuiteResult& r) {
  for (int n = 0; n <= std::min(o.max_n, 10); ++n) {
    r.max_n_reached = n;
    std::set<Permutation> image;
    for (const auto& p : avoiders_132(n)) {
      const auto q = bijection_132_to_231(p);
      const auto sp = stats(p), sq = stats(q);
      const bool same = sp.des == sq.des && sp.maj == sq.maj && sp.lrmax == sq.lrmax && sp.maxdes == sq.maxdes &&
                        sp.lbsum == sq.lbsum;
      if (!expect(r, same && shape(p) == shape(q) && avoids(q, pattern_231()),
                  p.to_compact() + " -> " + q.to_compact() + " does not preserve shape and statistics")) {
        return;
      }
      image.insert(q);
    }
    if (!expect(r, BigInt(image.size()) == catalan(n), "n=" + std::to_string(n) + ": image is not Catalan-sized")) {
      return;
    }
  }
}

void suite_poset(const VerifyOptions& o, SuiteResult& r) {
  // The two remark pairs: Bruhat-comparable with incomparable shapes, and the reverse.
  {
    const auto a = parse_permutation("1243"), b = parse_permutation("1423");
    const auto c = parse_permutation("1342"), d = parse_permutation("2143");
    if (!expect(r, bruhat_leq(a, b) && !shape_contains(shape(a), shape(b)) && !shape_contains(shape(b), shape(a)),
                "1243 < 1423 in Bruhat order but with incomparable shapes: not reproduced")) {
      return;
    }
    if (!expect(r, shape_contains(shape(c), shape(d), true) && !bruhat_leq(c, d) && !bruhat_leq(d, c),
                "shape(1342) inside shape(2143) with Bruhat-incomparable permutations: not reproduced")) {
      return;
    }
  }
  for (int n = 2; n <= std::min(o.max_n, 8); ++n) {
    r.max_n_reached = n;
    const auto report = verify_poset_equivalence(n, o.workers);
    r.checks += report.pairs_checked;
    if (!report.equivalence_holds) {
      const auto& c = report.counterexamples.front();
      r.passed = false;
      r.counterexample = "n=" + std::to_string(n) + " " + c.lower.to_compact() + " vs " + c.upper.to_compact() +
                         " (" + c.failed_side + ")";
      return;
    }
    if (n <= 7) {
      const auto av = avoiders_132(n);
      for (const auto& p : av) {
        for (const auto& q : av) {
          if (!bruhat_covers(p, q)) continue;
          const auto sp = shape(p), sq = shape(q);
          if (!expect(r, shape_contains(sp, sq) && sq.area() == sp.area() + 1,
                      p.to_compact() + " covered by " + q.to_compact() + " but shapes differ by more than a cell")) {
            return;
          }
        }
      }
    }
  }
}

void suite_parity(const VerifyOptions& o, SuiteResult& r) {
  const int top = std::min(o.max_n, kMaxEnumerationN);
  const auto table = parity_table(std::max(top, 20));
  if (!expect(r, table.routes_agree(), "even/odd recursion and difference recursion disagree")) return;
  const auto F = lbsum_polynomials(std::max(top, 20));
  for (int n = 0; n <= std::max(top, 20); ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (!expect(r, table.even[i] + table.odd[i] == factorial_big(n), "e_n + o_n != n! at n=" + std::to_string(n))) return;
    if (!expect(r, F[i].evaluate(-1) == table.delta[i], "F_n(-1) != delta at n=" + std::to_string(n))) return;
    if (n >= 2 && n % 2 == 0 && !expect(r, table.delta[i] == 0, "delta_n != 0 at even n=" + std::to_string(n))) return;
  }
  for (int n = 0; n <= top; ++n) {
    r.max_n_reached = n;
    const auto d = distribution(n, Statistic::lbsum, AvoidFilter::none, o.workers);
    BigInt e = 0, od = 0;
    for (const auto& [v, c] : d.counts) (v % 2 == 0 ? e : od) += c;
    const auto i = static_cast<std::size_t>(n);
    if (!expect(r, e == table.even[i] && od == table.odd[i],
                "n=" + std::to_string(n) + ": enumerated parity counts differ from the recursion")) {
      return;
    }
  }
  const auto T = tangent_numbers(8);
  for (int k = 1; k <= 8; ++k) {
    if (!expect(r, T[static_cast<std::size_t>(k - 1)] == table.delta[static_cast<std::size_t>(2 * k - 1)],
                "tangent number T_" + std::to_string(k) + " != delta_" + std::to_string(2 * k - 1))) {
      return;
    }
  }
}

void suite_genfun(const VerifyOptions& o, SuiteResult& r) {
  const int top = std::min(o.max_n, kMaxEnumerationN);
  const auto F = lbsum_polynomials(50);
  for (int n = 0; n <= 20; ++n) {
    if (!expect(r, F[static_cast<std::size_t>(n)].evaluate(1) == factorial_big(n), "F_n(1) != n! at n=" + std::to_string(n))) {
      return;
    }
  }
  for (int n = 0; n <= top; ++n) {
    r.max_n_reached = n;
    const auto d = distribution(n, Statistic::lbsum, AvoidFilter::none, o.workers);
    if (!expect(r, d.as_polynomial() == F[static_cast<std::size_t>(n)],
                "n=" + std::to_string(n) + ": F_n differs from the enumerated lbsum distribution")) {
      return;
    }
  }

  const int gtop = std::min(top, 9);
  const auto G = quad_polynomials(gtop);
  for (int n = 0; n <= gtop; ++n) {
    using Joint = std::map<Exponents, std::uint64_t>;
    auto parts = run_partitioned<Joint>(n, o.workers, [n](Joint& j, const Permutation& p, std::uint64_t) {
      const auto st = stats(p);
      ++j[Exponents{static_cast<int>(st.lbsum), st.des, st.maxdes, n - st.lrmax}];
    });
    QuadPolynomial brute;
    for (const auto& j : parts)
      for (const auto& [e, c] : j) brute.add_term(e, BigInt(c));
    const auto& g = G[static_cast<std::size_t>(n)];
    if (!expect(r, brute == g, "n=" + std::to_string(n) + ": G_n differs from the enumerated joint distribution")) return;
    if (!expect(r, x_marginal(g) == F[static_cast<std::size_t>(n)], "G_n(x,1,1,1) != F_n at n=" + std::to_string(n))) {
      return;
    }
  }

  for (int n = 0; n <= std::min(std::max(top, 10), 12); ++n) {
    std::vector<BigInt> counts;
    for (const auto& p : avoiders_132(n)) {
      const auto inv = static_cast<std::size_t>(inversions(p));
      if (inv >= counts.size()) counts.resize(inv + 1);
      counts[inv] += 1;
    }
    if (!expect(r, UniPolynomial(counts) == q_catalan(n), "n=" + std::to_string(n) + ": q-Catalan != inv over 1-3-2 avoiders")) {
      return;
    }
  }
  for (int n = 0; n <= 15; ++n) {
    if (!expect(r, q_catalan_shifted(n) == q_catalan(n).reversed(),
                "n=" + std::to_string(n) + ": shifted q-Catalan recursion is not the reversal")) {
      return;
    }
  }

  for (int n = 2; n <= 50; ++n) {
    const auto m = moments(n, F[static_cast<std::size_t>(n)]);
    if (!expect(r, m.routes_agree(), "moments: closed form differs from F_n at n=" + std::to_string(n))) return;
  }
  for (int n = 2; n <= top; ++n) {
    const auto d = distribution(n, Statistic::lbsum, AvoidFilter::none, o.workers);
    Rational s1 = 0, s2 = 0;
    for (const auto& [v, c] : d.counts) {
      s1 += Rational(c) * v;
      s2 += Rational(c) * v * v;
    }
    const Rational N(factorial_big(n));
    const auto m = moments(n, F[static_cast<std::size_t>(n)]);
    const Rational mean = s1 / N;
    if (!expect(r, mean == m.mean_closed_form && s2 / N - mean * mean == m.variance_closed_form,
                "moments: closed form differs from enumeration at n=" + std::to_string(n))) {
      return;
    }
  }
}

void suite_series(const VerifyOptions& o, SuiteResult& r) {
  const auto rep = verify_series_identities(o.series_order);
  r.max_n_reached = o.series_order;
  if (!expect(r, rep.functional_equation_holds,
              "functional equation fails at z^" + std::to_string(rep.functional_first_failure.value_or(-1)) +
                  ", residual " + rep.functional_residual)) {
    return;
  }
  expect(r, rep.tanh_identity_holds,
         "g(-1,1,1,1,z) != 1 + tanh z at z^" + std::to_string(rep.tanh_first_failure.value_or(-1)));
}

using SuiteFn = void (*)(const VerifyOptions&, SuiteResult&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"stats", suite_stats},         {"cp-pattern", suite_cp_pattern}, {"shapes", suite_shapes},
      {"count", suite_count},         {"tableau", suite_tableau},       {"bijection", suite_bijection},
      {"poset", suite_poset},         {"parity", suite_parity},         {"genfun", suite_genfun},
      {"series", suite_series},
  };
  return r;
}

}  // namespace

DyckPath dyck_path_by_recursion(const Permutation& p) {
  std::function<std::string(std::span<const int>)> rec = [&](std::span<const int> w) -> std::string {
    if (w.empty()) return "";
    const auto top = std::max_element(w.begin(), w.end());
    const auto k = static_cast<std::size_t>(top - w.begin());
    const auto left = standardize(w.subspan(0, k));
    const auto right = standardize(w.subspan(k + 1));
    return "u" + rec(left.values()) + "r" + rec(right.values());
  };
  return DyckPath(rec(p.values()));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    SuiteResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    fn(options, r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw std::invalid_argument("unknown verification suite '" + name + "'");
}

VerifyReport run_verification(const VerifyOptions& options) {
  std::vector<std::string> selected;
  for (const auto& s : options.suites) {
    if (s == "all") {
      selected = suite_names();
      break;
    }
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw std::invalid_argument("unknown verification suite '" + s + "'");
    }
    if (std::find(selected.begin(), selected.end(), s) == selected.end()) selected.push_back(s);
  }
  VerifyReport report;
  for (const auto& s : selected) report.suites.push_back(run_suite(s, options));
  return report;
}

bool VerifyReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : suites) {
    nlohmann::json j = {{"suite", s.name},
                        {"passed", s.passed},
                        {"checks", s.checks},
                        {"max_n_reached", s.max_n_reached},
                        {"seconds", s.seconds}};
    if (s.counterexample) j["counterexample"] = *s.counterexample;
    arr.push_back(std::move(j));
  }
  return {{"passed", all_passed()}, {"suites", arr}};
}

}  // namespace permdyck
