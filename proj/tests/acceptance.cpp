// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <thread>

#include "oracles.hpp"
#include "permdyck/bruhat.hpp"
#include "permdyck/dyck.hpp"
#include "permdyck/genfun.hpp"
#include "permdyck/oracle.hpp"
#include "permdyck/tableau.hpp"
#include "permdyck/verify.hpp"

#ifndef PERMDYCK_CLI
#error "PERMDYCK_CLI must name the command-line binary"
#endif

using namespace permdyck;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failed expectation.
struct Checker {
  Outcome out;
  bool operator()(bool ok, const std::string& what) {
    if (!ok && out.pass) {
      out.pass = false;
      out.detail = what;
    }
    return ok;
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fixed(double v, int digits = 3) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

Permutation P(std::string_view s) { return parse_permutation(s); }

Outcome running_example() {
  Checker c;
  const auto start = Clock::now();
  const auto p = P("53148276");
  const auto s = shape(p);
  const auto a = left_border_numbers(p);
  const auto d = dyck_path(p);
  const auto t = encode_tableau(p);
  const auto back = decode_tableau(t);
  const double dt = seconds_since(start);
  c(s.to_string() == "7,5,5,2,1,1,0", "shape " + s.to_string());
  c(a == std::vector<int>{0, 1, 2, 1, 0, 5, 5, 7}, "left border numbers differ");
  c(d.steps() == "uuruururrruurrur", "Dyck word " + d.steps());
  c(back == p, "tableau decodes to " + back.to_compact());
  c(dt < 1e-3, "took " + fixed(dt * 1e3) + " ms");
  if (c.out.pass) c.out.detail = d.steps() + ", " + fixed(dt * 1e6, 1) + " us";
  return c.out;
}

Outcome statistic_correspondences() {
  Checker c;
  const auto start = Clock::now();
  std::uint64_t checked = 0;
  for (int n = 0; n <= 9 && c.out.pass; ++n) {
    PermutationStream stream(n);
    Permutation p;
    while (stream.next(p)) {
      ++checked;
      const auto st = stats(p);
      const auto s = shape(p);
      std::set<int> distinct;
      int nonzero = 0;
      for (int x : s.parts())
        if (x > 0) distinct.insert(x), ++nonzero;
      int dsum = 0;
      for (int x : distinct) dsum += x;
      if (!c(static_cast<int>(distinct.size()) == st.des && dsum == st.maj && nonzero == n - st.lrmax &&
                 s.largest_part() == st.maxdes && s.area() == st.lbsum,
             "mismatch at " + p.to_compact())) {
        break;
      }
    }
  }
  const double dt = seconds_since(start);
  c(dt < 30, "took " + fixed(dt) + " s");
  if (c.out.pass) c.out.detail = std::to_string(checked) + " permutations";
  return c.out;
}

Outcome cp_pattern() {
  Checker c;
  const auto start = Clock::now();
  std::uint64_t checked = 0;
  for (int n = 0; n <= 8 && c.out.pass; ++n) {
    PermutationStream stream(n);
    Permutation p;
    while (stream.next(p)) {
      ++checked;
      const auto st = stats(p);
      if (!c(st.lbsum == st.inv + oracle::barred_132(p) && count_barred_132(p) == oracle::barred_132(p),
             "mismatch at " + p.to_compact())) {
        break;
      }
    }
  }
  const double dt = seconds_since(start);
  c(dt < 10, "took " + fixed(dt) + " s");
  if (c.out.pass) c.out.detail = std::to_string(checked) + " permutations";
  return c.out;
}

Outcome shape_counts() {
  Checker c;
  const auto start = Clock::now();
  std::size_t shapes = 0;
  for (int n = 0; n <= 8 && c.out.pass; ++n) {
    for (const auto& [text, count] : shape_census(n)) {
      ++shapes;
      const auto s = n <= 1 ? ShapePartition::empty_shape(n) : parse_shape(text);
      if (!c(count_permutations_with_shape(s) == count, "shape " + text)) break;
    }
  }
  const auto spot = count_permutations_with_shape(parse_shape("7,5,5,2,1,1,0"));
  c(spot == 70, "spot value " + spot.str());
  c(shape_census(8).at("7,5,5,2,1,1,0") == 70, "census spot value");
  const double dt = seconds_since(start);
  c(dt < 10, "took " + fixed(dt) + " s");
  if (c.out.pass) c.out.detail = std::to_string(shapes) + " shapes, spot 70";
  return c.out;
}

Outcome parity() {
  Checker c;
  const auto table = parity_table(8);
  const auto F = lbsum_polynomials(8);
  c(table.routes_agree(), "even/odd and difference recursions disagree");
  for (int n = 2; n <= 8; n += 2) {
    const auto d = distribution(n, Statistic::lbsum);
    BigInt e = 0, o = 0;
    for (const auto& [v, k] : d.counts) (v % 2 ? o : e) += k;
    c(e == o, "e_" + std::to_string(n) + " != o_" + std::to_string(n));
  }
  const std::vector<int> expected{1, 2, 16, 272};
  for (int k = 0; k < 4; ++k) {
    const int n = 2 * k + 1;
    const auto d = distribution(n, Statistic::lbsum);
    BigInt enumerated = 0;
    for (const auto& [v, m] : d.counts) enumerated += v % 2 ? BigInt(-m) : m;
    const auto i = static_cast<std::size_t>(n);
    c(table.delta[i] == expected[static_cast<std::size_t>(k)] && table.delta_recursive[i] == expected[static_cast<std::size_t>(k)] &&
          enumerated == expected[static_cast<std::size_t>(k)] && F[i].evaluate(-1) == expected[static_cast<std::size_t>(k)],
      "delta_" + std::to_string(n));
  }
  if (c.out.pass) c.out.detail = "delta 1,2,16,272 on three routes";
  return c.out;
}

Outcome lbsum_recursion() {
  Checker c;
  const auto F = lbsum_polynomials(20);
  for (int n = 0; n <= 9; ++n) {
    c(distribution(n, Statistic::lbsum).as_polynomial() == F[static_cast<std::size_t>(n)], "F_" + std::to_string(n));
  }
  for (int n = 0; n <= 20; ++n) {
    c(F[static_cast<std::size_t>(n)].evaluate(1) == factorial_big(n), "F_" + std::to_string(n) + "(1)");
  }
  if (c.out.pass) c.out.detail = "n <= 9 enumerated, F_n(1) = n! to 20";
  return c.out;
}

Outcome moment_forms() {
  Checker c;
  const auto start = Clock::now();
  const auto F = lbsum_polynomials(50);
  for (int n = 2; n <= 50; ++n) {
    c(moments(n, F[static_cast<std::size_t>(n)]).routes_agree(), "moments at n=" + std::to_string(n));
  }
  const auto m2 = moments(2), m3 = moments(3);
  c(m2.mean_closed_form == Rational(1, 2), "mean(2)");
  c(m2.variance_closed_form == Rational(1, 4), "var(2)");
  c(m3.mean_closed_form == Rational(5, 3), "mean(3)");
  const double dt = seconds_since(start);
  c(dt < 5, "took " + fixed(dt) + " s");
  if (c.out.pass) c.out.detail = "2 <= n <= 50";
  return c.out;
}

Outcome joint_distribution() {
  Checker c;
  const auto G = quad_polynomials(8);
  for (int n = 0; n <= 8; ++n) {
    QuadPolynomial brute;
    PermutationStream stream(n);
    Permutation p;
    while (stream.next(p)) {
      const auto st = stats(p);
      brute.add_term({static_cast<int>(st.lbsum), st.des, st.maxdes, n - st.lrmax}, 1);
    }
    c(brute == G[static_cast<std::size_t>(n)], "G_" + std::to_string(n));
  }
  c(G[2] == QuadPolynomial::constant(1) + QuadPolynomial::monomial(1, {1, 1, 1, 1}), "G_2 = " + to_string(G[2]));
  if (c.out.pass) c.out.detail = "G_2 = " + to_string(G[2]);
  return c.out;
}

Outcome series() {
  Checker c;
  const auto start = Clock::now();
  const auto r = verify_series_identities(8);
  c(r.functional_equation_holds, "functional equation residual " + r.functional_residual);
  c(r.tanh_identity_holds, "tanh identity");
  c(r.specialization.size() == 10, "coefficients through z^9");
  if (r.specialization.size() == 10) {
    c(r.specialization[3] == "-1/3" && r.specialization[5] == "2/15" && r.specialization[7] == "-17/315",
      "odd coefficients " + r.specialization[3] + ", " + r.specialization[5] + ", " + r.specialization[7]);
  }
  const double dt = seconds_since(start);
  c(dt < 10, "took " + fixed(dt) + " s");
  if (c.out.pass) c.out.detail = "order 8";
  return c.out;
}

Outcome q_catalan_routes() {
  Checker c;
  for (int n = 0; n <= 10; ++n) {
    std::vector<BigInt> counts(static_cast<std::size_t>(n * (n - 1) / 2 + 1));
    for (const auto& p : avoiders_132(n)) counts[static_cast<std::size_t>(oracle::inversions(p))] += 1;
    c(UniPolynomial(counts) == q_catalan(n), "area route at n=" + std::to_string(n));
  }
  for (int n = 0; n <= 15; ++n) {
    c(q_catalan_shifted(n) == q_catalan(n).reversed(), "reversal at n=" + std::to_string(n));
  }
  return c.out;
}

Outcome tableau_codec() {
  Checker c;
  for (int n = 0; n <= 8 && c.out.pass; ++n) {
    std::set<std::pair<ShapePartition, std::set<Dot>>> seen;
    PermutationStream stream(n);
    Permutation p;
    while (stream.next(p)) {
      auto t = encode_tableau(p);
      if (!c(decode_tableau(t) == p, "round trip at " + p.to_compact())) break;
      if (!c(count_132_from_tableau(t) == count_classical_pattern(p, pattern_132()), "132 count at " + p.to_compact()))
        break;
      seen.emplace(std::move(t.shape), std::move(t.dots));
    }
    c(seen.size() == factorial(n), "not injective at n=" + std::to_string(n));
  }
  for (int n = 2; n <= 9 && c.out.pass; ++n) {
    for (const auto& [text, k] : shape_census(n)) {
      const auto s = parse_shape(text);
      const auto lo = decode_tableau(min_filling(s));
      const auto hi = decode_tableau(max_filling(s));
      if (!c(shape(lo) == s && avoids(lo, pattern_231()), "min filling of " + text)) break;
      if (!c(shape(hi) == s && avoids(hi, pattern_132()), "max filling of " + text)) break;
    }
  }
  return c.out;
}

Outcome bijection() {
  Checker c;
  const auto start = Clock::now();
  std::size_t total = 0;
  for (int n = 0; n <= 10; ++n) {
    std::set<Permutation> image;
    const auto av = avoiders_132(n);
    for (const auto& p : av) {
      const auto q = bijection_132_to_231(p);
      const auto a = stats(p), b = stats(q);
      if (!c(a.des == b.des && a.maj == b.maj && a.lrmax == b.lrmax && a.maxdes == b.maxdes && a.lbsum == b.lbsum &&
                 shape(p) == shape(q) && avoids(q, pattern_231()),
             p.to_compact() + " -> " + q.to_compact())) {
        break;
      }
      image.insert(q);
    }
    total = av.size();
    c(BigInt(image.size()) == catalan(n), "image size at n=" + std::to_string(n));
  }
  const double dt = seconds_since(start);
  c(dt < 10, "took " + fixed(dt) + " s");
  if (c.out.pass) c.out.detail = std::to_string(total) + " avoiders at n=10";
  return c.out;
}

Outcome poset() {
  Checker c;
  for (int n = 2; n <= 7; ++n) {
    const auto r = verify_poset_equivalence(n);
    c(r.equivalence_holds, "equivalence fails at n=" + std::to_string(n));
  }
  c(bruhat_leq(P("1243"), P("1423")) && !shape_contains(shape(P("1243")), shape(P("1423"))) &&
        !shape_contains(shape(P("1423")), shape(P("1243"))),
    "pair 1243 < 1423");
  c(shape(P("1243")).to_string() == "3,0,0" && shape(P("1423")).to_string() == "2,2,0", "shapes of 1243, 1423");
  c(shape_contains(shape(P("1342")), shape(P("2143")), true) && !bruhat_leq(P("1342"), P("2143")) &&
        !bruhat_leq(P("2143"), P("1342")),
    "pair 1342, 2143");
  c(shape(P("1342")).to_string() == "3,0,0" && shape(P("2143")).to_string() == "3,1,0", "shapes of 1342, 2143");
  return c.out;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(PERMDYCK_CLI) + " " + args + " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

Outcome end_to_end() {
  Checker c;
  const auto start = Clock::now();
  const int status = run_cli("verify all --max-n 7");
  const double dt = seconds_since(start);
  c(status == 0, "verify all exited with " + std::to_string(status));
  c(dt < 120, "verify all took " + fixed(dt) + " s");

  // The n = 9 enumeration suites with 1 and with 8 workers.
  VerifyOptions o;
  o.suites = {"stats", "cp-pattern", "shapes", "count", "tableau", "parity", "genfun"};
  o.max_n = 9;
  o.workers = 1;
  auto t0 = Clock::now();
  const auto serial = run_verification(o);
  const double t1 = seconds_since(t0);
  o.workers = 8;
  t0 = Clock::now();
  const auto parallel = run_verification(o);
  const double t8 = seconds_since(t0);
  c(serial.all_passed() && parallel.all_passed(), "n = 9 suites failed");
  for (std::size_t i = 0; i < serial.suites.size() && i < parallel.suites.size(); ++i) {
    c(serial.suites[i].checks == parallel.suites[i].checks, "check counts differ in " + serial.suites[i].name);
  }
  c(distribution(9, Statistic::lbsum, AvoidFilter::none, 1).counts ==
        distribution(9, Statistic::lbsum, AvoidFilter::none, 8).counts,
    "merged distributions differ");
  c(shape_census(9, 1) == shape_census(9, 8), "merged censuses differ");
  const double speedup = t1 / t8;
  std::ostringstream detail;
  detail << std::fixed << std::setprecision(2) << "verify all " << dt << " s; n=9 suites " << t1 << " s serial, " << t8
         << " s with 8 workers, speedup " << speedup << "x on " << std::thread::hardware_concurrency()
         << " hardware threads";
  c(speedup >= 3.0, detail.str());
  if (c.out.pass) c.out.detail = detail.str();
  return c.out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"running example", running_example},
      {"statistic correspondences, n <= 9", statistic_correspondences},
      {"lbsum = inv + barred 1-3-2, n <= 8", cp_pattern},
      {"shape census vs binomial product, n <= 8", shape_counts},
      {"parity counts and tangent numbers", parity},
      {"lbsum recursion vs enumeration", lbsum_recursion},
      {"moment closed forms, 2 <= n <= 50", moment_forms},
      {"joint distribution G_n, n <= 8", joint_distribution},
      {"series identities through z^9", series},
      {"q-Catalan routes", q_catalan_routes},
      {"tableau codec", tableau_codec},
      {"1-3-2 to 2-3-1 bijection, n <= 10", bijection},
      {"containment vs Bruhat order, n <= 7", poset},
      {"end-to-end verify and parallel speedup", end_to_end},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = seconds_since(start);
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << i + 1 << "] " << criteria[i].first << "  ("
              << std::fixed << std::setprecision(3) << dt << " s)";
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
