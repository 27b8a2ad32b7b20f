// permdyck: map permutations to Dyck paths and shapes, tabulate statistics,
// and run the verification suites.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permdyck/dyck.hpp"
#include "permdyck/genfun.hpp"
#include "permdyck/oracle.hpp"
#include "permdyck/permutation.hpp"
#include "permdyck/tableau.hpp"
#include "permdyck/verify.hpp"

using namespace permdyck;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string csv_of(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

json stats_json(const StatVector& s) {
  return {{"des", s.des},     {"maj", s.maj}, {"lrmax", s.lrmax},
          {"maxdes", s.maxdes}, {"lbsum", s.lbsum}, {"inv", s.inv}, {"descent_set", s.descent_set}};
}

int cmd_map(const std::string& text, const std::string& format) {
  const auto p = parse_permutation(text);
  const auto d = dyck_path(p);
  const auto s = shape(p);
  const auto b = border_profile(p);
  const auto st = stats(p);
  const auto tab = encode_tableau(p);
  if (format == "json") {
    json out = {{"permutation", p.values()},
                {"dyck", d.steps()},
                {"shape", s.parts()},
                {"left_borders", b.left},
                {"right_borders", b.right},
                {"stats", stats_json(st)},
                {"tableau", to_json(tab)}};
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  if (format == "csv") {
    std::cout << "field,value\n"
              << "permutation,\"" << csv_of({p.values().begin(), p.values().end()}) << "\"\n"
              << "dyck," << d.steps() << '\n'
              << "shape,\"" << s.to_string() << "\"\n"
              << "left_borders,\"" << csv_of(b.left) << "\"\n"
              << "right_borders,\"" << csv_of(b.right) << "\"\n"
              << "des," << st.des << "\nmaj," << st.maj << "\nlrmax," << st.lrmax << "\nmaxdes," << st.maxdes
              << "\nlbsum," << st.lbsum << "\ninv," << st.inv << '\n';
    return kExitOk;
  }
  std::cout << "permutation: " << p.to_string() << '\n'
            << "dyck: " << d.steps() << '\n'
            << "shape: " << s.to_string() << '\n'
            << "left borders: " << csv_of(b.left) << '\n'
            << "right borders: " << csv_of(b.right) << '\n'
            << "des: " << st.des << '\n'
            << "maj: " << st.maj << '\n'
            << "lrmax: " << st.lrmax << '\n'
            << "maxdes: " << st.maxdes << '\n'
            << "lbsum: " << st.lbsum << '\n'
            << "inv: " << st.inv << '\n'
            << "descents: " << csv_of(st.descent_set) << '\n'
            << "tableau: " << to_json(tab).dump() << '\n';
  return kExitOk;
}

// Counts predicted by a generating function, when one is available.
std::optional<UniPolynomial> prediction(int n, Statistic s, AvoidFilter f) {
  if (f == AvoidFilter::avoid132 && s == Statistic::inv) return q_catalan(n);
  if (f != AvoidFilter::none) return std::nullopt;
  if (s == Statistic::lbsum) return lbsum_polynomial(n);
  if (s != Statistic::des && s != Statistic::maxdes && s != Statistic::lrmax) return std::nullopt;
  std::vector<BigInt> c;
  for (const auto& [e, coeff] : quad_polynomial(n).terms()) {
    const int v = s == Statistic::des ? e.y : s == Statistic::maxdes ? e.p : n - e.q;
    if (static_cast<std::size_t>(v) >= c.size()) c.resize(static_cast<std::size_t>(v) + 1);
    c[static_cast<std::size_t>(v)] += coeff;
  }
  return UniPolynomial(std::move(c));
}

int cmd_census(int n, const std::string& only_shape, const std::string& format, int workers) {
  auto census = shape_census(n, workers);
  if (!only_shape.empty()) {
    const auto wanted = parse_shape(only_shape);
    if (wanted.n() != n) throw UsageError("shape " + only_shape + " does not have n-1 parts for n=" + std::to_string(n));
    const auto it = census.find(wanted.to_string());
    const std::uint64_t count = it == census.end() ? 0 : it->second;
    census = {{wanted.to_string(), count}};
  }
  if (format == "json") {
    json rows = json::array();
    for (const auto& [k, v] : census) {
      const auto s = n <= 1 ? ShapePartition::empty_shape(n) : parse_shape(k);
      rows.push_back({{"shape", k}, {"count", std::to_string(v)}, {"product", count_permutations_with_shape(s).str()}});
    }
    std::cout << json{{"n", n}, {"statistic", "shape"}, {"rows", rows}}.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << to_csv(census);
  } else {
    for (const auto& [k, v] : census) std::cout << (k.empty() ? "()" : k) << '\t' << v << '\n';
  }
  return kExitOk;
}

int cmd_dist(int n, const std::string& stat, const std::string& avoid, const std::string& format, bool check,
             int workers, const std::string& only_shape) {
  if (n < 0 || n > kMaxEnumerationN) {
    throw UsageError("--n must be in 0.." + std::to_string(kMaxEnumerationN));
  }
  if (stat == "shape") {
    if (n > 9) throw UsageError("shape census is capped at n <= 9");
    return cmd_census(n, only_shape, format, workers);
  }
  if (!only_shape.empty()) throw UsageError("--shape requires --stat shape");
  const auto s = parse_statistic(stat);
  const auto f = parse_filter(avoid);
  const auto d = distribution(n, s, f, workers);

  std::optional<UniPolynomial> predicted;
  bool match = true;
  if (check) {
    predicted = prediction(n, s, f);
    if (!predicted) throw UsageError("no generating function available for this statistic and filter");
    match = *predicted == d.as_polynomial();
  }
  std::optional<std::pair<BigInt, BigInt>> parity;
  if (s == Statistic::lbsum && f == AvoidFilter::none) {
    BigInt e = 0, o = 0;
    for (const auto& [v, c] : d.counts) (v % 2 == 0 ? e : o) += c;
    parity = std::make_pair(e, o);
  }

  if (format == "json") {
    auto out = to_json(d);
    if (parity) {
      out["parity"] = {{"even", parity->first.str()},
                       {"odd", parity->second.str()},
                       {"delta", BigInt(parity->first - parity->second).str()}};
    }
    if (predicted) {
      out["check"] = {{"predicted", predicted->to_json()}, {"match", match}};
    }
    std::cout << out.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << to_csv(d);
  } else {
    for (const auto& [v, c] : d.counts) std::cout << v << '\t' << c << '\n';
    if (parity) {
      std::cout << "parity: even=" << parity->first << " odd=" << parity->second
                << " delta=" << BigInt(parity->first - parity->second) << '\n';
    }
    if (predicted) std::cout << "check: " << predicted->to_string('x') << ' ' << (match ? "match" : "mismatch") << '\n';
  }
  if (!match) {
    std::cerr << "distribution differs from the generating function prediction\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_verify(std::vector<std::string> selection, int max_n, int workers, int order, const std::string& format) {
  if (selection.empty()) selection = {"all"};
  if (max_n < 0) throw UsageError("--max-n must be nonnegative");
  if (order < 0 || order > 10) throw UsageError("--order must be in 0..10");
  VerifyOptions opt;
  opt.suites = std::move(selection);
  opt.max_n = max_n;
  opt.workers = workers;
  opt.series_order = order;
  const auto report = run_verification(opt);
  if (format == "json") {
    std::cout << report.to_json().dump(2) << '\n';
  } else {
    for (const auto& s : report.suites) {
      std::ostringstream line;
      line.setf(std::ios::fixed);
      line.precision(3);
      line << s.name << '\t' << (s.passed ? "PASS" : "FAIL") << "\tchecks=" << s.checks << "\tmax_n=" << s.max_n_reached
           << '\t' << s.seconds << "s";
      std::cout << line.str() << '\n';
    }
  }
  for (const auto& s : report.suites) {
    if (!s.passed) {
      std::cerr << s.name << ": counterexample: " << s.counterexample.value_or("?") << '\n';
      return kExitFailure;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutations, Dyck paths and Young diagrams"};
  app.require_subcommand(1);

  std::string format = "plain";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
  };

  auto* map = app.add_subcommand("map", "Dyck word, shape, borders, statistics and tableau of a permutation");
  std::string perm_text;
  map->add_option("perm", perm_text, "Permutation, e.g. 53148276 or 5,3,1,4")->required();
  add_format(map);

  auto* dist = app.add_subcommand("dist", "Distribution of a statistic over S_n");
  int n = 0;
  std::string stat = "lbsum", avoid, only_shape;
  bool check = false;
  int workers = 1;
  dist->add_option("--n", n, "Permutation length")->required();
  dist->add_option("--stat", stat, "lbsum, des, maj, lrmax, maxdes, inv or shape");
  dist->add_option("--avoid", avoid, "Restrict to avoiders of 132 or 231");
  dist->add_flag("--check", check, "Compare with the generating function");
  dist->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1, 256));
  dist->add_option("--shape", only_shape, "With --stat shape: report a single shape");
  add_format(dist);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> selection;
  int max_n = 7, order = 8;
  verify->add_option("selection", selection, "Suites to run (default all)");
  verify->add_option("--max-n", max_n, "Largest n to enumerate");
  verify->add_option("--order", order, "Truncation order of the series check");
  verify->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1, 256));
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*map) return cmd_map(perm_text, format);
    if (*dist) return cmd_dist(n, stat, avoid, format, check, workers, only_shape);
    if (*verify) return cmd_verify(selection, max_n, workers, order, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
