#include "permdyck/bruhat.hpp"

#include <algorithm>
#include <thread>

#include "permdyck/oracle.hpp"

namespace permdyck {

namespace {

void require_same_length(const Permutation& p, const Permutation& q, const char* what) {
  if (p.size() != q.size()) throw std::invalid_argument(std::string(what) + ": length mismatch");
}

}  // namespace

bool bruhat_leq(const Permutation& p, const Permutation& q) {
  require_same_length(p, q, "bruhat_leq");
  const int n = p.size();
  // cp[k], cq[k]: entries >= k among the first i positions.
  std::vector<int> cp(static_cast<std::size_t>(n) + 2, 0), cq(static_cast<std::size_t>(n) + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= p(i); ++k) ++cp[static_cast<std::size_t>(k)];
    for (int k = 1; k <= q(i); ++k) ++cq[static_cast<std::size_t>(k)];
    for (int k = 1; k <= n; ++k)
      if (cp[static_cast<std::size_t>(k)] > cq[static_cast<std::size_t>(k)]) return false;
  }
  return true;
}

bool bruhat_covers(const Permutation& p, const Permutation& q) {
  require_same_length(p, q, "bruhat_covers");
  std::vector<int> diff;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) != q(i)) diff.push_back(i);
  if (diff.size() != 2) return false;
  const int i = diff[0], j = diff[1];
  if (p(i) != q(j) || p(j) != q(i) || p(i) > p(j)) return false;
  return inversions(q) == inversions(p) + 1;
}

bool shape_contains(const ShapePartition& inner, const ShapePartition& outer, bool strict) {
  if (inner.n() != outer.n()) throw std::invalid_argument("shape_contains: shapes of different n");
  for (std::size_t j = 0; j < inner.parts().size(); ++j)
    if (inner.parts()[j] > outer.parts()[j]) return false;
  return !strict || inner != outer;
}

PosetReport verify_poset_equivalence(int n, int workers) {
  if (n < 2 || n > 8) throw std::out_of_range("verify_poset_equivalence: n must be in 2..8");
  const auto avoiders = avoiders_132(n);
  std::vector<ShapePartition> shapes;
  shapes.reserve(avoiders.size());
  for (const auto& p : avoiders) shapes.push_back(shape(p));

  const std::size_t m = avoiders.size();
  workers = std::max(1, workers);
  std::vector<PosetReport> partial(static_cast<std::size_t>(workers));
  auto run = [&](int w) {
    auto& rep = partial[static_cast<std::size_t>(w)];
    for (std::size_t a = static_cast<std::size_t>(w); a < m; a += static_cast<std::size_t>(workers)) {
      for (std::size_t b = 0; b < m; ++b) {
        if (a == b) continue;
        ++rep.pairs_checked;
        const bool contained = shape_contains(shapes[a], shapes[b], true);
        const bool below = bruhat_leq(avoiders[a], avoiders[b]);  // distinct, so strict
        if (contained != below) {
          rep.counterexamples.push_back({avoiders[a], avoiders[b], contained ? "containment-only" : "bruhat-only"});
        }
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  PosetReport report;
  report.n = n;
  for (auto& rep : partial) {
    report.pairs_checked += rep.pairs_checked;
    for (auto& c : rep.counterexamples) report.counterexamples.push_back(std::move(c));
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const auto& x, const auto& y) { return std::tie(x.lower, x.upper) < std::tie(y.lower, y.upper); });
  report.equivalence_holds = report.counterexamples.empty();
  return report;
}

nlohmann::json to_json(const PosetReport& r) {
  nlohmann::json ce = nlohmann::json::array();
  for (const auto& c : r.counterexamples) {
    ce.push_back({{"lower", c.lower.to_compact()}, {"upper", c.upper.to_compact()}, {"failed", c.failed_side}});
  }
  return {{"n", r.n},
          {"pairs_checked", r.pairs_checked},
          {"equivalence_holds", r.equivalence_holds},
          {"counterexamples", ce}};
}

}  // namespace permdyck
