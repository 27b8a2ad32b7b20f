#include "permdyck/oracle.hpp"

#include <sstream>
#include <stdexcept>

namespace permdyck {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

namespace {

void require_enumerable(int n) {
  if (n < 0 || n > kMaxEnumerationN) {
    throw std::out_of_range("enumeration is capped at n <= " + std::to_string(kMaxEnumerationN) + ", got " +
                            std::to_string(n));
  }
}

}  // namespace

Permutation unrank(int n, std::uint64_t rank) {
  require_enumerable(n);
  if (rank >= factorial(n)) throw std::out_of_range("unrank: rank beyond n!");
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) pool[static_cast<std::size_t>(v - 1)] = v;
  std::vector<int> out;
  for (int i = n; i >= 1; --i) {
    const std::uint64_t block = factorial(i - 1);
    const auto idx = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(out));
}

PermutationStream::PermutationStream(int n) : PermutationStream(n, 0, factorial(n < 0 ? 0 : n)) {}

PermutationStream::PermutationStream(int n, std::uint64_t first, std::uint64_t last) : rank_(first), last_(last) {
  require_enumerable(n);
  if (last_ > factorial(n)) throw std::out_of_range("PermutationStream: range beyond n!");
  if (first < last_) current_ = unrank(n, first);
}

bool PermutationStream::next(Permutation& out) {
  if (rank_ >= last_) return false;
  out = current_;
  ++rank_;
  if (rank_ < last_) current_.next_lexicographic();
  return true;
}

std::vector<Permutation> enumerate(int n) {
  PermutationStream stream(n);
  std::vector<Permutation> all;
  all.reserve(factorial(n));
  Permutation p;
  while (stream.next(p)) all.push_back(p);
  return all;
}

namespace {

std::vector<Permutation> avoiders_split(int n, bool left_above) {
  if (n < 0) throw std::out_of_range("avoiders: negative n");
  std::vector<std::vector<std::vector<int>>> table(static_cast<std::size_t>(n) + 1);
  table[0] = {{}};
  for (int m = 1; m <= n; ++m) {
    auto& out = table[static_cast<std::size_t>(m)];
    for (int k = 1; k <= m; ++k) {
      const int left_size = k - 1, right_size = m - k;
      const int left_offset = left_above ? right_size : 0;
      const int right_offset = left_above ? 0 : left_size;
      for (const auto& l : table[static_cast<std::size_t>(left_size)]) {
        for (const auto& r : table[static_cast<std::size_t>(right_size)]) {
          std::vector<int> w;
          w.reserve(static_cast<std::size_t>(m));
          for (int v : l) w.push_back(v + left_offset);
          w.push_back(m);
          for (int v : r) w.push_back(v + right_offset);
          out.push_back(std::move(w));
        }
      }
    }
  }
  std::vector<Permutation> result;
  for (auto& w : table[static_cast<std::size_t>(n)]) result.emplace_back(std::move(w));
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

std::vector<Permutation> avoiders_132(int n) { return avoiders_split(n, true); }
std::vector<Permutation> avoiders_231(int n) { return avoiders_split(n, false); }

BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

Statistic parse_statistic(std::string_view name) {
  if (name == "lbsum") return Statistic::lbsum;
  if (name == "des") return Statistic::des;
  if (name == "maj") return Statistic::maj;
  if (name == "lrmax") return Statistic::lrmax;
  if (name == "maxdes") return Statistic::maxdes;
  if (name == "inv") return Statistic::inv;
  throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
}

AvoidFilter parse_filter(std::string_view name) {
  if (name.empty() || name == "none") return AvoidFilter::none;
  if (name == "132" || name == "1-3-2") return AvoidFilter::avoid132;
  if (name == "231" || name == "2-3-1") return AvoidFilter::avoid231;
  throw std::invalid_argument("unknown filter '" + std::string(name) + "'");
}

std::string_view name_of(Statistic s) {
  switch (s) {
    case Statistic::lbsum: return "lbsum";
    case Statistic::des: return "des";
    case Statistic::maj: return "maj";
    case Statistic::lrmax: return "lrmax";
    case Statistic::maxdes: return "maxdes";
    case Statistic::inv: return "inv";
  }
  return "?";
}

std::string_view name_of(AvoidFilter f) {
  switch (f) {
    case AvoidFilter::none: return "none";
    case AvoidFilter::avoid132: return "132";
    case AvoidFilter::avoid231: return "231";
  }
  return "?";
}

std::int64_t statistic_value(const Permutation& p, Statistic s) {
  const auto st = stats(p);
  switch (s) {
    case Statistic::lbsum: return st.lbsum;
    case Statistic::des: return st.des;
    case Statistic::maj: return st.maj;
    case Statistic::lrmax: return st.lrmax;
    case Statistic::maxdes: return st.maxdes;
    case Statistic::inv: return st.inv;
  }
  return 0;
}

bool passes(const Permutation& p, AvoidFilter f) {
  switch (f) {
    case AvoidFilter::none: return true;
    case AvoidFilter::avoid132: return avoids(p, pattern_132());
    case AvoidFilter::avoid231: return avoids(p, pattern_231());
  }
  return true;
}

BigInt Distribution::total() const {
  BigInt t = 0;
  for (const auto& [v, c] : counts) t += c;
  return t;
}

Distribution& Distribution::merge(const Distribution& other) {
  if (other.statistic != statistic || other.n != n || other.filter != filter) {
    throw std::invalid_argument("Distribution::merge: incompatible distributions");
  }
  for (const auto& [v, c] : other.counts) counts[v] += c;
  return *this;
}

UniPolynomial Distribution::as_polynomial() const {
  std::vector<BigInt> v;
  for (const auto& [value, c] : counts) {
    if (value < 0) throw std::domain_error("as_polynomial: negative statistic value");
    if (static_cast<std::size_t>(value) >= v.size()) v.resize(static_cast<std::size_t>(value) + 1);
    v[static_cast<std::size_t>(value)] += c;
  }
  return UniPolynomial(std::move(v));
}

Distribution distribution(int n, Statistic s, AvoidFilter f, int workers) {
  require_enumerable(n);
  using Local = std::map<std::int64_t, std::uint64_t>;
  auto parts = run_partitioned<Local>(n, workers, [&](Local& local, const Permutation& p, std::uint64_t) {
    if (passes(p, f)) ++local[statistic_value(p, s)];
  });
  Distribution d;
  d.n = n;
  d.statistic = s;
  d.filter = f;
  for (const auto& local : parts)
    for (const auto& [v, c] : local) d.counts[v] += c;
  return d;
}

ShapeCensus shape_census(int n, int workers) {
  if (n < 0 || n > 9) throw std::out_of_range("shape_census: n must be in 0..9");
  auto parts = run_partitioned<ShapeCensus>(n, workers, [](ShapeCensus& local, const Permutation& p, std::uint64_t) {
    ++local[shape(p).to_string()];
  });
  ShapeCensus census;
  for (const auto& local : parts)
    for (const auto& [k, c] : local) census[k] += c;
  return census;
}

nlohmann::json to_json(const Distribution& d) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [v, c] : d.counts) rows.push_back({{"value", v}, {"count", c.str()}});
  return {{"n", d.n},
          {"statistic", std::string(name_of(d.statistic))},
          {"filter", std::string(name_of(d.filter))},
          {"total", d.total().str()},
          {"rows", rows}};
}

std::string to_csv(const Distribution& d) {
  std::ostringstream out;
  out << "value,count\n";
  for (const auto& [v, c] : d.counts) out << v << ',' << c << '\n';
  return out.str();
}

nlohmann::json to_json(const ShapeCensus& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [k, v] : c) rows.push_back({{"shape", k}, {"count", std::to_string(v)}});
  return rows;
}

std::string to_csv(const ShapeCensus& c) {
  std::ostringstream out;
  out << "shape,count\n";
  for (const auto& [k, v] : c) out << '"' << k << "\"," << v << '\n';
  return out.str();
}

}  // namespace permdyck
