#pragma once

// Strong Bruhat order and its relation to shape containment on 1-3-2 avoiders.

#include <string>
#include <vector>

#include <json.hpp>

#include "permdyck/dyck.hpp"
#include "permdyck/permutation.hpp"

namespace permdyck {

/// p <= q in the strong Bruhat order, by the rank-matrix dominance test:
/// #{a <= i : p(a) >= k} <= #{a <= i : q(a) >= k} for all i, k.
bool bruhat_leq(const Permutation& p, const Permutation& q);

/// q arises from p by transposing two entries, raising the inversion count by one.
bool bruhat_covers(const Permutation& p, const Permutation& q);

/// Young diagram containment, componentwise on the parts. With `strict`, the
/// shapes must also differ.
bool shape_contains(const ShapePartition& inner, const ShapePartition& outer, bool strict = false);

struct PosetCounterexample {
  Permutation lower;
  Permutation upper;
  std::string failed_side;  // "containment-only" or "bruhat-only"
};

struct PosetReport {
  int n = 0;
  std::uint64_t pairs_checked = 0;
  bool equivalence_holds = true;
  std::vector<PosetCounterexample> counterexamples;
};

/// Over all ordered pairs of distinct 1-3-2 avoiders of length n (2 <= n <= 8),
/// compares strict shape containment with strict Bruhat order.
PosetReport verify_poset_equivalence(int n, int workers = 1);

nlohmann::json to_json(const PosetReport& r);

}  // namespace permdyck
