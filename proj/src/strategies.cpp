#include "coinproof/strategies.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "coinproof/analytic.hpp"

namespace coinproof {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

std::string num(long long v) { return std::to_string(v); }

// Canonical form for duplicate detection: sorted pans, smaller pan first.
std::pair<std::vector<std::string>, std::vector<std::string>> canonical_weighing(const Weighing& w) {
  std::vector<std::string> left = w.left;
  std::vector<std::string> right = w.right;
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  if (right < left) left.swap(right);
  return {left, right};
}

void push_unique(Strategy& s, std::set<std::pair<std::vector<std::string>, std::vector<std::string>>>& seen,
                 Weighing w) {
  auto key = canonical_weighing(w);
  if (seen.insert(key).second) s.weighings.push_back(std::move(w));
}

}  // namespace

Strategy gen_shapovalov(long long t, long long f, long long d) {
  if (t != 80 || f != 3 || d != 2) {
    throw std::invalid_argument("gen_shapovalov: fixed showcase requires t=80, f=3, d=2");
  }
  Strategy s;
  s.params = {80, 3, 2};
  s.piles = {{"A", 10, 1}, {"B", 10, 0}, {"C", 20, 0}, {"D", 20, 1}, {"E", 20, 1}};
  s.weighings = {{{"A", "C"}, {"B", "D"}}, {{"A", "B"}, {"E"}}, {{"C", "D"}, {"A", "B", "E"}}};
  return s;
}

Strategy gen_divisibility(long long t, long long f, long long d, long long a) {
  if (a < 2) throw std::invalid_argument("gen_divisibility: a must be >= 2");
  if (f < 0 || f % a != 0) throw std::invalid_argument("gen_divisibility: a must divide f");
  if (t < 1 || t % a != 0) throw std::invalid_argument("gen_divisibility: a must divide t");
  if (d % a == 0) throw std::invalid_argument("gen_divisibility: a must not divide d");
  if (f > t) throw std::invalid_argument("gen_divisibility: f must not exceed t");

  Strategy s;
  s.params = {t, f, d};
  for (long long i = 1; i <= a; ++i) s.piles.push_back({"P" + num(i), t / a, f / a});
  for (long long i = 1; i < a; ++i) s.weighings.push_back({{"P" + num(i)}, {"P" + num(i + 1)}});
  return s;
}

Strategy gen_indiscreet_piles(long long t, long long f, long long d, long long a) {
  if (a < 2) throw std::invalid_argument("gen_indiscreet_piles: a must be >= 2");
  if (f < 0 || f % a != 0) throw std::invalid_argument("gen_indiscreet_piles: a must divide f");
  if (d % a == 0) throw std::invalid_argument("gen_indiscreet_piles: a must not divide d");
  if (t <= 2 * a) throw std::invalid_argument("gen_indiscreet_piles: requires t > 2a");
  const long long qt = t / a;
  const long long rt = t % a;
  const long long rd = d % a;
  if (qt - ceil_div(d, a) <= f / a) {
    throw std::invalid_argument("gen_indiscreet_piles: requires floor(t/a) - ceil(d/a) > f/a");
  }

  Strategy s;
  s.params = {t, f, d};

  if (rd > rt) {
    // Exact case: a*x + y = d has no solution with y in [0, rt], so the
    // pile chain alone disproves d. No leftover or borrow weighings.
    for (long long i = 1; i <= a; ++i) s.piles.push_back({"P" + num(i), qt, f / a});
    if (rt > 0) s.piles.push_back({"L", rt, 0});
    for (long long i = 1; i < a; ++i) s.weighings.push_back({{"P" + num(i)}, {"P" + num(i + 1)}});
    return s;
  }

  if (rt == 0) throw std::invalid_argument("gen_indiscreet_piles: a must not divide t");

  // Borrow enough real coins out of the piles to chain d+1 coins of equal
  // weight. e1 piles give up ceil(d/a), the rest floor(d/a); outside the
  // e1 >= 0 regime the borrow is spread evenly instead.
  const long long b = std::max(0LL, d + 1 - rt);
  const long long e1 = rd - rt + 1;
  std::vector<long long> borrow(a, 0);
  if (b > 0) {
    if (e1 >= 0) {
      for (long long i = 0; i < a; ++i) borrow[i] = i < e1 ? ceil_div(d, a) : d / a;
    } else {
      for (long long i = 0; i < a; ++i) borrow[i] = b / a + (i < b % a ? 1 : 0);
    }
  }

  std::vector<std::vector<std::string>> groups(a);
  std::vector<std::string> chain;  // leftover singletons then borrowed singletons
  for (long long i = 1; i <= rt; ++i) {
    s.piles.push_back({"L" + num(i), 1, 0});
    chain.push_back("L" + num(i));
  }
  for (long long i = 0; i < a; ++i) {
    const std::string pid = "P" + num(i + 1);
    s.piles.push_back({pid, qt - borrow[i], f / a});
    groups[i].push_back(pid);
    for (long long j = 1; j <= borrow[i]; ++j) {
      const std::string sid = "S" + num(i + 1) + "_" + num(j);
      s.piles.push_back({sid, 1, 0});
      groups[i].push_back(sid);
      chain.push_back(sid);
    }
  }

  for (long long i = 0; i + 1 < a; ++i) s.weighings.push_back({groups[i], groups[i + 1]});
  for (size_t i = 0; i + 1 < chain.size(); ++i) s.weighings.push_back({{chain[i]}, {chain[i + 1]}});
  return s;
}

namespace {

struct ThreeFamilyShape {
  long long k = 0;
  long long r = 0;
};

ThreeFamilyShape three_family_shape(long long t, long long f) {
  if (f < 2) throw std::invalid_argument("gen_three_family: requires f >= 2");
  ThreeFamilyShape shape;
  shape.k = t / f;
  shape.r = t - f * shape.k;
  if (shape.k < 4) throw std::invalid_argument("gen_three_family: requires floor(t/f) >= 4");
  if (shape.r == 0) {
    throw std::invalid_argument("gen_three_family: r = 0 (f divides t); use gen_divisibility");
  }
  return shape;
}

Strategy three_family_base(long long t, long long f, long long d, char family) {
  if (family != 'A' && family != 'B' && family != 'C') {
    throw std::invalid_argument("gen_three_family: family must be one of A, B, C");
  }
  const ThreeFamilyShape shape = three_family_shape(t, f);

  Strategy s;
  s.params = {t, f, d};
  for (long long i = 1; i <= f; ++i) {
    const bool small = i <= shape.r;
    s.piles.push_back({"A" + num(i), small ? shape.k - 2 : shape.k - 3, family == 'A' ? 1 : 0});
    s.piles.push_back({"B" + num(i), small ? 1LL : 2LL, family == 'B' ? 1 : 0});
    s.piles.push_back({"C" + num(i), small ? 2LL : 1LL, family == 'C' ? 1 : 0});
  }
  for (long long i = 1; i < f; ++i) {
    s.weighings.push_back({{"A" + num(i), "B" + num(i)}, {"A" + num(i + 1), "B" + num(i + 1)}});
  }
  for (long long i = 1; i < f; ++i) {
    s.weighings.push_back({{"B" + num(i), "C" + num(i)}, {"B" + num(i + 1), "C" + num(i + 1)}});
  }
  return s;
}

}  // namespace

Strategy gen_three_family(long long t, long long f, long long d, char family) {
  return three_family_base(t, f, d, family);
}

Strategy gen_three_family_augmented(long long t, long long f, long long d) {
  Strategy s = three_family_base(t, f, d, 'A');
  const ThreeFamilyShape shape = three_family_shape(t, f);

  std::set<std::pair<std::vector<std::string>, std::vector<std::string>>> seen;
  for (const Weighing& w : s.weighings) seen.insert(canonical_weighing(w));

  // Exchange comparisons within each equal-size index interval.
  const std::pair<long long, long long> intervals[2] = {{1, shape.r}, {shape.r + 1, f}};
  for (auto [lo, hi] : intervals) {
    for (long long w = lo; w <= hi; ++w) {
      for (long long y = w + 1; y <= hi; ++y) {
        for (long long x = lo; x <= hi; ++x) {
          for (long long z = lo; z <= hi; ++z) {
            if (x == z) continue;
            push_unique(s, seen, {{"A" + num(w), "B" + num(x)}, {"A" + num(y), "B" + num(z)}});
            push_unique(s, seen, {{"B" + num(w), "C" + num(x)}, {"B" + num(y), "C" + num(z)}});
          }
        }
      }
    }
  }
  return s;
}

std::vector<SolutionVector> solve_solution_vectors(const std::vector<long long>& c,
                                                   const std::vector<long long>& g, long long target) {
  if (c.size() != g.size()) throw std::invalid_argument("solve_solution_vectors: c and g lengths differ");
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 1) throw std::invalid_argument("solve_solution_vectors: coefficients must be positive");
    if (g[i] < 0) throw std::invalid_argument("solve_solution_vectors: bounds must be nonnegative");
  }
  const size_t k = c.size();
  std::vector<long long> suffix_capacity(k + 1, 0);
  for (size_t i = k; i-- > 0;) suffix_capacity[i] = suffix_capacity[i + 1] + c[i] * g[i];

  std::vector<SolutionVector> out;
  std::vector<long long> x(k, 0);
  auto descend = [&](auto&& self, size_t i, long long remaining) -> void {
    if (remaining < 0 || remaining > suffix_capacity[i]) return;
    if (i == k) {
      if (remaining == 0) out.push_back({x});
      return;
    }
    const long long top = std::min(g[i], remaining / c[i]);
    for (long long v = 0; v <= top; ++v) {
      x[i] = v;
      self(self, i + 1, remaining - c[i] * v);
    }
    x[i] = 0;
  };
  if (target >= 0) descend(descend, 0, target);
  return out;
}

Strategy gen_linear_combination(long long t, long long f, long long d, const LinCombConfig& config,
                                const SolutionVector& placement) {
  const size_t k = config.c.size();
  if (k == 0 || config.g.size() != k) {
    throw std::invalid_argument("gen_linear_combination: config must have matching nonempty c and g");
  }
  long long coins = 0;
  for (size_t i = 0; i < k; ++i) {
    if (config.c[i] < 2 || config.c[i] > f) {
      throw std::invalid_argument("gen_linear_combination: requires 2 <= c_i <= f");
    }
    if (config.g[i] < 1 || 2 * config.g[i] > t) {
      throw std::invalid_argument("gen_linear_combination: requires 1 <= g_i <= t/2");
    }
    coins += config.c[i] * config.g[i];
  }
  if (coins != t) throw std::invalid_argument("gen_linear_combination: Sum c_i g_i must equal t");

  if (placement.x.size() != k) throw std::invalid_argument("gen_linear_combination: placement length mismatch");
  long long placed = 0;
  for (size_t i = 0; i < k; ++i) {
    if (placement.x[i] < 0 || placement.x[i] > config.g[i]) {
      throw std::invalid_argument("gen_linear_combination: placement infeasible (x_i outside [0, g_i])");
    }
    placed += config.c[i] * placement.x[i];
  }
  if (placed != f) throw std::invalid_argument("gen_linear_combination: placement infeasible (Sum c_i x_i != f)");

  if (!solve_solution_vectors(config.c, config.g, d).empty()) {
    throw std::invalid_argument("gen_linear_combination: d representable as Sum c_i x_i; strategy cannot disprove it");
  }

  Strategy s;
  s.params = {t, f, d};
  for (size_t i = 0; i < k; ++i) {
    for (long long j = 1; j <= config.c[i]; ++j) {
      s.piles.push_back({"G" + num(static_cast<long long>(i) + 1) + "P" + num(j), config.g[i], placement.x[i]});
    }
    for (long long j = 1; j < config.c[i]; ++j) {
      s.weighings.push_back({{"G" + num(static_cast<long long>(i) + 1) + "P" + num(j)},
                        {"G" + num(static_cast<long long>(i) + 1) + "P" + num(j + 1)}});
    }
  }
  return s;
}

SearchResult search_lincomb(long long t, long long f, long long d, const SearchLimits& limits) {
  if (limits.max_groups < 1) throw std::invalid_argument("search_lincomb: max_groups must be >= 1");
  if (t > limits.t_ceiling) {
    throw std::invalid_argument("search_lincomb: t exceeds configured ceiling " + num(limits.t_ceiling));
  }
  const long long c_cap = limits.max_c > 0 ? std::min(limits.max_c, f) : f;
  const long long g_cap = limits.max_g > 0 ? std::min(limits.max_g, t / 2) : t / 2;

  SearchResult result;
  long long nodes = 0;
  LinCombConfig current;

  // Nondecreasing (c, g) sequences so each multiset of groups appears once.
  auto descend = [&](auto&& self, long long remaining, long long min_c, long long min_g) -> void {
    if (!result.complete) return;
    if (++nodes > limits.node_budget) {
      result.complete = false;
      return;
    }
    if (remaining == 0 && !current.c.empty()) {
      auto sols_f = solve_solution_vectors(current.c, current.g, f);
      if (!sols_f.empty() && solve_solution_vectors(current.c, current.g, d).empty()) {
        std::vector<std::vector<long long>> xs;
        xs.reserve(sols_f.size());
        for (const auto& sv : sols_f) xs.push_back(sv.x);
        result.ranked.emplace_back(current, lincomb_count(current.c, current.g, xs));
      }
      return;
    }
    if (static_cast<long long>(current.c.size()) >= limits.max_groups) return;
    for (long long c = min_c; c <= c_cap; ++c) {
      const long long g_start = c == min_c ? min_g : 1;
      for (long long g = g_start; g <= g_cap; ++g) {
        if (c * g > remaining) break;
        current.c.push_back(c);
        current.g.push_back(g);
        self(self, remaining - c * g, c, g);
        current.c.pop_back();
        current.g.pop_back();
        if (!result.complete) return;
      }
    }
  };
  if (f >= 2) descend(descend, t, 2, 1);

  std::stable_sort(result.ranked.begin(), result.ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    if (a.first.c != b.first.c) return a.first.c < b.first.c;
    return a.first.g < b.first.g;
  });
  return result;
}

}  // namespace coinproof
