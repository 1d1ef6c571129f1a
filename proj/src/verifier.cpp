#include "coinproof/verifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace coinproof {

namespace {

int sign_of(long long v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// DFS over class-level fake-count vectors.
class ClassCounter {
 public:
  ClassCounter(const ObservationalClassing& classing, long long n, const Syndrome& syndrome)
      : classes_(classing.classes), n_(n), syndrome_(syndrome), m_(syndrome.size()) {
    const size_t p = classes_.size();
    suffix_sizes_.assign(p + 1, 0);
    for (size_t i = p; i-- > 0;) suffix_sizes_[i] = suffix_sizes_[i + 1] + classes_[i].size;
    suffix_neg_.assign(p + 1, std::vector<long long>(m_, 0));
    suffix_pos_.assign(p + 1, std::vector<long long>(m_, 0));
    for (size_t i = p; i-- > 0;) {
      for (size_t w = 0; w < m_; ++w) {
        const long long contrib = static_cast<long long>(classes_[i].column[w]) * classes_[i].size;
        suffix_neg_[i][w] = suffix_neg_[i + 1][w] + std::min(0LL, contrib);
        suffix_pos_[i][w] = suffix_pos_[i + 1][w] + std::max(0LL, contrib);
      }
    }
    xs_.assign(p, 0);
    result_.count = 0;
    result_.per_class.assign(p, {});
  }

  ClassCountResult run() {
    std::vector<long long> sums(m_, 0);
    descend(0, n_, sums, Count(1));
    return std::move(result_);
  }

 private:
  bool feasible(size_t i, const std::vector<long long>& sums) const {
    for (size_t w = 0; w < m_; ++w) {
      const long long lo = sums[w] + suffix_neg_[i][w];
      const long long hi = sums[w] + suffix_pos_[i][w];
      switch (syndrome_[w]) {
        case 0:
          if (lo > 0 || hi < 0) return false;
          break;
        case 1:
          if (hi < 1) return false;
          break;
        default:
          if (lo > -1) return false;
          break;
      }
    }
    return true;
  }

  void descend(size_t i, long long remaining, std::vector<long long>& sums, const Count& product) {
    if (remaining > suffix_sizes_[i]) return;
    if (!feasible(i, sums)) return;
    if (i == classes_.size()) {
      if (remaining != 0) return;
      result_.count += product;
      for (size_t j = 0; j < xs_.size(); ++j) result_.per_class[j].insert(xs_[j]);
      return;
    }
    const ObservationalClass& cls = classes_[i];
    const long long top = std::min(cls.size, remaining);
    for (long long x = 0; x <= top; ++x) {
      xs_[i] = x;
      for (size_t w = 0; w < m_; ++w) sums[w] += cls.column[w] * x;
      descend(i + 1, remaining - x, sums, product * binomial(cls.size, x));
      for (size_t w = 0; w < m_; ++w) sums[w] -= cls.column[w] * x;
    }
  }

  const std::vector<ObservationalClass>& classes_;
  long long n_;
  const Syndrome& syndrome_;
  size_t m_;
  std::vector<long long> suffix_sizes_;
  std::vector<std::vector<long long>> suffix_neg_;
  std::vector<std::vector<long long>> suffix_pos_;
  std::vector<long long> xs_;
  ClassCountResult result_;
};

Strategy with_weighings(const Strategy& strategy, const std::vector<int>& indices) {
  Strategy sub = strategy;
  sub.weighings.clear();
  for (int i : indices) sub.weighings.push_back(strategy.weighings[i]);
  return sub;
}

Syndrome sub_syndrome(const Syndrome& syndrome, const std::vector<int>& indices) {
  Syndrome s;
  for (int i : indices) s.push_back(syndrome[i]);
  return s;
}

}  // namespace

ClassCountResult admissible_count(const Strategy& strategy, long long n, const Syndrome& syndrome) {
  require_valid(strategy);
  if (n < 0 || n > strategy.params.t) throw std::invalid_argument("admissible_count: n must satisfy 0 <= n <= t");
  if (syndrome.size() != strategy.weighings.size()) {
    throw std::invalid_argument("admissible_count: syndrome length " + std::to_string(syndrome.size()) +
                                " does not match weighing count " + std::to_string(strategy.weighings.size()));
  }
  ObservationalClassing classing = refine(strategy);
  return ClassCounter(classing, n, syndrome).run();
}

Count oracle_admissible_count(const Strategy& strategy, long long n, const Syndrome& syndrome, std::uint64_t cap) {
  require_valid(strategy);
  const long long t = strategy.params.t;
  if (n < 0 || n > t) throw std::invalid_argument("oracle_admissible_count: n must satisfy 0 <= n <= t");
  if (syndrome.size() != strategy.weighings.size()) {
    throw std::invalid_argument("oracle_admissible_count: syndrome length mismatch");
  }
  if (binomial(t, n) > Count(cap)) {
    throw OracleCapExceeded("oracle out of range: C(" + std::to_string(t) + "," + std::to_string(n) +
                            ") exceeds cap " + std::to_string(cap));
  }

  // coin-level pan coefficients: +1 left, -1 right, 0 absent
  std::map<std::string, int> index;
  for (size_t i = 0; i < strategy.piles.size(); ++i) index.emplace(strategy.piles[i].id, static_cast<int>(i));
  std::vector<long long> first_coin(strategy.piles.size(), 0);
  long long at = 0;
  for (size_t i = 0; i < strategy.piles.size(); ++i) {
    first_coin[i] = at;
    at += strategy.piles[i].size;
  }
  const size_t m = strategy.weighings.size();
  std::vector<std::vector<int>> coeff(m, std::vector<int>(t, 0));
  for (size_t w = 0; w < m; ++w) {
    for (const std::string& id : strategy.weighings[w].left) {
      const Pile& p = strategy.piles[index.at(id)];
      for (long long c = first_coin[index.at(id)]; c < first_coin[index.at(id)] + p.size; ++c) coeff[w][c] = 1;
    }
    for (const std::string& id : strategy.weighings[w].right) {
      const Pile& p = strategy.piles[index.at(id)];
      for (long long c = first_coin[index.at(id)]; c < first_coin[index.at(id)] + p.size; ++c) coeff[w][c] = -1;
    }
  }

  Count matches = 0;
  if (n == 0) {
    bool all_zero = std::all_of(syndrome.begin(), syndrome.end(), [](int s) { return s == 0; });
    return all_zero ? Count(1) : Count(0);
  }
  std::vector<long long> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    bool match = true;
    for (size_t w = 0; w < m && match; ++w) {
      long long balance = 0;  // fakes_left - fakes_right for the chosen fake set
      for (long long c : pick) balance += coeff[w][c];
      if (sign_of(balance) != syndrome[w]) match = false;
    }
    if (match) ++matches;
    // next combination
    long long i = n - 1;
    while (i >= 0 && pick[i] == t - n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (long long j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return matches;
}

AdmissibleReport verify(const Strategy& strategy) {
  require_valid(strategy);
  const Params& p = strategy.params;
  AdmissibleReport report;
  report.syndrome = expected_syndrome(strategy);

  ClassCountResult rf = admissible_count(strategy, p.f, report.syndrome);
  ClassCountResult rd = admissible_count(strategy, p.d, report.syndrome);
  report.count_f = rf.count;
  report.count_d = rd.count;
  report.per_class = rf.per_class;

  ObservationalClassing classing = refine(strategy);
  for (const ObservationalClass& cls : classing.classes) report.class_sizes.push_back(cls.size);

  if (report.count_f == 0) {
    throw std::logic_error("strategy inconsistent with own arrangement: realized syndrome admits no f-fake situation");
  }
  report.success = report.count_d == 0;

  report.discreet = report.success;
  for (size_t j = 0; j < classing.classes.size() && report.discreet; ++j) {
    const auto& values = rf.per_class[j];
    const bool somewhere_fake = !values.empty() && *values.rbegin() >= 1;
    const bool somewhere_real = !values.empty() && *values.begin() <= classing.classes[j].size - 1;
    report.discreet = somewhere_fake && somewhere_real;
  }

  report.X = Ratio(binomial(p.t, p.f), report.count_f);
  report.R = Ratio(1) - Ratio(Count(1)) / report.X;
  return report;
}

std::vector<SubsetRow> subset_table(const Strategy& strategy) {
  require_valid(strategy);
  const size_t m = strategy.weighings.size();
  if (m > 20) throw std::invalid_argument("subset_table: more than 20 weighings (2^m subsets)");
  const Syndrome realized = expected_syndrome(strategy);
  const Params& p = strategy.params;

  std::vector<std::vector<int>> subsets;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> indices;
    for (size_t i = 0; i < m; ++i)
      if (mask >> i & 1) indices.push_back(static_cast<int>(i));
    subsets.push_back(std::move(indices));
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) { return a.size() < b.size(); });

  std::vector<SubsetRow> rows;
  for (const std::vector<int>& indices : subsets) {
    Strategy sub = with_weighings(strategy, indices);
    Syndrome s = sub_syndrome(realized, indices);
    SubsetRow row;
    row.weighing_indices = indices;
    row.count_f = admissible_count(sub, p.f, s).count;
    row.count_d = admissible_count(sub, p.d, s).count;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> best_order(const Strategy& strategy) {
  require_valid(strategy);
  const size_t m = strategy.weighings.size();
  if (m > 20) throw std::invalid_argument("best_order: more than 20 weighings");
  const Syndrome realized = expected_syndrome(strategy);
  const long long f = strategy.params.f;

  std::vector<int> order;
  std::vector<bool> used(m, false);
  for (size_t step = 0; step < m; ++step) {
    int best = -1;
    Count best_count = -1;
    for (size_t c = 0; c < m; ++c) {
      if (used[c]) continue;
      std::vector<int> candidate = order;
      candidate.push_back(static_cast<int>(c));
      Strategy sub = with_weighings(strategy, candidate);
      Count count = admissible_count(sub, f, sub_syndrome(realized, candidate)).count;
      if (count > best_count) {  // ties keep the earlier (smaller) index
        best_count = count;
        best = static_cast<int>(c);
      }
    }
    used[best] = true;
    order.push_back(best);
  }
  return order;
}

}  // namespace coinproof
