#include "coinproof/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace coinproof {

namespace {

int sign_of(long long v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

std::map<std::string, int> pile_index_map(const Strategy& s) {
  std::map<std::string, int> m;
  for (size_t i = 0; i < s.piles.size(); ++i) m.emplace(s.piles[i].id, static_cast<int>(i));
  return m;
}

}  // namespace

ValidationReport validate(const Strategy& strategy) {
  ValidationReport report;
  auto error = [&](std::string where, std::string message) {
    report.errors.push_back({std::move(where), std::move(message)});
  };

  const Params& p = strategy.params;
  if (p.t < 0) error("params", "t must be nonnegative");
  if (p.f < 0 || p.f > p.t) error("params", "f must satisfy 0 <= f <= t");
  if (p.d < 0 || p.d > p.t) error("params", "d must satisfy 0 <= d <= t");
  if (p.d == p.f) error("params", "d must differ from f");

  std::set<std::string> ids;
  long long size_sum = 0;
  long long fake_sum = 0;
  for (size_t i = 0; i < strategy.piles.size(); ++i) {
    const Pile& pile = strategy.piles[i];
    const std::string where = "piles[" + std::to_string(i) + "]";
    if (pile.id.empty()) error(where, "empty pile id");
    if (!ids.insert(pile.id).second) error(where, "duplicate pile id '" + pile.id + "'");
    if (pile.size < 1) error(where, "pile size must be >= 1");
    if (pile.fakes < 0 || pile.fakes > pile.size) error(where, "fakes must satisfy 0 <= fakes <= size");
    size_sum += pile.size;
    fake_sum += pile.fakes;
  }
  if (size_sum != p.t) {
    error("piles", "pile sizes sum to " + std::to_string(size_sum) + ", expected t = " + std::to_string(p.t));
  }
  if (fake_sum != p.f) {
    error("piles", "pile fakes sum to " + std::to_string(fake_sum) + ", expected f = " + std::to_string(p.f));
  }

  auto index = pile_index_map(strategy);
  for (size_t w = 0; w < strategy.weighings.size(); ++w) {
    const Weighing& weighing = strategy.weighings[w];
    const std::string where = "weighings[" + std::to_string(w) + "]";
    std::set<std::string> seen;
    long long left_size = 0;
    long long right_size = 0;
    bool refs_ok = true;
    auto scan_pan = [&](const std::vector<std::string>& pan, long long& total) {
      for (const std::string& id : pan) {
        auto it = index.find(id);
        if (it == index.end()) {
          error(where, "unknown pile id '" + id + "'");
          refs_ok = false;
          continue;
        }
        if (!seen.insert(id).second) {
          error(where, "pile '" + id + "' appears more than once");
          refs_ok = false;
          continue;
        }
        total += strategy.piles[it->second].size;
      }
    };
    scan_pan(weighing.left, left_size);
    scan_pan(weighing.right, right_size);
    if (weighing.left.empty() || weighing.right.empty()) {
      error(where, "both pans must be nonempty");
    } else if (refs_ok && left_size != right_size) {
      error(where, "unequal pans: " + std::to_string(left_size) + " coins left vs " +
                       std::to_string(right_size) + " right");
    }
  }

  if (report.errors.empty() && !(1 < p.f && p.f < p.t - 1)) {
    report.warnings.push_back({"params", "discreet impossible: requires 1 < f < t-1"});
  }
  return report;
}

void require_valid(const Strategy& strategy) {
  ValidationReport report = validate(strategy);
  if (!report.valid()) {
    throw std::invalid_argument("invalid strategy: " + report.errors.front().where + ": " +
                                report.errors.front().message);
  }
}

ObservationalClassing refine(const Strategy& strategy) {
  const size_t m = strategy.weighings.size();
  auto index = pile_index_map(strategy);

  // participation column per declared pile
  std::vector<std::vector<int>> columns(strategy.piles.size(), std::vector<int>(m, 0));
  for (size_t w = 0; w < m; ++w) {
    for (const std::string& id : strategy.weighings[w].left) columns[index.at(id)][w] = 1;
    for (const std::string& id : strategy.weighings[w].right) columns[index.at(id)][w] = -1;
  }

  std::vector<long long> first_coin(strategy.piles.size(), 0);
  long long at = 0;
  for (size_t i = 0; i < strategy.piles.size(); ++i) {
    first_coin[i] = at;
    at += strategy.piles[i].size;
  }

  ObservationalClassing classing;
  classing.pile_class.assign(strategy.piles.size(), -1);
  std::map<std::vector<int>, int> by_column;
  for (size_t i = 0; i < strategy.piles.size(); ++i) {
    auto it = by_column.find(columns[i]);
    if (it == by_column.end()) {
      it = by_column.emplace(columns[i], static_cast<int>(classing.classes.size())).first;
      classing.classes.push_back({0, columns[i], {}, first_coin[i]});
    }
    ObservationalClass& cls = classing.classes[it->second];
    cls.size += strategy.piles[i].size;
    cls.pile_indices.push_back(static_cast<int>(i));
    classing.pile_class[i] = it->second;
  }

  std::sort(classing.classes.begin(), classing.classes.end(),
            [](const ObservationalClass& a, const ObservationalClass& b) { return a.first_coin < b.first_coin; });
  // remap pile -> class after the sort
  for (size_t c = 0; c < classing.classes.size(); ++c) {
    for (int pile : classing.classes[c].pile_indices) classing.pile_class[pile] = static_cast<int>(c);
  }
  return classing;
}

Syndrome expected_syndrome(const Strategy& strategy) {
  auto index = pile_index_map(strategy);
  Syndrome syndrome;
  syndrome.reserve(strategy.weighings.size());
  for (const Weighing& w : strategy.weighings) {
    long long left = 0;
    long long right = 0;
    for (const std::string& id : w.left) left += strategy.piles[index.at(id)].fakes;
    for (const std::string& id : w.right) right += strategy.piles[index.at(id)].fakes;
    syndrome.push_back(sign_of(left - right));
  }
  return syndrome;
}

}  // namespace coinproof
