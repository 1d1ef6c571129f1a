// Data model for balance-scale proof strategies: problem parameters,
// declared piles with prover-assigned fake counts, ordered weighings,
// syndromes, and the observer-side refinement into classes of coins
// that participate identically in every weighing.
#pragma once

#include <string>
#include <vector>

namespace coinproof {

// t total coins, f actual fakes, d the count to disprove.
struct Params {
  long long t = 0;
  long long f = 0;
  long long d = 0;
};

// A declared pile. Piles own contiguous coin index ranges in declaration
// order; the prover's fakes are unlocated within the pile.
struct Pile {
  std::string id;
  long long size = 0;
  long long fakes = 0;
};

// One weighing: disjoint pile-id sets per pan, equal coin totals.
struct Weighing {
  std::vector<std::string> left;
  std::vector<std::string> right;
};

struct Strategy {
  Params params;
  std::vector<Pile> piles;
  std::vector<Weighing> weighings;
};

// Balance results, one entry in {-1, 0, +1} per weighing.
// Convention (normative, tested): s = sign(fakes_left - fakes_right);
// s = +1 means the right pan is heavier (the left pan holds more fakes,
// fakes are lighter), s = -1 means the left pan is heavier.
using Syndrome = std::vector<int>;

// Maximal group of coins with identical participation across all
// weighings. column[w] is +1 when the class sits on the left pan of
// weighing w, -1 on the right, 0 when absent.
struct ObservationalClass {
  long long size = 0;
  std::vector<int> column;
  std::vector<int> pile_indices;  // declared piles merged into this class
  long long first_coin = 0;
};

struct ObservationalClassing {
  std::vector<ObservationalClass> classes;  // ordered by first coin index
  std::vector<int> pile_class;              // declared pile -> class index
};

struct ValidationIssue {
  std::string where;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;
  bool valid() const { return errors.empty(); }
};

// Checks every Strategy invariant: parameter ranges, pile sizes and fake
// assignments, sum consistency, weighing references, pan-size balance.
// Additionally warns (non-fatally) when 1 < f < t-1 fails, i.e. no
// discreet outcome is possible.
ValidationReport validate(const Strategy& strategy);

// Throws std::invalid_argument with the first validation error.
void require_valid(const Strategy& strategy);

// Splits/merges declared piles into maximal classes of coins with
// identical participation columns. Deterministic: classes ordered by
// first coin index. Valid strategy required.
ObservationalClassing refine(const Strategy& strategy);

// Syndrome produced by the prover's declared arrangement: per weighing
// sign(fakes_left - fakes_right) from the pile fake counts.
Syndrome expected_syndrome(const Strategy& strategy);

}  // namespace coinproof
