#include <doctest.h>

#include "coinproof/model.hpp"
#include "coinproof/strategies.hpp"
#include "coinproof/strategy_io.hpp"

using namespace coinproof;

TEST_CASE("validate accepts the 80-coin showcase") {
  Strategy s = gen_shapovalov();
  ValidationReport report = validate(s);
  CHECK(report.valid());
  CHECK(report.warnings.empty());  // 1 < 3 < 79: discreet-eligible
}

TEST_CASE("validate flags discreet-impossible parameters") {
  Strategy s;
  s.params = {5, 5, 4};
  s.piles = {{"P", 5, 5}};
  ValidationReport report = validate(s);
  CHECK(report.valid());
  REQUIRE(report.warnings.size() == 1);
  CHECK(report.warnings[0].message.find("discreet impossible") != std::string::npos);
}

TEST_CASE("validate rejects unequal pans as fatal") {
  Strategy s;
  s.params = {5, 1, 2};
  s.piles = {{"A", 3, 1}, {"B", 2, 0}};
  s.weighings = {{{"A"}, {"B"}}};
  ValidationReport report = validate(s);
  REQUIRE_FALSE(report.valid());
  CHECK(report.errors[0].message.find("unequal pans") != std::string::npos);
  CHECK(report.errors[0].where == "weighings[0]");
}

TEST_CASE("validate catches structural errors with locations") {
  Strategy s;
  s.params = {6, 2, 6};  // d (6) differs from f: fine; but piles below break things
  s.piles = {{"A", 3, 1}, {"A", 3, 2}};  // duplicate id, fake sum 3 != 2
  s.weighings = {{{"A", "Z"}, {"A"}}};   // unknown pile, reuse across pans
  ValidationReport report = validate(s);
  REQUIRE_FALSE(report.valid());
  bool saw_duplicate = false, saw_unknown = false, saw_reuse = false, saw_fakes = false;
  for (const auto& e : report.errors) {
    saw_duplicate |= e.message.find("duplicate pile id") != std::string::npos;
    saw_unknown |= e.message.find("unknown pile id") != std::string::npos;
    saw_reuse |= e.message.find("more than once") != std::string::npos;
    saw_fakes |= e.message.find("fakes sum") != std::string::npos;
  }
  CHECK(saw_duplicate);
  CHECK(saw_unknown);
  CHECK(saw_reuse);
  CHECK(saw_fakes);
}

TEST_CASE("refine splits the showcase into five classes") {
  ObservationalClassing classing = refine(gen_shapovalov());
  REQUIRE(classing.classes.size() == 5);
  CHECK(classing.classes[0].size == 10);
  CHECK(classing.classes[1].size == 10);
  CHECK(classing.classes[2].size == 20);
  CHECK(classing.classes[3].size == 20);
  CHECK(classing.classes[4].size == 20);
  // all participation columns distinct
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = i + 1; j < 5; ++j) CHECK(classing.classes[i].column != classing.classes[j].column);
}

TEST_CASE("refine with zero weighings yields one class") {
  Strategy s;
  s.params = {7, 2, 3};
  s.piles = {{"A", 3, 1}, {"B", 4, 1}};
  ObservationalClassing classing = refine(s);
  REQUIRE(classing.classes.size() == 1);
  CHECK(classing.classes[0].size == 7);
}

TEST_CASE("refine merges piles that never participate") {
  Strategy s;
  s.params = {10, 2, 1};
  s.piles = {{"A", 2, 1}, {"B", 2, 1}, {"X", 3, 0}, {"Y", 3, 0}};
  s.weighings = {{{"A"}, {"B"}}};
  ObservationalClassing classing = refine(s);
  REQUIRE(classing.classes.size() == 3);
  CHECK(classing.classes[2].size == 6);  // X and Y share the all-zero column
  CHECK(classing.pile_class[2] == classing.pile_class[3]);
}

TEST_CASE("refine is idempotent over its own classes") {
  Strategy s = gen_shapovalov();
  ObservationalClassing first = refine(s);

  // rewrite the strategy with one pile per class
  Strategy merged;
  merged.params = s.params;
  std::vector<std::vector<std::string>> left(s.weighings.size()), right(s.weighings.size());
  for (size_t c = 0; c < first.classes.size(); ++c) {
    const ObservationalClass& cls = first.classes[c];
    long long fakes = 0;
    for (int pile : cls.pile_indices) fakes += s.piles[pile].fakes;
    merged.piles.push_back({"K" + std::to_string(c), cls.size, fakes});
    for (size_t w = 0; w < cls.column.size(); ++w) {
      if (cls.column[w] == 1) left[w].push_back("K" + std::to_string(c));
      if (cls.column[w] == -1) right[w].push_back("K" + std::to_string(c));
    }
  }
  for (size_t w = 0; w < s.weighings.size(); ++w) merged.weighings.push_back({left[w], right[w]});

  ObservationalClassing second = refine(merged);
  REQUIRE(second.classes.size() == first.classes.size());
  for (size_t c = 0; c < first.classes.size(); ++c) {
    CHECK(second.classes[c].size == first.classes[c].size);
    CHECK(second.classes[c].column == first.classes[c].column);
  }
  CHECK(expected_syndrome(merged) == expected_syndrome(s));
}

TEST_CASE("expected_syndrome of the showcase is (0,0,-1)") {
  CHECK(expected_syndrome(gen_shapovalov()) == Syndrome{0, 0, -1});
}

TEST_CASE("expected_syndrome of equal-fake piles is all balanced") {
  CHECK(expected_syndrome(gen_divisibility(8, 2, 1, 2)) == Syndrome{0});
  CHECK(expected_syndrome(gen_divisibility(70, 7, 1, 7)) == Syndrome(6, 0));
}

TEST_CASE("sign convention: more fakes on the left means right pan heavier") {
  Strategy s;
  s.params = {4, 1, 2};
  s.piles = {{"L", 2, 1}, {"R", 2, 0}};
  s.weighings = {{{"L"}, {"R"}}};
  // 1 fake left vs 0 right: left is lighter, right tilts down, s = +1
  CHECK(expected_syndrome(s) == Syndrome{1});

  std::swap(s.piles[0].fakes, s.piles[1].fakes);
  CHECK(expected_syndrome(s) == Syndrome{-1});
}

TEST_CASE("strategy JSON round-trip") {
  Strategy s = gen_shapovalov();
  Json j = strategy_to_json(s);
  Strategy back = strategy_from_json(j);
  CHECK(back.params.t == 80);
  CHECK(back.params.f == 3);
  CHECK(back.params.d == 2);
  REQUIRE(back.piles.size() == 5);
  CHECK(back.piles[3].id == "D");
  CHECK(back.piles[3].fakes == 1);
  REQUIRE(back.weighings.size() == 3);
  CHECK(back.weighings[2].right == std::vector<std::string>{"A", "B", "E"});
  CHECK(strategy_to_json(back) == j);

  // canonical key order
  std::string dumped = j.dump();
  CHECK(dumped.find("\"t\"") < dumped.find("\"f\""));
  CHECK(dumped.find("\"f\"") < dumped.find("\"d\""));
  CHECK(dumped.find("\"d\"") < dumped.find("\"piles\""));
  CHECK(dumped.find("\"piles\"") < dumped.find("\"weighings\""));
}

TEST_CASE("strategy JSON rejects unknown and malformed keys") {
  CHECK_THROWS_AS(strategy_from_string(R"({"t":4,"f":1,"d":2,"piles":[],"weighings":[],"extra":1})"),
                  ParseError);
  CHECK_THROWS_AS(
      strategy_from_string(R"({"t":4,"f":1,"d":2,"piles":[{"id":"A","size":4,"fakes":1,"color":"red"}],"weighings":[]})"),
      ParseError);
  CHECK_THROWS_AS(strategy_from_string(R"({"t":4,"f":1,"d":2,"piles":[{"id":"A","size":4}],"weighings":[]})"),
                  ParseError);
  CHECK_THROWS_AS(strategy_from_string(R"({"t":"4","f":1,"d":2,"piles":[],"weighings":[]})"), ParseError);
  CHECK_THROWS_AS(strategy_from_string(R"({"f":1,"d":2,"piles":[],"weighings":[]})"), ParseError);
  CHECK_THROWS_AS(strategy_from_string(R"({"t":4,"f":1,"d":2,"piles":[],"weighings":[{"left":["A"]}]})"),
                  ParseError);
  CHECK_THROWS_AS(strategy_from_string("not json at all"), ParseError);
}
