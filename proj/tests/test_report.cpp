#include <doctest.h>

#include "fatpoint3/literal.hpp"
#include "fatpoint3/report.hpp"
#include "generators.hpp"

using namespace fatpoint3;

TEST_CASE("arrow rendering collapses component removals") {
  const auto conj = conjectured_dimension(LinearSystem{12, std::vector<int>(6, 7)});
  const auto lines = render_trace(conj.trace);
  const std::vector<std::string> expected{
      "12 7^6 ->(i) 8 7^2 3^4", "8 7^2 3^4 ->(i) 4 3^4 -1^2", "4 3^4 -1^2 ->(ii) 4 3^4",
      "4 3^4 ->(i) 0 -1^4", "0 -1^4 ->(ii) 0"};
  CHECK(lines == expected);

  std::vector<int> m{11};
  m.insert(m.end(), 8, 7);
  const auto quad = render_trace(conjectured_dimension(LinearSystem{16, m}).trace);
  CHECK(quad == std::vector<std::string>{"16 11 7^8 ->(iii) 14 10 6^8"});
}

TEST_CASE("JSON traces replay to the final system") {
  testing::Generator gen(61);
  for (int trial = 0; trial < 300; ++trial) {
    const auto l = normalize(gen.system(20, 11));
    const auto conj = conjectured_dimension(l);
    const auto json = trace_to_json(conj.trace);
    if (json.empty()) continue;
    CHECK(replay_trace(json) == conj.trace.final);
  }
}

TEST_CASE("tampered traces are rejected") {
  auto json = trace_to_json(conjectured_dimension(LinearSystem{7, std::vector<int>(6, 4)}).trace);
  json[1]["after"]["degree"] = 4;
  CHECK_THROWS(replay_trace(json));
}

TEST_CASE("grid reports") {
  std::vector<GridRow> rows{{3, 1, 2, 17, 17, false}, {4, 2, 9, 0, 1, true}};
  const auto tsv = grid_tsv(rows);
  CHECK(tsv == "d\tm\tr\tconjectured\toracle\tmatch\n3\t1\t2\t17\t17\tyes\n4\t2\t9\t0\t1\tno\n");
  const auto summary = grid_summary(GridBounds{}, OracleConfig{}, rows);
  CHECK(summary["mismatches"].size() == 1);
  CHECK(summary["seed_warnings"] == 1);
  CHECK(summary["prime"] == kDefaultPrime);
}

TEST_CASE("verdict rows") {
  CHECK(verdict_tsv(verdict_row(8, 4, 9)) == "8\t4\t9\tspecial\t0\t-1");
  CHECK(verdict_tsv(verdict_row(5, 3, 8)) == "5\t3\t8\tempty\t-1\t-1");
}
