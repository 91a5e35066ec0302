#include <gtest/gtest.h>

#include "bandlab/generator.hpp"
#include "bandlab/instance.hpp"
#include "bandlab/report.hpp"

using namespace bandlab;

namespace {

std::string data(const std::string& rel) { return read_text_file(std::string(BANDLAB_TEST_DATA) + "/" + rel); }

int parse_error_column(const std::string& text, int* line = nullptr) {
  try {
    parse_instance(text, "t");
  } catch (const ParseError& e) {
    if (line) *line = e.line;
    return e.column;
  }
  return -1;
}

}  // namespace

TEST(RandomCone, MatchesGoldenSpecs) {
  EXPECT_EQ(format_space_section(random_cone(1, 2, 2)), data("golden/random_cone_s1_n2_m2.txt"));
  EXPECT_EQ(format_space_section(random_cone(7, 3, 4)), data("golden/random_cone_s7_n3_m4.txt"));
  EXPECT_TRUE(is_lattice_rdp(build_space(random_cone(1, 2, 2))).yes());
  EXPECT_TRUE(is_lattice_rdp(build_space(random_cone(7, 3, 4))).no());
}

TEST(RandomCone, RejectsOutOfRangeShapes) {
  EXPECT_THROW(random_cone(1, 1, 1), InputError);
  EXPECT_THROW(random_cone(1, 7, 7), InputError);
  EXPECT_THROW(random_cone(1, 3, 2), InputError);
  EXPECT_THROW(random_cone(1, 3, 9), InputError);
  EXPECT_THROW(random_cone(1, 2, 3), InputError);
}

TEST(RandomCone, HitsEveryAdmissibleShapeDeterministically) {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (std::size_t m = n; m <= 2 * n + 2; ++m) {
      ConeSpec a = random_cone(11 * n + m, n, m);
      EXPECT_EQ(build_space(a).m(), m) << n << " " << m;
      EXPECT_EQ(a.vectors, random_cone(11 * n + m, n, m).vectors);
    }
  }
}

TEST(DenseChain, ContainsCoverImage) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    DenseChain c = random_dense_chain(seed);
    EXPECT_TRUE(c.v.contains(c.u));
    EXPECT_GT(c.v.dim(), c.u.dim());
  }
}

TEST(Instance, ParsesAllSections) {
  Instance inst = parse_instance(
      "# header comment\n"
      "bandlab-instance 1\n"
      "[space]\nkind = rays\nn = 2\nvector = 1 0 # trailing comment\nvector = 0 1\n"
      "[subspace I]\ncover_band = 1\n"
      "[subspace J]\nvector = 1 1/2\n"
      "[element x]\nvalue = -3/4 2\n"
      "[query q]\npredicate = is_band\nargs = I\n"
      "[expected]\nq = yes\nI.band = yes\n");
  EXPECT_EQ(inst.cone.vectors.size(), 2u);
  ASSERT_EQ(inst.subspaces.size(), 2u);
  EXPECT_EQ(*inst.subspaces[0].cover_band, std::vector<std::size_t>{0});
  EXPECT_EQ(inst.subspaces[1].vectors[0][1], Rat(1, 2));
  EXPECT_EQ((*inst.elements[0].value)[0], Rat(-3, 4));
  EXPECT_EQ(inst.queries[0].args, std::vector<std::string>{"I"});
  EXPECT_EQ(inst.expected.size(), 2u);
}

TEST(Instance, ReportsLineAndColumn) {
  const std::string head = "bandlab-instance 1\n[space]\nkind = rays\nn = 2\n";
  int line = 0;
  EXPECT_EQ(parse_error_column(head + "vector = 1 0.5\n", &line), 12);
  EXPECT_EQ(line, 5);
  EXPECT_EQ(parse_error_column(head + "colour = red\n", &line), 1);
  EXPECT_EQ(parse_error_column(head + "vector = 1 1 1\n"), 10);
  EXPECT_EQ(parse_error_column(head + "[bogus]\n"), 1);
  EXPECT_EQ(parse_error_column(head + "  n = 3\n"), 3);
  EXPECT_EQ(parse_error_column(head + "vector = 1 1/0\n"), 12);
  EXPECT_EQ(parse_error_column("bandlab-instance 2\n"), 18);
  EXPECT_EQ(parse_error_column("[space]\n"), 1);
  EXPECT_EQ(parse_error_column(head + "[expected]\nq = maybe\n"), 5);
  EXPECT_NE(parse_error_column(head + "[subspace]\n"), -1);
  EXPECT_NE(parse_error_column(head + "[subspace I]\n[element I]\nvalue = 1 1\n"), -1);
}

TEST(Report, AnalyzeIsDeterministicAndRejectsUnknownExpectations) {
  const std::string text =
      "bandlab-instance 1\n[space]\nkind = inequalities\nn = 3\n"
      "vector = -1 -1 1\nvector = 1 -1 1\nvector = 1 1 1\nvector = -1 1 1\n"
      "[subspace I]\nrays = 1\n[query b]\npredicate = is_band\nargs = I\n[expected]\nb = yes\n";
  RunOptions opts;
  opts.seed = 5;
  RunResult a = analyze(parse_instance(text), opts);
  RunResult b = analyze(parse_instance(text), opts);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(render(a.report, true), render(b.report, true));
  EXPECT_THROW(analyze(parse_instance(text + "nonsense = yes\n"), opts), ParseError);
  RunResult bad = analyze(parse_instance(text.substr(0, text.size() - 8) + "b = no\n"), opts);
  EXPECT_EQ(bad.exit_code, 1);
}

TEST(Report, NoVerdictsReplay) {
  const std::string text =
      "bandlab-instance 1\n[space]\nkind = rays\nn = 2\nvector = 1 0\nvector = 0 1\n"
      "[subspace L]\nvector = 1 1\n[query b]\npredicate = is_band\nargs = L\n";
  RunResult r = analyze(parse_instance(text), RunOptions{});
  EXPECT_EQ(r.report["queries"][0]["verdict"], "no");
  EXPECT_EQ(r.report["queries"][0]["recheck"], "passed");
}

TEST(TheoremSuite, NearMissesNeedADroppedHypothesis) {
  CorpusOutcome o = run_corpus_seed(3);
  for (const auto& row : o.suite.rows) {
    EXPECT_TRUE(row.violations.empty()) << row.name;
    for (const auto& nm : row.near_misses) EXPECT_NE(nm.find("[without: "), std::string::npos);
  }
}
