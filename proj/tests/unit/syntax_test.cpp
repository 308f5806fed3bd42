#include <gtest/gtest.h>

#include <string>

#include "fuzzytl/syntax.hpp"
#include "support/example1.hpp"
#include "support/generators.hpp"

namespace fuzzytl {
namespace {

std::string first_message(const ParseResult& r) { return r.diagnostics.empty() ? "" : r.diagnostics[0].message; }

TEST(Parse, TimelineDeclaration) {
  const auto r = parse_program("timeline i1 [0,10), i2 [10,25), i3 [25,30).");
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r.program.statements.size(), 1u);
  const auto& decl = std::get<TimelineDecl>(r.program.statements[0]);
  EXPECT_EQ(decl.intervals.size(), 3u);
  ASSERT_TRUE(r.program.timeline);
  EXPECT_TRUE(r.program.timeline->compatible_with(*testing::Example1{}.timeline));
}

TEST(Parse, AnnotatedFact) {
  const auto r = parse_program(
      "timeline i1 [0,10), i2 [10,25), i3 [25,30).\n"
      "losing_key(john) @ { i1: 0.5, i2: 0.7, i3: 0.5 }.");
  ASSERT_TRUE(r.ok());
  const auto& fact = std::get<FactStmt>(r.program.statements[1]);
  EXPECT_EQ(fact.clause.head.predicate, "losing_key");
  EXPECT_EQ(fact.clause.head.args, std::vector<Term>{Term::atom("john")});
  ASSERT_TRUE(fact.clause.head.annotation);
  EXPECT_EQ(*fact.clause.head.annotation, testing::Example1{}.e4);
}

TEST(Parse, ConstraintQuery) {
  const auto r = parse_program("?- before(losing_key(john), buying(john), T).");
  ASSERT_TRUE(r.ok());
  const auto& q = std::get<QueryStmt>(r.program.statements[0]);
  ASSERT_EQ(q.goals.size(), 1u);
  const auto& c = std::get<TemporalConstraint>(q.goals[0]);
  EXPECT_EQ(c.relation, Relation::Before);
  EXPECT_EQ(c.out.name, "T");
  EXPECT_EQ(c.left.pattern().predicate, "losing_key");
}

TEST(Parse, QueryForms) {
  auto q = parse_query("?- lost(X), before(lost(X), shopping(X), T).", nullptr);
  ASSERT_TRUE(q.ok());
  ASSERT_EQ(q.goals.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<TemporalAtom>(q.goals[0]));
  EXPECT_TRUE(std::holds_alternative<TemporalConstraint>(q.goals[1]));

  q = parse_query("overlaps(e4, union(e1, e3), T)", nullptr);
  ASSERT_TRUE(q.ok());
  EXPECT_EQ(std::get<TemporalConstraint>(q.goals[0]).right.kind(), EventExpr::Kind::Union);

  q = parse_query("?- before(e4, e2, 0.5).", nullptr);
  ASSERT_FALSE(q.ok());
  EXPECT_NE(q.diagnostics[0].message.find("must be a variable"), std::string::npos);
  EXPECT_EQ(q.diagnostics[0].line, 1u);
  EXPECT_EQ(q.diagnostics[0].column, 4u);
}

TEST(Parse, AnonymousVariablesAreDistinct) {
  const auto r = parse_program("p(_, _) :- q(_).");
  ASSERT_TRUE(r.ok());
  const auto& clause = std::get<RuleStmt>(r.program.statements[0]).clause;
  EXPECT_NE(clause.head.args[0], clause.head.args[1]);
}

TEST(Parse, CommentsAndNumbers) {
  const auto r = parse_program("% a comment\nval(-2.5e3, 0.1). % trailing\n");
  ASSERT_TRUE(r.ok());
  const auto& fact = std::get<FactStmt>(r.program.statements[0]);
  EXPECT_EQ(fact.clause.head.args[0].as_number(), -2500.0);
  EXPECT_EQ(fact.clause.head.args[1].as_number(), 0.1);
}

struct BadInput {
  const char* text;
  const char* message;
  std::size_t line;
  std::size_t column;
};

class Diagnostics : public ::testing::TestWithParam<BadInput> {};

TEST_P(Diagnostics, ArePositioned) {
  const BadInput& bad = GetParam();
  const auto r = parse_program(bad.text);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(first_message(r).find(bad.message), std::string::npos) << first_message(r);
  EXPECT_EQ(r.diagnostics[0].line, bad.line);
  EXPECT_EQ(r.diagnostics[0].column, bad.column);
}

INSTANTIATE_TEST_SUITE_P(
    Cases, Diagnostics,
    ::testing::Values(BadInput{"p(a) @ {i1: 1}.", "requires a preceding timeline", 1, 6},
                      BadInput{"timeline i1 [0, 10).\np @ {i2: 0.5}.", "unknown interval 'i2'", 2, 6},
                      BadInput{"timeline i1 [0, 10).\np @ {i1: 1.5}.", "outside (0, 1]", 2, 10},
                      BadInput{"timeline i1 [0, 10).\np @ {i1: 0}.", "outside (0, 1]", 2, 10},
                      BadInput{"timeline i1 [0, 10).\np @ {}.", "at least one interval", 2, 6},
                      BadInput{"timeline i1 [0, 10).\np @ {i1: 1, i1: 0.5}.", "appears twice", 2, 13},
                      BadInput{"timeline a [0, 10), b [5, 12).", "invalid timeline", 1, 1},
                      BadInput{"timeline a [0, 1).\ntimeline b [1, 2).", "duplicate timeline", 2, 1},
                      BadInput{"p(a)\nq(b).", "expected", 2, 1},
                      BadInput{"p(a) :- .", "naming a predicate", 1, 9},
                      BadInput{"before(a, b, T) :- c.", "cannot be a clause head", 1, 1},
                      BadInput{"p(#).", "unexpected character '#'", 1, 3},
                      BadInput{"p(a) \xC3\xA9.", "unexpected character '\xC3\xA9'", 1, 6},
                      BadInput{"?- p(1e999).", "out of range", 1, 6}));

TEST(Parse, RecoversAfterErrors) {
  const auto r = parse_program("p(a.\nq(b).\nr(#).\ns(c) :- .\nt.");
  EXPECT_EQ(r.diagnostics.size(), 3u);
  std::size_t last_line = 0;
  for (const auto& d : r.diagnostics) {
    EXPECT_GT(d.line, last_line);
    last_line = d.line;
  }
}

TEST(Parse, ContextTimeline) {
  testing::Example1 ex;
  const auto r = parse_program("p @ {i2: 0.5}.", ex.timeline);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.program.timeline, ex.timeline);
  EXPECT_FALSE(parse_program("timeline j [0, 1).", ex.timeline).ok());
}

TEST(Print, Statements) {
  const auto r = parse_program(
      "timeline i1 [0,10), i2 [10,25).\n"
      "lost(X) :- key(X) @ {i2: 1}, before(key(X), union(buy(X), complement(sell(X))), T).\n"
      "?- lost(john).\n");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(print_program(r.program),
            "timeline i1 [0, 10), i2 [10, 25).\n"
            "lost(X) :- key(X) @ {i2: 1}, before(key(X), union(buy(X), complement(sell(X))), T).\n"
            "?- lost(john).\n");
}

TEST(Print, Answers) {
  Answer a{{{"T", Term::number(0.5)}}, Degree(0.5), {}};
  EXPECT_EQ(format_answer(a, AnswerFormat::Machine), R"({"bindings":{"T":0.5},"tau":0.5})");
  EXPECT_EQ(format_answer(a, AnswerFormat::Text), "T = 0.5  (tau = 0.5)");
  Answer t{{}, Degree::one(), {}};
  EXPECT_EQ(format_answer(t, AnswerFormat::Text), "true (tau = 1)");
  Answer x{{{"X", Term::compound("f", {Term::atom("a")})}}, Degree(0.25), {}};
  EXPECT_EQ(format_answer(x, AnswerFormat::Machine), R"j({"bindings":{"X":"f(a)"},"tau":0.25})j");
  EXPECT_EQ(format_no_answers(AnswerFormat::Text), "false.");
  EXPECT_EQ(format_no_answers(AnswerFormat::Machine), "");
}

TEST(Print, Match) {
  testing::Example1 ex;
  const Event stored(ex.timeline, {{"i1", 0.8}, {"i2", 0.6}, {"i3", 0.8}});
  EXPECT_EQ(format_match(match_annotations(ex.e4, stored)),
            "S = {i1, i3}, D_S = 7.5, D_SA = 18, tau = 0.4166666666666667");
}

TEST(RoundTrip, GeneratedPrograms) {
  testing::Rng rng(4242);
  testing::ProgramGenerator gen(rng);
  for (int n = 0; n < 300; ++n) {
    const SourceProgram p = gen.program();
    const std::string text = print_program(p);
    const auto r = parse_program(text);
    ASSERT_TRUE(r.ok()) << text << "\n" << (r.diagnostics.empty() ? "" : to_string(r.diagnostics[0]));
    EXPECT_TRUE(r.program == p) << text;
    EXPECT_EQ(print_program(r.program), text);
  }
}

}  // namespace
}  // namespace fuzzytl
