#include <gtest/gtest.h>

#include "qalg/expressions.hpp"
#include "support.hpp"

using namespace qalg;
using qalg::test::close;

namespace {

ExprParams agile_params(Rational a, Rational p) {
  ExprParams ps;
  ps.a = a;
  ps.p = p;
  return ps;
}

}  // namespace

TEST(Expressions, Example2ClosedForm) {
  PrecisionContext ctx(150);
  ExprParams ps;
  ps.r = 1;
  ps.period_values = {1, 1, 0};
  ps.power = 12;
  EXPECT_TRUE(close(evaluate_subject("qA-ef", ps, ctx), example2_closed_form12(ctx), 140));
}

TEST(Expressions, Example3ClosedForm) {
  PrecisionContext ctx(150);
  ExprParams ps;
  ps.r = 4;
  ps.period_values = {1, 1, 1, 1, 0};
  EXPECT_TRUE(close(evaluate_subject("qA-ef", ps, ctx), example3_closed_form(ctx), 140));
}

TEST(Expressions, K45Radical) {
  PrecisionContext ctx(150);
  EXPECT_TRUE(close(singular_modulus(make_rational(4, 5), ctx), k45_radical(ctx), 140));
}

TEST(Expressions, Eq58Radical) {
  PrecisionContext ctx(150);
  ExprParams ps = agile_params(1, 3);
  ps.x = make_rational(1, 5);
  ps.power = 6;
  EXPECT_TRUE(close(evaluate_subject("agile-star", ps, ctx), eq58_radical(ctx), 140));
  EXPECT_TRUE(close(evaluate_subject("agile-star6", [&] {
                      ExprParams q = ps;
                      q.power.reset();
                      return q;
                    }(), ctx),
                    eq58_radical(ctx), 140));
}

TEST(Expressions, SubjectsAndErrors) {
  PrecisionContext ctx(50);
  ExprParams ps;
  ps.r = 1;
  EXPECT_TRUE(close(evaluate_subject("j", ps, ctx), Real(1728L, ctx), 45));
  EXPECT_TRUE(close(evaluate_subject("alpha", ps, ctx), Real(Rational(1, 2), ctx), 45));
  EXPECT_TRUE(close(evaluate_subject("k", ps, ctx), 1 / sqrt(Real(2L, ctx)), 45));
  ps.method = "continued-fraction";
  EXPECT_TRUE(close(evaluate_subject("rrcf", ps, ctx), rrcf(make_nome(1, ctx)), 45));
  ps.method = "bogus";
  EXPECT_THROW(evaluate_subject("rrcf", ps, ctx), DomainError);
  EXPECT_THROW(evaluate_subject("nope", ps, ctx), DomainError);
  EXPECT_THROW(evaluate_subject("agile", ps, ctx), DomainError);  // missing a, p
  ExprParams bad = agile_params(1, 5);
  bad.x = 2;
  EXPECT_THROW(evaluate_subject("agile", bad, ctx), DomainError);
  ExprParams c;
  c.value = "1.4142135623730950488016887242096980785696718753769";
  EXPECT_TRUE(close(evaluate_subject("const", c, ctx), sqrt(Real(2L, ctx)), 45));
  for (const auto& s : eval_subjects()) EXPECT_FALSE(s.empty());
}

TEST(Expressions, Provenance) {
  ExprParams ps = agile_params(1, 3);
  ps.x = make_rational(1, 5);
  ps.power = 6;
  std::string p = provenance("agile-star", ps);
  EXPECT_NE(p.find("agile-star("), std::string::npos);
  EXPECT_NE(p.find("x=1/5"), std::string::npos);
  EXPECT_EQ(p.substr(p.size() - 2), "^6");
}

TEST(Expressions, RecognizeConstAndEvaluator) {
  PrecisionContext ctx(100);
  ExprParams ps;
  ps.r = 1;
  auto res = recognize_expression("k", ps, 4, 4, ctx);
  ASSERT_EQ(res.status, RecognitionStatus::recognized);
  EXPECT_EQ(res.poly->degree(), 2);
  ExprParams c;
  c.value = sqrt(Real(3L, ctx)).to_string(100);
  auto rc = recognize_expression("const", c, 4, 4, ctx);
  ASSERT_EQ(rc.status, RecognitionStatus::recognized);
  EXPECT_NE(rc.note.find("held-out"), std::string::npos);
}

TEST(Expressions, QFunctionProbe) {
  PrecisionContext ctx(150);
  auto probes = probe_Q_function(1, 4, {make_rational(1, 2), make_rational(1, 3)}, 4, ctx, 12, 6);
  ASSERT_EQ(probes.size(), 2u);
  for (const auto& pr : probes) {
    ASSERT_TRUE(pr.closed_form);
    EXPECT_EQ(pr.closed_form->verdict, Verdict::pass);
    // ([1,4]*)^12 = 4(1-x^2)/x is rational
    ASSERT_EQ(pr.result.status, RecognitionStatus::recognized);
    EXPECT_EQ(pr.result.poly->degree(), 1);
  }
  EXPECT_THROW(probe_Q_function(1, 4, {Rational(2)}, 4, ctx), DomainError);
}

TEST(Expressions, ClosedFormsQ) {
  PrecisionContext ctx(60);
  Real x(make_rational(1, 2), ctx);
  EXPECT_TRUE(close(q14_closed_form12(x), Real(6L, ctx), 60));
  EXPECT_GT(q124_closed_form48(x), 0);
}
