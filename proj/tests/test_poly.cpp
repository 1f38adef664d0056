#include "loopmult/poly.hpp"

#include <gtest/gtest.h>

#include "loopmult/translate_span.hpp"
#include "test_util.hpp"

using namespace loopmult;
using testutil::Rng;

namespace {

Poly P(const std::string& s) { return Poly::parse(s); }

// Independent route to the translate span: the span of all translates of a
// polynomial equals the span of its partial derivatives (Taylor expansion in
// the offset), so we rank the derivative coefficient vectors directly.
int derivative_span_dim(const Poly& p) {
  if (p.is_zero()) return 0;
  std::vector<Poly> closed{p};
  for (std::size_t i = 0; i < closed.size(); ++i)
    for (auto& v : closed[i].vars()) {
      Poly d = closed[i].diff(v);
      if (d.is_zero()) continue;
      bool seen = false;
      for (auto& q : closed)
        if (q == d) seen = true;
      if (!seen) closed.push_back(d);
    }
  std::map<Exps, int, GradedLexLess> col;
  for (auto& q : closed)
    for (auto& [e, c] : q.terms())
      if (!col.count(e)) {
        int next = static_cast<int>(col.size());
        col[e] = next;
      }
  RatMat rows;
  for (auto& q : closed) {
    RatVec row(col.size(), 0);
    for (auto& [e, c] : q.terms()) row[col.at(e)] = c;
    rows.push_back(std::move(row));
  }
  return rank(std::move(rows));
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/4"), rat(3, 4));
  EXPECT_EQ(parse_rational("-6/4"), rat(-3, 2));
  EXPECT_EQ(parse_rational(" 7 "), rat(7));
  EXPECT_EQ(to_string(rat(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(rat(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Poly, EvalExamples) {
  EXPECT_EQ(P("x^2").eval({rat(3)}), rat(9));
  EXPECT_EQ(Poly().eval({}), rat(0));
  EXPECT_EQ(P("x^2 + z^2").eval({rat(1, 2), rat(1, 3)}), rat(13, 36));
  EXPECT_THROW(P("x^2").eval({rat(1), rat(2)}), std::invalid_argument);
}

TEST(Poly, ShiftExamples) {
  EXPECT_EQ(P("x^2").shift({rat(1)}), P("x^2 + 2*x + 1"));
  EXPECT_EQ(P("x^2 + z^2").shift({rat(0), rat(0)}), P("x^2 + z^2"));
  // Oracle for the frozen expansion: eval(shift(p, a), t) = eval(p, t + a).
  Poly cube = P("x^3");
  Poly shifted = cube.shift({rat(-2)});
  for (int t = 0; t <= 4; ++t)
    EXPECT_EQ(shifted.eval({rat(t)}), cube.eval({rat(t - 2)}));
  EXPECT_EQ(shifted, P("x^3 - 6*x^2 + 12*x - 8"));
}

TEST(Poly, DiffExamples) {
  EXPECT_EQ(P("x^2*y").diff("x"), P("2*x*y"));
  EXPECT_EQ(P("5").diff("x"), Poly());
  EXPECT_EQ(P("x^2 + z^2").diff("z"), P("2*z"));
  EXPECT_EQ(P("x^2").diff("y"), Poly());
  EXPECT_THROW(P("x^2").diff("w"), std::invalid_argument);
}

TEST(Poly, RingAxiomsRandom) {
  Rng rng(1);
  std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 100; ++i) {
    Poly p = rng.poly(vars, 3, 4), q = rng.poly(vars, 3, 4), r = rng.poly(vars, 3, 4);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ(p * (q + r), p * q + p * r);
  }
}

TEST(Poly, ShiftComposition) {
  Rng rng(2);
  std::vector<std::string> vars{"x", "z"};
  for (int i = 0; i < 30; ++i) {
    Poly p = rng.poly(vars, 4, 4);
    std::vector<Rat> a = rng.point(2), b = rng.point(2);
    std::vector<Rat> ab{a[0] + b[0], a[1] + b[1]};
    EXPECT_EQ(p.shift(a).shift(b), p.shift(ab));
  }
}

TEST(Poly, EvalShiftCompatibility) {
  Rng rng(3);
  std::vector<std::string> vars{"x", "y"};
  Poly p = rng.poly(vars, 4, 5);
  std::vector<Rat> a = rng.point(2);
  for (int i = 0; i < 20; ++i) {
    std::vector<Rat> pt = rng.point(2);
    std::vector<Rat> pt_a{pt[0] + a[0], pt[1] + a[1]};
    EXPECT_EQ(p.shift(a).eval(pt), p.eval(pt_a));
  }
}

TEST(Poly, ParserRoundTrip) {
  EXPECT_EQ(P("3/2*x^2*z - z").to_string(), "3/2*x^2*z - z");
  EXPECT_EQ(P("-x + 1").to_string(), "-x + 1");
  EXPECT_EQ(Poly().to_string(), "0");
  EXPECT_EQ(P("0").to_string(), "0");
  EXPECT_EQ(P("y^2"), Poly::variable("y") * Poly::variable("y"));
  Rng rng(4);
  std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 50; ++i) {
    Poly p = rng.poly(vars, 4, 5);
    EXPECT_EQ(Poly::parse(p.to_string()), p);
    EXPECT_EQ(Poly::parse(p.to_string()).to_string(), p.to_string());
  }
  EXPECT_THROW(P("x +"), std::invalid_argument);
  EXPECT_THROW(P("2 ** x"), std::invalid_argument);
}

TEST(Poly, CanonicalVariableOrder) {
  // x, y, z then k, l, m, a, b, c; mixing orders in input must not matter.
  Poly p = Poly::variable("k") * Poly::variable("x");
  EXPECT_EQ(p.vars(), (std::vector<std::string>{"x", "k"}));
  EXPECT_EQ(p.to_string(), "x*k");
  Poly q = Poly::variable("a") + Poly::variable("z");
  EXPECT_EQ(q.vars(), (std::vector<std::string>{"z", "a"}));
}

TEST(TranslateSpan, PowersOfX) {
  for (int n = 0; n <= 6; ++n) {
    Poly p = Poly::variable("x").pow(n);
    EXPECT_EQ(translate_span_dim(p), n + 1) << "x^" << n;
  }
}

TEST(TranslateSpan, Examples) {
  EXPECT_EQ(translate_span_dim(P("x^2 + z^2")), 4);
  EXPECT_EQ(translate_span_dim(Poly()), 0);  // span{0} is trivial
  EXPECT_EQ(translate_span_dim(P("1")), 1);
  EXPECT_EQ(translate_span_dim(P("7/3")), 1);
}

TEST(TranslateSpan, AgreesWithDerivativeSpan) {
  Rng rng(5);
  std::vector<std::string> vars{"x", "z"};
  for (int i = 0; i < 15; ++i) {
    Poly p = rng.poly(vars, 3, 3);
    EXPECT_EQ(translate_span_dim(p), derivative_span_dim(p)) << p.to_string();
  }
  EXPECT_EQ(translate_span_dim(P("x*z")), derivative_span_dim(P("x*z")));
}
