#include <doctest.h>

#include "foxres/freegroup.hpp"
#include "foxres/matrix.hpp"
#include "property_suites.hpp"

using namespace foxres;

TEST_CASE("word reduction and arithmetic") {
  Word w = parseWord("x1 x2 x2^-1 x1 x1^-1");
  CHECK(w == parseWord("x1"));
  CHECK(reduceWord(Word{{1, 1}, {1, -1}}).empty());
  CHECK(concatWords(parseWord("x1 x2"), parseWord("x2^-1 x1")) == parseWord("x1 x1"));
  CHECK(inverseWord(parseWord("x1 x2^-1 x3")) == parseWord("x3^-1 x2 x1^-1"));
  CHECK(powWord(parseWord("x1 x2"), 0).empty());
  CHECK(powWord(parseWord("x1"), 3) == parseWord("x1 x1 x1"));
  CHECK(powWord(parseWord("x1"), -2) == parseWord("x1^-1 x1^-1"));
  CHECK(printWord(parseWord("x1 x2^-1")) == "x1 x2^-1");
  CHECK(printWord(Word{}) == "1");
  CHECK(exponentVector(parseWord("x1 x2 x1^-1 x3 x3"), 3) ==
        std::vector<long long>{0, 1, 2});
  CHECK_THROWS(parseWord("y1"));
  CHECK_THROWS(parseWord("x0"));
  CHECK_THROWS(parseWord("x3", 2));
  CHECK_THROWS(parseWord("x1^2"));
}

TEST_CASE("group ring of a free group") {
  ZF a = ZF(parseWord("x1")) - ZF(1);
  ZF b = ZF(parseWord("x1^-1")) + ZF(1);
  ZF prod = a * b;
  // (x1 - 1)(x1^-1 + 1) = x1 - x1^-1
  CHECK(prod == ZF(parseWord("x1")) - ZF(parseWord("x1^-1")));
  CHECK(prod.aug() == 0);
  CHECK((a * 0).isZero());
  CHECK(-a == ZF(1) - ZF(parseWord("x1")));

  std::mt19937_64 rng(7);
  for (int c = 0; c < 200; ++c) {
    ZF u, v, w;
    for (int t = 0; t < 3; ++t) {
      u = u + ZF(props::randomWord(rng, 3, 5), (long long)(rng() % 5) - 2);
      v = v + ZF(props::randomWord(rng, 3, 5), (long long)(rng() % 5) - 2);
      w = w + ZF(props::randomWord(rng, 3, 5), (long long)(rng() % 5) - 2);
    }
    CHECK((u * v).aug() == u.aug() * v.aug());
    CHECK((u + v) * w == u * w + v * w);
    CHECK(u * (v * w) == (u * v) * w);
  }
}

TEST_CASE("free group automorphisms") {
  CHECK_THROWS(FreeAut(2, {parseWord("x1 x2"), parseWord("x2")},
                       {parseWord("x1"), parseWord("x2")}));
  FreeAut t = FreeAut(2, {parseWord("x1 x2"), parseWord("x2")},
                      {parseWord("x1 x2^-1"), parseWord("x2")});
  CHECK(foxres::apply(t, parseWord("x1 x1")) == parseWord("x1 x2 x1 x2"));
  CHECK(applyInverse(t, foxres::apply(t, parseWord("x1 x2 x1^-1"))) ==
        parseWord("x1 x2 x1^-1"));
  CHECK(compose(t, inverse(t)).isIdentity());
  CHECK(compose(inverse(t), t).isIdentity());
  // compose(f,g) applies g first
  FreeAut s = FreeAut(2, {parseWord("x2"), parseWord("x1")},
                      {parseWord("x2"), parseWord("x1")});
  CHECK(foxres::apply(compose(t, s), parseWord("x1")) == parseWord("x2"));
  CHECK(foxres::apply(compose(s, t), parseWord("x1")) == parseWord("x2 x1"));

  ZF e = ZF(parseWord("x1")) - ZF(parseWord("x2"));
  CHECK(apply(s, e) == ZF(parseWord("x2")) - ZF(parseWord("x1")));
}

TEST_CASE("fox derivatives") {
  CHECK(fox(ZF(parseWord("x1")), 1) == ZF(1));
  CHECK(fox(ZF(parseWord("x1")), 2) == ZF());
  CHECK(fox(ZF(parseWord("x1^-1")), 1) == -ZF(parseWord("x1^-1")));
  CHECK(fox(ZF(parseWord("x1 x2 x1^-1")), 1) == ZF(1) - ZF(parseWord("x1 x2 x1^-1")));
  CHECK(fox(ZF(parseWord("x1 x2 x1^-1")), 2) == ZF(parseWord("x1")));

  // product rule d(uv) = du + u dv
  std::mt19937_64 rng(11);
  for (int c = 0; c < 200; ++c) {
    Word u = props::randomWord(rng, 3, 8), v = props::randomWord(rng, 3, 8);
    for (int j = 1; j <= 3; ++j) {
      ZF lhs = fox(ZF(concatWords(u, v)), j);
      ZF rhs = fox(ZF(u), j) + ZF(u) * fox(ZF(v), j);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("jacobians and abelianization") {
  FreeAut id3 = FreeAut::identity(3);
  Mat<ZF> j = jacobian(id3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(j.at(a, b) == (a == b ? ZF(1) : ZF()));

  FreeAut t = FreeAut(2, {parseWord("x1 x2"), parseWord("x2")},
                      {parseWord("x1 x2^-1"), parseWord("x2")});
  Mat<ZF> a = abelianized(t);
  CHECK(a.at(0, 0) == ZF(1));
  CHECK(a.at(0, 1) == ZF(1));
  CHECK(a.at(1, 0) == ZF());
  CHECK(a.at(1, 1) == ZF(1));
}

TEST_CASE("fox fundamental formula, randomized") {
  CHECK(props::foxFundamentalFormulaSuite(600) == 0);
}

TEST_CASE("jacobian chain rule, randomized") {
  CHECK(props::jacobianChainRuleSuite(520) == 0);
}
