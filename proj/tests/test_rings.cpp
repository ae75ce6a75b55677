#include <doctest.h>

#include <random>

#include "foxres/rings.hpp"
#include "foxres/semidirect.hpp"
#include "property_suites.hpp"

using namespace foxres;

namespace {

QPoly randomQPoly(std::mt19937_64& rng, int maxDeg) {
  std::uniform_int_distribution<int> degDist(-1, maxDeg), cDist(-5, 5), dDist(1, 3);
  int deg = degDist(rng);
  if (deg < 0) return QPoly();
  std::vector<BigQ> c(deg + 1);
  for (auto& x : c) {
    x = BigQ(cDist(rng), dDist(rng));
    x.canonicalize();  // mpq_class(n, d) does not canonicalize by itself
  }
  if (c.back() == 0) c.back() = 1;
  return QPoly(std::move(c));
}

RElem randomRElem(std::mt19937_64& rng, const CoefficientRing& R, int maxTerms, int maxAbsExp) {
  std::uniform_int_distribution<int> nDist(0, maxTerms), cDist(-4, 4), eDist(-maxAbsExp, maxAbsExp);
  RElem acc(R);
  int lo = (R.kind == RingKind::Cyclotomic || R.kind == RingKind::CyclicAlgebra ||
            R.kind == RingKind::Integers || R.kind == RingKind::Rationals)
               ? 0
               : -maxAbsExp;
  int n = nDist(rng);
  for (int k = 0; k < n; ++k) {
    Expo e(R.nvars, 0);
    for (auto& v : e) {
      int x = eDist(rng);
      v = x < lo ? -x : x;
    }
    acc = acc + RElem::monomial(R, std::move(e), BigQ(cDist(rng)));
  }
  return acc;
}

}  // namespace

TEST_CASE("qpoly arithmetic and division") {
  QPoly x = QPoly::monomial(1);
  QPoly p = x * x - QPoly(BigQ(1));
  CHECK(p.degree() == 2);
  CHECK(printQPoly(p) == "t^2 - 1");
  CHECK(p.evaluate(BigQ(3)) == 8);
  auto [q, r] = qpolyDivMod(p, x - QPoly(BigQ(1)));
  CHECK(r.isZero());
  CHECK(q == x + QPoly(BigQ(1)));

  std::mt19937_64 rng(0x9a71);
  for (int c = 0; c < 300; ++c) {
    QPoly a = randomQPoly(rng, 7), b = randomQPoly(rng, 4);
    if (b.isZero()) continue;
    auto [qq, rr] = qpolyDivMod(a, b);
    CHECK(qq * b + rr == a);
    CHECK(rr.degree() < b.degree());
  }
}

TEST_CASE("qpoly gcd and extended gcd") {
  std::mt19937_64 rng(0x3c9d);
  int nontrivial = 0;
  for (int c = 0; c < 200; ++c) {
    QPoly a = randomQPoly(rng, 5), b = randomQPoly(rng, 5), m = randomQPoly(rng, 3);
    a = a * m;
    b = b * m;  // force a common factor
    if (a.isZero() && b.isZero()) continue;
    QPoly g = qpolyGcd(a, b);
    CHECK(!g.isZero());
    if (g.degree() > 0) ++nontrivial;
    CHECK(qpolyDivMod(a, g).second.isZero());
    CHECK(qpolyDivMod(b, g).second.isZero());
    auto x = qpolyXgcd(a, b);
    CHECK(x.g == g);
    CHECK(x.s * a + x.t * b == g);
  }
  CHECK(nontrivial > 50);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(printQPoly(cyclotomicPoly(1), "x") == "x - 1");
  CHECK(printQPoly(cyclotomicPoly(2), "x") == "x + 1");
  CHECK(printQPoly(cyclotomicPoly(6), "x") == "x^2 - x + 1");
  CHECK(printQPoly(cyclotomicPoly(12), "x") == "x^4 - x^2 + 1");
  for (int n = 1; n <= 30; ++n) {
    QPoly prod(BigQ(1));
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomicPoly(d);
    CHECK(prod == QPoly::monomial(n) - QPoly(BigQ(1)));
    for (int i = 0; i <= cyclotomicPoly(n).degree(); ++i)
      CHECK(cyclotomicPoly(n).at(i).get_den() == 1);
  }
}

TEST_CASE("qfraction field identities") {
  std::mt19937_64 rng(0x55ef);
  for (int c = 0; c < 200; ++c) {
    QPoly an = randomQPoly(rng, 4), ad = randomQPoly(rng, 3);
    QPoly bn = randomQPoly(rng, 4), bd = randomQPoly(rng, 3);
    if (ad.isZero() || bd.isZero()) continue;
    QFraction a(an, ad), b(bn, bd);
    CHECK((a + (-a)).isZero());
    CHECK(a * (b + QFraction::fromPoly(QPoly(BigQ(1)))) == a * b + a);
    if (!b.isZero()) CHECK((a / b) * b == a);
    CHECK(a.den.leading() == 1);
  }
  QFraction h(QPoly::monomial(2) - QPoly(BigQ(1)), QPoly::monomial(1) - QPoly(BigQ(1)));
  CHECK(h == QFraction::fromPoly(QPoly::monomial(1) + QPoly(BigQ(1))));
}

TEST_CASE("ring names round trip") {
  std::vector<CoefficientRing> rings = {
      CoefficientRing::integers(),        CoefficientRing::rationals(),
      CoefficientRing::laurentInt(1),     CoefficientRing::laurentRat(4),
      CoefficientRing::cyclotomic(12),    CoefficientRing::cyclicAlgebra(10),
      CoefficientRing::rationalFunctions(2)};
  for (const auto& R : rings) CHECK(ringFromName(ringName(R)) == R);
  CHECK(ringName(CoefficientRing::laurentInt(3)) == "laurent_int(3)");
  CHECK(CoefficientRing::laurentInt(1).varNames == std::vector<std::string>{"t"});
  CHECK(CoefficientRing::laurentRat(2).varNames == std::vector<std::string>{"t1", "t2"});
  CHECK_THROWS(ringFromName("gaussian_integers"));
}

TEST_CASE("laurent ring arithmetic") {
  auto R = CoefficientRing::laurentRat(2);
  RElem t1 = RElem::variable(R, 1), t2 = RElem::variable(R, 2);
  auto t2inv = *ringInverse(t2);
  RElem lhs = (t1 + t2inv) * (t1 - t2inv);
  RElem rhs = t1 * t1 - t2inv * t2inv;
  CHECK(lhs == rhs);
  CHECK(printRElem(t1 * t1 * t2 + RElem(R, 3) - t2inv * BigQ(2)) == "t1^2*t2 + 3 - 2*t2^-1");

  std::mt19937_64 rng(0x77aa);
  for (int c = 0; c < 200; ++c) {
    RElem a = randomRElem(rng, R, 4, 3), b = randomRElem(rng, R, 4, 3),
          d = randomRElem(rng, R, 4, 3);
    CHECK(a * (b + d) == a * b + a * d);
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * b == b * a);
    CHECK((a - a).isZero());
  }

  CHECK_THROWS(RElem(R, 1) + RElem(CoefficientRing::rationals(), 1));
  RElem ringless;
  CHECK(ringless + t1 == t1);
  CHECK((ringless * t1).isZero());
}

TEST_CASE("cyclotomic field elements") {
  auto R = CoefficientRing::cyclotomic(3);
  RElem xi = RElem::variable(R);
  CHECK((xi * xi + xi + RElem(R, 1)).isZero());  // Phi_3(xi) = 0
  RElem u = RElem(R, 1) - xi;
  auto uinv = ringInverse(u);
  REQUIRE(uinv.has_value());
  CHECK(u * *uinv == RElem(R, 1));

  auto R5 = CoefficientRing::cyclotomic(5);
  std::mt19937_64 rng(0xcafe);
  for (int c = 0; c < 100; ++c) {
    RElem e = randomRElem(rng, R5, 4, 3);
    if (e.isZero()) continue;
    auto inv = ringInverse(e);
    REQUIRE(inv.has_value());
    CHECK(e * *inv == RElem(R5, 1));
  }
}

TEST_CASE("cyclic group algebra folds exponents") {
  auto R = CoefficientRing::cyclicAlgebra(4);
  RElem t = RElem::variable(R);
  RElem t3 = t * t * t;
  CHECK(t3 * (t * t) == t);  // t^5 = t
  RElem norm = RElem(R, 1) + t + t * t + t3;
  CHECK((norm * (RElem(R, 1) - t)).isZero());  // zero divisor
  CHECK(!ringInverse(norm).has_value());
  CHECK(*ringInverse(t * t) == t * t);  // t^2 * t^2 = t^4 = 1
  CHECK(*ringInverse(-t) == -t3);
}

TEST_CASE("ring inverses by kind") {
  auto ZZ = CoefficientRing::integers();
  CHECK(*ringInverse(RElem(ZZ, -1)) == RElem(ZZ, -1));
  CHECK(!ringInverse(RElem(ZZ, 2)).has_value());
  CHECK(!ringInverse(RElem(ZZ, 0)).has_value());

  auto QQ = CoefficientRing::rationals();
  CHECK(*ringInverse(RElem(QQ, BigQ(5, 7))) == RElem(QQ, BigQ(7, 5)));

  auto L = CoefficientRing::laurentInt(1);
  RElem t = RElem::variable(L);
  CHECK(*ringInverse(-(t * t)) == -RElem::monomial(L, {-2}));
  CHECK(!ringInverse(t * BigQ(2)).has_value());
  CHECK(!ringInverse(t + RElem(L, 1)).has_value());

  auto LR = CoefficientRing::laurentRat(2);
  RElem m = RElem::monomial(LR, {2, -1}, BigQ(2, 3));
  CHECK(*ringInverse(m) == RElem::monomial(LR, {-2, 1}, BigQ(3, 2)));
}

TEST_CASE("exact division") {
  auto LR = CoefficientRing::laurentRat(2);
  RElem t1 = RElem::variable(LR, 1), t2 = RElem::variable(LR, 2);
  auto q = tryExactDivide(t1 * t1 - t2 * t2, t1 - t2);
  REQUIRE(q.has_value());
  CHECK(*q == t1 + t2);
  CHECK(!tryExactDivide(t1 * t1 - t2 * t2, t1 + RElem(LR, 1)).has_value());
  CHECK(tryExactDivide(RElem(LR), t1).value().isZero());

  auto L = CoefficientRing::laurentInt(1);
  RElem t = RElem::variable(L);
  CHECK(*tryExactDivide(t * t - RElem(L, 1), t - RElem(L, 1)) == t + RElem(L, 1));
  CHECK(*tryExactDivide(t * BigQ(2), RElem(L, 2)) == t);
  CHECK(!tryExactDivide(t, RElem(L, 2)).has_value());  // 1/2 not integral

  // negative-exponent divisor
  auto q2 = tryExactDivide(t - RElem(L, 1), RElem::monomial(L, {-1}));
  REQUIRE(q2.has_value());
  CHECK(*q2 == t * t - t);

  auto C = CoefficientRing::cyclotomic(4);
  RElem xi = RElem::variable(C);
  CHECK(*tryExactDivide(RElem(C, 2), RElem(C, 1) + xi) == RElem(C, 1) - xi);
}

TEST_CASE("relem printing and parsing") {
  auto L = CoefficientRing::laurentInt(1);
  RElem t = RElem::variable(L);
  RElem e = parseRElem(L, "t^-1 + 2*t - 3");
  CHECK(e == *ringInverse(t) + t * BigQ(2) - RElem(L, 3));
  CHECK(parseRElem(L, printRElem(e)) == e);

  auto LR = CoefficientRing::laurentRat(2);
  RElem t1 = RElem::variable(LR, 1), t2 = RElem::variable(LR, 2);
  RElem one(LR, 1);
  CHECK(parseRElem(LR, "t1(1-t2)^2") == t1 * (one - t2) * (one - t2));
  CHECK(parseRElem(LR, "-t1 t2") == -(t1 * t2));
  CHECK(parseRElem(LR, "(1-t1)(1-t2)") == (one - t1) * (one - t2));

  auto C3 = CoefficientRing::cyclotomic(3);
  CHECK(parseRElem(C3, "xi^2 + xi + 1").isZero());

  CHECK_THROWS(parseRElem(L, "s + 1"));
  CHECK_THROWS(parseRElem(L, "t + 1)"));
  CHECK_THROWS(parseRElem(L, "(1+t)^-1"));

  std::mt19937_64 rng(0xbeef);
  for (int c = 0; c < 100; ++c) {
    RElem r = randomRElem(rng, LR, 5, 3);
    CHECK(parseRElem(LR, printRElem(r)) == r);
  }
}

TEST_CASE("characteristic polynomials") {
  auto ZZ = CoefficientRing::integers();
  LPoly p = charPoly(rIdentity(ZZ, 3), ZZ);
  LPoly expect = {RElem(ZZ, -1), RElem(ZZ, 3), RElem(ZZ, -3), RElem(ZZ, 1)};
  CHECK(lpolyEq(p, expect));
  CHECK(printLPoly(p) == "(1)*l^3 + (-3)*l^2 + (3)*l + (-1)");

  auto L = CoefficientRing::laurentInt(1);
  RElem t = RElem::variable(L);
  Mat<RElem> M = rZero(L, 2, 2);
  M.at(0, 1) = t;
  M.at(1, 0) = RElem(L, 1);
  CHECK(lpolyEq(charPoly(M, L), LPoly{-t, RElem(L), RElem(L, 1)}));  // l^2 - t

  // companion-matrix oracle
  auto QQ = CoefficientRing::rationals();
  std::mt19937_64 rng(0x1dea);
  std::uniform_int_distribution<int> nDist(1, 5), cDist(-4, 4);
  for (int c = 0; c < 60; ++c) {
    int n = nDist(rng);
    std::vector<int> a(n);
    for (auto& x : a) x = cDist(rng);
    Mat<RElem> C = rZero(QQ, n, n);
    for (int i = 0; i + 1 < n; ++i) C.at(i + 1, i) = RElem(QQ, 1);
    for (int i = 0; i < n; ++i) C.at(i, n - 1) = RElem(QQ, -a[i]);
    LPoly want(n + 1, RElem(QQ));
    want[n] = RElem(QQ, 1);
    for (int i = 0; i < n; ++i) want[i] = RElem(QQ, a[i]);
    CHECK(lpolyEq(charPoly(C, QQ), want));
  }
}

TEST_CASE("rank one specializations of group rings") {
  // all generators of the top free factor to t, the rest to 1
  auto G = pnl(5, 3);
  auto L = CoefficientRing::laurentInt(1);
  RElem t = RElem::variable(L);
  std::vector<std::vector<RElem>> vals(2);
  vals[0].assign(3, RElem(L, 1));
  vals[1].assign(4, t);
  auto nu = rankOneSpecialization(G, L, vals);

  ZG g(normalize(G, parseGWord(G, "A1,5 A2,5")));
  Mat<RElem> M = specialize_element(g, nu);
  CHECK(M.rows == 1);
  CHECK(M.at(0, 0) == t * t);
  ZG ginv(normalize(G, parseGWord(G, "A1,5^-1")));
  CHECK(specialize_element(ginv, nu).at(0, 0) == *ringInverse(t));
  ZG low(normalize(G, parseGWord(G, "A1,4 A2,4^-1 A3,4")));
  CHECK(specialize_element(low, nu).at(0, 0) == RElem(L, 1));
}

TEST_CASE("specialization is multiplicative on pure braid characters") {
  auto G = pure_braid(3);
  auto R = CoefficientRing::laurentRat(3, {"a", "b", "c"});
  std::mt19937_64 rng(0x6a55);
  std::uniform_int_distribution<int> eDist(-2, 2), sDist(0, 1);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<std::vector<RElem>> vals = {{RElem()}, {RElem(), RElem()}};
    int var = 1;
    for (auto& fv : vals)
      for (auto& v : fv) {
        v = RElem::monomial(R, [&] {
          Expo e(3, 0);
          e[var - 1] = eDist(rng);
          return e;
        }(), BigQ(sDist(rng) ? 1 : -1));
        ++var;
      }
    auto nu = rankOneSpecialization(G, R, vals);
    for (int c = 0; c < 25; ++c) {
      GroupElement x = normalize(G, props::randomGWord(rng, G, 8));
      GroupElement y = normalize(G, props::randomGWord(rng, G, 8));
      Mat<RElem> lhs = specialize_element(ZG(multiply(x, y)), nu);
      Mat<RElem> rhs = matMul(specialize_element(ZG(x), nu), specialize_element(ZG(y), nu));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("matrix-valued specialization of a free group") {
  auto G = direct_product({2});
  auto R = CoefficientRing::laurentRat(1);
  RElem t = RElem::variable(R), one(R, 1), zero(R);
  auto tinv = *ringInverse(t);
  Mat<RElem> x1(2, 2, zero), x1i(2, 2, zero), x2(2, 2, zero), x2i(2, 2, zero);
  x1.at(0, 0) = t;
  x1.at(1, 1) = one;
  x1i.at(0, 0) = tinv;
  x1i.at(1, 1) = one;
  x2.at(0, 0) = one;
  x2.at(0, 1) = one;
  x2.at(1, 1) = t;
  x2i.at(0, 0) = one;
  x2i.at(0, 1) = -tinv;
  x2i.at(1, 1) = tinv;
  auto nu = makeSpecialization(G, R, {{x1, x2}}, {{x1i, x2i}});
  CHECK(nu.m == 2);

  std::mt19937_64 rng(0x415e);
  for (int c = 0; c < 100; ++c) {
    GroupElement x = normalize(G, props::randomGWord(rng, G, 10));
    GroupElement y = normalize(G, props::randomGWord(rng, G, 10));
    CHECK(specialize_element(ZG(multiply(x, y)), nu) ==
          matMul(specialize_element(ZG(x), nu), specialize_element(ZG(y), nu)));
  }

  // rejects a non-inverse pair
  CHECK_THROWS(makeSpecialization(G, R, {{x1, x2}}, {{x1i, x1i}}));
}

TEST_CASE("specialize_matrix is a ring homomorphism on matrices") {
  auto G = pure_braid(3);
  auto R = CoefficientRing::laurentRat(3);
  std::vector<std::vector<RElem>> vals = {
      {RElem::variable(R, 1)}, {RElem::variable(R, 2), RElem::variable(R, 3)}};
  auto nu = rankOneSpecialization(G, R, vals);
  std::mt19937_64 rng(0x9d2f);
  auto randomZG = [&] {
    ZG acc = ZG::constant(&G, 0);
    std::uniform_int_distribution<int> nDist(0, 2), cDist(-2, 2);
    int n = nDist(rng);
    for (int k = 0; k < n; ++k)
      acc = acc + ZG(normalize(G, props::randomGWord(rng, G, 5)), cDist(rng));
    return acc;
  };
  for (int c = 0; c < 40; ++c) {
    Mat<ZG> A(2, 2), B(2, 2);
    for (auto* m : {&A, &B})
      for (auto& e : m->a) e = randomZG();
    CHECK(specialize_matrix(matMul(A, B), nu) ==
          matMul(specialize_matrix(A, nu), specialize_matrix(B, nu)));
    CHECK(specialize_matrix(matAdd(A, B), nu) ==
          matAdd(specialize_matrix(A, nu), specialize_matrix(B, nu)));
  }
}

TEST_CASE("cyclotomic characters") {
  auto G = pure_braid(3);
  std::vector<std::pair<int, int>> gens = {{1, 1}, {2, 1}, {2, 2}};

  auto nu = cyclotomic_character(G, 3, 1, gens);
  CHECK(nu.ring == CoefficientRing::cyclotomic(3));
  RElem xi = RElem::variable(nu.ring);
  CHECK(specialize_element(ZG(generatorElement(G, 1, 1)), nu).at(0, 0) == xi);
  ZG full(normalize(G, parseGWord(G, "A1,2 A1,3 A2,3")));
  CHECK(specialize_element(full, nu).at(0, 0) == RElem(nu.ring, 1));  // xi^3 = 1

  auto triv = cyclotomic_character(G, 3, 0, gens);
  CHECK(triv.ring == CoefficientRing::rationals());
  CHECK(specialize_element(full, triv).at(0, 0) == RElem(triv.ring, 1));

  auto nu62 = cyclotomic_character(G, 6, 2, gens);
  CHECK(nu62.ring == CoefficientRing::cyclotomic(3));
  CHECK(specialize_element(ZG(generatorElement(G, 1, 2)), nu62).at(0, 0) ==
        RElem::variable(nu62.ring));
}

TEST_CASE("polynomial and matrix json round trips") {
  auto LR = CoefficientRing::laurentRat(2);
  RElem e = RElem::monomial(LR, {2, -1}, BigQ(-3, 2)) + RElem(LR, 5);
  std::string j = polyToJson(e);
  CHECK(j.find("\"2,-1\":\"-3/2\"") != std::string::npos);
  CHECK(j.find("laurent_rat(2)") != std::string::npos);
  RElem back = polyFromJson(j);
  CHECK(back == e);
  CHECK(back.ring() == LR);

  std::mt19937_64 rng(0x7e57);
  std::vector<CoefficientRing> rings = {CoefficientRing::integers(),
                                        CoefficientRing::laurentInt(1),
                                        CoefficientRing::laurentRat(3),
                                        CoefficientRing::cyclotomic(6),
                                        CoefficientRing::cyclicAlgebra(5)};
  for (const auto& R : rings) {
    for (int c = 0; c < 40; ++c) {
      RElem r = randomRElem(rng, R, 5, 3);
      CHECK(polyFromJson(polyToJson(r)) == r);
    }
    Mat<RElem> M(3, 2, RElem(R));
    for (auto& x : M.a) x = randomRElem(rng, R, 3, 2);
    Mat<RElem> Mb = matrixFromJson(matrixToJson(M, R));
    CHECK(Mb == M);
  }

  // deterministic output: serializing twice gives identical bytes
  CHECK(polyToJson(e) == polyToJson(polyFromJson(polyToJson(e))));
}
