#pragma once
// Exact coefficient rings: integers, rationals, uni/multivariate Laurent
// polynomials, cyclotomic fields Q[x]/Phi_d, finite cyclic group algebras
// Z[t]/(t^N - 1), and rational function fields (as a rank-computation tag).
// Also dense univariate rational polynomials and fractions, characteristic
// polynomials, and specialization homomorphisms from group rings to matrices.

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foxres/matrix.hpp"
#include "foxres/semidirect.hpp"

namespace foxres {

using BigInt = mpz_class;
using BigQ = mpq_class;

// ---------------------------------------------------------------- QPoly ----
// Dense univariate polynomial over Q; coefficient i belongs to x^i.
class QPoly {
 public:
  QPoly() = default;  // zero
  explicit QPoly(const BigQ& c);
  explicit QPoly(std::vector<BigQ> c);
  static QPoly monomial(int deg, const BigQ& c = BigQ(1));

  bool isZero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // zero: -1
  const std::vector<BigQ>& coeffs() const { return c_; }
  BigQ at(int i) const;
  const BigQ& leading() const;
  BigQ evaluate(const BigQ& x) const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const BigQ& c) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

 private:
  std::vector<BigQ> c_;
  void trim();
};

std::pair<QPoly, QPoly> qpolyDivMod(const QPoly& a, const QPoly& b);
QPoly qpolyMonic(const QPoly& a);
QPoly qpolyGcd(QPoly a, QPoly b);  // monic (or zero)
struct QPolyXgcd {
  QPoly g, s, t;  // g = s*a + t*b, g monic
};
QPolyXgcd qpolyXgcd(const QPoly& a, const QPoly& b);
QPoly cyclotomicPoly(int d);  // Phi_d, integer coefficients
std::string printQPoly(const QPoly& p, const std::string& var = "t");

// Reduced fraction of univariate polynomials; denominator monic.
struct QFraction {
  QPoly num, den;

  QFraction() : num(), den(BigQ(1)) {}
  QFraction(QPoly n, QPoly d);
  static QFraction fromPoly(QPoly p) { return QFraction(std::move(p), QPoly(BigQ(1))); }

  bool isZero() const { return num.isZero(); }
  QFraction operator+(const QFraction& o) const;
  QFraction operator-(const QFraction& o) const;
  QFraction operator-() const;
  QFraction operator*(const QFraction& o) const;
  QFraction operator/(const QFraction& o) const;
  bool operator==(const QFraction& o) const { return num == o.num && den == o.den; }
};

// ---------------------------------------------------------------- rings ----
using Expo = std::vector<int32_t>;

// Graded lexicographic, extended translation-invariantly to Laurent exponents.
struct GrlexLess {
  bool operator()(const Expo& a, const Expo& b) const;
};

enum class RingKind {
  Integers,
  Rationals,
  LaurentInt,
  LaurentRat,
  Cyclotomic,
  CyclicAlgebra,
  RationalFunctions,
};

struct CoefficientRing {
  RingKind kind = RingKind::Integers;
  int nvars = 0;     // variable count (1 for Cyclotomic/CyclicAlgebra)
  int modOrder = 0;  // d for Cyclotomic, N for CyclicAlgebra
  std::vector<std::string> varNames;

  static CoefficientRing integers();
  static CoefficientRing rationals();
  static CoefficientRing laurentInt(int m, std::vector<std::string> names = {});
  static CoefficientRing laurentRat(int m, std::vector<std::string> names = {});
  static CoefficientRing cyclotomic(int d);
  static CoefficientRing cyclicAlgebra(int N);
  static CoefficientRing rationalFunctions(int m, std::vector<std::string> names = {});

  bool isField() const {
    return kind == RingKind::Rationals || kind == RingKind::Cyclotomic ||
           kind == RingKind::RationalFunctions;
  }
  // names are cosmetic and excluded from equality
  friend bool operator==(const CoefficientRing& a, const CoefficientRing& b) {
    return a.kind == b.kind && a.nvars == b.nvars && a.modOrder == b.modOrder;
  }
};

std::string ringName(const CoefficientRing& R);
CoefficientRing ringFromName(const std::string& name);

// Element of a CoefficientRing: finite exponent-vector-to-coefficient map,
// kept reduced (cyclotomic: mod Phi_d; cyclic algebra: exponents mod N).
// A default-constructed RElem is a ringless zero compatible with any ring.
class RElem {
 public:
  RElem() = default;
  explicit RElem(const CoefficientRing& R);
  RElem(const CoefficientRing& R, const BigQ& c);
  static RElem monomial(const CoefficientRing& R, Expo e, const BigQ& c = BigQ(1));
  static RElem variable(const CoefficientRing& R, int i = 1);  // 1-based

  const CoefficientRing& ring() const { return R_; }
  bool hasRing() const { return ringSet_; }
  bool isZero() const { return t_.empty(); }
  bool isConstant() const;
  BigQ constantValue() const;  // requires isConstant()
  const std::map<Expo, BigQ, GrlexLess>& terms() const { return t_; }

  RElem operator+(const RElem& o) const;
  RElem operator-(const RElem& o) const;
  RElem operator-() const;
  RElem operator*(const RElem& o) const;
  RElem operator*(const BigQ& c) const;
  bool operator==(const RElem& o) const { return t_ == o.t_; }

 private:
  CoefficientRing R_;
  bool ringSet_ = false;
  std::map<Expo, BigQ, GrlexLess> t_;
  void addTerm(Expo e, const BigQ& c);
  void reduce();
  friend std::optional<RElem> ringInverse(const RElem& e);
  friend RElem relemFromTerms(const CoefficientRing& R,
                              std::map<Expo, BigQ, GrlexLess> t);
};

// Multiplicative inverse where one exists: fields invert any nonzero element,
// Laurent rings invert (unit) monomials, cyclic algebras invert monomials.
std::optional<RElem> ringInverse(const RElem& e);

// Exact division in Laurent and polynomial rings by leading-term elimination;
// nullopt when the division is not exact (step cap guards non-termination).
std::optional<RElem> tryExactDivide(const RElem& num, const RElem& den,
                                    long long stepCap = 200000);

std::string printRElem(const RElem& e);
// Parser for golden-data transcription and CLI input: integers, ring
// variables, + - * ^ ( ), implicit products by juxtaposition.
RElem parseRElem(const CoefficientRing& R, const std::string& text);

// ------------------------------------------------ lambda polynomials ----
// Dense polynomial in an extra central variable (char-poly variable).
using LPoly = std::vector<RElem>;  // [i] = coefficient of lambda^i

LPoly lpolyMul(const LPoly& a, const LPoly& b);
bool lpolyEq(const LPoly& a, const LPoly& b);
std::string printLPoly(const LPoly& p, const std::string& var = "l");

// Monic det(lambda*I - M) via the Faddeev-LeVerrier recursion (exact; only
// divisions by integers, valid over every ring here).
LPoly charPoly(const Mat<RElem>& M, const CoefficientRing& R);

// ------------------------------------------------------- specialization ----
// nu: ZG -> m x m matrices over a coefficient ring, given by invertible
// generator images; elements map to ordered products along normal forms.
struct Specialization {
  const IteratedProduct* G = nullptr;
  CoefficientRing ring;
  int m = 1;
  std::vector<std::vector<Mat<RElem>>> img, inv;  // [q-1][i-1]

  const Mat<RElem>& image(int q, int i, int sign) const {
    return sign > 0 ? img[q - 1][i - 1] : inv[q - 1][i - 1];
  }
};

// Verifies shapes and that img*inv = inv*img = I for every generator.
Specialization makeSpecialization(const IteratedProduct& G, const CoefficientRing& R,
                                  std::vector<std::vector<Mat<RElem>>> img,
                                  std::vector<std::vector<Mat<RElem>>> inv);
// 1x1 case; inverses computed with ringInverse (throws on a non-unit value).
Specialization rankOneSpecialization(const IteratedProduct& G, const CoefficientRing& R,
                                     const std::vector<std::vector<RElem>>& values);

Mat<RElem> specialize_element(const ZG& r, const Specialization& nu);
Mat<RElem> specialize_matrix(const Mat<ZG>& M, const Specialization& nu);

// Rank-one character sending the designated generators (q,i) to xi^k, a
// primitive (n/gcd(n,k))-th root of unity, and all others to 1.
Specialization cyclotomic_character(const IteratedProduct& G, int n, int k,
                                    const std::vector<std::pair<int, int>>& generators_to_t);

// Identity / zero matrices over a ring.
Mat<RElem> rIdentity(const CoefficientRing& R, int n);
Mat<RElem> rZero(const CoefficientRing& R, int rows, int cols);

// ---------------------------------------------------------------- JSON ----
// {"ring": "...", "vars": [...], "terms": {"e_1,...,e_m": "coeff", ...}}
std::string polyToJson(const RElem& e);
RElem polyFromJson(const std::string& text);
// {"ring": ..., "vars": ..., "rows": r, "cols": c, "entries": [[terms,...]]}
std::string matrixToJson(const Mat<RElem>& M, const CoefficientRing& R);
Mat<RElem> matrixFromJson(const std::string& text);

}  // namespace foxres
