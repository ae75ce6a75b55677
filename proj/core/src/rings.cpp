#include "foxres/rings.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace foxres {

// ---------------------------------------------------------------- QPoly ----

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly::QPoly(const BigQ& c) {
  if (c != 0) c_.push_back(c);
}

QPoly::QPoly(std::vector<BigQ> c) : c_(std::move(c)) { trim(); }

QPoly QPoly::monomial(int deg, const BigQ& c) {
  if (deg < 0) throw std::invalid_argument("QPoly::monomial: negative degree");
  QPoly p;
  if (c != 0) {
    p.c_.assign(deg + 1, BigQ(0));
    p.c_[deg] = c;
  }
  return p;
}

BigQ QPoly::at(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return BigQ(0);
  return c_[i];
}

const BigQ& QPoly::leading() const {
  if (c_.empty()) throw std::logic_error("QPoly::leading of zero");
  return c_.back();
}

BigQ QPoly::evaluate(const BigQ& x) const {
  BigQ acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), BigQ(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (isZero() || o.isZero()) return QPoly();
  QPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, BigQ(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

QPoly QPoly::operator*(const BigQ& c) const {
  if (c == 0) return QPoly();
  QPoly r = *this;
  for (auto& a : r.c_) a *= c;
  return r;
}

std::pair<QPoly, QPoly> qpolyDivMod(const QPoly& a, const QPoly& b) {
  if (b.isZero()) throw std::invalid_argument("qpolyDivMod: division by zero");
  std::vector<BigQ> rem(a.coeffs());
  int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<BigQ> quot(a.degree() - db + 1, BigQ(0));
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    BigQ f = rem[i] / b.leading();
    quot[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.at(j);
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly qpolyMonic(const QPoly& a) {
  if (a.isZero()) return a;
  return a * (BigQ(1) / a.leading());
}

QPoly qpolyGcd(QPoly a, QPoly b) {
  while (!b.isZero()) {
    QPoly r = qpolyDivMod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return qpolyMonic(a);
}

QPolyXgcd qpolyXgcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0(BigQ(1)), s1, t0, t1(BigQ(1));
  while (!r1.isZero()) {
    auto [q, r2] = qpolyDivMod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r2);
    QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.isZero()) return {r0, s0, t0};
  BigQ scale = BigQ(1) / r0.leading();
  return {r0 * scale, s0 * scale, t0 * scale};
}

QPoly cyclotomicPoly(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomicPoly: d >= 1 required");
  std::vector<QPoly> phi(d + 1);
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    QPoly p = QPoly::monomial(e) - QPoly(BigQ(1));  // x^e - 1
    for (int f = 1; f < e; ++f) {
      if (e % f != 0) continue;
      auto [q, r] = qpolyDivMod(p, phi[f]);
      if (!r.isZero()) throw std::logic_error("cyclotomicPoly: inexact division");
      p = std::move(q);
    }
    phi[e] = std::move(p);
  }
  return phi[d];
}

std::string printQPoly(const QPoly& p, const std::string& var) {
  if (p.isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    BigQ c = p.at(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    BigQ a = abs(c);
    if (a != 1 || i == 0) out << a.get_str();
    if (i > 0) {
      if (a != 1) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

QFraction::QFraction(QPoly n, QPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.isZero()) throw std::invalid_argument("QFraction: zero denominator");
  if (num.isZero()) {
    den = QPoly(BigQ(1));
    return;
  }
  QPoly g = qpolyGcd(num, den);
  if (g.degree() > 0) {
    num = qpolyDivMod(num, g).first;
    den = qpolyDivMod(den, g).first;
  }
  BigQ lc = den.leading();
  if (lc != 1) {
    BigQ inv = BigQ(1) / lc;
    num = num * inv;
    den = den * inv;
  }
}

QFraction QFraction::operator+(const QFraction& o) const {
  return QFraction(num * o.den + o.num * den, den * o.den);
}

QFraction QFraction::operator-(const QFraction& o) const {
  return QFraction(num * o.den - o.num * den, den * o.den);
}

QFraction QFraction::operator-() const {
  QFraction r = *this;
  r.num = -r.num;
  return r;
}

QFraction QFraction::operator*(const QFraction& o) const {
  return QFraction(num * o.num, den * o.den);
}

QFraction QFraction::operator/(const QFraction& o) const {
  if (o.isZero()) throw std::invalid_argument("QFraction: division by zero");
  return QFraction(num * o.den, den * o.num);
}

// ---------------------------------------------------------------- rings ----

bool GrlexLess::operator()(const Expo& a, const Expo& b) const {
  long long sa = 0, sb = 0;
  for (int32_t v : a) sa += v;
  for (int32_t v : b) sb += v;
  if (sa != sb) return sa < sb;
  return a < b;
}

static std::vector<std::string> defaultVarNames(RingKind kind, int nvars) {
  if (kind == RingKind::Cyclotomic) return {"xi"};
  if (nvars == 1) return {"t"};
  std::vector<std::string> names;
  for (int i = 1; i <= nvars; ++i) names.push_back("t" + std::to_string(i));
  return names;
}

CoefficientRing CoefficientRing::integers() { return {RingKind::Integers, 0, 0, {}}; }
CoefficientRing CoefficientRing::rationals() { return {RingKind::Rationals, 0, 0, {}}; }

CoefficientRing CoefficientRing::laurentInt(int m, std::vector<std::string> names) {
  if (m < 1) throw std::invalid_argument("laurentInt: need at least one variable");
  if (names.empty()) names = defaultVarNames(RingKind::LaurentInt, m);
  if (static_cast<int>(names.size()) != m)
    throw std::invalid_argument("laurentInt: wrong number of variable names");
  return {RingKind::LaurentInt, m, 0, std::move(names)};
}

CoefficientRing CoefficientRing::laurentRat(int m, std::vector<std::string> names) {
  CoefficientRing r = laurentInt(m, std::move(names));
  r.kind = RingKind::LaurentRat;
  return r;
}

CoefficientRing CoefficientRing::cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic: d >= 1 required");
  return {RingKind::Cyclotomic, 1, d, {"xi"}};
}

CoefficientRing CoefficientRing::cyclicAlgebra(int N) {
  if (N < 1) throw std::invalid_argument("cyclicAlgebra: N >= 1 required");
  return {RingKind::CyclicAlgebra, 1, N, {"t"}};
}

CoefficientRing CoefficientRing::rationalFunctions(int m, std::vector<std::string> names) {
  CoefficientRing r = laurentInt(m, std::move(names));
  r.kind = RingKind::RationalFunctions;
  return r;
}

std::string ringName(const CoefficientRing& R) {
  switch (R.kind) {
    case RingKind::Integers:
      return "integers";
    case RingKind::Rationals:
      return "rationals";
    case RingKind::LaurentInt:
      return "laurent_int(" + std::to_string(R.nvars) + ")";
    case RingKind::LaurentRat:
      return "laurent_rat(" + std::to_string(R.nvars) + ")";
    case RingKind::Cyclotomic:
      return "cyclotomic(" + std::to_string(R.modOrder) + ")";
    case RingKind::CyclicAlgebra:
      return "cyclic_algebra(" + std::to_string(R.modOrder) + ")";
    case RingKind::RationalFunctions:
      return "rational_functions(" + std::to_string(R.nvars) + ")";
  }
  throw std::logic_error("ringName: unknown kind");
}

CoefficientRing ringFromName(const std::string& name) {
  if (name == "integers") return CoefficientRing::integers();
  if (name == "rationals") return CoefficientRing::rationals();
  auto param = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix + "(", 0) != 0 || name.back() != ')') return std::nullopt;
    return std::stoi(name.substr(prefix.size() + 1, name.size() - prefix.size() - 2));
  };
  if (auto m = param("laurent_int")) return CoefficientRing::laurentInt(*m);
  if (auto m = param("laurent_rat")) return CoefficientRing::laurentRat(*m);
  if (auto d = param("cyclotomic")) return CoefficientRing::cyclotomic(*d);
  if (auto n = param("cyclic_algebra")) return CoefficientRing::cyclicAlgebra(*n);
  if (auto m = param("rational_functions")) return CoefficientRing::rationalFunctions(*m);
  throw std::invalid_argument("unknown ring name: " + name);
}

RElem::RElem(const CoefficientRing& R) : R_(R), ringSet_(true) {}

RElem::RElem(const CoefficientRing& R, const BigQ& c) : R_(R), ringSet_(true) {
  if (c != 0) t_[Expo(R.nvars, 0)] = c;
}

RElem RElem::monomial(const CoefficientRing& R, Expo e, const BigQ& c) {
  if (static_cast<int>(e.size()) != R.nvars)
    throw std::invalid_argument("RElem::monomial: exponent arity mismatch");
  RElem r(R);
  if (c != 0) {
    r.t_[std::move(e)] = c;
    r.reduce();
  }
  return r;
}

RElem RElem::variable(const CoefficientRing& R, int i) {
  if (R.nvars < 1 || i < 1 || i > R.nvars)
    throw std::invalid_argument("RElem::variable: no such variable");
  Expo e(R.nvars, 0);
  e[i - 1] = 1;
  return monomial(R, std::move(e), BigQ(1));
}

bool RElem::isConstant() const {
  if (t_.empty()) return true;
  if (t_.size() > 1) return false;
  const Expo& e = t_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int32_t v) { return v == 0; });
}

BigQ RElem::constantValue() const {
  if (t_.empty()) return BigQ(0);
  if (!isConstant()) throw std::logic_error("RElem::constantValue: not constant");
  return t_.begin()->second;
}

void RElem::addTerm(Expo e, const BigQ& c) {
  if (c == 0) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(std::move(e), c);
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

void RElem::reduce() {
  if (!ringSet_) return;
  if (R_.kind == RingKind::CyclicAlgebra) {
    const int N = R_.modOrder;
    std::map<Expo, BigQ, GrlexLess> folded;
    for (auto& [e, c] : t_) {
      Expo f{static_cast<int32_t>(((e[0] % N) + N) % N)};
      auto it = folded.find(f);
      if (it == folded.end()) {
        folded.emplace(std::move(f), c);
      } else {
        it->second += c;
        if (it->second == 0) folded.erase(it);
      }
    }
    t_ = std::move(folded);
    return;
  }
  if (R_.kind == RingKind::Cyclotomic) {
    const QPoly phi = cyclotomicPoly(R_.modOrder);
    const int deg = phi.degree();
    bool needs = false;
    for (const auto& [e, c] : t_) {
      if (e[0] < 0) throw std::logic_error("cyclotomic element with negative exponent");
      if (e[0] >= deg) needs = true;
    }
    if (!needs) return;
    std::vector<BigQ> dense;
    for (const auto& [e, c] : t_) {
      if (e[0] >= static_cast<int>(dense.size())) dense.resize(e[0] + 1, BigQ(0));
      dense[e[0]] += c;
    }
    QPoly rem = qpolyDivMod(QPoly(std::move(dense)), phi).second;
    t_.clear();
    for (int i = 0; i <= rem.degree(); ++i)
      if (rem.at(i) != 0) t_[Expo{static_cast<int32_t>(i)}] = rem.at(i);
  }
}

static const CoefficientRing& pickRing(const RElem& a, const RElem& b) {
  if (a.hasRing()) {
    if (b.hasRing() && !(a.ring() == b.ring()))
      throw std::invalid_argument("RElem: mixed rings");
    return a.ring();
  }
  return b.ring();
}

RElem relemFromTerms(const CoefficientRing& R, std::map<Expo, BigQ, GrlexLess> t) {
  RElem r(R);
  r.t_ = std::move(t);
  r.reduce();
  return r;
}

RElem RElem::operator+(const RElem& o) const {
  if (!ringSet_ && !o.ringSet_) return RElem();
  RElem r(pickRing(*this, o));
  r.t_ = t_;
  for (const auto& [e, c] : o.t_) r.addTerm(e, c);
  return r;  // operands are reduced; sums need no further reduction
}

RElem RElem::operator-(const RElem& o) const { return *this + (-o); }

RElem RElem::operator-() const {
  RElem r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

RElem RElem::operator*(const RElem& o) const {
  if (!ringSet_ && !o.ringSet_) return RElem();
  RElem r(pickRing(*this, o));
  for (const auto& [ea, ca] : t_)
    for (const auto& [eb, cb] : o.t_) {
      Expo e(ea);
      for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      r.addTerm(std::move(e), ca * cb);
    }
  r.reduce();
  return r;
}

RElem RElem::operator*(const BigQ& c) const {
  RElem r(R_);
  r.ringSet_ = ringSet_;
  if (c != 0)
    for (const auto& [e, a] : t_) r.t_[e] = a * c;
  return r;
}

std::optional<RElem> ringInverse(const RElem& e) {
  if (e.isZero() || !e.hasRing()) return std::nullopt;
  const CoefficientRing& R = e.ring();
  switch (R.kind) {
    case RingKind::Integers: {
      if (!e.isConstant()) return std::nullopt;
      BigQ c = e.constantValue();
      if (c != 1 && c != -1) return std::nullopt;
      return e;
    }
    case RingKind::Rationals: {
      if (!e.isConstant()) return std::nullopt;
      return RElem(R, BigQ(1) / e.constantValue());
    }
    case RingKind::LaurentInt:
    case RingKind::LaurentRat:
    case RingKind::RationalFunctions: {
      if (e.terms().size() != 1) return std::nullopt;
      const auto& [expo, c] = *e.terms().begin();
      if (R.kind == RingKind::LaurentInt && c != 1 && c != -1) return std::nullopt;
      Expo inv(expo);
      for (auto& v : inv) v = -v;
      return RElem::monomial(R, std::move(inv), BigQ(1) / c);
    }
    case RingKind::CyclicAlgebra: {
      if (e.terms().size() != 1) return std::nullopt;
      const auto& [expo, c] = *e.terms().begin();
      if (c != 1 && c != -1) return std::nullopt;
      return RElem::monomial(R, Expo{static_cast<int32_t>((R.modOrder - expo[0]) % R.modOrder)}, c);
    }
    case RingKind::Cyclotomic: {
      std::vector<BigQ> dense;
      for (const auto& [expo, c] : e.terms()) {
        if (expo[0] >= static_cast<int>(dense.size())) dense.resize(expo[0] + 1, BigQ(0));
        dense[expo[0]] = c;
      }
      QPolyXgcd x = qpolyXgcd(QPoly(std::move(dense)), cyclotomicPoly(R.modOrder));
      if (x.g.degree() != 0) return std::nullopt;  // cannot happen for reduced nonzero input
      std::map<Expo, BigQ, GrlexLess> t;
      for (int i = 0; i <= x.s.degree(); ++i)
        if (x.s.at(i) != 0) t[Expo{static_cast<int32_t>(i)}] = x.s.at(i);
      return relemFromTerms(R, std::move(t));
    }
  }
  return std::nullopt;
}

std::optional<RElem> tryExactDivide(const RElem& num, const RElem& den, long long stepCap) {
  if (den.isZero()) return std::nullopt;
  if (num.isZero()) return num;
  const CoefficientRing& R = den.ring();
  if (R.kind == RingKind::Cyclotomic || R.kind == RingKind::CyclicAlgebra ||
      R.kind == RingKind::Rationals || R.kind == RingKind::Integers) {
    auto inv = ringInverse(den);
    if (!inv) return std::nullopt;
    return num * *inv;
  }
  // leading-term elimination; exactness makes each step peel one quotient term
  RElem rem = num;
  std::map<Expo, BigQ, GrlexLess> quot;
  const auto& [de, dc] = *den.terms().rbegin();
  for (long long step = 0; !rem.isZero(); ++step) {
    if (step >= stepCap) return std::nullopt;
    const auto& [re, rc] = *rem.terms().rbegin();
    Expo qe(re);
    for (size_t k = 0; k < qe.size(); ++k) qe[k] -= de[k];
    BigQ qc = rc / dc;
    quot[qe] = qc;
    rem = rem - RElem::monomial(R, std::move(qe), qc) * den;
  }
  RElem q = relemFromTerms(R, std::move(quot));
  if (R.kind == RingKind::LaurentInt) {
    for (const auto& [e, c] : q.terms())
      if (c.get_den() != 1) return std::nullopt;
  }
  return q;
}

std::string printRElem(const RElem& e) {
  if (e.isZero()) return "0";
  const auto& names = e.ring().varNames;
  std::ostringstream out;
  bool first = true;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const auto& [expo, c] = *it;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    BigQ a = abs(c);
    bool constant = std::all_of(expo.begin(), expo.end(), [](int32_t v) { return v == 0; });
    if (a != 1 || constant) out << a.get_str();
    bool needStar = a != 1;
    for (size_t k = 0; k < expo.size(); ++k) {
      if (expo[k] == 0) continue;
      if (needStar) out << "*";
      out << (k < names.size() ? names[k] : "v" + std::to_string(k + 1));
      if (expo[k] != 1) out << "^" << expo[k];
      needStar = true;
    }
  }
  return out.str();
}

namespace {

struct RElemParser {
  const CoefficientRing& R;
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peekIs(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  bool startsPrimary() {
    skip();
    if (pos >= s.size()) return false;
    char c = s[pos];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  RElem parseExpr() {
    skip();
    bool neg = false;
    if (peekIs('-')) {
      ++pos;
      neg = true;
    } else if (peekIs('+')) {
      ++pos;
    }
    RElem acc = parseTerm();
    if (neg) acc = -acc;
    while (true) {
      skip();
      if (peekIs('+')) {
        ++pos;
        acc = acc + parseTerm();
      } else if (peekIs('-')) {
        ++pos;
        acc = acc - parseTerm();
      } else {
        break;
      }
    }
    return acc;
  }

  RElem parseTerm() {
    RElem acc = parsePow();
    while (true) {
      skip();
      if (peekIs('*')) {
        ++pos;
        acc = acc * parsePow();
      } else if (startsPrimary()) {
        acc = acc * parsePow();  // juxtaposition
      } else {
        break;
      }
    }
    return acc;
  }

  RElem parsePow() {
    RElem base = parsePrimary();
    skip();
    if (!peekIs('^')) return base;
    ++pos;
    skip();
    bool neg = false;
    if (peekIs('-')) {
      ++pos;
      neg = true;
    }
    int e = parseInt();
    if (neg) {
      auto inv = ringInverse(base);
      if (!inv) throw std::invalid_argument("parseRElem: negative power of a non-unit");
      base = *inv;
    }
    RElem acc(R, BigQ(1));
    for (int k = 0; k < e; ++k) acc = acc * base;
    return acc;
  }

  int parseInt() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("parseRElem: expected integer at " + s.substr(start));
    return std::stoi(s.substr(start, pos - start));
  }

  RElem parsePrimary() {
    skip();
    if (pos >= s.size()) throw std::invalid_argument("parseRElem: unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      RElem inner = parseExpr();
      if (!peekIs(')')) throw std::invalid_argument("parseRElem: missing )");
      ++pos;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RElem(R, BigQ(parseInt()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      for (size_t k = 0; k < R.varNames.size(); ++k)
        if (R.varNames[k] == name) return RElem::variable(R, static_cast<int>(k) + 1);
      throw std::invalid_argument("parseRElem: unknown variable " + name);
    }
    throw std::invalid_argument(std::string("parseRElem: unexpected character ") + c);
  }
};

}  // namespace

RElem parseRElem(const CoefficientRing& R, const std::string& text) {
  RElemParser p{R, text};
  RElem r = p.parseExpr();
  p.skip();
  if (p.pos != text.size())
    throw std::invalid_argument("parseRElem: trailing input: " + text.substr(p.pos));
  return r;
}

// ------------------------------------------------ lambda polynomials ----

LPoly lpolyMul(const LPoly& a, const LPoly& b) {
  if (a.empty() || b.empty()) return {};
  LPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].isZero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  while (!r.empty() && r.back().isZero()) r.pop_back();
  return r;
}

bool lpolyEq(const LPoly& a, const LPoly& b) {
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    RElem x = i < a.size() ? a[i] : RElem();
    RElem y = i < b.size() ? b[i] : RElem();
    if (!(x == y)) return false;
  }
  return true;
}

std::string printLPoly(const LPoly& p, const std::string& var) {
  std::ostringstream out;
  bool first = true;
  for (size_t i = p.size(); i-- > 0;) {
    if (p[i].isZero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << printRElem(p[i]) << ")";
    if (i > 0) {
      out << "*" << var;
      if (i > 1) out << "^" << i;
    }
  }
  return first ? "0" : out.str();
}

static Mat<RElem> matScale(const Mat<RElem>& m, const RElem& c) {
  Mat<RElem> r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = m.a[i] * c;
  return r;
}

LPoly charPoly(const Mat<RElem>& M, const CoefficientRing& R) {
  if (M.rows != M.cols) throw std::invalid_argument("charPoly: matrix not square");
  const int n = M.rows;
  LPoly c(n + 1, RElem(R));
  c[n] = RElem(R, BigQ(1));
  if (n == 0) return c;
  Mat<RElem> Mk = M;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) Mk = matMul(M, matAdd(Mk, matScale(rIdentity(R, n), c[n - k + 1])));
    RElem tr(R);
    for (int i = 0; i < n; ++i) tr = tr + Mk.at(i, i);
    c[n - k] = -(tr * BigQ(1, k));
  }
  return c;
}

// ------------------------------------------------------- specialization ----

Mat<RElem> rIdentity(const CoefficientRing& R, int n) {
  Mat<RElem> m(n, n, RElem(R));
  for (int i = 0; i < n; ++i) m.at(i, i) = RElem(R, BigQ(1));
  return m;
}

Mat<RElem> rZero(const CoefficientRing& R, int rows, int cols) {
  return Mat<RElem>(rows, cols, RElem(R));
}

Specialization makeSpecialization(const IteratedProduct& G, const CoefficientRing& R,
                                  std::vector<std::vector<Mat<RElem>>> img,
                                  std::vector<std::vector<Mat<RElem>>> inv) {
  if (static_cast<int>(img.size()) != G.ell() || static_cast<int>(inv.size()) != G.ell())
    throw std::invalid_argument("makeSpecialization: one image list per factor required");
  int m = -1;
  for (int q = 1; q <= G.ell(); ++q) {
    if (static_cast<int>(img[q - 1].size()) != G.exponent(q) ||
        static_cast<int>(inv[q - 1].size()) != G.exponent(q))
      throw std::invalid_argument("makeSpecialization: one image per generator required");
    for (int i = 1; i <= G.exponent(q); ++i) {
      const Mat<RElem>& a = img[q - 1][i - 1];
      const Mat<RElem>& b = inv[q - 1][i - 1];
      if (m < 0) m = a.rows;
      if (a.rows != m || a.cols != m || b.rows != m || b.cols != m)
        throw std::invalid_argument("makeSpecialization: image blocks must be square of one size");
      Mat<RElem> id = rIdentity(R, m);
      if (!(matMul(a, b) == id) || !(matMul(b, a) == id))
        throw std::invalid_argument("makeSpecialization: generator image is not invertible");
    }
  }
  Specialization nu;
  nu.G = &G;
  nu.ring = R;
  nu.m = m < 0 ? 1 : m;
  nu.img = std::move(img);
  nu.inv = std::move(inv);
  return nu;
}

Specialization rankOneSpecialization(const IteratedProduct& G, const CoefficientRing& R,
                                     const std::vector<std::vector<RElem>>& values) {
  if (static_cast<int>(values.size()) != G.ell())
    throw std::invalid_argument("rankOneSpecialization: one value list per factor required");
  std::vector<std::vector<Mat<RElem>>> img(G.ell()), inv(G.ell());
  for (int q = 1; q <= G.ell(); ++q) {
    if (static_cast<int>(values[q - 1].size()) != G.exponent(q))
      throw std::invalid_argument("rankOneSpecialization: one value per generator required");
    for (int i = 1; i <= G.exponent(q); ++i) {
      const RElem& v = values[q - 1][i - 1];
      auto vinv = ringInverse(v);
      if (!vinv) throw std::invalid_argument("rankOneSpecialization: value is not a unit");
      Mat<RElem> a(1, 1, v), b(1, 1, *vinv);
      img[q - 1].push_back(std::move(a));
      inv[q - 1].push_back(std::move(b));
    }
  }
  return makeSpecialization(G, R, std::move(img), std::move(inv));
}

Mat<RElem> specialize_element(const ZG& r, const Specialization& nu) {
  Mat<RElem> acc = rZero(nu.ring, nu.m, nu.m);
  for (const auto& [g, c] : r.terms()) {
    Mat<RElem> p = rIdentity(nu.ring, nu.m);
    for (const GLetter& l : g.flatten()) p = matMul(p, nu.image(l.q, l.i, l.sign));
    acc = matAdd(acc, matScale(p, RElem(nu.ring, BigQ(static_cast<long>(c)))));
  }
  return acc;
}

Mat<RElem> specialize_matrix(const Mat<ZG>& M, const Specialization& nu) {
  Mat<RElem> r = rZero(nu.ring, M.rows * nu.m, M.cols * nu.m);
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) {
      if (M.at(i, j).isZero()) continue;
      Mat<RElem> block = specialize_element(M.at(i, j), nu);
      for (int a = 0; a < nu.m; ++a)
        for (int b = 0; b < nu.m; ++b) r.at(i * nu.m + a, j * nu.m + b) = block.at(a, b);
    }
  return r;
}

Specialization cyclotomic_character(const IteratedProduct& G, int n, int k,
                                    const std::vector<std::pair<int, int>>& generators_to_t) {
  if (n < 1 || k < 0 || k >= n)
    throw std::invalid_argument("cyclotomic_character: need 0 <= k < n");
  int g = std::gcd(n, k);
  int d = k == 0 ? 1 : n / g;
  CoefficientRing R = d == 1 ? CoefficientRing::rationals() : CoefficientRing::cyclotomic(d);
  RElem xiK(R, BigQ(1));
  if (d > 1) {
    RElem xi = RElem::variable(R);
    int e = (k / g) % d;
    for (int s = 0; s < e; ++s) xiK = xiK * xi;
  }
  std::vector<std::vector<RElem>> values(G.ell());
  for (int q = 1; q <= G.ell(); ++q)
    values[q - 1].assign(G.exponent(q), RElem(R, BigQ(1)));
  for (const auto& [q, i] : generators_to_t) values[q - 1][i - 1] = xiK;
  return rankOneSpecialization(G, R, values);
}

// ---------------------------------------------------------------- JSON ----

using nlohmann::json;

static std::string expoKey(const Expo& e) {
  std::string key;
  for (size_t k = 0; k < e.size(); ++k) {
    if (k) key += ",";
    key += std::to_string(e[k]);
  }
  return key;
}

static Expo expoFromKey(const std::string& key, int nvars) {
  Expo e;
  if (!key.empty()) {
    std::istringstream in(key);
    std::string part;
    while (std::getline(in, part, ',')) e.push_back(std::stoi(part));
  }
  if (static_cast<int>(e.size()) != nvars)
    throw std::invalid_argument("polynomial key arity mismatch: " + key);
  return e;
}

static json termsToJson(const RElem& e) {
  json terms = json::object();
  for (const auto& [expo, c] : e.terms()) terms[expoKey(expo)] = c.get_str();
  return terms;
}

static RElem termsFromJson(const CoefficientRing& R, const json& terms) {
  std::map<Expo, BigQ, GrlexLess> t;
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    std::string raw = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
    BigQ c(raw);
    c.canonicalize();
    if (c != 0) t[expoFromKey(it.key(), R.nvars)] = c;
  }
  return relemFromTerms(R, std::move(t));
}

static CoefficientRing ringFromJson(const json& j) {
  CoefficientRing R = ringFromName(j.at("ring").get<std::string>());
  if (j.contains("vars")) {
    std::vector<std::string> names = j.at("vars").get<std::vector<std::string>>();
    if (static_cast<int>(names.size()) == R.nvars) R.varNames = std::move(names);
  }
  return R;
}

std::string polyToJson(const RElem& e) {
  json j;
  j["ring"] = ringName(e.ring());
  j["vars"] = e.ring().varNames;
  j["terms"] = termsToJson(e);
  return j.dump();
}

RElem polyFromJson(const std::string& text) {
  json j = json::parse(text);
  CoefficientRing R = ringFromJson(j);
  return termsFromJson(R, j.at("terms"));
}

std::string matrixToJson(const Mat<RElem>& M, const CoefficientRing& R) {
  json j;
  j["ring"] = ringName(R);
  j["vars"] = R.varNames;
  j["rows"] = M.rows;
  j["cols"] = M.cols;
  json rows = json::array();
  for (int i = 0; i < M.rows; ++i) {
    json row = json::array();
    for (int jx = 0; jx < M.cols; ++jx) row.push_back(termsToJson(M.at(i, jx)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump();
}

Mat<RElem> matrixFromJson(const std::string& text) {
  json j = json::parse(text);
  CoefficientRing R = ringFromJson(j);
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  Mat<RElem> M(rows, cols, RElem(R));
  const json& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows)
    throw std::invalid_argument("matrixFromJson: row count mismatch");
  for (int i = 0; i < rows; ++i) {
    const json& row = entries[i];
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("matrixFromJson: column count mismatch");
    for (int jx = 0; jx < cols; ++jx) M.at(i, jx) = termsFromJson(R, row[jx]);
  }
  return M;
}

}  // namespace foxres
