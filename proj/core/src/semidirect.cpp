#include "foxres/semidirect.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace foxres {

GWord inverseGWord(const GWord& w) {
  GWord r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    r.push_back({it->i, it->q, -it->sign});
  return r;
}

IteratedProduct::IteratedProduct(std::vector<int> exponents) : d_(std::move(exponents)) {
  if (d_.empty()) throw std::invalid_argument("IteratedProduct: need at least one factor");
  for (int d : d_)
    if (d < 1) throw std::invalid_argument("IteratedProduct: exponents must be positive");
  act_.resize(d_.size());
  for (int q = 2; q <= ell(); ++q) {
    int total = 0;
    for (int p = 1; p < q; ++p) total += d_[p - 1];
    act_[q - 1].resize(total);
  }
}

int IteratedProduct::idx(int q, int p, int j) const {
  if (q < 2 || q > ell() || p < 1 || p >= q || j < 1 || j > d_[p - 1])
    throw std::out_of_range("IteratedProduct: action index out of range");
  int off = 0;
  for (int r = 1; r < p; ++r) off += d_[r - 1];
  return off + (j - 1);
}

void IteratedProduct::setAction(int q, int p, int j, FreeAut a) {
  if (a.rank() != d_[q - 1])
    throw std::invalid_argument("setAction: automorphism rank does not match factor");
  act_[q - 1][idx(q, p, j)] = std::move(a);
}

const FreeAut& IteratedProduct::action(int q, int p, int j) const {
  const auto& slot = act_[q - 1][idx(q, p, j)];
  if (!slot) throw std::logic_error("IteratedProduct: action not set");
  return *slot;
}

bool IteratedProduct::actionsComplete() const {
  for (int q = 2; q <= ell(); ++q)
    for (const auto& slot : act_[q - 1])
      if (!slot) return false;
  return true;
}

std::vector<std::string> IteratedProduct::validate() const {
  std::vector<std::string> report;
  for (int q = 2; q <= ell(); ++q)
    for (int p = 1; p < q; ++p)
      for (int j = 1; j <= d_[p - 1]; ++j)
        if (!act_[q - 1][idx(q, p, j)]) {
          std::ostringstream os;
          os << "missing action." << q << "." << p << "." << j;
          report.push_back(os.str());
        }
  if (!report.empty()) return report;
  // Compatibility: for generators x = x_{j,p}, y = x_{i,r} with p < r, the
  // words x^-1 y x and alpha_r^{j,p}(y) present the same element, so the
  // action folds on every higher factor k must agree.
  for (int r = 2; r <= ell(); ++r)
    for (int p = 1; p < r; ++p)
      for (int j = 1; j <= d_[p - 1]; ++j)
        for (int i = 1; i <= d_[r - 1]; ++i) {
          GWord lhs{{j, p, -1}, {i, r, 1}, {j, p, 1}};
          GWord rhs;
          for (const Letter& l : action(r, p, j).image(i))
            rhs.push_back({l.gen, r, l.sign});
          for (int k = r + 1; k <= ell(); ++k) {
            if (actWord(*this, lhs, k) == actWord(*this, rhs, k)) continue;
            std::ostringstream os;
            os << "compatibility fails on factor " << k << " for x_{" << j
               << "," << p << "}, x_{" << i << "," << r << "}";
            report.push_back(os.str());
          }
        }
  return report;
}

bool IteratedProduct::isIA() const {
  for (int q = 2; q <= ell(); ++q)
    for (int p = 1; p < q; ++p)
      for (int j = 1; j <= d_[p - 1]; ++j) {
        Mat<ZF> m = abelianized(action(q, p, j));
        for (int a = 0; a < m.rows; ++a)
          for (int b = 0; b < m.cols; ++b)
            if (m.at(a, b) != (a == b ? ZF(1) : ZF(0))) return false;
      }
  return true;
}

GroupElement::GroupElement(const IteratedProduct* G) : G_(G), comps_(G->ell()) {}

bool GroupElement::isIdentity() const {
  for (const Word& w : comps_)
    if (!w.empty()) return false;
  return true;
}

GWord GroupElement::flatten() const {
  GWord out;
  for (int q = G_->ell(); q >= 1; --q)
    for (const Letter& l : comps_[q - 1]) out.push_back({l.gen, q, l.sign});
  return out;
}

GWord GroupElement::flattenBelow(int q) const {
  GWord out;
  for (int p = q - 1; p >= 1; --p)
    for (const Letter& l : comps_[p - 1]) out.push_back({l.gen, p, l.sign});
  return out;
}

bool GroupElementLess::operator()(const GroupElement& a, const GroupElement& b) const {
  if (a.structure() != b.structure())
    return std::less<const IteratedProduct*>{}(a.structure(), b.structure());
  WordLess wl;
  for (int q = a.structure()->ell(); q >= 1; --q) {
    if (wl(a.comp(q), b.comp(q))) return true;
    if (wl(b.comp(q), a.comp(q))) return false;
  }
  return false;
}

FreeAut letterAut(const IteratedProduct& G, const GLetter& l, int q) {
  if (l.q >= q) return FreeAut::identity(G.exponent(q));
  const FreeAut& a = G.action(q, l.q, l.i);
  return l.sign > 0 ? a : inverse(a);
}

FreeAut actWord(const IteratedProduct& G, const GWord& w, int q) {
  FreeAut acc = FreeAut::identity(G.exponent(q));
  for (const GLetter& l : w) acc = compose(letterAut(G, l, q), acc);
  return acc;
}

FreeAut act(const IteratedProduct& G, const GroupElement& g, int q) {
  return actWord(G, g.flatten(), q);
}

Word applyActWord(const IteratedProduct& G, const GWord& u, Word v, int q) {
  for (const GLetter& l : u) {
    if (l.q >= q) continue;
    const FreeAut& a = G.action(q, l.q, l.i);
    v = l.sign > 0 ? foxres::apply(a, v) : applyInverse(a, v);
  }
  return v;
}

GroupElement identityElement(const IteratedProduct& G) { return GroupElement(&G); }

GroupElement letterElement(const IteratedProduct& G, const GLetter& l) {
  if (l.q < 1 || l.q > G.ell() || l.i < 1 || l.i > G.exponent(l.q))
    throw std::out_of_range("letterElement: generator out of range");
  GroupElement g(&G);
  g.setComp(l.q, Word{{l.i, l.sign}});
  return g;
}

GroupElement generatorElement(const IteratedProduct& G, int i, int q, int sign) {
  return letterElement(G, {i, q, sign});
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  const IteratedProduct* G = a.structure();
  if (G != b.structure()) throw std::invalid_argument("multiply: mixed structures");
  GroupElement res(G);
  GWord aflat = a.flatten();  // descending factor order
  for (int q = G->ell(); q >= 1; --q) {
    if (b.comp(q).empty()) {
      res.setComp(q, a.comp(q));
      continue;
    }
    // w_q * alpha_q(u_q^-1)(v_q) with u_q the suffix w_{q-1}...w_1 of a.
    // The inverse of the suffix is consumed letter by letter: walk the
    // suffix right to left with flipped signs.
    Word moved = b.comp(q);
    for (auto it = aflat.rbegin(); it != aflat.rend(); ++it) {
      if (it->q >= q) break;
      const FreeAut& f = G->action(q, it->q, it->i);
      moved = it->sign > 0 ? applyInverse(f, moved) : foxres::apply(f, moved);
    }
    res.setComp(q, concatWords(a.comp(q), moved));
  }
  return res;
}

GroupElement normalize(const IteratedProduct& G, const GWord& raw) {
  GroupElement res(&G);
  for (const GLetter& l : raw) res = multiply(res, letterElement(G, l));
  return res;
}

GroupElement inverse(const GroupElement& g) {
  return normalize(*g.structure(), inverseGWord(g.flatten()));
}

GroupElement projectBelow(const GroupElement& g, int q) {
  GroupElement res(g.structure());
  for (int p = 1; p < q && p <= g.structure()->ell(); ++p) res.setComp(p, g.comp(p));
  return res;
}

namespace {

// token = name(^exp)?, name = x<i>_<q> or A<r>,<s>
GLetter parseBaseToken(const IteratedProduct& G, const std::string& name) {
  if (name.size() >= 2 && name[0] == 'x') {
    auto us = name.find('_');
    if (us == std::string::npos)
      throw std::invalid_argument("group word token needs factor tag: " + name);
    int i = std::stoi(name.substr(1, us - 1));
    int q = std::stoi(name.substr(us + 1));
    if (q < 1 || q > G.ell() || i < 1 || i > G.exponent(q))
      throw std::invalid_argument("generator out of range: " + name);
    return {i, q, 1};
  }
  if (name.size() >= 2 && name[0] == 'A') {
    if (G.braidOffset < 0)
      throw std::invalid_argument("A-tokens need a pure braid structure: " + name);
    auto comma = name.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("bad pure braid token: " + name);
    int r = std::stoi(name.substr(1, comma - 1));
    int s = std::stoi(name.substr(comma + 1));
    int q = s - G.braidOffset;
    if (r < 1 || r >= s || q < 1 || q > G.ell() || r > G.exponent(q))
      throw std::invalid_argument("pure braid generator out of range: " + name);
    return {r, q, 1};
  }
  throw std::invalid_argument("bad group word token: " + name);
}

}  // namespace

GWord parseGWord(const IteratedProduct& G, const std::string& text) {
  GWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    int exp = 1;
    std::string name = tok;
    if (auto c = tok.find('^'); c != std::string::npos) {
      name = tok.substr(0, c);
      size_t pos = 0;
      exp = std::stoi(tok.substr(c + 1), &pos);
      if (pos != tok.size() - c - 1) throw std::invalid_argument("bad exponent: " + tok);
    }
    GLetter l = parseBaseToken(G, name);
    if (exp < 0) l.sign = -1;
    for (int k = 0; k < std::abs(exp); ++k) w.push_back(l);
  }
  return w;
}

std::string printGWord(const GWord& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) out << ' ';
    out << 'x' << w[k].i << '_' << w[k].q;
    if (w[k].sign < 0) out << "^-1";
  }
  return out.str();
}

std::string printGroupElement(const GroupElement& g) { return printGWord(g.flatten()); }

ZG::ZG(const GroupElement& g, long long c) : G_(g.structure()) {
  if (c != 0) terms_[g] = c;
}

ZG ZG::constant(const IteratedProduct* G, long long c) {
  return ZG(GroupElement(G), c);
}

long long ZG::aug() const {
  long long s = 0;
  for (const auto& [g, c] : terms_) s += c;
  return s;
}

void ZG::add(const GroupElement& g, long long c) {
  if (c == 0) return;
  if (!G_) G_ = g.structure();
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_[g] = c;
  } else if ((it->second += c) == 0) {
    terms_.erase(it);
  }
}

ZG ZG::operator+(const ZG& o) const {
  ZG r = *this;
  if (!r.G_) r.G_ = o.G_;
  for (const auto& [g, c] : o.terms_) r.add(g, c);
  return r;
}

ZG ZG::operator-(const ZG& o) const { return *this + (-o); }

ZG ZG::operator-() const {
  ZG r;
  r.G_ = G_;
  for (const auto& [g, c] : terms_) r.terms_[g] = -c;
  return r;
}

ZG ZG::operator*(const ZG& o) const {
  ZG r;
  r.G_ = G_ ? G_ : o.G_;
  for (const auto& [g, c] : terms_)
    for (const auto& [h, e] : o.terms_) r.add(multiply(g, h), c * e);
  return r;
}

ZG ZG::operator*(long long c) const {
  ZG r;
  r.G_ = G_;
  if (c != 0)
    for (const auto& [g, e] : terms_) r.terms_[g] = c * e;
  return r;
}

bool ZG::operator==(const ZG& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (!(it->first == jt->first) || it->second != jt->second) return false;
  return true;
}

std::string printZG(const ZG& e) {
  if (e.isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, c] : e.terms()) {
    long long a = c;
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    a = std::llabs(a);
    first = false;
    bool id = g.isIdentity();
    if (a != 1 || id) {
      out << a;
      if (!id) out << "*";
    }
    if (!id) out << "(" << printGroupElement(g) << ")";
  }
  return out.str();
}

GroupElement embedWord(const IteratedProduct& G, int q, const Word& w) {
  GroupElement g(&G);
  g.setComp(q, reduceWord(w));
  return g;
}

ZG embedZF(const IteratedProduct& G, int q, const ZF& e) {
  ZG r;
  for (const auto& [w, c] : e.terms()) r.add(embedWord(G, q, w), c);
  return r;
}

CompatAut identityCA(const IteratedProduct& G) {
  CompatAut f;
  for (int q = 1; q <= G.ell(); ++q) f.psi.push_back(FreeAut::identity(G.exponent(q)));
  return f;
}

CompatAut composeCA(const CompatAut& f, const CompatAut& g) {
  if (f.ell() != g.ell()) throw std::invalid_argument("composeCA: size mismatch");
  CompatAut r;
  for (int q = 1; q <= f.ell(); ++q) r.psi.push_back(compose(f.factor(q), g.factor(q)));
  return r;
}

CompatAut inverseCA(const CompatAut& f) {
  CompatAut r;
  for (const FreeAut& a : f.psi) r.psi.push_back(inverse(a));
  return r;
}

bool isCompatible(const IteratedProduct& G, const CompatAut& psi) {
  if (psi.ell() != G.ell()) return false;
  for (int q = 1; q <= G.ell(); ++q)
    if (psi.factor(q).rank() != G.exponent(q)) return false;
  // condition (2'): act(psi(x_{j,p}), q) = psi_q o alpha_q^{j,p} o psi_q^-1
  for (int q = 2; q <= G.ell(); ++q)
    for (int p = 1; p < q; ++p)
      for (int j = 1; j <= G.exponent(p); ++j) {
        GWord moved;
        for (const Letter& l : psi.factor(p).image(j)) moved.push_back({l.gen, p, l.sign});
        FreeAut lhs = actWord(G, moved, q);
        FreeAut rhs =
            compose(psi.factor(q), compose(G.action(q, p, j), inverse(psi.factor(q))));
        if (!(lhs == rhs)) return false;
      }
  return true;
}

GroupElement applyCA(const CompatAut& psi, const GroupElement& g) {
  GroupElement r(g.structure());
  for (int q = 1; q <= g.structure()->ell(); ++q)
    r.setComp(q, foxres::apply(psi.factor(q), g.comp(q)));
  return r;
}

ZG applyCA(const CompatAut& psi, const ZG& e) {
  ZG r;
  for (const auto& [g, c] : e.terms()) r.add(applyCA(psi, g), c);
  return r;
}

Mat<ZG> applyCA(const CompatAut& psi, const Mat<ZG>& m) {
  Mat<ZG> r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(i, j) = applyCA(psi, m.at(i, j));
  return r;
}

FreeAut artinAut(int rank, int i, int sign) {
  if (i < 1 || i + 1 > rank) throw std::out_of_range("artinAut: index out of range");
  std::vector<Word> im(rank), inv(rank);
  for (int a = 1; a <= rank; ++a) {
    im[a - 1] = Word{{a, 1}};
    inv[a - 1] = Word{{a, 1}};
  }
  im[i - 1] = Word{{i, 1}, {i + 1, 1}, {i, -1}};
  im[i] = Word{{i, 1}};
  inv[i - 1] = Word{{i + 1, 1}};
  inv[i] = Word{{i + 1, -1}, {i, 1}, {i + 1, 1}};
  if (sign < 0) std::swap(im, inv);
  return FreeAut(rank, im, inv);
}

std::vector<std::pair<int, int>> braidWordForA(int r, int s) {
  if (r < 1 || s <= r) throw std::invalid_argument("braidWordForA: need 1 <= r < s");
  std::vector<std::pair<int, int>> w;
  for (int k = s - 1; k > r; --k) w.push_back({k, 1});
  w.push_back({r, 1});
  w.push_back({r, 1});
  for (int k = r + 1; k < s; ++k) w.push_back({k, -1});
  return w;
}

FreeAut artinFold(int rank, const std::vector<std::pair<int, int>>& braid) {
  FreeAut acc = FreeAut::identity(rank);
  for (const auto& [i, sign] : braid) acc = compose(artinAut(rank, i, sign), acc);
  return acc;
}

Word pureBraidConjWord(int r, int s, int i, int j) {
  if (!(1 <= r && r < s && s < j && 1 <= i && i < j))
    throw std::invalid_argument("pureBraidConjWord: need r < s < j, i < j");
  Word xr{{r, 1}}, xs{{s, 1}}, xi{{i, 1}};
  if (i < r || s < i) return xi;
  if (i == s) return reduceWord(concatWords(concatWords(xr, xi), inverseWord(xr)));
  if (i == r) {
    Word c = concatWords(xr, xs);
    return reduceWord(concatWords(concatWords(c, xi), inverseWord(c)));
  }
  // r < i < s: conjugate by the commutator [x_r, x_s] = x_r x_s x_r^-1 x_s^-1
  Word c = concatWords(concatWords(xr, xs), concatWords(inverseWord(xr), inverseWord(xs)));
  return reduceWord(concatWords(concatWords(c, xi), inverseWord(c)));
}

IteratedProduct direct_product(std::vector<int> exponents) {
  IteratedProduct G(std::move(exponents));
  for (int q = 2; q <= G.ell(); ++q)
    for (int p = 1; p < q; ++p)
      for (int j = 1; j <= G.exponent(p); ++j)
        G.setAction(q, p, j, FreeAut::identity(G.exponent(q)));
  return G;
}

IteratedProduct pnl(int n, int ell) {
  if (ell < 1 || n <= ell) throw std::invalid_argument("pnl: need 1 <= ell < n");
  std::vector<int> d;
  for (int q = 1; q <= n - ell; ++q) d.push_back(ell + q - 1);
  IteratedProduct G(std::move(d));
  G.braidOffset = ell;
  // factor q is free on A_{1,ell+q},...,A_{ell+q-1,ell+q}; the generator
  // x_{j,p} = A_{j,ell+p} acts by pure braid conjugation
  for (int q = 2; q <= G.ell(); ++q)
    for (int p = 1; p < q; ++p)
      for (int j = 1; j <= G.exponent(p); ++j)
        G.setAction(q, p, j, artinFold(G.exponent(q), braidWordForA(j, ell + p)));
  return G;
}

IteratedProduct pure_braid(int ell) {
  if (ell < 2) throw std::invalid_argument("pure_braid: need ell >= 2");
  return pnl(ell, 1);
}

namespace {

FreeAut autFromStrings(int rank, const std::vector<std::string>& images,
                       const std::vector<std::string>& inverses) {
  std::vector<Word> im, inv;
  for (const auto& s : images) im.push_back(parseWord(s, rank));
  for (const auto& s : inverses) inv.push_back(parseWord(s, rank));
  return FreeAut(rank, std::move(im), std::move(inv));
}

}  // namespace

IteratedProduct b4_1() {
  IteratedProduct G({1, 2, 3});
  G.setAction(2, 1, 1, autFromStrings(2, {"x2", "x1^-1 x2"}, {"x1 x2^-1", "x1"}));
  G.setAction(3, 1, 1,
              autFromStrings(3, {"x1 x2 x1^-1", "x1", "x3"}, {"x2", "x2^-1 x1 x2", "x3"}));
  G.setAction(3, 2, 1,
              autFromStrings(3, {"x1 x3 x1^-1", "x1", "x3^-1 x2 x3"},
                             {"x2", "x2^-1 x1 x2 x3 x2^-1 x1^-1 x2", "x2^-1 x1 x2"}));
  G.setAction(3, 2, 2,
              autFromStrings(3, {"x1 x2 x1^-1", "x3", "x3^-1 x1 x3"},
                             {"x2 x3 x2^-1", "x2 x3^-1 x2^-1 x1 x2 x3 x2^-1", "x2"}));
  return G;
}

IteratedProduct p3_milnor() {
  IteratedProduct G({1, 4});
  G.setAction(2, 1, 1,
              autFromStrings(4, {"x1 x4 x2^-1", "x1 x4 x3^-1", "x1", "x2"},
                             {"x3", "x4", "x2^-1 x1 x4", "x3^-1 x1 x4"}));
  return G;
}

IteratedProduct pbD3() {
  IteratedProduct G({1, 2, 5});
  G.setAction(2, 1, 1, artinFold(2, braidWordForA(1, 2)));
  G.setAction(3, 1, 1,
              autFromStrings(5,
                             {"x1", "x2 x4 x5^-1 x3^-1 x2 x1", "x2 x4 x5^-1 x1",
                              "x1^-1 x2^-1 x3 x5", "x1^-1 x5 x4^-1 x2^-1 x3 x5"},
                             {"x1", "x3 x5 x4^-1 x1^-1", "x3 x5 x4^-1 x2^-1 x3 x1^-1",
                              "x1 x4 x5^-1 x3^-1 x2 x4", "x1 x3^-1 x2 x4"}));
  G.setAction(3, 2, 1,
              autFromStrings(5,
                             {"x2^-1 x5", "x2", "x3 x1 x5^-1 x2", "x2^-1 x4 x1^-1 x5",
                              "x2^-1 x5 x1^-1 x5"},
                             {"x2 x1 x5^-1 x1", "x2", "x3 x5 x1^-1 x2^-1", "x2 x4 x5^-1 x1",
                              "x2 x1"}));
  G.setAction(3, 2, 2,
              autFromStrings(5,
                             {"x3^-1 x1 x4", "x3^-1 x2 x4", "x3", "x4", "x5"},
                             {"x3 x1 x4^-1", "x3 x2 x4^-1", "x3", "x4", "x5"}));
  return G;
}

IteratedProduct b4_prime() {
  IteratedProduct G({2, 2});
  G.setAction(2, 1, 1,
              autFromStrings(2, {"x1 x2^-1 x1 x1", "x1"}, {"x2", "x2 x2 x1^-1 x2"}));
  G.setAction(2, 1, 2,
              autFromStrings(2, {"x1 x2^-1 x1 x1 x1", "x1 x2^-1 x1 x1 x1 x1"},
                             {"x1^-1 x2", "x1^-1 x2 x1^-1 x2 x1^-1 x2 x1^-1 x1^-1 x2"}));
  return G;
}

namespace {

std::string printFactorWord(const Word& w, int q) {
  if (w.empty()) return "1";
  std::ostringstream out;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) out << ' ';
    out << 'x' << w[k].gen << '_' << q;
    if (w[k].sign < 0) out << "^-1";
  }
  return out.str();
}

Word parseFactorWord(const std::string& text, int q, int rank) {
  // accepts x<i> and x<i>_<q> tokens
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    if (tok.size() < 2 || tok[0] != 'x')
      throw std::invalid_argument("bad factor word token: " + tok);
    int sign = 1;
    std::string body = tok.substr(1);
    if (auto p = body.find("^-1"); p != std::string::npos) {
      if (p + 3 != body.size()) throw std::invalid_argument("bad factor word token: " + tok);
      sign = -1;
      body = body.substr(0, p);
    }
    if (auto us = body.find('_'); us != std::string::npos) {
      if (std::stoi(body.substr(us + 1)) != q)
        throw std::invalid_argument("factor word token for wrong factor: " + tok);
      body = body.substr(0, us);
    }
    size_t pos = 0;
    int gen = std::stoi(body, &pos);
    if (pos != body.size() || gen < 1 || gen > rank)
      throw std::invalid_argument("bad factor word token: " + tok);
    w.push_back({gen, sign});
  }
  return reduceWord(w);
}

std::vector<std::string> splitList(const std::string& text) {
  // "[a, b, c]" -> {"a","b","c"}
  auto l = text.find('[');
  auto r = text.rfind(']');
  if (l == std::string::npos || r == std::string::npos || r < l)
    throw std::invalid_argument("expected bracketed list: " + text);
  std::vector<std::string> out;
  std::string inner = text.substr(l + 1, r - l - 1);
  std::string cur;
  for (char c : inner) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::string serializeStructure(const IteratedProduct& G) {
  std::ostringstream out;
  out << "exponents = [";
  for (int q = 1; q <= G.ell(); ++q) {
    if (q > 1) out << ", ";
    out << G.exponent(q);
  }
  out << "]\n";
  for (int q = 2; q <= G.ell(); ++q)
    for (int p = 1; p < q; ++p)
      for (int j = 1; j <= G.exponent(p); ++j) {
        const FreeAut& a = G.action(q, p, j);
        out << "action." << q << "." << p << "." << j << " = [";
        for (int i = 1; i <= a.rank(); ++i) {
          if (i > 1) out << ", ";
          out << printFactorWord(a.image(i), q);
        }
        out << "]\n";
        out << "action_inv." << q << "." << p << "." << j << " = [";
        for (int i = 1; i <= a.rank(); ++i) {
          if (i > 1) out << ", ";
          out << printFactorWord(a.inverseImage(i), q);
        }
        out << "]\n";
      }
  return out.str();
}

IteratedProduct parseStructure(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::vector<int>> exps;
  struct Key {
    int q, p, j;
    auto operator<=>(const Key&) const = default;
  };
  std::map<Key, std::vector<std::string>> images, invs;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = trimmed(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad structure line: " + line);
    std::string key = trimmed(line.substr(0, eq));
    std::string val = trimmed(line.substr(eq + 1));
    if (key == "exponents") {
      std::vector<int> d;
      for (const auto& s : splitList(val)) d.push_back(std::stoi(trimmed(s)));
      exps = d;
      continue;
    }
    bool inv = key.rfind("action_inv.", 0) == 0;
    bool fwd = !inv && key.rfind("action.", 0) == 0;
    if (!inv && !fwd) throw std::invalid_argument("unknown structure key: " + key);
    std::string rest = key.substr(inv ? 11 : 7);
    int q = 0, p = 0, j = 0;
    if (std::sscanf(rest.c_str(), "%d.%d.%d", &q, &p, &j) != 3)
      throw std::invalid_argument("bad action key: " + key);
    (inv ? invs : images)[{q, p, j}] = splitList(val);
  }
  if (!exps) throw std::invalid_argument("structure file is missing exponents");
  IteratedProduct G(*exps);
  for (int q = 2; q <= G.ell(); ++q)
    for (int p = 1; p < q; ++p)
      for (int j = 1; j <= G.exponent(p); ++j) {
        Key k{q, p, j};
        auto fi = images.find(k);
        auto vi = invs.find(k);
        if (fi == images.end() || vi == invs.end()) {
          std::ostringstream os;
          os << "structure file is missing action." << q << "." << p << "." << j;
          throw std::invalid_argument(os.str());
        }
        int rank = G.exponent(q);
        std::vector<Word> im, iv;
        for (const auto& s : fi->second) im.push_back(parseFactorWord(s, q, rank));
        for (const auto& s : vi->second) iv.push_back(parseFactorWord(s, q, rank));
        G.setAction(q, p, j, FreeAut(rank, std::move(im), std::move(iv)));
      }
  return G;
}

}  // namespace foxres
