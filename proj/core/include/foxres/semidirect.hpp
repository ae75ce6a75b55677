#pragma once
// Iterated semidirect products of finitely generated free groups
// G = F_{d_ell} x| ... x| F_{d_1}: normal forms, the group ring ZG, action
// evaluation, structure validation, compatible automorphisms, and the built-in
// example structures (pure braid groups and friends).

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "foxres/freegroup.hpp"
#include "foxres/matrix.hpp"

namespace foxres {

// One letter x_{i,q}^{sign} of G; i indexes a generator of the free factor q.
struct GLetter {
  int32_t i;
  int32_t q;
  int32_t sign;  // +1 or -1
  friend bool operator==(const GLetter&, const GLetter&) = default;
  friend auto operator<=>(const GLetter&, const GLetter&) = default;
};

// Raw (not necessarily normalized) word in the generators of G.
using GWord = std::vector<GLetter>;

GWord inverseGWord(const GWord& w);

// The structure G = F_{d_ell} x| ... x| F_{d_1} with the action table
// alpha_q^{j,p} for 1 <= p < q <= ell, 1 <= j <= d_p.  Presentation relation:
//   x_{j,p}^{-1} x_{i,q} x_{j,p} = alpha_q^{j,p}(x_{i,q}).
// Structures are immutable once built; elements keep a pointer to their
// structure, which must stay alive (and in place) while they exist.
class IteratedProduct {
 public:
  explicit IteratedProduct(std::vector<int> exponents);

  int ell() const { return static_cast<int>(d_.size()); }
  int exponent(int q) const { return d_[q - 1]; }  // d_q, 1-based
  const std::vector<int>& exponents() const { return d_; }

  void setAction(int q, int p, int j, FreeAut a);
  const FreeAut& action(int q, int p, int j) const;
  bool actionsComplete() const;

  // Empty report = valid: every action present (inverses are verified by the
  // FreeAut constructor) and the section-1.1 compatibility identity holds on
  // all generator triples.
  std::vector<std::string> validate() const;

  // True iff every action automorphism abelianizes to the identity.
  bool isIA() const;

  // For structures whose generators x_{i,q} are pure braid generators
  // A_{i, braidOffset+q}; -1 when not applicable.  Set by pnl()/pure_braid().
  int braidOffset = -1;

 private:
  std::vector<int> d_;
  std::vector<std::vector<std::optional<FreeAut>>> act_;  // [q][idx(p,j)]
  int idx(int q, int p, int j) const;
};

// Element in normal form: components (w_ell, ..., w_1), denoting the product
// w_ell * ... * w_1 with the highest factor leftmost; comp(q) has rank d_q.
class GroupElement {
 public:
  explicit GroupElement(const IteratedProduct* G);
  const IteratedProduct* structure() const { return G_; }
  const Word& comp(int q) const { return comps_[q - 1]; }
  void setComp(int q, Word w) { comps_[q - 1] = std::move(w); }
  bool isIdentity() const;
  GWord flatten() const;     // letters of w_ell ... w_1 left to right
  GWord flattenBelow(int q) const;  // letters of w_{q-1} ... w_1

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.G_ == b.G_ && a.comps_ == b.comps_;
  }

 private:
  const IteratedProduct* G_;
  std::vector<Word> comps_;
};

struct GroupElementLess {
  bool operator()(const GroupElement& a, const GroupElement& b) const;
};

// Action evaluation.  Letters with factor p >= q act as the identity on
// factor q (the projection convention), so these accept arbitrary words.
FreeAut letterAut(const IteratedProduct& G, const GLetter& l, int q);
FreeAut actWord(const IteratedProduct& G, const GWord& w, int q);
FreeAut act(const IteratedProduct& G, const GroupElement& g, int q);
// apply alpha_q(u) to v without composing automorphisms (left-fold per letter)
Word applyActWord(const IteratedProduct& G, const GWord& u, Word v, int q);

GroupElement identityElement(const IteratedProduct& G);
GroupElement letterElement(const IteratedProduct& G, const GLetter& l);
GroupElement generatorElement(const IteratedProduct& G, int i, int q,
                              int sign = 1);
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);
GroupElement normalize(const IteratedProduct& G, const GWord& raw);
// Projection killing all factors >= q (a homomorphism onto the lower part).
GroupElement projectBelow(const GroupElement& g, int q);

// Token syntax: "x<i>_<q>" and "x<i>_<q>^-1"; "1" is the identity.  On
// structures with braidOffset set, "A<r>,<s>" / "A<r>,<s>^-1" also parse.
GWord parseGWord(const IteratedProduct& G, const std::string& text);
std::string printGWord(const GWord& w);
std::string printGroupElement(const GroupElement& g);

// Element of the group ring ZG.  A default-constructed ZG is the zero of an
// unspecified structure and may combine with any ZG.
class ZG {
 public:
  ZG() = default;
  explicit ZG(const GroupElement& g, long long c = 1);
  static ZG constant(const IteratedProduct* G, long long c);

  const IteratedProduct* structure() const { return G_; }
  bool isZero() const { return terms_.empty(); }
  long long aug() const;
  const std::map<GroupElement, long long, GroupElementLess>& terms() const {
    return terms_;
  }
  void add(const GroupElement& g, long long c);

  ZG operator+(const ZG& o) const;
  ZG operator-(const ZG& o) const;
  ZG operator-() const;
  ZG operator*(const ZG& o) const;
  ZG operator*(long long c) const;
  bool operator==(const ZG& o) const;

 private:
  const IteratedProduct* G_ = nullptr;
  std::map<GroupElement, long long, GroupElementLess> terms_;
};

std::string printZG(const ZG& e);

// Embeddings ZF_{d_q} -> ZG through factor q.
GroupElement embedWord(const IteratedProduct& G, int q, const Word& w);
ZG embedZF(const IteratedProduct& G, int q, const ZF& e);

// Automorphism of G preserving every free factor, given per-factor
// automorphisms (psi_1, ..., psi_ell); Definition 4.1's condition (2') is
// checked by isCompatible, not by construction.
struct CompatAut {
  std::vector<FreeAut> psi;  // psi[q-1] acts on F_{d_q}

  const FreeAut& factor(int q) const { return psi[q - 1]; }
  int ell() const { return static_cast<int>(psi.size()); }
};

CompatAut identityCA(const IteratedProduct& G);
CompatAut composeCA(const CompatAut& f, const CompatAut& g);  // f after g
CompatAut inverseCA(const CompatAut& f);
bool isCompatible(const IteratedProduct& G, const CompatAut& psi);
GroupElement applyCA(const CompatAut& psi, const GroupElement& g);
ZG applyCA(const CompatAut& psi, const ZG& e);
Mat<ZG> applyCA(const CompatAut& psi, const Mat<ZG>& m);

// Artin generators and pure braid words.
// artinAut(r, i, +1): x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i on F_r.
FreeAut artinAut(int rank, int i, int sign = 1);
// A_{r,s} = s_{s-1} ... s_{r+1} s_r^2 s_{r+1}^-1 ... s_{s-1}^-1 (pairs (i,sign))
std::vector<std::pair<int, int>> braidWordForA(int r, int s);
// Left fold acc <- artinAut(letter) o acc over the braid word.
FreeAut artinFold(int rank, const std::vector<std::pair<int, int>>& braid);
// Oracle: A_{r,s}^{-1} A_{i,j} A_{r,s} as a word in x_a = A_{a,j}, for
// r < s < j (the four conjugation cases of the pure braid action).
Word pureBraidConjWord(int r, int s, int i, int j);

// Built-in structures.
IteratedProduct direct_product(std::vector<int> exponents);
IteratedProduct pure_braid(int ell);     // P_ell, exponents 1..ell-1
IteratedProduct pnl(int n, int ell);     // P_{n,ell}, exponents ell..n-1
IteratedProduct b4_1();                  // B_4 Milnor fiber group, (1,2,3)
IteratedProduct p3_milnor();             // P_3 as F_4 x| F_1
IteratedProduct pbD3();                  // PB(D_3), (1,2,5)
IteratedProduct b4_prime();              // B_4', (2,2)

// Structure description files: `exponents = [...]`, `action.q.p.j = [...]`,
// `action_inv.q.p.j = [...]` with comma-separated image words.
std::string serializeStructure(const IteratedProduct& G);
IteratedProduct parseStructure(const std::string& text);

}  // namespace foxres
