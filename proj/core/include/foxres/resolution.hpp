#pragma once
// The finite free resolution C_{\bullet}(G) of Z over ZG for an iterated
// semidirect product of free groups: the representations rho_q, their
// entrywise lifts, the recursive boundary pieces Delta_{p_1,...,p_k}, block
// assembly of the boundary maps, and specialization into chain complexes
// over a coefficient ring.

#include <map>
#include <vector>

#include "foxres/matrix.hpp"
#include "foxres/rings.hpp"
#include "foxres/semidirect.hpp"

namespace foxres {

// k-element subsets of {1..ell} in ascending lexicographic order.
std::vector<std::vector<int>> summandSets(int ell, int k);

class Resolution {
 public:
  // Keeps a pointer to G; the structure must outlive the resolution.
  explicit Resolution(const IteratedProduct& G) : G_(&G) {}
  explicit Resolution(IteratedProduct&&) = delete;
  const IteratedProduct& structure() const { return *G_; }
  int length() const { return G_->ell(); }

  std::vector<std::vector<int>> summands(int k) const;
  long long summandRank(const std::vector<int>& S) const;
  long long rank(int k) const;  // rank of C_k

  // rho_q(g) = pi_{<q}(g) * J(alpha_q(g)) embedded into ZG (d_q x d_q);
  // identity for g supported in factors >= q.
  Mat<ZG> rho(int q, const GroupElement& g) const;
  // linear extension of rho_q to a group-ring element (d_q x d_q)
  Mat<ZG> rho(int q, const ZG& e) const;
  // entrywise lift: each entry replaced by its rho_q matrix
  Mat<ZG> rhoLift(int q, const Mat<ZG>& M) const;

  // Delta_{p_1,...,p_k}: rank d_{p_1}...d_{p_k} -> d_{p_2}...d_{p_k},
  // Delta_p = column (x_{i,p} - 1), Delta_S = -rhoLift(p_k, Delta_{S'}).
  const Mat<ZG>& delta(const std::vector<int>& S);

  // boundary C_k -> C_{k-1}: summand (p_1<...<p_k) maps into the summand
  // deleting p_i with block [Delta_{p_i,...,p_k}]^{d_{p_1}...d_{p_{i-1}}};
  // basis tuples (i_1,...,i_k) with i_k varying fastest.
  const Mat<ZG>& boundary(int k);

 private:
  const IteratedProduct* G_;
  std::map<std::vector<int>, Mat<ZG>> deltas_;
  std::map<int, Mat<ZG>> boundaries_;
};

// boundary(k) * boundary(k-1) = 0 for all k, and aug(boundary(1)) = 0.
bool verify_complex(const IteratedProduct& G);

struct ChainComplex {
  CoefficientRing ring;
  std::vector<long long> ranks;        // [0..ell], scaled by the block size
  std::vector<Mat<RElem>> boundaries;  // [k]: C_k -> C_{k-1} for k >= 1
};

ChainComplex specialized_complex(Resolution& res, const Specialization& nu);
// consecutive boundary products vanish over the coefficient ring
bool verifyChainComplex(const ChainComplex& C);

}  // namespace foxres
