#include "foxres/resolution.hpp"

#include <stdexcept>

namespace foxres {

static void subsetsRec(int ell, int k, int start, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int p = start; p <= ell - (k - static_cast<int>(cur.size())) + 1; ++p) {
    cur.push_back(p);
    subsetsRec(ell, k, p + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> summandSets(int ell, int k) {
  if (k < 0 || k > ell) throw std::invalid_argument("summandSets: k out of range");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  subsetsRec(ell, k, 1, cur, out);
  return out;
}

std::vector<std::vector<int>> Resolution::summands(int k) const {
  return summandSets(G_->ell(), k);
}

long long Resolution::summandRank(const std::vector<int>& S) const {
  long long r = 1;
  for (int p : S) r *= G_->exponent(p);
  return r;
}

long long Resolution::rank(int k) const {
  long long r = 0;
  for (const auto& S : summands(k)) r += summandRank(S);
  return r;
}

Mat<ZG> Resolution::rho(int q, const GroupElement& g) const {
  // Generator images under the action are computed by per-letter word
  // substitution (free reduction keeps them short); composing whole
  // automorphisms instead blows up exponentially in the word length.
  int dq = G_->exponent(q);
  ZG pre(projectBelow(g, q));
  GWord u = g.flatten();
  Mat<ZG> r(dq, dq);
  for (int i = 1; i <= dq; ++i) {
    Word img = applyActWord(*G_, u, Word{{i, 1}}, q);
    for (int j = 1; j <= dq; ++j) {
      ZF d = fox(img, j);
      if (d.isZero()) continue;
      r.at(i - 1, j - 1) = pre * embedZF(*G_, q, d);
    }
  }
  return r;
}

Mat<ZG> Resolution::rho(int q, const ZG& e) const {
  int dq = G_->exponent(q);
  Mat<ZG> acc(dq, dq);
  for (const auto& [g, c] : e.terms()) {
    Mat<ZG> m = rho(q, g);
    for (int i = 0; i < dq; ++i)
      for (int j = 0; j < dq; ++j)
        if (!m.at(i, j).isZero()) acc.at(i, j) = acc.at(i, j) + m.at(i, j) * c;
  }
  return acc;
}

Mat<ZG> Resolution::rhoLift(int q, const Mat<ZG>& M) const {
  int dq = G_->exponent(q);
  Mat<ZG> r(M.rows * dq, M.cols * dq);
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) {
      if (M.at(i, j).isZero()) continue;
      Mat<ZG> block = rho(q, M.at(i, j));
      for (int a = 0; a < dq; ++a)
        for (int b = 0; b < dq; ++b) r.at(i * dq + a, j * dq + b) = block.at(a, b);
    }
  return r;
}

const Mat<ZG>& Resolution::delta(const std::vector<int>& S) {
  auto it = deltas_.find(S);
  if (it != deltas_.end()) return it->second;
  if (S.empty()) throw std::invalid_argument("delta: empty index tuple");
  for (size_t i = 0; i < S.size(); ++i) {
    if (S[i] < 1 || S[i] > G_->ell()) throw std::invalid_argument("delta: index out of range");
    if (i + 1 < S.size() && S[i] >= S[i + 1])
      throw std::invalid_argument("delta: indices must strictly increase");
  }
  Mat<ZG> d;
  if (S.size() == 1) {
    int p = S[0];
    d = Mat<ZG>(G_->exponent(p), 1);
    for (int i = 1; i <= G_->exponent(p); ++i)
      d.at(i - 1, 0) = ZG(generatorElement(*G_, i, p)) + ZG::constant(G_, -1);
  } else {
    std::vector<int> head(S.begin(), S.end() - 1);
    d = matNeg(rhoLift(S.back(), delta(head)));
  }
  return deltas_.emplace(S, std::move(d)).first->second;
}

const Mat<ZG>& Resolution::boundary(int k) {
  auto it = boundaries_.find(k);
  if (it != boundaries_.end()) return it->second;
  if (k < 1 || k > G_->ell()) throw std::invalid_argument("boundary: k out of range");

  auto rowsSets = summands(k);
  auto colSets = summands(k - 1);
  std::map<std::vector<int>, long long> colOffset;
  long long cols = 0;
  for (const auto& T : colSets) {
    colOffset[T] = cols;
    cols += summandRank(T);
  }
  Mat<ZG> b(static_cast<int>(rank(k)), static_cast<int>(cols));

  long long rowOffset = 0;
  for (const auto& S : rowsSets) {
    long long pre = 1;  // d_{p_1} ... d_{p_{i-1}}
    for (size_t i = 0; i < S.size(); ++i) {
      std::vector<int> tail(S.begin() + i, S.end());
      std::vector<int> target(S);
      target.erase(target.begin() + i);
      Mat<ZG> block = blockDiag(delta(tail), static_cast<int>(pre));
      long long co = colOffset.at(target);
      for (int r = 0; r < block.rows; ++r)
        for (int c = 0; c < block.cols; ++c) {
          if (block.at(r, c).isZero()) continue;
          b.at(static_cast<int>(rowOffset) + r, static_cast<int>(co) + c) = block.at(r, c);
        }
      pre *= G_->exponent(S[i]);
    }
    rowOffset += summandRank(S);
  }
  return boundaries_.emplace(k, std::move(b)).first->second;
}

bool verify_complex(const IteratedProduct& G) {
  Resolution res(G);
  for (int i = 0; i < res.boundary(1).rows; ++i)
    if (res.boundary(1).at(i, 0).aug() != 0) return false;
  for (int k = 2; k <= G.ell(); ++k)
    if (!matIsZero(matMul(res.boundary(k), res.boundary(k - 1)))) return false;
  return true;
}

ChainComplex specialized_complex(Resolution& res, const Specialization& nu) {
  ChainComplex C;
  C.ring = nu.ring;
  int ell = res.length();
  C.ranks.resize(ell + 1);
  C.boundaries.resize(ell + 1);
  for (int k = 0; k <= ell; ++k) C.ranks[k] = res.rank(k) * nu.m;
  for (int k = 1; k <= ell; ++k) C.boundaries[k] = specialize_matrix(res.boundary(k), nu);
  return C;
}

bool verifyChainComplex(const ChainComplex& C) {
  for (size_t k = 2; k < C.boundaries.size(); ++k)
    if (!matIsZero(matMul(C.boundaries[k], C.boundaries[k - 1]))) return false;
  return true;
}

}  // namespace foxres
