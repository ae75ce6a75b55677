#pragma once
// Finitely generated free groups: reduced words, the integral group ring ZF_n,
// automorphisms given by generator images (with mandatory inverses), and Fox
// free differential calculus (derivatives, Jacobians, the fundamental formula).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "foxres/matrix.hpp"

namespace foxres {

// One letter x_g^{sign}; generators are 1-based.
struct Letter {
  int32_t gen;
  int32_t sign;  // +1 or -1
  friend bool operator==(const Letter& a, const Letter& b) = default;
  friend auto operator<=>(const Letter& a, const Letter& b) = default;
};

// A freely reduced word. All functions below keep words reduced.
using Word = std::vector<Letter>;

bool isReduced(const Word& w);
Word reduceWord(Word w);
Word concatWords(const Word& a, const Word& b);
Word inverseWord(const Word& w);
Word powWord(const Word& w, int e);
int maxGenerator(const Word& w);
std::vector<long long> exponentVector(const Word& w, int rank);

// Token syntax: "x3", "x3^-1", whitespace separated; "1" is the empty word.
Word parseWord(const std::string& text, int rank = 0);  // rank 0 = unchecked
std::string printWord(const Word& w);

// Length-then-lexicographic order; used as the canonical term order in ZF.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const;
};

// Element of the group ring ZF_n.
class ZF {
 public:
  ZF() = default;
  explicit ZF(long long c);               // constant c·1
  explicit ZF(const Word& w, long long c = 1);
  static ZF zero() { return ZF(); }
  static ZF one() { return ZF(1); }

  bool isZero() const { return terms_.empty(); }
  long long aug() const;  // augmentation ε
  const std::map<Word, long long, WordLess>& terms() const { return terms_; }
  void add(const Word& w, long long c);

  ZF operator+(const ZF& o) const;
  ZF operator-(const ZF& o) const;
  ZF operator-() const;
  ZF operator*(const ZF& o) const;
  ZF operator*(long long c) const;
  bool operator==(const ZF& o) const { return terms_ == o.terms_; }

 private:
  std::map<Word, long long, WordLess> terms_;
};

std::string printZF(const ZF& e);

// Automorphism of F_rank given by generator images together with the images of
// the inverse automorphism. The constructor verifies the two compose to the
// identity on generators; computing inverses from scratch is out of scope.
class FreeAut {
 public:
  FreeAut(int rank, std::vector<Word> image, std::vector<Word> inverseImage);
  static FreeAut identity(int rank);

  int rank() const { return rank_; }
  const Word& image(int i) const { return image_[i - 1]; }            // 1-based
  const Word& inverseImage(int i) const { return inverseImage_[i - 1]; }
  const std::vector<Word>& images() const { return image_; }
  const std::vector<Word>& inverseImages() const { return inverseImage_; }
  bool isIdentity() const;
  // images determine the automorphism (inverses are unique)
  friend bool operator==(const FreeAut& a, const FreeAut& b) {
    return a.rank_ == b.rank_ && a.image_ == b.image_;
  }

 private:
  int rank_;
  std::vector<Word> image_, inverseImage_;
};

// Substitution of images for generators: result of w under x_i -> images[i-1].
Word applyImages(const std::vector<Word>& images, const Word& w);
Word apply(const FreeAut& f, const Word& w);
Word applyInverse(const FreeAut& f, const Word& w);
ZF apply(const FreeAut& f, const ZF& e);  // the ring extension f~

FreeAut compose(const FreeAut& f, const FreeAut& g);  // x -> f(g(x))
FreeAut inverse(const FreeAut& f);

// Fox derivative ∂w/∂x_j and its additive extension to ZF.
ZF fox(const Word& w, int j);
ZF fox(const ZF& e, int j);

// J(f) = (∂f(x_i)/∂x_j), rows indexed by i.
Mat<ZF> jacobian(const FreeAut& f);

// Abelianized image matrix: row i = exponent vector of image(i).
Mat<ZF> abelianized(const FreeAut& f);  // entries are integer constants

}  // namespace foxres
