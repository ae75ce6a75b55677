#include "foxres/freegroup.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace foxres {

bool isReduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].gen == w[i + 1].gen && w[i].sign == -w[i + 1].sign) return false;
  return true;
}

Word reduceWord(Word w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
    if (l.gen < 1) throw std::invalid_argument("letter generator must be >= 1");
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word concatWords(const Word& a, const Word& b) {
  Word out = a;
  for (const Letter& l : b) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverseWord(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->sign});
  return out;
}

Word powWord(const Word& w, int e) {
  Word out;
  const Word base = e >= 0 ? w : inverseWord(w);
  for (int i = 0; i < std::abs(e); ++i) out = concatWords(out, base);
  return out;
}

int maxGenerator(const Word& w) {
  int m = 0;
  for (const Letter& l : w) m = std::max(m, static_cast<int>(l.gen));
  return m;
}

std::vector<long long> exponentVector(const Word& w, int rank) {
  std::vector<long long> v(rank, 0);
  for (const Letter& l : w) {
    if (l.gen > rank) throw std::invalid_argument("exponentVector: generator out of range");
    v[l.gen - 1] += l.sign;
  }
  return v;
}

Word parseWord(const std::string& text, int rank) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    if (tok.size() < 2 || tok[0] != 'x') throw std::invalid_argument("bad word token: " + tok);
    int sign = 1;
    std::string body = tok.substr(1);
    if (auto p = body.find("^-1"); p != std::string::npos) {
      if (p + 3 != body.size()) throw std::invalid_argument("bad word token: " + tok);
      sign = -1;
      body = body.substr(0, p);
    }
    size_t pos = 0;
    int gen = std::stoi(body, &pos);
    if (pos != body.size() || gen < 1) throw std::invalid_argument("bad word token: " + tok);
    if (rank > 0 && gen > rank) throw std::invalid_argument("generator out of range: " + tok);
    w.push_back({gen, sign});
  }
  return reduceWord(w);
}

std::string printWord(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << 'x' << w[i].gen;
    if (w[i].sign < 0) out << "^-1";
  }
  return out.str();
}

bool WordLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;  // lexicographic on (gen, sign); +1 < -1 is irrelevant, just fixed
}

ZF::ZF(long long c) {
  if (c != 0) terms_[Word{}] = c;
}

ZF::ZF(const Word& w, long long c) {
  if (!isReduced(w)) throw std::invalid_argument("ZF: word not reduced");
  if (c != 0) terms_[w] = c;
}

long long ZF::aug() const {
  long long s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

void ZF::add(const Word& w, long long c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_[w] = c;
  } else if ((it->second += c) == 0) {
    terms_.erase(it);
  }
}

ZF ZF::operator+(const ZF& o) const {
  ZF r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, c);
  return r;
}

ZF ZF::operator-(const ZF& o) const {
  ZF r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, -c);
  return r;
}

ZF ZF::operator-() const {
  ZF r;
  for (const auto& [w, c] : terms_) r.terms_[w] = -c;
  return r;
}

ZF ZF::operator*(const ZF& o) const {
  ZF r;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) r.add(concatWords(w1, w2), c1 * c2);
  return r;
}

ZF ZF::operator*(long long c) const {
  ZF r;
  if (c == 0) return r;
  for (const auto& [w, k] : terms_) r.terms_[w] = k * c;
  return r;
}

std::string printZF(const ZF& e) {
  if (e.isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    long long a = c;
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    a = std::abs(a);
    first = false;
    if (a != 1 || w.empty()) {
      out << a;
      if (!w.empty()) out << "*";
    }
    if (!w.empty()) out << printWord(w);
  }
  return out.str();
}

FreeAut::FreeAut(int rank, std::vector<Word> image, std::vector<Word> inverseImage)
    : rank_(rank), image_(std::move(image)), inverseImage_(std::move(inverseImage)) {
  if (rank_ < 0 || static_cast<int>(image_.size()) != rank_ ||
      static_cast<int>(inverseImage_.size()) != rank_)
    throw std::invalid_argument("FreeAut: wrong number of images");
  for (int i = 1; i <= rank_; ++i) {
    image_[i - 1] = reduceWord(image_[i - 1]);
    inverseImage_[i - 1] = reduceWord(inverseImage_[i - 1]);
    if (maxGenerator(image_[i - 1]) > rank_ || maxGenerator(inverseImage_[i - 1]) > rank_)
      throw std::invalid_argument("FreeAut: image uses generator out of range");
  }
  for (int i = 1; i <= rank_; ++i) {
    Word xi{{i, 1}};
    if (applyImages(image_, inverseImage_[i - 1]) != xi ||
        applyImages(inverseImage_, image_[i - 1]) != xi)
      throw std::invalid_argument("FreeAut: supplied inverse is not inverse");
  }
}

FreeAut FreeAut::identity(int rank) {
  std::vector<Word> im(rank);
  for (int i = 1; i <= rank; ++i) im[i - 1] = Word{{i, 1}};
  return FreeAut(rank, im, im);
}

bool FreeAut::isIdentity() const {
  for (int i = 1; i <= rank_; ++i)
    if (image_[i - 1] != Word{{i, 1}}) return false;
  return true;
}

Word applyImages(const std::vector<Word>& images, const Word& w) {
  Word out;
  out.reserve(w.size());
  auto push = [&out](int32_t gen, int32_t sign) {
    if (!out.empty() && out.back().gen == gen && out.back().sign == -sign)
      out.pop_back();
    else
      out.push_back({gen, sign});
  };
  for (const Letter& l : w) {
    const Word& im = images[l.gen - 1];
    if (l.sign > 0)
      for (const Letter& m : im) push(m.gen, m.sign);
    else
      for (auto it = im.rbegin(); it != im.rend(); ++it) push(it->gen, -it->sign);
  }
  return out;
}

Word apply(const FreeAut& f, const Word& w) { return applyImages(f.images(), w); }
Word applyInverse(const FreeAut& f, const Word& w) { return applyImages(f.inverseImages(), w); }

ZF apply(const FreeAut& f, const ZF& e) {
  ZF r;
  for (const auto& [w, c] : e.terms()) r.add(apply(f, w), c);
  return r;
}

FreeAut compose(const FreeAut& f, const FreeAut& g) {
  if (f.rank() != g.rank()) throw std::invalid_argument("compose: rank mismatch");
  std::vector<Word> im(f.rank()), inv(f.rank());
  for (int i = 1; i <= f.rank(); ++i) {
    im[i - 1] = apply(f, g.image(i));
    inv[i - 1] = applyInverse(g, f.inverseImage(i));  // (f∘g)^{-1} = g^{-1}∘f^{-1}
  }
  return FreeAut(f.rank(), std::move(im), std::move(inv));
}

FreeAut inverse(const FreeAut& f) {
  return FreeAut(f.rank(), f.inverseImages(), f.images());
}

ZF fox(const Word& w, int j) {
  // ∂(uv)/∂x = ∂u/∂x + u·∂v/∂x with ∂x_i/∂x_j = δ_ij, ∂x_i^{-1}/∂x_j = -δ_ij·x_i^{-1}.
  ZF d;
  Word prefix;
  for (const Letter& l : w) {
    if (l.gen == j) {
      if (l.sign > 0) {
        d.add(prefix, 1);
      } else {
        Word p = prefix;
        p.push_back(l);
        d.add(p, -1);
      }
    }
    prefix.push_back(l);  // w is reduced, so no cancellation occurs
  }
  return d;
}

ZF fox(const ZF& e, int j) {
  ZF d;
  for (const auto& [w, c] : e.terms()) d = d + fox(w, j) * c;
  return d;
}

Mat<ZF> jacobian(const FreeAut& f) {
  Mat<ZF> J(f.rank(), f.rank());
  for (int i = 1; i <= f.rank(); ++i)
    for (int j = 1; j <= f.rank(); ++j) J.at(i - 1, j - 1) = fox(f.image(i), j);
  return J;
}

Mat<ZF> abelianized(const FreeAut& f) {
  Mat<ZF> A(f.rank(), f.rank());
  for (int i = 1; i <= f.rank(); ++i) {
    auto v = exponentVector(f.image(i), f.rank());
    for (int j = 0; j < f.rank(); ++j) A.at(i - 1, j) = ZF(v[j]);
  }
  return A;
}

}  // namespace foxres
