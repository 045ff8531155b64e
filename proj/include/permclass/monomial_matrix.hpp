#pragma once

#include <vector>

#include "permclass/permutation.hpp"
#include "permclass/rational.hpp"

namespace permclass {

using DenseRationalMatrix = std::vector<std::vector<Rational>>;

// Permutation matrix with its units replaced by arbitrary nonzero exact
// scalars: value col_weights()[j-1] at (perm()(j), j), zero elsewhere.
class MonomialMatrix {
 public:
  // Throws NotMonomial if a weight is zero or the sizes disagree.
  MonomialMatrix(Permutation perm, std::vector<Rational> col_weights);

  // Throws NotSquare or NotMonomial (a row or column with zero or more than
  // one nonzero entry).
  static MonomialMatrix from_dense(const DenseRationalMatrix& m);

  static MonomialMatrix from_permutation(const Permutation& p);  // unit weights
  static MonomialMatrix diagonal(std::vector<Rational> values);

  int order() const noexcept { return perm_.order(); }
  const Permutation& perm() const noexcept { return perm_; }
  const std::vector<Rational>& col_weights() const noexcept {
    return col_weights_;
  }

  DenseRationalMatrix dense() const;

  bool operator==(const MonomialMatrix& other) const;

 private:
  Permutation perm_;
  std::vector<Rational> col_weights_;
};

// Matrix product a*b; exact. Throws DimensionMismatch.
MonomialMatrix mono_product(const MonomialMatrix& a, const MonomialMatrix& b);

// t^{-1} * m * t. Conjugation by a permutation matrix permutes the weights
// but never changes their values.
MonomialMatrix conjugate_by(const MonomialMatrix& m, const Permutation& t);

}  // namespace permclass
