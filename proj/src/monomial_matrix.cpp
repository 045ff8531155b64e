#include "permclass/monomial_matrix.hpp"

#include <string>

#include "permclass/errors.hpp"

namespace permclass {

MonomialMatrix::MonomialMatrix(Permutation perm,
                               std::vector<Rational> col_weights)
    : perm_(std::move(perm)), col_weights_(std::move(col_weights)) {
  if (static_cast<int>(col_weights_.size()) != perm_.order())
    throw NotMonomial("weight count " + std::to_string(col_weights_.size()) +
                      " does not match order " + std::to_string(perm_.order()));
  for (size_t j = 0; j < col_weights_.size(); ++j)
    if (col_weights_[j] == 0)
      throw NotMonomial("column " + std::to_string(j + 1) + " has zero weight");
}

MonomialMatrix MonomialMatrix::from_dense(const DenseRationalMatrix& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw NotSquare("matrix row has " + std::to_string(row.size()) +
                      " entries, expected " + std::to_string(n));
  std::vector<int> images(static_cast<size_t>(n), 0);
  std::vector<Rational> weights(static_cast<size_t>(n));
  std::vector<int> row_count(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& v = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (v == 0) continue;
      if (images[static_cast<size_t>(j)] != 0)
        throw NotMonomial("column " + std::to_string(j + 1) +
                          " has more than one nonzero entry");
      images[static_cast<size_t>(j)] = i + 1;
      weights[static_cast<size_t>(j)] = v;
      ++row_count[static_cast<size_t>(i)];
    }
  }
  for (int j = 0; j < n; ++j)
    if (images[static_cast<size_t>(j)] == 0)
      throw NotMonomial("column " + std::to_string(j + 1) +
                        " has no nonzero entry");
  for (int i = 0; i < n; ++i)
    if (row_count[static_cast<size_t>(i)] != 1)
      throw NotMonomial("row " + std::to_string(i + 1) +
                        " does not have exactly one nonzero entry");
  return MonomialMatrix(Permutation::from_images(std::move(images)),
                        std::move(weights));
}

MonomialMatrix MonomialMatrix::from_permutation(const Permutation& p) {
  return MonomialMatrix(
      p, std::vector<Rational>(static_cast<size_t>(p.order()), Rational(1)));
}

MonomialMatrix MonomialMatrix::diagonal(std::vector<Rational> values) {
  const int n = static_cast<int>(values.size());
  return MonomialMatrix(Permutation::identity(n), std::move(values));
}

DenseRationalMatrix MonomialMatrix::dense() const {
  const size_t n = static_cast<size_t>(order());
  DenseRationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (int j = 1; j <= order(); ++j)
    m[static_cast<size_t>(perm_(j)) - 1][static_cast<size_t>(j) - 1] =
        col_weights_[static_cast<size_t>(j) - 1];
  return m;
}

bool MonomialMatrix::operator==(const MonomialMatrix& other) const {
  if (!(perm_ == other.perm_)) return false;
  for (size_t j = 0; j < col_weights_.size(); ++j)
    if (col_weights_[j] != other.col_weights_[j]) return false;
  return true;
}

MonomialMatrix mono_product(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.order() != b.order())
    throw DimensionMismatch("mono_product: orders " +
                            std::to_string(a.order()) + " and " +
                            std::to_string(b.order()) + " differ");
  // Column j of the product is a's column b.perm()(j) scaled by b's weight.
  std::vector<Rational> weights(static_cast<size_t>(a.order()));
  for (int j = 1; j <= a.order(); ++j)
    weights[static_cast<size_t>(j) - 1] =
        a.col_weights()[static_cast<size_t>(b.perm()(j)) - 1] *
        b.col_weights()[static_cast<size_t>(j) - 1];
  return MonomialMatrix(compose(a.perm(), b.perm()), std::move(weights));
}

MonomialMatrix conjugate_by(const MonomialMatrix& m, const Permutation& t) {
  if (m.order() != t.order())
    throw DimensionMismatch("conjugate_by: orders differ");
  return mono_product(mono_product(MonomialMatrix::from_permutation(inverse(t)), m),
                      MonomialMatrix::from_permutation(t));
}

}  // namespace permclass
