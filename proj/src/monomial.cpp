#include "permclass/monomial.hpp"

#include "permclass/errors.hpp"

namespace permclass {

MonomialSplit monomial_split(const MonomialMatrix& m) {
  const int n = m.order();
  const Permutation& p = m.perm();
  const Permutation p_inv = inverse(p);
  std::vector<Rational> col_diag = m.col_weights();
  std::vector<Rational> row_diag(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    row_diag[static_cast<size_t>(i) - 1] =
        col_diag[static_cast<size_t>(p_inv(i)) - 1];

  const MonomialMatrix perm_part = MonomialMatrix::from_permutation(p);
  if (!(mono_product(perm_part, MonomialMatrix::diagonal(col_diag)) == m))
    throw VerificationError("monomial_split: P * D2 does not reproduce M");
  if (!(mono_product(MonomialMatrix::diagonal(row_diag), perm_part) == m))
    throw VerificationError("monomial_split: D1 * P does not reproduce M");

  return {p, std::move(row_diag), std::move(col_diag)};
}

MonomialCanonical monomial_canonical(const MonomialMatrix& m) {
  const int n = m.order();
  const CanonicalDecomposition canon = canonical_form(m.perm());
  const MonomialMatrix conjugated = conjugate_by(m, canon.conjugator);

  // The conjugate shares its unit positions with the canonical permutation.
  if (!(conjugated.perm() == canon.canonical))
    throw VerificationError(
        "monomial_canonical: conjugate does not sit on the canonical "
        "positions");

  std::vector<Rational> right_diag = conjugated.col_weights();
  const Permutation y_inv = inverse(canon.canonical);
  std::vector<Rational> left_diag(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    left_diag[static_cast<size_t>(i) - 1] =
        right_diag[static_cast<size_t>(y_inv(i)) - 1];

  const MonomialMatrix y = MonomialMatrix::from_permutation(canon.canonical);
  if (!(mono_product(MonomialMatrix::diagonal(left_diag), y) == conjugated))
    throw VerificationError("monomial_canonical: D3 * Y check failed");
  if (!(mono_product(y, MonomialMatrix::diagonal(right_diag)) == conjugated))
    throw VerificationError("monomial_canonical: Y * D4 check failed");

  return {canon.conjugator, canon.canonical, std::move(left_diag),
          std::move(right_diag)};
}

}  // namespace permclass
