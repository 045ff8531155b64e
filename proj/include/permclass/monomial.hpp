#pragma once

#include <vector>

#include "permclass/cycle_structure.hpp"
#include "permclass/monomial_matrix.hpp"

namespace permclass {

// m == P * diag(col_diag) == diag(row_diag) * P, exactly.
struct MonomialSplit {
  Permutation perm;
  std::vector<Rational> row_diag;  // c_i: scales row i after permuting
  std::vector<Rational> col_diag;  // d_j: scales column j before permuting
};

// Both product identities are verified before returning; a failure throws
// VerificationError.
MonomialSplit monomial_split(const MonomialMatrix& m);

// conjugator^{-1} * m * conjugator == diag(left_diag) * Y
//                                  == Y * diag(right_diag)
// where Y (canonical_perm) is the canonical form of m's underlying
// permutation and the conjugator is its canonical conjugator.
struct MonomialCanonical {
  Permutation conjugator;
  Permutation canonical_perm;
  std::vector<Rational> left_diag;   // a_i: row values of the conjugate
  std::vector<Rational> right_diag;  // b_j: column values of the conjugate
};

MonomialCanonical monomial_canonical(const MonomialMatrix& m);

}  // namespace permclass
