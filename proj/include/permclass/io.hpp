#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permclass/monomial_matrix.hpp"
#include "permclass/permutation.hpp"

namespace permclass {

struct ParseOptions {
  // Dense matrix inputs beyond this order are rejected to bound memory;
  // one-line permutation inputs have no such limit.
  int max_dense_order = 4096;
};

// One-line permutation format: the order n followed by n 1-based images,
// whitespace-separated. Throws ParseError or NotPermutation.
Permutation parse_permutation_text(std::string_view text);

// Dense matrix format: n non-empty lines of n whitespace-separated tokens.
std::vector<std::vector<long>> parse_binary_matrix_text(
    std::string_view text, const ParseOptions& opts = {});
DenseRationalMatrix parse_rational_matrix_text(std::string_view text,
                                               const ParseOptions& opts = {});

enum class InputKind { Auto, Permutation, Matrix };

// Auto mode first tries the one-line permutation format, then the 0-1 matrix
// format; the error of the matrix attempt wins if both fail.
Permutation parse_permutation_input(std::string_view text,
                                    InputKind kind = InputKind::Auto,
                                    const ParseOptions& opts = {});

MonomialMatrix parse_monomial_input(std::string_view text,
                                    const ParseOptions& opts = {});

// "n i1 ... in"; just "0" for the empty permutation.
std::string format_permutation(const Permutation& p);

}  // namespace permclass
