#include "permclass/io.hpp"

#include <cctype>
#include <charconv>

#include "permclass/errors.hpp"
#include "permclass/rational.hpp"

namespace permclass {

namespace {

struct Token {
  std::string_view text;
  int line;    // 1-based
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++column;
      ++i;
      continue;
    }
    const size_t start = i;
    const int start_col = column;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++column;
    }
    tokens.push_back({text.substr(start, i - start), line, start_col});
  }
  return tokens;
}

long parse_long(const Token& tok) {
  long value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError("'" + std::string(tok.text) + "' is not an integer",
                     tok.line, tok.column);
  return value;
}

// Rows are the non-empty lines; each must carry exactly n tokens where n is
// the number of rows.
std::vector<std::vector<Token>> token_rows(std::string_view text,
                                           const ParseOptions& opts) {
  std::vector<std::vector<Token>> rows;
  for (const Token& tok : tokenize(text)) {
    if (rows.empty() || rows.back().back().line != tok.line)
      rows.push_back({});
    rows.back().push_back(tok);
  }
  if (rows.empty()) throw ParseError("empty matrix input", 1, 1);
  const int n = static_cast<int>(rows.size());
  if (n > opts.max_dense_order)
    throw ParseError("dense matrix order " + std::to_string(n) +
                         " exceeds the limit " +
                         std::to_string(opts.max_dense_order),
                     1, 1);
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != n)
      throw ParseError("row has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(n) +
                           " (matrix must be square)",
                       row.front().line, row.front().column);
  return rows;
}

}  // namespace

Permutation parse_permutation_text(std::string_view text) {
  const std::vector<Token> tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("empty permutation input", 1, 1);
  const long n = parse_long(tokens.front());
  if (n < 0)
    throw ParseError("permutation order must be >= 0", tokens.front().line,
                     tokens.front().column);
  if (static_cast<long>(tokens.size()) - 1 < n) {
    const Token& last = tokens.back();
    throw ParseError("expected " + std::to_string(n) + " images, found " +
                         std::to_string(tokens.size() - 1),
                     last.line, last.column);
  }
  if (static_cast<long>(tokens.size()) - 1 > n) {
    const Token& extra = tokens[static_cast<size_t>(n) + 1];
    throw ParseError("unexpected trailing token '" + std::string(extra.text) +
                         "'",
                     extra.line, extra.column);
  }
  std::vector<int> images;
  images.reserve(static_cast<size_t>(n));
  for (long j = 1; j <= n; ++j) {
    const Token& tok = tokens[static_cast<size_t>(j)];
    const long v = parse_long(tok);
    if (v < 1 || v > n)
      throw ParseError("image " + std::to_string(v) + " is outside 1.." +
                           std::to_string(n),
                       tok.line, tok.column);
    images.push_back(static_cast<int>(v));
  }
  return Permutation::from_images(std::move(images));
}

std::vector<std::vector<long>> parse_binary_matrix_text(
    std::string_view text, const ParseOptions& opts) {
  const auto rows = token_rows(text, opts);
  std::vector<std::vector<long>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<long> values;
    values.reserve(row.size());
    for (const Token& tok : row) {
      const long v = parse_long(tok);
      if (v != 0 && v != 1)
        throw ParseError("entry " + std::to_string(v) + " is outside {0,1}",
                         tok.line, tok.column);
      values.push_back(v);
    }
    m.push_back(std::move(values));
  }
  return m;
}

DenseRationalMatrix parse_rational_matrix_text(std::string_view text,
                                               const ParseOptions& opts) {
  const auto rows = token_rows(text, opts);
  DenseRationalMatrix m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<Rational> values;
    values.reserve(row.size());
    for (const Token& tok : row) {
      try {
        values.push_back(parse_rational(tok.text));
      } catch (const BadEntry& e) {
        throw ParseError(e.what(), tok.line, tok.column);
      }
    }
    m.push_back(std::move(values));
  }
  return m;
}

Permutation parse_permutation_input(std::string_view text, InputKind kind,
                                    const ParseOptions& opts) {
  if (kind == InputKind::Permutation) return parse_permutation_text(text);
  if (kind == InputKind::Matrix)
    return perm_from_matrix(parse_binary_matrix_text(text, opts));
  try {
    return parse_permutation_text(text);
  } catch (const Error&) {
    return perm_from_matrix(parse_binary_matrix_text(text, opts));
  }
}

MonomialMatrix parse_monomial_input(std::string_view text,
                                    const ParseOptions& opts) {
  return MonomialMatrix::from_dense(parse_rational_matrix_text(text, opts));
}

std::string format_permutation(const Permutation& p) {
  std::string out = std::to_string(p.order());
  for (int v : p.images()) {
    out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace permclass
