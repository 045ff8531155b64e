// Command-line front end: canonical forms, decompositions, similarity tests,
// partition counting and monomial factorizations over text files.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "permclass/cycle_algebra.hpp"
#include "permclass/cycle_structure.hpp"
#include "permclass/errors.hpp"
#include "permclass/estimates.hpp"
#include "permclass/io.hpp"
#include "permclass/monomial.hpp"
#include "permclass/partition_count.hpp"

using json = nlohmann::ordered_json;
using namespace permclass;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitVerificationFailure = 3;

int precision_from_env() {
  const char* raw = std::getenv("PERMCLASS_PRECISION");
  if (raw == nullptr || *raw == '\0') return 50;
  char* end = nullptr;
  const long digits = std::strtol(raw, &end, 10);
  if (end == nullptr || *end != '\0' || digits < 1 || digits > 100000)
    throw OutOfRange("PERMCLASS_PRECISION must be an integer between 1 and "
                     "100000 (decimal digits), got '" +
                     std::string(raw) + "'");
  return static_cast<int>(digits);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

struct InputFlags {
  bool force_perm = false;
  bool force_matrix = false;

  InputKind kind() const {
    if (force_perm) return InputKind::Permutation;
    if (force_matrix) return InputKind::Matrix;
    return InputKind::Auto;
  }
};

void add_input_flags(CLI::App* cmd, InputFlags& flags) {
  auto* perm = cmd->add_flag("--perm", flags.force_perm,
                             "force one-line-permutation parsing");
  cmd->add_flag("--matrix", flags.force_matrix, "force dense matrix parsing")
      ->excludes(perm);
}

json perm_json(const Permutation& p) { return json(p.images()); }

json type_json(const CycleType& t) {
  return json{{"t", t.fixed_points}, {"lengths", t.lengths}};
}

json entries_json(const SparseBinaryMatrix& m) {
  json entries = json::array();
  for (const auto& [row, col] : m.entries())
    entries.push_back(json::array({row, col}));
  return entries;
}

json rationals_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(format_rational(v));
  return out;
}

std::string entries_text(const SparseBinaryMatrix& m) {
  std::string out;
  for (const auto& [row, col] : m.entries())
    out += "(" + std::to_string(row) + "," + std::to_string(col) + ")";
  return out;
}

std::string rationals_text(const std::vector<Rational>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += format_rational(values[i]);
  }
  return out;
}

void run_canon(const std::string& path, const InputFlags& flags, bool as_json) {
  const Permutation p = parse_permutation_input(read_input(path), flags.kind());
  const CanonicalDecomposition d = canonical_form(p);
  if (compose(compose(d.conjugator, d.canonical), inverse(d.conjugator)) != p)
    throw VerificationError("T B T^{-1} does not reproduce the input");
  if (as_json) {
    json payload;
    payload["status"] = "ok";
    payload["order"] = p.order();
    payload["cycle_type"] = type_json(d.type);
    payload["canonical"] = perm_json(d.canonical);
    payload["conjugator"] = perm_json(d.conjugator);
    std::cout << payload.dump(2) << '\n';
    return;
  }
  std::cout << "status: ok\n";
  std::cout << "order: " << p.order() << '\n';
  std::cout << "cycle-type: " << to_string(d.type) << '\n';
  std::cout << "canonical: " << format_permutation(d.canonical) << '\n';
  std::cout << "conjugator: " << format_permutation(d.conjugator) << '\n';
}

void run_decompose(const std::string& path, const InputFlags& flags,
                   bool as_json) {
  const Permutation p = parse_permutation_input(read_input(path), flags.kind());
  const SummandDecomposition d = cycle_summands(p);
  if (!validate_summands(p, d).pass())
    throw VerificationError("summand decomposition failed validation");
  if (as_json) {
    json payload;
    payload["status"] = "ok";
    payload["order"] = p.order();
    payload["cycle_type"] = type_json(cycle_type(p));
    json summands = json::array();
    for (size_t i = 0; i < d.summands.size(); ++i)
      summands.push_back(json{{"cycle_order", d.orders[i]},
                              {"entries", entries_json(d.summands[i])}});
    payload["summands"] = summands;
    payload["fixed_diagonal"] = entries_json(d.fixed_diagonal);
    std::cout << payload.dump(2) << '\n';
    return;
  }
  std::cout << "status: ok\n";
  std::cout << "order: " << p.order() << '\n';
  std::cout << "cycle-type: " << to_string(cycle_type(p)) << '\n';
  for (size_t i = 0; i < d.summands.size(); ++i)
    std::cout << "summand: k=" << d.orders[i]
              << " entries=" << entries_text(d.summands[i]) << '\n';
  std::cout << "fixed-diagonal: t=" << d.fixed_diagonal.rank()
            << " entries=" << entries_text(d.fixed_diagonal) << '\n';
}

void run_factor(const std::string& path, const InputFlags& flags,
                bool as_json) {
  const Permutation p = parse_permutation_input(read_input(path), flags.kind());
  const FactorDecomposition f = cycle_factors(p);
  Permutation forward = Permutation::identity(p.order());
  Permutation backward = Permutation::identity(p.order());
  for (size_t i = 0; i < f.factors.size(); ++i) {
    forward = compose(forward, f.factors[i]);
    backward = compose(f.factors[f.factors.size() - 1 - i], backward);
    if (classify_type_I(f.factors[i]) != std::optional<int>(f.orders[i]))
      throw VerificationError("factor is not a single cycle of its order");
  }
  if (forward != p || backward != p)
    throw VerificationError("factor product does not reproduce the input");
  if (as_json) {
    json payload;
    payload["status"] = "ok";
    payload["order"] = p.order();
    json factors = json::array();
    for (size_t i = 0; i < f.factors.size(); ++i)
      factors.push_back(json{{"cycle_order", f.orders[i]},
                             {"images", perm_json(f.factors[i])}});
    payload["factors"] = factors;
    if (f.factors.empty()) payload["note"] = "identity";
    std::cout << payload.dump(2) << '\n';
    return;
  }
  std::cout << "status: ok\n";
  std::cout << "order: " << p.order() << '\n';
  for (size_t i = 0; i < f.factors.size(); ++i)
    std::cout << "factor: k=" << f.orders[i] << ' '
              << format_permutation(f.factors[i]) << '\n';
  if (f.factors.empty()) std::cout << "note: identity\n";
}

void run_similar(const std::string& path_a, const std::string& path_b,
                 const InputFlags& flags, bool as_json) {
  const Permutation a = parse_permutation_input(read_input(path_a), flags.kind());
  const Permutation b = parse_permutation_input(read_input(path_b), flags.kind());
  const SimilarityVerdict verdict = are_permutation_similar(a, b);
  if (verdict.similar &&
      compose(compose(inverse(*verdict.witness), a), *verdict.witness) != b)
    throw VerificationError("similarity witness failed re-verification");
  if (as_json) {
    json payload;
    payload["status"] = "ok";
    payload["order"] = a.order();
    payload["similar"] = verdict.similar;
    if (verdict.similar)
      payload["witness"] = perm_json(*verdict.witness);
    else {
      payload["cycle_type_a"] = type_json(cycle_type(a));
      payload["cycle_type_b"] = type_json(cycle_type(b));
    }
    std::cout << payload.dump(2) << '\n';
    return;
  }
  std::cout << "status: ok\n";
  std::cout << "order: " << a.order() << '\n';
  std::cout << "similar: " << (verdict.similar ? "yes" : "no") << '\n';
  if (verdict.similar)
    std::cout << "witness: " << format_permutation(*verdict.witness) << '\n';
  else {
    std::cout << "cycle-type-a: " << to_string(cycle_type(a)) << '\n';
    std::cout << "cycle-type-b: " << to_string(cycle_type(b)) << '\n';
  }
}

struct PcountFlags {
  bool exact = false;
  bool hr = false;
  bool small = false;
  bool large = false;
  bool table = false;
};

void run_pcount(long n, PcountFlags flags, bool as_json, int digits) {
  const int selected = static_cast<int>(flags.exact) + static_cast<int>(flags.hr) +
                       static_cast<int>(flags.small) +
                       static_cast<int>(flags.large) +
                       static_cast<int>(flags.table);
  if (selected > 1)
    throw Error("choose exactly one of --exact, --hr, --small, --large, --table");
  if (selected == 0) flags.exact = true;
  if (n < 0) throw OutOfRange("n must be >= 0");

  if (flags.table) {
    json rows = json::array();
    if (!as_json) std::cout << "n,p_exact,hr_estimate,modified_estimate,relative_error\n";
    for (long i = 1; i <= n; ++i) {
      const mpz_class exact = partition_exact(static_cast<int>(i));
      const Real hr = hr_estimate(i, digits);
      std::string modified;
      std::string error;
      if (i >= 3) {
        const mpz_class estimate = i <= 80 ? modified_estimate_small(i, digits)
                                           : modified_estimate_large(i, digits);
        modified = estimate.get_str();
        error = relative_error(estimate, exact, digits).str(6);
      }
      if (as_json)
        rows.push_back(json{{"n", i},
                            {"p_exact", exact.get_str()},
                            {"hr_estimate", hr.str(15)},
                            {"modified_estimate", modified},
                            {"relative_error", error}});
      else
        std::cout << i << ',' << exact.get_str() << ',' << hr.str(15) << ','
                  << modified << ',' << error << '\n';
    }
    if (as_json) {
      json payload;
      payload["status"] = "ok";
      payload["counts"] = json{{"table", rows}};
      std::cout << payload.dump(2) << '\n';
    }
    return;
  }

  std::string key;
  std::string value;
  std::string error;
  if (flags.exact) {
    key = "exact";
    value = partition_exact(static_cast<int>(n)).get_str();
  } else if (flags.hr) {
    key = "hr";
    const Real estimate = hr_estimate(n, digits);
    value = estimate.str(20);
    error = relative_error(estimate, partition_exact(static_cast<int>(n))).str(6);
  } else {
    key = "estimate";
    const mpz_class estimate = flags.small ? modified_estimate_small(n, digits)
                                           : modified_estimate_large(n, digits);
    value = estimate.get_str();
    error = relative_error(estimate, partition_exact(static_cast<int>(n)), digits)
                .str(6);
  }
  if (as_json) {
    json counts;
    counts["n"] = n;
    counts[key] = value;
    if (!error.empty()) counts["relative_error"] = error;
    json payload;
    payload["status"] = "ok";
    payload["counts"] = counts;
    std::cout << payload.dump(2) << '\n';
    return;
  }
  std::cout << "status: ok\n";
  std::cout << "n: " << n << '\n';
  std::cout << key << ": " << value << '\n';
  if (!error.empty()) std::cout << "relative-error: " << error << '\n';
}

void run_classes(long n, bool as_json) {
  if (n < 1) throw OutOfRange("classes requires n >= 1");
  const mpz_class count = class_count(static_cast<int>(n));
  const auto check_rep = [](const Permutation& rep) {
    if (canonical_form(rep).canonical != rep)
      throw VerificationError("representative is not its own canonical form");
  };
  if (as_json) {
    json payload;
    payload["status"] = "ok";
    payload["order"] = n;
    payload["counts"] = json{{"classes", count.get_str()}};
    json reps = json::array();
    enumerate_class_representatives(static_cast<int>(n),
                                    [&reps, &check_rep](const Permutation& rep) {
                                      check_rep(rep);
                                      reps.push_back(perm_json(rep));
                                    });
    payload["representatives"] = reps;
    std::cout << payload.dump(2) << '\n';
    return;
  }
  std::cout << "count: " << count.get_str() << '\n';
  enumerate_class_representatives(static_cast<int>(n),
                                  [&check_rep](const Permutation& rep) {
                                    check_rep(rep);
                                    std::cout << format_permutation(rep) << '\n';
                                  });
}

void run_monomial_split(const std::string& path, bool as_json) {
  const MonomialMatrix m = parse_monomial_input(read_input(path));
  const MonomialSplit split = monomial_split(m);
  if (as_json) {
    json payload;
    payload["status"] = "ok";
    payload["order"] = m.order();
    payload["perm"] = perm_json(split.perm);
    payload["row_diag"] = rationals_json(split.row_diag);
    payload["col_diag"] = rationals_json(split.col_diag);
    std::cout << payload.dump(2) << '\n';
    return;
  }
  std::cout << "status: ok\n";
  std::cout << "order: " << m.order() << '\n';
  std::cout << "perm: " << format_permutation(split.perm) << '\n';
  std::cout << "row-diag: " << rationals_text(split.row_diag) << '\n';
  std::cout << "col-diag: " << rationals_text(split.col_diag) << '\n';
}

void run_monomial_canon(const std::string& path, bool as_json) {
  const MonomialMatrix m = parse_monomial_input(read_input(path));
  const MonomialCanonical canon = monomial_canonical(m);
  if (as_json) {
    json payload;
    payload["status"] = "ok";
    payload["order"] = m.order();
    payload["conjugator"] = perm_json(canon.conjugator);
    payload["canonical"] = perm_json(canon.canonical_perm);
    payload["left_diag"] = rationals_json(canon.left_diag);
    payload["right_diag"] = rationals_json(canon.right_diag);
    std::cout << payload.dump(2) << '\n';
    return;
  }
  std::cout << "status: ok\n";
  std::cout << "order: " << m.order() << '\n';
  std::cout << "conjugator: " << format_permutation(canon.conjugator) << '\n';
  std::cout << "canonical: " << format_permutation(canon.canonical_perm) << '\n';
  std::cout << "left-diag: " << rationals_text(canon.left_diag) << '\n';
  std::cout << "right-diag: " << rationals_text(canon.right_diag) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation matrix classification under permutation similarity"};
  app.require_subcommand(1);

  std::string file_a;
  std::string file_b;
  long n = 0;
  InputFlags in_flags;
  PcountFlags pcount_flags;
  bool as_json = false;

  auto add_json = [&as_json](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "emit a JSON document");
  };

  CLI::App* canon =
      app.add_subcommand("canon", "canonical form, conjugator and cycle type");
  canon->add_option("input", file_a, "permutation or 0-1 matrix file, - for stdin")
      ->required();
  add_input_flags(canon, in_flags);
  add_json(canon);

  CLI::App* decompose = app.add_subcommand(
      "decompose", "additive decomposition into cycle summands plus a diagonal");
  decompose->add_option("input", file_a, "permutation or 0-1 matrix file")
      ->required();
  add_input_flags(decompose, in_flags);
  add_json(decompose);

  CLI::App* factor = app.add_subcommand(
      "factor", "factorization into commuting single-cycle permutations");
  factor->add_option("input", file_a, "permutation or 0-1 matrix file")
      ->required();
  add_input_flags(factor, in_flags);
  add_json(factor);

  CLI::App* similar =
      app.add_subcommand("similar", "similarity test with a witness");
  similar->add_option("a", file_a, "first input")->required();
  similar->add_option("b", file_b, "second input")->required();
  add_input_flags(similar, in_flags);
  add_json(similar);

  CLI::App* pcount =
      app.add_subcommand("pcount", "partition numbers and estimates");
  pcount->add_option("n", n, "argument")->required();
  pcount->add_flag("--exact", pcount_flags.exact, "exact value (default)");
  pcount->add_flag("--hr", pcount_flags.hr, "asymptotic estimate");
  pcount->add_flag("--small", pcount_flags.small, "rounded estimator, 3..80");
  pcount->add_flag("--large", pcount_flags.large, "rounded estimator, n >= 80");
  pcount->add_flag("--table", pcount_flags.table, "CSV table for 1..n");
  add_json(pcount);

  CLI::App* classes = app.add_subcommand(
      "classes", "stream one canonical representative per similarity class");
  classes->add_option("n", n, "order")->required();
  add_json(classes);

  CLI::App* monomial =
      app.add_subcommand("monomial", "monomial matrix factorizations");
  monomial->require_subcommand(1);
  CLI::App* mono_split = monomial->add_subcommand(
      "split", "split into a permutation and diagonal scalings");
  mono_split->add_option("input", file_a, "rational matrix file")->required();
  add_json(mono_split);
  CLI::App* mono_canon = monomial->add_subcommand(
      "canon", "transport the canonical form to the monomial setting");
  mono_canon->add_option("input", file_a, "rational matrix file")->required();
  add_json(mono_canon);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    const int digits = precision_from_env();
    if (canon->parsed()) run_canon(file_a, in_flags, as_json);
    else if (decompose->parsed()) run_decompose(file_a, in_flags, as_json);
    else if (factor->parsed()) run_factor(file_a, in_flags, as_json);
    else if (similar->parsed()) run_similar(file_a, file_b, in_flags, as_json);
    else if (pcount->parsed()) run_pcount(n, pcount_flags, as_json, digits);
    else if (classes->parsed()) run_classes(n, as_json);
    else if (monomial->parsed()) {
      if (mono_split->parsed()) run_monomial_split(file_a, as_json);
      else run_monomial_canon(file_a, as_json);
    }
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}
