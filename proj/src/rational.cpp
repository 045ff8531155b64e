#include "permclass/rational.hpp"

#include <cctype>

#include "permclass/errors.hpp"

namespace permclass {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view token) {
  const std::string original(token);
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto fail = [&original]() -> Rational {
    throw BadEntry("not a rational number: '" + original + "'");
  };

  Rational r;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    const mpz_class d{std::string(den)};
    if (d == 0) return fail();
    r = Rational(mpz_class{std::string(num)}, d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if (!whole.empty() && !all_digits(whole)) return fail();
    if (!frac.empty() && !all_digits(frac)) return fail();
    mpz_class scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const mpz_class w = whole.empty() ? mpz_class(0) : mpz_class{std::string(whole)};
    const mpz_class f = frac.empty() ? mpz_class(0) : mpz_class{std::string(frac)};
    r = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(body)) return fail();
    r = Rational(mpz_class{std::string(body)});
  }
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace permclass
