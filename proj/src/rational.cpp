#include "ctgames/rational.hpp"

#include <cctype>

#include "ctgames/errors.hpp"

namespace ctgames {
namespace {

bool is_canonical_integer(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && text[0] == '-') start = 1;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  // no leading zeros except "0" itself
  if (text[start] == '0' && text.size() - start > 1) return false;
  if (start == 1 && text == "-0") return false;
  return true;
}

}  // namespace

std::string to_canonical(const Rational& value) {
  // cpp_rational keeps lowest terms with positive denominator.
  std::string num = numerator(value).str();
  if (denominator(value) == 1) return num;
  return num + "/" + denominator(value).str();
}

Rational parse_rational(const std::string& text) {
  auto fail = [&text]() -> Rational {
    throw ParseError("not a canonical rational: \"" + text +
                     "\" (expected \"n\" or \"n/d\" in lowest terms with d > 1)");
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_canonical_integer(text)) return fail();
    return Rational(BigInt(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_canonical_integer(num) || !is_canonical_integer(den)) return fail();
  BigInt n(num), d(den);
  if (d <= 1) return fail();  // "x/1" and "x/0" are not canonical
  if (gcd(abs(n), d) != 1) return fail();
  return Rational(n, d);
}

}  // namespace ctgames
