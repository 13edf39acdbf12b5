#include "sunada/rational.hpp"

#include "sunada/error.hpp"

namespace sunada {

std::string to_string(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw Error(ErrorKind::Parse, "empty number");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw Error(ErrorKind::Parse, "sign without digits");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw Error(ErrorKind::Parse, "bad number \"" + std::string(s) + "\"");
    BigInt v(std::string(s.substr(s[0] == '+' ? 1 : 0)));
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

}  // namespace sunada
