#include "hnk/scalar.hpp"

#include <cctype>

namespace hnk {

namespace {

bool valid_integer_token(const std::string &t) {
  if (t.empty())
    return false;
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size())
    return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      return false;
  return true;
}

} // namespace

Scalar parse_scalar(const std::string &text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(text))
      throw input_error("malformed rational: '" + text + "'");
    return Scalar(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw input_error("malformed rational: '" + text + "'");
  Integer d(den);
  if (d == 0)
    throw input_error("malformed rational (zero denominator): '" + text + "'");
  if (d < 0)
    return Scalar(-Integer(num), -d);
  return Scalar(Integer(num), d);
}

std::string scalar_to_string(const Scalar &s) {
  if (denominator(s) == 1)
    return numerator(s).str();
  return numerator(s).str() + "/" + denominator(s).str();
}

} // namespace hnk
