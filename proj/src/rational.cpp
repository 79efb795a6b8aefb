#include "dqv/rational.hpp"

#include "dqv/errors.hpp"

namespace dqv {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  Rational q;
  auto slash = s.find('/');
  auto digits_ok = [](const std::string& t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_ok(s)) throw ParseError("not a rational: '" + s + "'");
    q = Rational(Integer(s));
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den) || den[0] == '-')
      throw ParseError("not a rational: '" + s + "'");
    Integer d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    q = Rational(Integer(num), d);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace dqv
