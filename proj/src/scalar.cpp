#include "lied/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace lied {

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty rational");
  auto slash = t.find('/');
  auto valid_int = [](const std::string& u) {
    size_t k = (!u.empty() && (u[0] == '-' || u[0] == '+')) ? 1 : 0;
    if (k == u.size()) return false;
    for (; k < u.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(u[k]))) return false;
    return true;
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("malformed rational: " + s);
  Int n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace lied
