#include "cw/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace cw {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(s));
    }
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

std::string to_string(const Rational& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

bool is_integral(const Rational& value) { return denominator(value) == 1; }

bool is_integral(const Vec& v) {
  for (const auto& x : v)
    if (!is_integral(x)) return false;
  return true;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational r(0);
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Rational& factor, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = factor * v[i];
  return r;
}

Vec negate(const Vec& v) { return scale(Rational(-1), v); }

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::string format_vector(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  out += ")";
  return out;
}

Vec parse_vector(const std::string& text) {
  std::string s = text;
  auto l = s.find_first_not_of(" \t");
  auto r = s.find_last_not_of(" \t");
  if (l == std::string::npos) throw std::invalid_argument("empty vector literal");
  s = s.substr(l, r - l + 1);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw std::invalid_argument("unbalanced parentheses in vector: " + text);
    s = s.substr(1, s.size() - 2);
  }
  Vec v;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) v.push_back(parse_rational(item));
  if (v.empty()) throw std::invalid_argument("empty vector literal");
  return v;
}

}  // namespace cw
