#include "avq/exact/matrix.hpp"
#include "avq/exact/numeric.hpp"

#include <sstream>

namespace avq {

Rat parse_rat(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ')
    s.erase(s.begin());
  while (!s.empty() && s.back() == ' ')
    s.pop_back();
  if (s.empty())
    throw ValidationError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos)
      return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::invalid_argument &) {
    throw ValidationError("malformed rational literal: " + s);
  }
}

std::string to_string(const Rat &r) { return r.get_str(); }
std::string to_string(const Int &v) { return v.get_str(); }

MatQ to_rational(const MatZ &m) {
  MatQ q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      q(i, j) = Rat(m(i, j));
  return q;
}

bool is_integral(const MatQ &m) {
  for (const auto &v : m.data())
    if (v.get_den() != 1)
      return false;
  return true;
}

MatZ to_integer(const MatQ &m) {
  MatZ z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1)
        throw Error("to_integer: non-integral entry " + m(i, j).get_str());
      z(i, j) = m(i, j).get_num();
    }
  return z;
}

namespace {
template <typename T> std::ostream &print(std::ostream &os, const Matrix<T> &m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << m(i, j).get_str();
  }
  return os << ']';
}
}  // namespace

std::ostream &operator<<(std::ostream &os, const MatZ &m) { return print(os, m); }
std::ostream &operator<<(std::ostream &os, const MatQ &m) { return print(os, m); }

}  // namespace avq
