#include "eccspec/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eccspec {

namespace {

template <typename T>
void trim_trailing_zeros(std::vector<T>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

template <typename T>
std::string pretty(const std::vector<T>& coeffs, char var) {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const T& c = coeffs[k];
    if (c == 0) continue;
    T magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || magnitude != 1) out << magnitude.get_str();
    if (k >= 1) out << var;
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  normalize();
}

void IntPolynomial::normalize() { trim_trailing_zeros(coeffs_); }

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(std::size_t degree, const Integer& c) {
  std::vector<Integer> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::linear_factor(const Integer& root) {
  return IntPolynomial(std::vector<Integer>{-root, Integer(1)});
}

IntPolynomial IntPolynomial::from_descending_csv(const std::string& text) {
  std::vector<Integer> coeffs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      coeffs.emplace_back(item);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad polynomial coefficient '" + item + "'");
    }
  }
  std::reverse(coeffs.begin(), coeffs.end());
  return IntPolynomial(std::move(coeffs));
}

Integer IntPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + Rational(coeffs_[k]);
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const { return sgn(evaluate(x)); }

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) + b.coefficient(k);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) - b.coefficient(k);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_ascending_csv() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ',';
    out += coeffs_[k].get_str();
  }
  return out;
}

std::string IntPolynomial::to_descending_csv() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    out += coeffs_[k].get_str();
    if (k) out += ',';
  }
  return out;
}

std::string IntPolynomial::to_pretty(char var) const { return pretty(coeffs_, var); }

std::uint64_t IntPolynomial::digest() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : to_ascending_csv()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("divide_exact: division by the zero polynomial");
  if (num.is_zero()) return IntPolynomial{};
  if (num.degree() < den.degree()) return std::nullopt;
  std::vector<Integer> rem = num.coefficients();
  const auto& d = den.coefficients();
  const std::size_t dn = d.size();
  std::vector<Integer> quot(rem.size() - dn + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Integer& top = rem[k + dn - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t())) return std::nullopt;
    Integer c = top / d.back();
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= c * d[j];
    quot[k] = std::move(c);
  }
  for (const auto& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

unsigned root_multiplicity(const IntPolynomial& poly, const Rational& root) {
  if (poly.is_zero()) throw std::invalid_argument("root_multiplicity: zero polynomial");
  const IntPolynomial factor(std::vector<Integer>{-root.get_num(), root.get_den()});
  unsigned k = 0;
  IntPolynomial current = poly;
  while (auto q = divide_exact(current, factor)) {
    ++k;
    current = std::move(*q);
  }
  return k;
}

RatPolynomial::RatPolynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  normalize();
}

void RatPolynomial::normalize() { trim_trailing_zeros(coeffs_); }

Rational RatPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational RatPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) + b.coefficient(k);
  return RatPolynomial(std::move(out));
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::scaled(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return RatPolynomial(std::move(out));
}

std::string RatPolynomial::to_pretty(char var) const { return pretty(coeffs_, var); }

RatPolynomial lagrange_interpolate(const std::vector<InterpolationPoint>& points) {
  if (points.empty()) throw std::invalid_argument("lagrange_interpolate: no points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].x == points[j].x) {
        throw std::invalid_argument("lagrange_interpolate: duplicate x = " + points[i].x.get_str());
      }
    }
  }
  RatPolynomial result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    RatPolynomial basis({Rational(1)});
    Rational denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * RatPolynomial({Rational(-points[j].x), Rational(1)});
      denom *= points[i].x - points[j].x;
    }
    result = result + basis.scaled(points[i].y / denom);
  }
  return result;
}

}  // namespace eccspec
