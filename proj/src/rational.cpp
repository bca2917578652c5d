#include "ctv/rational.hpp"

#include <cctype>
#include <cmath>

#include "ctv/error.hpp"

namespace ctv {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::EmptyPiece: return "empty-piece";
    case ErrorKind::RankDeficient: return "rank-deficient";
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::ProfileMismatch: return "profile-mismatch";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::DegenerateIntersection: return "degenerate-intersection";
    case ErrorKind::NotPrime: return "not-prime";
    case ErrorKind::NonOrientable: return "non-orientable";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::ClosureViolation: return "closure-violation";
  }
  return "unknown";
}

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_text(num_text) || !is_integer_text(den_text) ||
      (!den_text.empty() && den_text.front() == '+')) {
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) {
    return std::string(s.front() == '+' ? s.substr(1) : s);
  };
  mpz_class num(strip_plus(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) {
    throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

int sign(const Rational& value) { return sgn(value); }

Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vector add(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector scale(const Rational& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

void axpy(Vector& v, const Rational& s, const Vector& w) {
  if (s == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += s * w[i];
}

Vector zeros(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit(std::size_t n, std::size_t i) {
  Vector e = zeros(n);
  e[i] = 1;
  return e;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Rational approximate(double x, long max_den) {
  // Continued-fraction convergents; stop before the denominator bound is exceeded.
  const bool negative = x < 0;
  double rest = std::fabs(x);
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(rest));
  mpz_class k_prev = 0, k = 1;
  rest -= std::floor(rest);
  for (int iter = 0; iter < 64 && rest > 1e-15; ++iter) {
    rest = 1.0 / rest;
    const auto a = static_cast<long>(std::floor(rest));
    rest -= static_cast<double>(a);
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  Rational q(h, k);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace ctv
