#include "shiftchaos/scalar.hpp"

#include "shiftchaos/errors.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <utility>

namespace shiftchaos {

namespace {

double log_of_integer(const mpz_class& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::abs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

// (a + b i)^e for Gaussian integers, e >= 0.
std::pair<mpz_class, mpz_class> gaussian_pow(mpz_class a, mpz_class b, std::uint64_t e) {
  mpz_class ra = 1, rb = 0;
  while (e > 0) {
    if (e & 1u) {
      mpz_class t = ra * a - rb * b;
      rb = ra * b + rb * a;
      ra = std::move(t);
    }
    e >>= 1u;
    if (e > 0) {
      mpz_class t = a * a - b * b;
      b = 2 * a * b;
      a = std::move(t);
    }
  }
  return {std::move(ra), std::move(rb)};
}

mpz_class zpow(const mpz_class& base, std::uint64_t e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

double log_of(const Rational& q) {
  if (sgn(q) <= 0) {
    return sgn(q) == 0 ? -std::numeric_limits<double>::infinity()
                       : std::numeric_limits<double>::quiet_NaN();
  }
  return log_of_integer(q.get_num()) - log_of_integer(q.get_den());
}

Rational pow(const Rational& q, std::int64_t e) {
  if (e == 0) return Rational(1);
  const auto ue = static_cast<std::uint64_t>(e < 0 ? -e : e);
  if (e < 0 && sgn(q) == 0) throw InvalidArgument("zero raised to a negative power");
  // num/den stay coprime under powers; only the sign needs moving.
  mpz_class num = zpow(q.get_num(), ue);
  mpz_class den = zpow(q.get_den(), ue);
  Rational r;
  if (e > 0) {
    r = Rational(num, den);
  } else {
    r = Rational(den, num);
  }
  r.canonicalize();
  return r;
}

Scalar::Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

double Scalar::log_abs() const { return 0.5 * log_of(norm_sq()); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero scalar");
  const Rational n = norm_sq();
  return Scalar(Rational(re_ / n), Rational(-im_ / n));
}

Scalar Scalar::pow(std::int64_t e) const {
  if (e == 0) return Scalar(1);
  if (e < 0) {
    if (is_zero()) throw InvalidArgument("zero raised to a negative power");
    return inverse().pow(-e);
  }
  if (is_real()) return Scalar(shiftchaos::pow(re_, e));
  // Gaussian integer over a common denominator keeps the loop gcd-free.
  const mpz_class d = lcm(re_.get_den(), im_.get_den());
  const mpz_class a = re_.get_num() * (d / re_.get_den());
  const mpz_class b = im_.get_num() * (d / im_.get_den());
  auto [pa, pb] = gaussian_pow(a, b, static_cast<std::uint64_t>(e));
  const mpz_class den = zpow(d, static_cast<std::uint64_t>(e));
  Rational r(pa, den), i(pb, den);
  return Scalar(std::move(r), std::move(i));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero scalar");
  if (is_real() && o.is_real()) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  text = trim(text);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (sgn(d) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string Scalar::str() const {
  if (is_real()) return to_string(re_);
  std::string s = to_string(re_);
  if (sgn(im_) < 0) {
    s += "-" + to_string(Rational(-im_));
  } else {
    s += "+" + to_string(im_);
  }
  return s + " i";
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty()) throw ParseError("empty scalar literal");
  if (t.back() != 'i') return Scalar(parse_rational(t));
  t.remove_suffix(1);
  t = trim(t);
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t j = t.size(); j-- > 1;) {
    if (t[j] == '+' || t[j] == '-') {
      split = j;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view("0") : t.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? t : t.substr(split);
  im_part = trim(im_part);
  Rational im;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    im = parse_rational(im_part);
  }
  return Scalar(parse_rational(re_part), std::move(im));
}

}  // namespace shiftchaos
