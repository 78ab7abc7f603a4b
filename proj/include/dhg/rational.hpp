#ifndef DHG_RATIONAL_HPP
#define DHG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dhg {

// Exact rational number, always held in canonical form (gcd(p,q)=1, q>0).
// Thin value wrapper over GMP's mpq_class; every constructor canonicalizes.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  // Accepts "p", "-p", "p/q" with decimal digits; rejects everything else.
  static Rational from_string(std::string_view s);

  const mpq_class& raw() const { return v_; }
  std::string str() const;        // always "p/q", e.g. "1/1"
  std::string str_short() const;  // "p" when q == 1
  double to_double() const { return v_.get_d(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

inline Rational Rational::from_string(std::string_view s) {
  auto digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = s, den;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    bool nonzero = false;
    for (char c : den) nonzero = nonzero || c != '0';
    if (!digits(den) || !nonzero)
      throw std::invalid_argument("Rational: bad denominator in \"" + std::string(s) + "\"");
  }
  std::string_view mag = num;
  if (!mag.empty() && mag.front() == '-') mag.remove_prefix(1);
  if (!digits(mag))
    throw std::invalid_argument("Rational: bad numerator in \"" + std::string(s) + "\"");
  mpq_class q(std::string(s), 10);
  q.canonicalize();
  return Rational(std::move(q));
}

inline std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

inline std::string Rational::str_short() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return str();
}

}  // namespace dhg

#endif  // DHG_RATIONAL_HPP
