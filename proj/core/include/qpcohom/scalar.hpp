#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qpc {

// Field of coefficients. Rational by default; a prime field can be selected
// once per session (all live Scalars must be created under the same field).
namespace field {
void use_rationals();
void use_prime(unsigned long p);
unsigned long prime();  // 0 means rationals
std::string describe();
// Parses "q" or "fp:P"; throws InputError on anything else.
void configure(std::string_view spec);
}  // namespace field

class Scalar {
 public:
  Scalar() = default;
  Scalar(long v);  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& v);

  // Integer or p/q literal.
  static Scalar parse(std::string_view text);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  const mpq_class& value() const { return v_; }
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

 private:
  void reduce();
  mpq_class v_;
};

}  // namespace qpc
