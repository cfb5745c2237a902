#include "qpcohom/scalar.hpp"

#include <atomic>
#include <cctype>

#include "qpcohom/error.hpp"

namespace qpc {

namespace {
std::atomic<unsigned long> g_prime{0};

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace

namespace field {
void use_rationals() { g_prime = 0; }

void use_prime(unsigned long p) {
  if (!is_prime(p)) throw InputError(0, "field modulus " + std::to_string(p) + " is not prime");
  g_prime = p;
}

unsigned long prime() { return g_prime; }

std::string describe() { return g_prime == 0 ? "q" : "fp:" + std::to_string(g_prime.load()); }

void configure(std::string_view spec) {
  if (spec == "q" || spec == "Q") {
    use_rationals();
    return;
  }
  if (spec.substr(0, 3) == "fp:" && spec.size() > 3) {
    std::string digits(spec.substr(3));
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InputError(0, "bad field spec '" + std::string(spec) + "'");
    use_prime(std::stoul(digits));
    return;
  }
  throw InputError(0, "bad field spec '" + std::string(spec) + "' (expected q or fp:P)");
}
}  // namespace field

Scalar::Scalar(long v) : v_(v) { reduce(); }

Scalar::Scalar(const mpq_class& v) : v_(v) { reduce(); }

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError(0, "empty coefficient");
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!check_int(num, true) || !check_int(den, false))
    throw InputError(0, "bad rational literal '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  mpz_class n(num), d(den);
  if (d == 0) throw InputError(0, "zero denominator in '" + s + "'");
  unsigned long p = g_prime;
  if (p != 0 && d % p == 0) throw InputError(0, "denominator of '" + s + "' vanishes in the prime field");
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(q);
}

std::string Scalar::str() const { return v_.get_str(); }

void Scalar::reduce() {
  unsigned long p = g_prime;
  if (p == 0) return;
  mpz_class mod(p);
  if (v_.get_den() == 1) {
    mpz_class r = v_.get_num() % mod;
    if (r < 0) r += mod;
    v_ = mpq_class(r);
    return;
  }
  mpz_class num = v_.get_num() % mod;
  if (num < 0) num += mod;
  mpz_class den = v_.get_den() % mod;
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw Error(ErrorKind::Semantic, "coefficient denominator vanishes in the prime field");
  v_ = mpq_class(mpz_class((num * inv) % mod));
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.v_ = -v_;
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  v_ += o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  v_ -= o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  v_ *= o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorKind::Semantic, "division by zero");
  unsigned long p = g_prime;
  if (p == 0) {
    v_ /= o.v_;
    return *this;
  }
  mpz_class inv, mod(p);
  mpz_invert(inv.get_mpz_t(), o.v_.get_num_mpz_t(), mod.get_mpz_t());
  v_ *= mpq_class(inv);
  reduce();
  return *this;
}

}  // namespace qpc
