#include "dglift/scalar.hpp"

namespace dglift {

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not a prime below 2^31");
  return Field{p};
}

std::string Field::describe() const { return p == 0 ? "Q" : "F_" + std::to_string(p); }

Scalar Scalar::from_int(const Field& f, long long n) {
  if (f.is_rational()) return Scalar(mpq_class(static_cast<long>(n)));
  long long r = n % static_cast<long long>(f.p);
  if (r < 0) r += static_cast<long long>(f.p);
  return Scalar(Residue{static_cast<std::uint64_t>(r), f.p});
}

Scalar Scalar::from_fraction(const Field& f, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (f.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
  }
  std::uint64_t d = reduce(den, f.p);
  if (d == 0) throw std::domain_error("denominator vanishes in " + f.describe());
  std::uint64_t n = reduce(num, f.p);
  return Scalar(Residue{n * mod_pow(d, f.p - 2, f.p) % f.p, f.p});
}

Field Scalar::field() const {
  if (auto r = std::get_if<Residue>(&value_)) return Field{r->p};
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<Residue>(&value_)) return r->v == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<Residue>(&value_)) return r->v == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::require_same(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index() ||
      (a.value_.index() == 1 && std::get<Residue>(a.value_).p != std::get<Residue>(b.value_).p))
    throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(*this, o);
  if (auto r = std::get_if<Residue>(&value_)) {
    auto s = std::get<Residue>(o.value_);
    return Scalar(Residue{(r->v + s.v) % r->p, r->p});
  }
  return Scalar(mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(o.value_)));
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same(*this, o);
  if (auto r = std::get_if<Residue>(&value_)) {
    auto s = std::get<Residue>(o.value_);
    return Scalar(Residue{(r->v + r->p - s.v) % r->p, r->p});
  }
  return Scalar(mpq_class(std::get<mpq_class>(value_) - std::get<mpq_class>(o.value_)));
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(*this, o);
  if (auto r = std::get_if<Residue>(&value_)) {
    auto s = std::get<Residue>(o.value_);
    return Scalar(Residue{r->v * s.v % r->p, r->p});
  }
  return Scalar(mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(o.value_)));
}

Scalar Scalar::operator-() const {
  if (auto r = std::get_if<Residue>(&value_)) return Scalar(Residue{(r->p - r->v) % r->p, r->p});
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (auto r = std::get_if<Residue>(&value_))
    return Scalar(Residue{mod_pow(r->v, r->p - 2, r->p), r->p});
  return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

bool Scalar::operator==(const Scalar& o) const {
  if (value_.index() != o.value_.index()) return false;
  if (auto r = std::get_if<Residue>(&value_)) {
    auto s = std::get<Residue>(o.value_);
    return r->p == s.p && r->v == s.v;
  }
  return std::get<mpq_class>(value_) == std::get<mpq_class>(o.value_);
}

bool Scalar::is_negative() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q < 0;
  return false;
}

std::string Scalar::to_string() const {
  if (auto r = std::get_if<Residue>(&value_)) return std::to_string(r->v);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace dglift
