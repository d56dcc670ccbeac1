// Exact coefficients: the rationals or a prime field F_p.
#ifndef DGLIFT_SCALAR_HPP
#define DGLIFT_SCALAR_HPP

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <variant>

namespace dglift {

/// Descriptor of the coefficient field. `p == 0` means Q.
struct Field {
  std::uint64_t p = 0;

  static Field rationals() { return Field{0}; }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p == 0; }
  std::string describe() const;

  friend bool operator==(const Field&, const Field&) = default;
};

bool is_prime(std::uint64_t n);

class Scalar {
 public:
  /// Zero of Q.
  Scalar() : value_(mpq_class(0)) {}

  static Scalar zero(const Field& f) { return from_int(f, 0); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long long n);
  /// Exact num/den reduced into the field. Throws std::domain_error if den
  /// vanishes in the field.
  static Scalar from_fraction(const Field& f, const mpz_class& num, const mpz_class& den);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// True when the printed form needs a leading minus (rationals only; an
  /// F_p residue is printed as its representative in [0, p)).
  bool is_negative() const;
  /// "3", "-2/5", or the residue for F_p.
  std::string to_string() const;

  const mpq_class* as_rational() const { return std::get_if<mpq_class>(&value_); }

 private:
  struct Residue {
    std::uint64_t v;
    std::uint64_t p;
  };
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}

  static void require_same(const Scalar& a, const Scalar& b);

  std::variant<mpq_class, Residue> value_;
};

}  // namespace dglift

#endif  // DGLIFT_SCALAR_HPP
