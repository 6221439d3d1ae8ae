#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>

namespace tq {

// The ground field: the rationals (modulus 0) or Z/p for a prime p.
struct Field {
  std::uint64_t modulus = 0;

  static Field rationals() { return {}; }
  static Field prime(std::uint64_t p);
  bool is_rational() const { return modulus == 0; }
  std::string name() const;

  // Field used when scalars are built from integers. Thread-local.
  static Field current();
  static void set_current(Field f);

  friend bool operator==(const Field&, const Field&) = default;
};

// RAII switch of the thread's current field.
class FieldScope {
 public:
  explicit FieldScope(Field f) : saved_(Field::current()) { Field::set_current(f); }
  ~FieldScope() { Field::set_current(saved_); }
  FieldScope(const FieldScope&) = delete;
  FieldScope& operator=(const FieldScope&) = delete;

 private:
  Field saved_;
};

class Scalar {
 public:
  Scalar() : Scalar(0) {}
  Scalar(long v);  // NOLINT: implicit from integer literals is intended
  Scalar(int v) : Scalar(static_cast<long>(v)) {}
  Scalar(long num, long den);
  static Scalar from_rational(const mpq_class& q);

  std::uint64_t modulus() const { return mod_; }
  bool is_zero() const { return mod_ ? r_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return mod_ ? r_ == 1 : q_ == 1; }
  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  void check_same(const Scalar& o) const;

  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint64_t mod_ = 0;
};

}  // namespace tq
