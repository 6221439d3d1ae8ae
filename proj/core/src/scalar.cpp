#include "tq/scalar.hpp"

#include <ostream>

#include "tq/error.hpp"

namespace tq {

namespace {

thread_local Field g_current{};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(long v, std::uint64_t m) {
  long r = v % static_cast<long>(m);
  if (r < 0) r += static_cast<long>(m);
  return static_cast<std::uint64_t>(r);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonAcyclic: return "NonAcyclic";
    case ErrorKind::NestedThread: return "NestedThread";
    case ErrorKind::ElementNotFound: return "ElementNotFound";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::WindowMismatch: return "WindowMismatch";
    case ErrorKind::ExceedsBound: return "ExceedsBound";
    case ErrorKind::BoundaryContaminated: return "BoundaryContaminated";
    case ErrorKind::EndNotSplit: return "EndNotSplit";
    case ErrorKind::NotFunctorial: return "NotFunctorial";
    case ErrorKind::AlphaNotInvertible: return "AlphaNotInvertible";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::NotProjectiveCertified: return "NotProjectiveCertified";
    case ErrorKind::ZNotExtOrthogonal: return "ZNotExtOrthogonal";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::NestedThreadLabel: return "NestedThreadLabel";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p) || p >= (1ULL << 62))
    throw Error(ErrorKind::InvalidArgument, "not a usable prime: " + std::to_string(p));
  return Field{p};
}

std::string Field::name() const { return modulus ? "fp:" + std::to_string(modulus) : "q"; }

Field Field::current() { return g_current; }
void Field::set_current(Field f) { g_current = f; }

Scalar::Scalar(long v) : mod_(g_current.modulus) {
  if (mod_)
    r_ = reduce(v, mod_);
  else
    q_ = v;
}

Scalar::Scalar(long num, long den) : Scalar(num) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  *this /= Scalar(den);
}

Scalar Scalar::from_rational(const mpq_class& q) {
  Scalar s;
  if (s.mod_) {
    mpz_class n = q.get_num() % mpz_class(static_cast<unsigned long>(s.mod_));
    mpz_class d = q.get_den() % mpz_class(static_cast<unsigned long>(s.mod_));
    if (n < 0) n += static_cast<unsigned long>(s.mod_);
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes mod p");
    s.r_ = mulmod(n.get_ui(), powmod(d.get_ui(), s.mod_ - 2, s.mod_), s.mod_);
  } else {
    s.q_ = q;
  }
  return s;
}

void Scalar::check_same(const Scalar& o) const {
  if (mod_ != o.mod_) throw Error(ErrorKind::FieldMismatch, "scalars from different fields");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Scalar s = *this;
  if (mod_)
    s.r_ = powmod(r_, mod_ - 2, mod_);
  else
    s.q_ = 1 / q_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (mod_) {
    r_ += o.r_;
    if (r_ >= mod_) r_ -= mod_;
  } else {
    q_ += o.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (mod_)
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + mod_ - o.r_;
  else
    q_ -= o.q_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (mod_)
    r_ = mulmod(r_, o.r_, mod_);
  else
    q_ *= o.q_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (mod_)
    s.r_ = r_ ? mod_ - r_ : 0;
  else
    s.q_ = -q_;
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  return a.mod_ ? a.r_ == b.r_ : a.q_ == b.q_;
}

std::string Scalar::str() const { return mod_ ? std::to_string(r_) : q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace tq
