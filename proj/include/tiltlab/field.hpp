#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace tiltlab {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Ground field descriptor.  Only exact fields: Q, or F_p with p prime.
// For F_p the caller must keep p larger than the dimension of any algebra
// whose radical is computed (trace-form guard).
struct FieldSpec {
  enum class Kind { rationals, prime_field };
  Kind kind = Kind::rationals;
  std::uint64_t p = 0;

  bool operator==(const FieldSpec&) const = default;
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Arbitrary-precision rationals.  Stateless; all elements exact.
class Rationals {
public:
  using Elem = mpq_class;

  FieldSpec spec() const { return {FieldSpec::Kind::rationals, 0}; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  Elem from_mpq(const mpq_class& v) const { return v; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw Error("division by zero in Q");
    return Elem(1) / a;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  std::string to_string(const Elem& a) const {
    mpq_class c(a);
    c.canonicalize();
    return c.get_str();
  }

  bool operator==(const Rationals&) const { return true; }
};

// Prime field F_p, elements stored as canonical residues in [0, p).
class PrimeField {
public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime_u64(p)) throw Error("F_p modulus is not prime: " + std::to_string(p));
    if (p >= (std::uint64_t(1) << 62)) throw Error("F_p modulus too large");
  }

  FieldSpec spec() const { return {FieldSpec::Kind::prime_field, p_}; }
  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return static_cast<Elem>(r);
  }
  Elem from_mpq(const mpq_class& v) const {
    mpz_class num = v.get_num(), den = v.get_den();
    mpz_class pz(static_cast<unsigned long>(p_));
    mpz_class nr = num % pz, dr = den % pz;
    if (nr < 0) nr += pz;
    if (dr < 0) dr += pz;
    Elem d = static_cast<Elem>(dr.get_ui());
    if (d == 0) throw Error("rational literal has denominator divisible by p");
    return mul(static_cast<Elem>(nr.get_ui()), inv(d));
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw Error("division by zero in F_p");
    return pow(a, p_ - 2);
  }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = one(), base = a % p_;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  std::string to_string(Elem a) const { return std::to_string(a); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
  std::uint64_t p_;
};

}  // namespace tiltlab
