#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace blockcraft {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Argument outside an operation's domain.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource bound (table size, enumeration size) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested computation lies outside the supported parameter regime.
class UnsupportedRegime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A verification that should never fail did fail.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigInt big_pow(long base, unsigned long exp) { return big_pow(BigInt(base), exp); }

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Exponent of the prime `p` in `x`; `x` must be nonzero.
inline unsigned valuation(BigInt x, unsigned long p) {
  if (x == 0) throw ArgumentError("valuation of zero");
  if (x < 0) x = -x;
  unsigned v = 0;
  while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
    ++v;
  }
  return v;
}

inline unsigned valuation(std::uint64_t x, std::uint64_t p) {
  if (x == 0) throw ArgumentError("valuation of zero");
  unsigned v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

/// Legendre: exponent of p in n!.
inline std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::uint64_t pk = p; pk <= n; pk *= p) {
    v += n / pk;
    if (pk > n / p) break;
  }
  return v;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Returns the prime p with q = p^f, or throws if q is not a prime power.
inline std::uint64_t characteristic(std::uint64_t q) {
  if (q < 2) throw ArgumentError("q must be a prime power >= 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint64_t r = q;
  while (r % p == 0) r /= p;
  if (r != 1) throw ArgumentError("q = " + std::to_string(q) + " is not a prime power");
  return p;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/// Exact division; throws if the quotient is not integral.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw VerificationFailure("non-exact division " + a.get_str() + " / " + b.get_str());
  BigInt r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace blockcraft
