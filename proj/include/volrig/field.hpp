#pragma once

// Exact scalar arithmetic: arbitrary-precision rationals (GMP) and a
// 64-bit prime field used for randomized genericity evaluations.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace volrig {

using Rational = mpq_class;
using Integer = mpz_class;

/// Largest prime below 2^62.
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;

/// Fixed default seed so every tool run is reproducible out of the box.
inline constexpr std::uint64_t kDefaultSeed = 271828182845ULL;

inline constexpr int kDefaultTrials = 2;

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Derives an independent RNG stream from a master seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 1));
}

/// Z/qZ for a checked 64-bit prime q. Elements are plain uint64_t in [0, q).
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t q = kDefaultPrime) : q_(q) {
    if (!is_prime_u64(q)) throw std::invalid_argument("PrimeField: modulus " + std::to_string(q) + " is not prime");
  }

  std::uint64_t modulus() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % q_; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(q_);
    if (r < 0) r += static_cast<long long>(q_);
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    if (s >= q_ || s < a) s -= q_;
    return s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (q_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : q_ - a; }
  Elem mul(Elem a, Elem b) const { return mulmod_u64(a, b, q_); }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    return powmod_u64(a, q_ - 2, q_);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Uniform element via rejection sampling; portable across standard libraries,
  /// unlike std::uniform_int_distribution.
  Elem uniform(std::mt19937_64& rng) const {
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % q_);
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    return x % q_;
  }

 private:
  std::uint64_t q_;
};

/// Exact rational arithmetic presented through the same interface as PrimeField,
/// so elimination code can be shared.
struct RationalField {
  using Elem = Rational;

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem from_int(long long v) const { return Rational(static_cast<long>(v)); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("RationalField: inverse of zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const {
    if (sgn(b) == 0) throw std::domain_error("RationalField: division by zero");
    return a / b;
  }
};

/// Accepts "a", "-a" or "a/b". GMP canonicalizes to lowest terms.
inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

}  // namespace volrig
