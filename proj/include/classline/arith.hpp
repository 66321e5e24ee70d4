// Exact integer and rational substrate: arbitrary-precision naturals,
// Gaussian binomials, prime factorization, and the quadratic exponent
// polynomials in (n, m) that carry every logarithmic bound in the engine.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace classline {

using Nat = boost::multiprecision::cpp_int;  // nonnegative by convention
using Rat = boost::multiprecision::cpp_rational;

// base^e for e >= 0.
Nat ipow(const Nat& base, long long e);

// Number of m-dimensional subspaces of an n-dimensional space over a field
// with q elements. Exact; computed with interleaved multiply/divide so the
// intermediates stay near the size of the result.
Nat gaussian_binomial(long long n, long long m, const Nat& q);

// Quadratic polynomial a*n^2 + b*nm + c*m^2 + d*n + e*m + f with rational
// coefficients, evaluated exactly at integer (n, m).
struct ExpExpr {
  Rat n2, nm, m2, n, m, c;

  Rat eval(long long nv, long long mv = 0) const;
  bool operator==(const ExpExpr&) const = default;
  ExpExpr operator+(const ExpExpr& o) const;
  ExpExpr operator-(const ExpExpr& o) const;
  bool is_zero() const;
  std::string to_string() const;  // human-readable, for reports
};

struct Factor {
  Nat prime;
  int exponent = 0;
  bool certified = true;  // false when primality rests on probabilistic rounds
};

// Prime factorization with strictly increasing primes; product of prime
// powers equals the input. Throws std::domain_error on x = 0.
std::vector<Factor> prime_factorize(const Nat& x);

// Primality: deterministic for x < 2^64; otherwise strong probable-prime
// testing with *certified (if given) set to false.
bool is_prime(const Nat& x, bool* certified = nullptr);

// Largest e >= 0 with q^e <= x. Requires x >= 1 and q >= 2.
long long q_log_floor(const Nat& x, const Nat& q);

// Exact three-way comparison of x against q^e for rational e >= 0:
// returns -1, 0, or +1 as x <, =, > q^e. Cross-multiplies to integer powers.
int cmp_pow(const Nat& x, const Nat& q, const Rat& e);

// floor of a rational
Nat rat_floor(const Rat& r);

}  // namespace classline
