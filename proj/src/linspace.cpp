/*
 * Parameter arithmetic for regular linear spaces. Everything here is a
 * direct consequence of double counting: r(k-1) = v-1, bk = vr, Fisher's
 * inequality, and the fixed-structure caps derived from them.
 */
#include "classline/linspace.hpp"

#include <boost/integer/common_factor.hpp>

#include <stdexcept>

namespace classline {

Feasibility derive_params(const Nat& v, const Nat& k) {
  if (k < 3) throw std::domain_error("line size must be at least 3");
  if (v <= k) throw std::domain_error("point count must exceed the line size");
  Feasibility out;
  if ((v - 1) % (k - 1) != 0) {
    out.reason = "line degree (v-1)/(k-1) is not an integer";
    return out;
  }
  const Nat r = (v - 1) / (k - 1);
  if ((v * r) % k != 0) {
    out.reason = "line count v*r/k is not an integer";
    return out;
  }
  const Nat b = v * r / k;
  if (r < k) {
    out.reason = "Fisher violation: fewer lines than points (r < k)";
    return out;
  }
  out.feasible = true;
  out.params = {v, b, r, k};
  return out;
}

bool is_projective_plane(const LinSpaceParams& p) { return p.b == p.v; }

std::string classify(const LinSpaceParams& p) {
  return is_projective_plane(p) ? "projective-plane" : "regular";
}

SignificantPrimes significant_primes(const LinSpaceParams& p, const Nat& characteristic) {
  SignificantPrimes out;
  out.certified = true;
  const Nat g = boost::multiprecision::gcd(p.v - 1, p.b);
  if (g > 1) {
    for (const auto& f : prime_factorize(g)) {
      if (f.prime == characteristic) continue;
      out.primes.insert(f.prime);
      out.certified = out.certified && f.certified;
    }
  }
  out.contradiction = out.primes.empty();
  return out;
}

Nat fixed_point_cap(const LinSpaceParams& p) { return p.r + p.k - 3; }

Nat k_cap_from_fixed(const Nat& v, const Nat& f) {
  if (f == 0) throw std::domain_error("fixed-point count must be positive");
  return (2 * v - 1) / f;
}

Nat k_cap_from_class(const Nat& w, const Nat& a) {
  if (a == 0) throw std::domain_error("class-size lower bound must be positive");
  return (2 * w - 1) / a;
}

VCap v_cap_main(const Nat& w, const Nat& a, const Nat& c, bool h_is_involution) {
  if (a == 0) throw std::domain_error("class-size lower bound must be positive");
  VCap out;
  out.k_cap = k_cap_from_class(w, a);
  out.intermediate = c * out.k_cap * (out.k_cap - 1) + 1;
  const Nat numerator = (h_is_involution ? 2 : 4) * w * w * c;
  out.cap = numerator / (a * a);
  return out;
}

Nat dd_cap(const Nat& k) { return k * (k - 1) / 2; }

PGParams pg_params(long long n, const Nat& q) {
  if (n < 3) throw std::domain_error("projective space needs dimension n >= 3");
  if (q < 2) throw std::domain_error("field order must be at least 2");
  PGParams out;
  out.v = (ipow(q, n) - 1) / (q - 1);
  out.b = gaussian_binomial(n, 2, q);
  out.r = (ipow(q, n - 1) - 1) / (q - 1);
  out.k = q + 1;
  return out;
}

}  // namespace classline
