/*
 * Classical group orders at all levels, minimal permutation degrees, and
 * subfield similarity orders. Every quotient is checked for exact
 * divisibility; a failed division indicates a table or formula error and
 * throws std::logic_error.
 */
#include "classline/orders.hpp"

#include "classline/data.hpp"

#include <boost/integer/common_factor.hpp>

#include <stdexcept>

namespace classline {

namespace {

Nat exact_div(const Nat& a, const Nat& b) {
  if (b == 0 || a % b != 0)
    throw std::logic_error("inexact group-order division: " + a.str() + " / " + b.str());
  return a / b;
}

Nat gcd_nat(const Nat& a, const Nat& b) { return boost::multiprecision::gcd(a, b); }

Nat isometry_order(const Socle& s) {
  const Nat q = s.q();
  switch (s.family) {
    case Family::Linear: return order_gl(s.n, q);
    case Family::Unitary: return order_gu(s.n, q);
    case Family::Symplectic: return order_sp(s.n, q);
    case Family::OrthogonalOdd: return order_go_odd(s.n, q);
    case Family::OrthogonalEvenPlus: return order_go_even(s.n, q, 1);
    case Family::OrthogonalEvenMinus: return order_go_even(s.n, q, -1);
  }
  throw std::logic_error("unreachable family");
}

// Sign-specific family label used by the min-degree exception table.
std::string exception_family(const Socle& s) {
  switch (s.family) {
    case Family::OrthogonalEvenPlus: return "orthogonal-even-plus";
    case Family::OrthogonalEvenMinus: return "orthogonal-even-minus";
    default: return s.family_str();
  }
}

}  // namespace

Nat order_gl(long long n, const Nat& q) {
  Nat order = ipow(q, n * (n - 1) / 2);
  for (long long i = 1; i <= n; ++i) order *= ipow(q, i) - 1;
  return order;
}

Nat order_gu(long long n, const Nat& q) {
  Nat order = ipow(q, n * (n - 1) / 2);
  for (long long i = 1; i <= n; ++i) order *= ipow(q, i) - (i % 2 == 0 ? 1 : -1);
  return order;
}

Nat order_sp(long long n, const Nat& q) {
  const long long m = n / 2;
  Nat order = ipow(q, m * m);
  for (long long i = 1; i <= m; ++i) order *= ipow(q, 2 * i) - 1;
  return order;
}

Nat order_go_odd(long long n, const Nat& q) {
  const long long m = (n - 1) / 2;
  Nat order = 2 * ipow(q, m * m);
  for (long long i = 1; i <= m; ++i) order *= ipow(q, 2 * i) - 1;
  return order;
}

Nat order_go_even(long long n, const Nat& q, int sign) {
  const long long m = n / 2;
  Nat order = 2 * ipow(q, m * (m - 1)) * (ipow(q, m) - sign);
  for (long long i = 1; i < m; ++i) order *= ipow(q, 2 * i) - 1;
  return order;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Linear: return "linear";
    case Family::Unitary: return "unitary";
    case Family::Symplectic: return "symplectic";
    case Family::OrthogonalOdd: return "orthogonal-odd";
    case Family::OrthogonalEvenPlus: return "orthogonal-even-plus";
    case Family::OrthogonalEvenMinus: return "orthogonal-even-minus";
  }
  throw std::logic_error("unreachable family");
}

Family family_from_name(const std::string& name) {
  if (name == "linear") return Family::Linear;
  if (name == "unitary") return Family::Unitary;
  if (name == "symplectic") return Family::Symplectic;
  if (name == "orthogonal-odd") return Family::OrthogonalOdd;
  if (name == "orthogonal-even-plus") return Family::OrthogonalEvenPlus;
  if (name == "orthogonal-even-minus") return Family::OrthogonalEvenMinus;
  throw std::domain_error("unknown family: " + name);
}

std::string level_name(GroupLevel level) {
  switch (level) {
    case GroupLevel::Isometry: return "isometry";
    case GroupLevel::Special: return "special";
    case GroupLevel::Omega: return "omega";
    case GroupLevel::ProjectiveSimple: return "projective-simple";
    case GroupLevel::Similarity: return "similarity";
  }
  throw std::logic_error("unreachable level");
}

GroupLevel level_from_name(const std::string& name) {
  if (name == "isometry") return GroupLevel::Isometry;
  if (name == "special") return GroupLevel::Special;
  if (name == "omega") return GroupLevel::Omega;
  if (name == "projective-simple") return GroupLevel::ProjectiveSimple;
  if (name == "similarity") return GroupLevel::Similarity;
  throw std::domain_error("unknown group level: " + name);
}

Nat Socle::q() const { return ipow(Nat(p), a); }

bool Socle::q_even() const { return p == 2; }

int Socle::sign() const {
  if (family == Family::OrthogonalEvenPlus) return 1;
  if (family == Family::OrthogonalEvenMinus) return -1;
  return 0;
}

std::string Socle::family_str() const {
  switch (family) {
    case Family::Linear: return "linear";
    case Family::Unitary: return "unitary";
    case Family::Symplectic: return "symplectic";
    case Family::OrthogonalOdd: return "orthogonal-odd";
    case Family::OrthogonalEvenPlus:
    case Family::OrthogonalEvenMinus: return "orthogonal-even";
  }
  throw std::logic_error("unreachable family");
}

void Socle::validate() const {
  if (a < 1) throw std::domain_error("field exponent a must be >= 1");
  if (p < 2 || !is_prime(Nat(p))) throw std::domain_error("characteristic must be prime");
  switch (family) {
    case Family::Linear:
      if (n < 2) throw std::domain_error("linear: dimension must be >= 2");
      break;
    case Family::Unitary:
      if (n < 3) throw std::domain_error("unitary: dimension must be >= 3");
      break;
    case Family::Symplectic:
      if (n < 2 || n % 2 != 0)
        throw std::domain_error("symplectic: dimension must be even and >= 2");
      break;
    case Family::OrthogonalOdd:
      if (n < 3 || n % 2 == 0)
        throw std::domain_error("odd orthogonal: dimension must be odd and >= 3");
      if (p == 2)
        throw std::domain_error("odd orthogonal: characteristic 2 is excluded "
                                "(the form degenerates to a symplectic one)");
      break;
    case Family::OrthogonalEvenPlus:
    case Family::OrthogonalEvenMinus:
      if (n < 2 || n % 2 != 0)
        throw std::domain_error("even orthogonal: dimension must be even and >= 2");
      break;
  }
}

Socle make_socle(Family family, long long n, long long q_value) {
  if (q_value < 2) throw std::domain_error("field order must be >= 2");
  const auto factors = prime_factorize(Nat(q_value));
  if (factors.size() != 1)
    throw std::domain_error("field order must be a prime power: " + std::to_string(q_value));
  Socle s;
  s.family = family;
  s.n = n;
  s.p = static_cast<long long>(factors[0].prime);
  s.a = factors[0].exponent;
  s.validate();
  return s;
}

Nat group_order(const Socle& s, GroupLevel level) {
  s.validate();
  const Nat q = s.q();
  const Nat iso = isometry_order(s);
  switch (s.family) {
    case Family::Linear:
      switch (level) {
        case GroupLevel::Isometry:
        case GroupLevel::Similarity: return iso;
        case GroupLevel::Special:
        case GroupLevel::Omega: return exact_div(iso, q - 1);
        case GroupLevel::ProjectiveSimple:
          return exact_div(iso, (q - 1) * gcd_nat(Nat(s.n), q - 1));
      }
      break;
    case Family::Unitary:
      switch (level) {
        case GroupLevel::Isometry: return iso;
        case GroupLevel::Similarity: return (q - 1) * iso;
        case GroupLevel::Special:
        case GroupLevel::Omega: return exact_div(iso, q + 1);
        case GroupLevel::ProjectiveSimple:
          return exact_div(iso, (q + 1) * gcd_nat(Nat(s.n), q + 1));
      }
      break;
    case Family::Symplectic:
      switch (level) {
        case GroupLevel::Isometry:
        case GroupLevel::Special:
        case GroupLevel::Omega: return iso;
        case GroupLevel::Similarity: return (q - 1) * iso;
        case GroupLevel::ProjectiveSimple:
          return exact_div(iso, gcd_nat(Nat(2), q - 1));
      }
      break;
    case Family::OrthogonalOdd:
      switch (level) {
        case GroupLevel::Isometry: return iso;
        case GroupLevel::Special: return exact_div(iso, 2);
        case GroupLevel::Omega:
        case GroupLevel::ProjectiveSimple: return exact_div(iso, 4);
        case GroupLevel::Similarity: return exact_div((q - 1) * iso, 2);
      }
      break;
    case Family::OrthogonalEvenPlus:
    case Family::OrthogonalEvenMinus:
      if (s.q_even()) {
        switch (level) {
          case GroupLevel::Isometry:
          case GroupLevel::Special: return iso;
          case GroupLevel::Omega:
          case GroupLevel::ProjectiveSimple: return exact_div(iso, 2);
          case GroupLevel::Similarity: return (q - 1) * iso;
        }
      } else {
        switch (level) {
          case GroupLevel::Isometry: return iso;
          case GroupLevel::Special: return exact_div(iso, 2);
          case GroupLevel::Omega: return exact_div(iso, 4);
          case GroupLevel::ProjectiveSimple: {
            const int d = group_data().even_orth_divisor(q, s.n / 2, s.sign());
            return exact_div(iso, 2 * d);
          }
          case GroupLevel::Similarity: return exact_div((q - 1) * iso, 2);
        }
      }
      break;
  }
  throw std::logic_error("unreachable level");
}

MinDegree min_degree(const Socle& s) {
  s.validate();
  const Nat q = s.q();
  for (const auto& ex : group_data().min_degree_exceptions) {
    if (ex.family == exception_family(s) && ex.n == s.n && Nat(ex.q) == q)
      return {ex.value, false};
  }
  const long long n = s.n;
  switch (s.family) {
    case Family::Linear:
      return {exact_div(ipow(q, n) - 1, q - 1), true};
    case Family::Unitary: {
      if (n == 3) return {ipow(q, 3) + 1, true};
      if (n == 4) return {(q + 1) * (ipow(q, 3) + 1), true};
      const int sn = n % 2 == 0 ? 1 : -1;
      const Nat num = (ipow(q, n) - sn) * (ipow(q, n - 1) + sn);
      return {exact_div(num, q * q - 1), true};
    }
    case Family::Symplectic: {
      if (q == 2) {
        const long long m = n / 2;
        return {ipow(Nat(2), m - 1) * (ipow(Nat(2), m) - 1), true};
      }
      return {exact_div(ipow(q, n) - 1, q - 1), true};
    }
    case Family::OrthogonalOdd: {
      const long long m = (n - 1) / 2;
      if (q == 3) return {exact_div(ipow(Nat(3), m) * (ipow(Nat(3), m) - 1), 2), true};
      return {exact_div(ipow(q, n - 1) - 1, q - 1), true};
    }
    case Family::OrthogonalEvenPlus: {
      const long long m = n / 2;
      if (q == 2) return {ipow(Nat(2), m - 1) * (ipow(Nat(2), m) - 1), true};
      if (q == 3)
        return {exact_div(ipow(Nat(3), m - 1) * (ipow(Nat(3), m) - 1), 2), true};
      return {exact_div((ipow(q, m) - 1) * (ipow(q, m - 1) + 1), q - 1), true};
    }
    case Family::OrthogonalEvenMinus: {
      const long long m = n / 2;
      return {exact_div((ipow(q, m) + 1) * (ipow(q, m - 1) - 1), q - 1), true};
    }
  }
  throw std::logic_error("unreachable family");
}

Nat subfield_similarity_order(const Socle& s, long long r) {
  s.validate();
  if (r < 1 || s.a % r != 0)
    throw std::domain_error("subfield index must divide the field exponent");
  Socle sub = s;
  sub.a = s.a / r;
  const Nat order = group_order(sub, GroupLevel::Similarity);
  if (r == 1) return order;
  const std::string key =
      s.family == Family::Linear ? "linear"
      : s.family == Family::Unitary ? "unitary"
      : s.family == Family::Symplectic ? "symplectic" : "orthogonal";
  return group_data().covering_constant(key, s.q()) * order;
}

long long simple_degree(const Socle& s) {
  const long long n = s.n;
  switch (s.family) {
    case Family::Linear:
    case Family::Unitary: return n * n - 1;
    case Family::Symplectic: return (n * n + n) / 2;
    default: return (n * n - n) / 2;
  }
}

long long similarity_degree(const Socle& s) {
  const long long n = s.n;
  switch (s.family) {
    case Family::Linear: return n * n;
    case Family::Unitary: return n * n + 1;
    case Family::Symplectic: return (n * n + n) / 2 + 1;
    default: return (n * n - n) / 2 + 1;
  }
}

}  // namespace classline
