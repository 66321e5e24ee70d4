#include "classline/arith.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <sstream>

namespace classline {

Nat ipow(const Nat& base, long long e) {
  if (e < 0) throw std::domain_error("ipow: negative exponent");
  Nat result = 1;
  Nat b = base;
  unsigned long long n = static_cast<unsigned long long>(e);
  while (n) {
    if (n & 1) result *= b;
    b *= b;
    n >>= 1;
  }
  return result;
}

Nat gaussian_binomial(long long n, long long m, const Nat& q) {
  if (m < 0 || m > n) throw std::domain_error("gaussian_binomial: need 0 <= m <= n");
  if (q < 2) throw std::domain_error("gaussian_binomial: need q >= 2");
  if (m > n - m) m = n - m;
  Nat num = 1;
  Nat result = 1;
  // Multiply (q^{n-i} - 1) and divide by (q^{i+1} - 1) alternately; each
  // prefix is an integer because it is a Gaussian binomial times a product
  // of smaller ones -- we keep a pending numerator and divide eagerly.
  for (long long i = 0; i < m; ++i) {
    num = result * (ipow(q, n - i) - 1);
    Nat den = ipow(q, i + 1) - 1;
    result = num / den;
    if (result * den != num)
      throw std::logic_error("gaussian_binomial: non-exact division");
  }
  return result;
}

Rat ExpExpr::eval(long long nv, long long mv) const {
  Rat N(nv), M(mv);
  return n2 * N * N + nm * N * M + m2 * M * M + n * N + m * M + c;
}

ExpExpr ExpExpr::operator+(const ExpExpr& o) const {
  return {n2 + o.n2, nm + o.nm, m2 + o.m2, n + o.n, m + o.m, c + o.c};
}

ExpExpr ExpExpr::operator-(const ExpExpr& o) const {
  return {n2 - o.n2, nm - o.nm, m2 - o.m2, n - o.n, m - o.m, c - o.c};
}

bool ExpExpr::is_zero() const {
  return n2 == 0 && nm == 0 && m2 == 0 && n == 0 && m == 0 && c == 0;
}

namespace {

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

void append_term(std::string& out, const Rat& coeff, const char* sym) {
  if (coeff == 0) return;
  if (!out.empty()) out += (coeff > 0) ? " + " : " - ";
  else if (coeff < 0) out += "-";
  Rat a = coeff < 0 ? Rat(-coeff) : coeff;
  if (a != 1 || !*sym) out += rat_str(a);
  if (*sym) {
    if (a != 1) out += "*";
    out += sym;
  }
}

}  // namespace

std::string ExpExpr::to_string() const {
  std::string out;
  append_term(out, n2, "n^2");
  append_term(out, nm, "nm");
  append_term(out, m2, "m^2");
  append_term(out, n, "n");
  append_term(out, m, "m");
  append_term(out, c, "");
  return out.empty() ? "0" : out;
}

namespace {

// --- small-prime sieve for wheel trial division -----------------------------

constexpr uint32_t kSieveLimit = 1u << 20;  // 1,048,576

const std::vector<uint32_t>& small_primes() {
  static std::vector<uint32_t> primes = [] {
    std::vector<bool> comp(kSieveLimit, false);
    std::vector<uint32_t> ps;
    for (uint32_t i = 2; i < kSieveLimit; ++i) {
      if (comp[i]) continue;
      ps.push_back(i);
      for (uint64_t j = uint64_t(i) * i; j < kSieveLimit; j += i) comp[j] = true;
    }
    return ps;
  }();
  return primes;
}

// --- 64-bit deterministic Miller-Rabin + Pollard-Brent ----------------------

uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // This witness set decides primality for all n < 2^64.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t gcd64(uint64_t a, uint64_t b) {
  while (b) { uint64_t t = a % b; a = b; b = t; }
  return a;
}

uint64_t pollard_brent64(uint64_t n) {
  if ((n & 1) == 0) return 2;
  uint64_t c = 1;
  for (;;) {
    uint64_t x = 2, y = 2, d = 1;
    uint64_t q = 1;
    int lam = 1;
    while (d == 1) {
      x = y;
      for (int i = 0; i < lam; ++i) y = (mulmod64(y, y, n) + c) % n;
      int k = 0;
      while (k < lam && d == 1) {
        uint64_t ys = y;
        int lim = std::min(128, lam - k);
        for (int i = 0; i < lim; ++i) {
          y = (mulmod64(y, y, n) + c) % n;
          uint64_t diff = x > y ? x - y : y - x;
          q = mulmod64(q, diff ? diff : 1, n);
        }
        d = gcd64(q, n);
        if (d == n) {
          // backtrack one step at a time
          d = 1;
          do {
            ys = (mulmod64(ys, ys, n) + c) % n;
            uint64_t diff = x > ys ? x - ys : ys - x;
            d = gcd64(diff ? diff : 1, n);
          } while (d == 1 && ys != x);
          break;
        }
        k += lim;
      }
      lam *= 2;
    }
    if (d != n && d != 1) return d;
    ++c;  // rare: retry with a different polynomial increment
  }
}

void factor64(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  if (miller_rabin64(n)) { out.push_back(n); return; }
  uint64_t d = pollard_brent64(n);
  factor64(d, out);
  factor64(n / d, out);
}

// --- big-integer strong probable-prime test and Pollard-Brent ---------------

bool probable_prime_big(const Nat& n) {
  using boost::multiprecision::powm;
  static const std::array<int, 25> witnesses = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                                29, 31, 37, 41, 43, 47, 53, 59, 61,
                                                67, 71, 73, 79, 83, 89, 97};
  Nat d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (int a : witnesses) {
    if (n % a == 0) return Nat(a) == n;
    Nat x = powm(Nat(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = (x * x) % n;
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

Nat pollard_brent_big(const Nat& n) {
  if ((n & 1) == 0) return 2;
  for (Nat c = 1;; ++c) {
    Nat x = 2, y = 2, d = 1, q = 1;
    long lam = 1;
    while (d == 1) {
      x = y;
      for (long i = 0; i < lam; ++i) y = (y * y + c) % n;
      long k = 0;
      while (k < lam && d == 1) {
        Nat ys = y;
        long lim = std::min<long>(128, lam - k);
        for (long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          Nat diff = x > y ? Nat(x - y) : Nat(y - x);
          if (diff != 0) q = (q * diff) % n;
        }
        d = gcd(q, n);
        if (d == n) {
          d = 1;
          do {
            ys = (ys * ys + c) % n;
            Nat diff = x > ys ? Nat(x - ys) : Nat(ys - x);
            d = diff == 0 ? n : gcd(diff, n);
          } while (d == 1 && ys != x);
          break;
        }
        k += lim;
      }
      lam *= 2;
    }
    if (d != n && d > 1) return d;
  }
}

void factor_big(const Nat& n, std::vector<std::pair<Nat, bool>>& out) {
  if (n == 1) return;
  if (n <= std::numeric_limits<uint64_t>::max()) {
    std::vector<uint64_t> fs;
    factor64(static_cast<uint64_t>(n), fs);
    for (uint64_t f : fs) out.emplace_back(Nat(f), true);
    return;
  }
  if (probable_prime_big(n)) {
    out.emplace_back(n, false);  // probable prime beyond the 2^64 envelope
    return;
  }
  Nat d = pollard_brent_big(n);
  factor_big(d, out);
  factor_big(n / d, out);
}

}  // namespace

bool is_prime(const Nat& x, bool* certified) {
  if (certified) *certified = true;
  if (x < 2) return false;
  if (x <= std::numeric_limits<uint64_t>::max())
    return miller_rabin64(static_cast<uint64_t>(x));
  if (certified) *certified = false;
  return probable_prime_big(x);
}

std::vector<Factor> prime_factorize(const Nat& x) {
  if (x == 0) throw std::domain_error("prime_factorize: zero has no factorization");
  std::vector<std::pair<Nat, bool>> raw;
  Nat rest = x;
  for (uint32_t p : small_primes()) {
    if (Nat(p) * p > rest) break;
    while (rest % p == 0) {
      raw.emplace_back(Nat(p), true);
      rest /= p;
    }
  }
  if (rest > 1) factor_big(rest, raw);
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Factor> out;
  for (const auto& [p, cert] : raw) {
    if (!out.empty() && out.back().prime == p) {
      out.back().exponent += 1;
      out.back().certified = out.back().certified && cert;
    } else {
      out.push_back({p, 1, cert});
    }
  }
  return out;
}

long long q_log_floor(const Nat& x, const Nat& q) {
  if (x < 1) throw std::domain_error("q_log_floor: need x >= 1");
  if (q < 2) throw std::domain_error("q_log_floor: need q >= 2");
  long long e = 0;
  Nat power = 1;
  // exponential search then binary refine
  while (power * q <= x) {
    power *= q;
    ++e;
  }
  return e;
}

int cmp_pow(const Nat& x, const Nat& q, const Rat& e) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (e < 0) throw std::domain_error("cmp_pow: negative exponent");
  Nat num = numerator(e), den = denominator(e);
  if (num > 100000 || den > 16)
    throw std::domain_error("cmp_pow: exponent out of supported range");
  Nat lhs = ipow(x, static_cast<long long>(den));
  Nat rhs = ipow(q, static_cast<long long>(num));
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

Nat rat_floor(const Rat& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Nat n = numerator(r), d = denominator(r);
  if (n >= 0) return n / d;
  return -((-n + d - 1) / d);
}

}  // namespace classline
