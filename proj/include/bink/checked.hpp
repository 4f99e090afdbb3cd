#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bink {

/// 128-bit checked integers: wide enough that exact normal-form transforms
/// at our matrix sizes never wrap, with a hard error if they ever would.
using bint = __int128;

inline std::string bint_str(bint v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
  std::string s;
  while (u) {
    s.push_back(char('0' + int(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

inline std::ostream& operator<<(std::ostream& os, bint v) { return os << bint_str(v); }

/// Raised when a 64-bit intermediate would wrap. Never silently wrapped.
struct OverflowError : std::runtime_error {
  OverflowError() : std::runtime_error("integer overflow in exact arithmetic") {}
};

inline bint add_ck(bint a, bint b) {
  bint r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline bint sub_ck(bint a, bint b) {
  bint r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline bint mul_ck(bint a, bint b) {
  bint r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline bint neg_ck(bint a) { return sub_ck(0, a); }

inline bint abs_ck(bint a) { return a < 0 ? neg_ck(a) : a; }

/// Floor division (sign-correct for negative numerators).
inline bint floor_div(bint a, bint b) {
  bint q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Nonnegative remainder: a mod b in [0, |b|).
inline bint pos_mod(bint a, bint b) {
  bint m = a % b;
  if (m < 0) m += (b < 0 ? -b : b);
  return m;
}

inline bint gcd_i64(bint a, bint b) {
  a = abs_ck(a);
  b = abs_ck(b);
  while (b != 0) {
    bint t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Extended gcd: returns g = gcd(a,b) and x, y with a*x + b*y = g.
struct XGcd {
  bint g, x, y;
};

inline XGcd xgcd(bint a, bint b) {
  bint old_r = a, r = b;
  bint old_s = 1, s = 0;
  bint old_t = 0, t = 1;
  while (r != 0) {
    bint q = old_r / r;
    bint tmp = sub_ck(old_r, mul_ck(q, r));
    old_r = r;
    r = tmp;
    tmp = sub_ck(old_s, mul_ck(q, s));
    old_s = s;
    s = tmp;
    tmp = sub_ck(old_t, mul_ck(q, t));
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = neg_ck(old_r);
    old_s = neg_ck(old_s);
    old_t = neg_ck(old_t);
  }
  return {old_r, old_s, old_t};
}

inline bint lcm_i64(bint a, bint b) {
  if (a == 0 || b == 0) return 0;
  return mul_ck(abs_ck(a) / gcd_i64(a, b), abs_ck(b));
}

/// Number of prime factors with multiplicity.
inline int omega_mult(bint n) {
  int count = 0;
  for (bint p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      n /= p;
      ++count;
    }
  }
  if (n > 1) ++count;
  return count;
}

/// Product of the distinct primes dividing n.
inline bint squarefree_radical(bint n) {
  bint rad = 1;
  for (bint p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      rad = mul_ck(rad, p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) rad = mul_ck(rad, n);
  return rad;
}

inline bool is_squarefree(bint n) { return squarefree_radical(n) == n; }

}  // namespace bink
