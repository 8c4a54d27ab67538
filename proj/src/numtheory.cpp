#include "afdim/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "afdim/errors.hpp"

namespace afdim {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

i64 positive_mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>((u128)(u64)positive_mod(a, m) * (u64)positive_mod(b, m) % (u64)m);
}

i64 powmod(i64 a, i64 e, i64 m) {
  i64 r = 1 % m;
  a = positive_mod(a, m);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
  }
  return r;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  i64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Sufficient witness set for 64-bit integers.
  for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    i64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

i64 pollard_rho(i64 n) {
  // Brent's cycle variant; deterministic parameter sweep.
  for (i64 c = 1;; ++c) {
    i64 x = 2, y = 2, d = 1;
    i64 saved = 2;
    int power = 1, lam = 1;
    while (d == 1) {
      if (lam == power) {
        saved = x;
        power <<= 1;
        lam = 0;
      }
      x = (mulmod(x, x, n) + c) % n;
      ++lam;
      y = saved;
      d = std::gcd(std::abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_into(i64 n, std::vector<i64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  i64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

SignedFactorization factorize(i64 m) {
  if (m == 0) throw domain_error("factorize: input must be nonzero");
  SignedFactorization result;
  result.sign = m < 0 ? -1 : 1;
  u64 n = m < 0 ? -(u64)m : (u64)m;

  std::vector<i64> primes;
  for (i64 d = 2; d < (1 << 20) && (u64)d * (u64)d <= n; d += (d == 2 ? 1 : 2)) {
    while (n % (u64)d == 0) {
      primes.push_back(d);
      n /= (u64)d;
    }
  }
  if (n > 1) factor_into((i64)n, primes);
  std::sort(primes.begin(), primes.end());

  auto& fs = result.factorization.factors;
  for (i64 p : primes) {
    if (!fs.empty() && fs.back().first == p) {
      ++fs.back().second;
    } else {
      fs.emplace_back(p, 1);
    }
  }
  return result;
}

i64 reconstruct(const SignedFactorization& f) {
  i64 m = f.sign;
  for (auto [p, a] : f.factorization.factors) {
    for (int i = 0; i < a; ++i) m *= p;
  }
  return m;
}

bool is_squarefree(i64 n) {
  if (n == 0) return false;
  for (auto [p, a] : factorize(n).factorization.factors) {
    (void)p;
    if (a > 1) return false;
  }
  return true;
}

int legendre(i64 a, i64 p) {
  if (p == 2 || !is_prime(p)) throw domain_error("legendre: p must be an odd prime");
  i64 r = powmod(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

int kronecker(i64 a, i64 p) {
  if (!is_prime(p)) throw domain_error("kronecker: p must be prime");
  if (p != 2) return legendre(a, p);
  i64 r = positive_mod(a, 8);
  if (r % 2 == 0) return 0;
  return (r == 1 || r == 7) ? 1 : -1;
}

std::optional<i64> sqrt_mod(i64 a, i64 p) {
  if (p == 2 || !is_prime(p)) throw domain_error("sqrt_mod: p must be an odd prime");
  a = positive_mod(a, p);
  if (a == 0) return 0;
  if (legendre(a, p) != 1) return std::nullopt;

  i64 x;
  if (p % 4 == 3) {
    x = powmod(a, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks.
    i64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    i64 z = 2;
    while (legendre(z, p) != -1) ++z;
    i64 m = s;
    i64 c = powmod(z, q, p);
    i64 t = powmod(a, q, p);
    x = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
      i64 t2 = t;
      i64 i = 0;
      while (t2 != 1) {
        t2 = mulmod(t2, t2, p);
        ++i;
      }
      i64 b = c;
      for (i64 j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
      m = i;
      c = mulmod(b, b, p);
      t = mulmod(t, c, p);
      x = mulmod(x, b, p);
    }
  }
  return std::min(x, p - x);
}

}  // namespace afdim
