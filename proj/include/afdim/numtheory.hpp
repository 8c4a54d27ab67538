#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace afdim {

// Prime factorization of a positive integer, primes strictly increasing.
struct Factorization {
  std::vector<std::pair<std::int64_t, int>> factors;
};

struct SignedFactorization {
  int sign = 1;  // +1 or -1
  Factorization factorization;
};

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t m);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::int64_t n);

// Trial division up to 2^20, then Pollard rho (Brent).
SignedFactorization factorize(std::int64_t m);

std::int64_t reconstruct(const SignedFactorization& f);

bool is_squarefree(std::int64_t n);

// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
int legendre(std::int64_t a, std::int64_t p);

// Kronecker symbol (a/p) for prime p; at p = 2 uses the mod-8 table.
int kronecker(std::int64_t a, std::int64_t p);

// Smaller square root of a mod an odd prime p, if one exists (Tonelli-Shanks).
std::optional<std::int64_t> sqrt_mod(std::int64_t a, std::int64_t p);

}  // namespace afdim
