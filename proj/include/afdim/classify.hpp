#pragma once

#include <cstdint>
#include <vector>

namespace afdim {

// A positive integer or infinity; infinity is a tagged state, never a
// sentinel value.
struct AfDim {
  bool finite = true;
  int value = 0;

  static AfDim infinite() { return {false, 0}; }
  static AfDim of(int v) { return {true, v}; }
  bool operator==(const AfDim&) const = default;
};

struct FactorSymbol {
  std::int64_t p = 0;  // prime factor of r
  int a = 0;           // its exponent
  int symbol = 0;      // kronecker(d_n, p)
};

struct OrderReport {
  std::int64_t n = 0;
  std::int64_t r = 1;
  std::int64_t d = 0;
  std::vector<FactorSymbol> factor_data;
  std::vector<int> f1_set;  // indices with symbol 0
  std::vector<int> f2_set;  // indices with symbol -1
  AfDim af_dim;
  bool dedekind = false;
  bool gpvd = false;
  bool lpvd = false;
  bool lapvd = false;
  bool locally_conducive = false;
  bool taf = false;
};

// The closed-form value: 1 for r = 1; infinite if some prime factor of r has
// symbol 1; otherwise max(max over symbol-0 factors of 2a+1, max over
// symbol -1 factors of 2a).
AfDim af_dim_order(std::int64_t n, std::int64_t r);

OrderReport classify_order(std::int64_t n, std::int64_t r);

struct VerifyOptions {
  int exponent_margin = 2;             // quotient exponent is 2a + margin
  std::uint64_t quotient_bound = 65536;
  int omega_cap = 12;
};

struct VerificationReport {
  std::int64_t n = 0;
  std::int64_t r = 1;
  std::int64_t p = 0;
  int a = 0;
  int predicted_local_max = 0;
  int observed_local_max = 0;
  std::size_t ideals_examined = 0;
  bool agrees = false;
};

// Checks the closed-form local contribution of p^a against brute force on the
// finite quotient Z[r*omega_n] / p^(2a+margin): the maximum of omega over
// ideals not contained in the square of the maximal ideal.
VerificationReport verify_afdim_local(std::int64_t n, std::int64_t r, std::int64_t p,
                                      const VerifyOptions& opts = {});

struct FiniteFieldDesc {
  std::int64_t p = 2;  // characteristic
  int k = 1;           // degree, field has p^k elements

  bool operator==(const FiniteFieldDesc&) const = default;
};

struct AXBReport {
  std::vector<FiniteFieldDesc> a_fields;
  std::vector<FiniteFieldDesc> b_fields;
  std::vector<int> spec_map;  // b_fields[j] contracts to a_fields[spec_map[j]]
  bool reduced_dim1 = false;
  bool lpvr = false;
  bool taf = false;
  bool general_zpi = false;
  bool bezout = false;
};

// Classification of A + X*B[X] for A, B finite products of finite fields with
// a given containment of each B-component in an A-component.
AXBReport classify_axb(const std::vector<FiniteFieldDesc>& a_fields,
                       const std::vector<FiniteFieldDesc>& b_fields,
                       const std::vector<int>& spec_map);

}  // namespace afdim
