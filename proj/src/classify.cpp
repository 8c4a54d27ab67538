#include "afdim/classify.hpp"

#include <algorithm>
#include <string>

#include "afdim/errors.hpp"
#include "afdim/finitering.hpp"
#include "afdim/numtheory.hpp"
#include "afdim/quadorder.hpp"

namespace afdim {

namespace {

using i64 = std::int64_t;

std::vector<FactorSymbol> factor_symbols(i64 d, i64 r) {
  std::vector<FactorSymbol> out;
  for (auto [p, a] : factorize(r).factorization.factors) {
    out.push_back({p, a, kronecker(d, p)});
  }
  return out;
}

}  // namespace

AfDim af_dim_order(i64 n, i64 r) {
  return classify_order(n, r).af_dim;
}

OrderReport classify_order(i64 n, i64 r) {
  if (r < 1) throw domain_error("classify_order: r must be positive");
  OrderReport rep;
  rep.n = n;
  rep.r = r;
  rep.d = discriminant(n);
  rep.factor_data = factor_symbols(rep.d, r);
  for (int i = 0; i < (int)rep.factor_data.size(); ++i) {
    if (rep.factor_data[i].symbol == 0) rep.f1_set.push_back(i);
    if (rep.factor_data[i].symbol == -1) rep.f2_set.push_back(i);
  }

  if (r == 1) {
    // The maximal order is Dedekind.
    rep.af_dim = AfDim::of(1);
    rep.dedekind = rep.gpvd = rep.lpvd = rep.lapvd = rep.locally_conducive = rep.taf = true;
    return rep;
  }

  bool any_split = false;
  int max1 = 0, max2 = 0;
  for (const FactorSymbol& f : rep.factor_data) {
    if (f.symbol == 1) any_split = true;
    if (f.symbol == 0) max1 = std::max(max1, 2 * f.a + 1);
    if (f.symbol == -1) max2 = std::max(max2, 2 * f.a);
  }
  rep.af_dim = any_split ? AfDim::infinite() : AfDim::of(std::max(max1, max2));

  const bool squarefree_r = is_squarefree(r);
  rep.dedekind = false;
  rep.locally_conducive = !any_split;
  rep.lapvd = squarefree_r && !any_split;
  rep.gpvd = rep.lpvd = squarefree_r && max1 == 0 && !any_split;
  rep.taf = rep.af_dim.finite && rep.af_dim.value <= 2;
  return rep;
}

VerificationReport verify_afdim_local(i64 n, i64 r, i64 p, const VerifyOptions& opts) {
  if (!is_prime(p)) throw domain_error("verify_afdim_local: p must be prime");
  int a = 0;
  for (auto [q, e] : factorize(r).factorization.factors) {
    if (q == p) a = e;
  }
  if (a == 0) throw domain_error("verify_afdim_local: p must divide r");
  const i64 d = discriminant(n);
  const int symbol = kronecker(d, p);
  if (symbol == 1)
    throw domain_error("verify_afdim_local: symbol 1 at p gives no finite prediction");

  VerificationReport rep;
  rep.n = n;
  rep.r = r;
  rep.p = p;
  rep.a = a;
  rep.predicted_local_max = symbol == 0 ? 2 * a + 1 : 2 * a;

  // Quotient by p^e R; e = 2a + margin covers every ideal not inside M^2.
  QuadOrder order = make_order(n, r);
  i64 pe = 1;
  for (int i = 0; i < 2 * a + opts.exponent_margin; ++i) pe *= p;
  FiniteRing q = quotient_ring(order, principal_ideal(order, {pe, 0}), opts.quotient_bound);

  auto maximal = local_structure(q);
  if (!maximal) throw domain_error("verify_afdim_local: quotient is not local");
  FiniteIdeal m2 = ideal_product(q, *maximal, *maximal);

  int observed = 0;
  for (const FiniteIdeal& j : enumerate_ideals(q)) {
    if (!is_proper(q, j) || ideal_subset(j, m2)) continue;
    ++rep.ideals_examined;
    CappedValue w = omega(q, j, opts.omega_cap);
    if (w.capped) throw capacity_error("verify_afdim_local: omega cap reached");
    observed = std::max(observed, w.value);
  }
  rep.observed_local_max = observed;
  rep.agrees = rep.observed_local_max == rep.predicted_local_max;
  return rep;
}

AXBReport classify_axb(const std::vector<FiniteFieldDesc>& a_fields,
                       const std::vector<FiniteFieldDesc>& b_fields,
                       const std::vector<int>& spec_map) {
  if (a_fields.empty() || b_fields.empty())
    throw domain_error("classify_axb: field lists must be nonempty");
  for (const auto& f : a_fields) {
    if (!is_prime(f.p) || f.k < 1) throw domain_error("classify_axb: invalid field descriptor");
  }
  for (const auto& f : b_fields) {
    if (!is_prime(f.p) || f.k < 1) throw domain_error("classify_axb: invalid field descriptor");
  }
  if (spec_map.size() != b_fields.size())
    throw domain_error("classify_axb: spec_map must assign every B-component");
  for (std::size_t j = 0; j < b_fields.size(); ++j) {
    int i = spec_map[j];
    if (i < 0 || (std::size_t)i >= a_fields.size())
      throw domain_error("classify_axb: spec_map index out of range");
    if (a_fields[i].p != b_fields[j].p || b_fields[j].k % a_fields[i].k != 0)
      throw domain_error("classify_axb: no embedding of F_" + std::to_string(a_fields[i].p) +
                         "^" + std::to_string(a_fields[i].k) + " into the matched component");
  }

  AXBReport rep;
  rep.a_fields = a_fields;
  rep.b_fields = b_fields;
  rep.spec_map = spec_map;
  rep.reduced_dim1 = true;  // finite products of fields are von Neumann regular

  // Unibranched: the contraction map on components is a bijection.
  std::vector<int> hits(a_fields.size(), 0);
  for (int i : spec_map) ++hits[i];
  bool bijection = b_fields.size() == a_fields.size() &&
                   std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  rep.lpvr = rep.taf = bijection;

  bool equal_fields = bijection;
  bool identity = bijection;
  for (std::size_t j = 0; j < b_fields.size() && bijection; ++j) {
    if (a_fields[spec_map[j]].k != b_fields[j].k) equal_fields = false;
    if (spec_map[j] != (int)j || !(a_fields[j] == b_fields[j])) identity = false;
  }
  rep.general_zpi = bijection && equal_fields;
  rep.bezout = rep.general_zpi && identity;
  return rep;
}

}  // namespace afdim
