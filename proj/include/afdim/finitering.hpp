#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace afdim {

// A finite commutative unital ring given by its additive decomposition
// Z_{e1} x ... x Z_{ek} and structure constants c[i][j] = coordinates of
// b_i * b_j. Elements are addressed by a mixed-radix index; index 0 is zero.
class FiniteRing {
 public:
  using Elem = std::uint32_t;
  using Coords = std::vector<std::int64_t>;

  // Validates commutativity, associativity on basis triples and the unity.
  FiniteRing(std::vector<std::int64_t> cyclic_orders,
             std::vector<std::vector<Coords>> structure_constants, Coords one);

  static FiniteRing cyclic(std::int64_t m);                           // Z/m
  static FiniteRing product(const FiniteRing& a, const FiniteRing& b);
  static FiniteRing f2_xy_mod_square();  // F2[x,y]/(x,y)^2, order 8

  std::uint32_t cardinality() const { return card_; }
  std::size_t rank() const { return orders_.size(); }
  const std::vector<std::int64_t>& cyclic_orders() const { return orders_; }
  const std::vector<std::vector<Coords>>& structure_constants() const { return sc_; }
  const Coords& one_coords() const { return one_coords_; }

  Elem encode(const Coords& v) const;
  Coords decode(Elem x) const;

  Elem zero() const { return 0; }
  Elem one() const { return one_; }
  Elem add(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;

  bool is_unit(Elem x) const;
  std::vector<Elem> units() const;
  // One representative per associate class {u*x : u unit}, smallest index first.
  std::vector<Elem> associate_representatives() const;

 private:
  Elem mul_raw(Elem x, Elem y) const;

  std::vector<std::int64_t> orders_;
  std::vector<std::vector<Coords>> sc_;
  Coords one_coords_;
  std::uint32_t card_ = 0;
  Elem one_ = 0;
  std::vector<std::vector<std::int32_t>> digits_;  // decoded coordinates per element
  std::vector<Elem> mul_table_;                    // dense table when small enough
};

// An ideal as an explicit element set (sorted) plus a known generator list.
struct FiniteIdeal {
  std::vector<FiniteRing::Elem> elements;
  std::vector<FiniteRing::Elem> generators;

  bool contains(FiniteRing::Elem x) const;
  std::size_t size() const { return elements.size(); }
};

bool ideal_equal(const FiniteIdeal& a, const FiniteIdeal& b);
bool ideal_subset(const FiniteIdeal& a, const FiniteIdeal& b);

FiniteIdeal ideal_from_generators(const FiniteRing& ring,
                                  const std::vector<FiniteRing::Elem>& gens);
FiniteIdeal ideal_sum(const FiniteRing& ring, const FiniteIdeal& a, const FiniteIdeal& b);
FiniteIdeal ideal_product(const FiniteRing& ring, const FiniteIdeal& a, const FiniteIdeal& b);
FiniteIdeal zero_ideal(const FiniteRing& ring);
FiniteIdeal unit_ideal(const FiniteRing& ring);
bool is_proper(const FiniteRing& ring, const FiniteIdeal& ideal);

// The complete ideal lattice, sorted by cardinality then lexicographically.
std::vector<FiniteIdeal> enumerate_ideals(const FiniteRing& ring,
                                          std::size_t max_ideals = 100000);

// Definitional check: every (n+1)-tuple with product in I has an n-subproduct
// in I. Evaluated inside R/I against the zero coset.
bool is_n_absorbing(const FiniteRing& ring, const FiniteIdeal& ideal, int n);

struct CappedValue {
  int value = 0;
  bool capped = false;
};

// Smallest n with is_n_absorbing, or the cap marker.
CappedValue omega(const FiniteRing& ring, const FiniteIdeal& ideal, int cap = 12);

// Power criterion min{n : M^n subseteq I}; independent route used by tests.
CappedValue omega_power_criterion(const FiniteRing& ring, const FiniteIdeal& maximal,
                                  const FiniteIdeal& ideal, int cap = 12);

// The unique maximal ideal if the non-units form an ideal, absent otherwise.
std::optional<FiniteIdeal> local_structure(const FiniteRing& ring);

// Smallest n such that every proper ideal is a finite product of n-absorbing
// ideals, computed by fixpoint closure over the ideal lattice.
CappedValue af_dim(const FiniteRing& ring, int cap = 6);

// A product of 2-absorbing ideals equal to `ideal`, if one exists. Shortest
// witness first; factors ordered by cardinality descending.
std::optional<std::vector<FiniteIdeal>> taf_factorization(const FiniteRing& ring,
                                                          const FiniteIdeal& ideal);

// Honest quotient ring R/J (Smith normal form of the relation lattice),
// together with the element map R -> R/J.
struct QuotientRing {
  FiniteRing ring;
  std::vector<FiniteRing::Elem> elem_map;
};
QuotientRing quotient_by_ideal(const FiniteRing& ring, const FiniteIdeal& ideal);

}  // namespace afdim
