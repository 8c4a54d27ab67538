#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "afdim/finitering.hpp"

namespace afdim {

struct QuadraticField {
  std::int64_t n = 0;  // squarefree, not 0 or 1
  std::int64_t d = 0;  // n if n = 1 mod 4, else 4n
};

// d_n: n when n = 1 (mod 4), else 4n. Throws on non-squarefree n or n in {0,1}.
std::int64_t discriminant(std::int64_t n);

// The order Z[r*omega_n] with module basis (1, theta), theta = r*omega_n
// satisfying theta^2 = t*theta - u.
struct QuadOrder {
  QuadraticField field;
  std::int64_t r = 1;
  std::int64_t t = 0;
  std::int64_t u = 0;
};

QuadOrder make_order(std::int64_t n, std::int64_t r);

// An element x + y*theta in coordinates over the basis (1, theta).
using Coord = std::pair<std::int64_t, std::int64_t>;

Coord coord_mul(const QuadOrder& order, Coord x, Coord y);

// A nonzero ideal as the lattice Z*a + Z*(b + c*theta), 0 <= b < a, c | a,
// c | b. The triple is unique, so equality of ideals is equality of triples.
struct IdealHNF {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 1;

  bool operator==(const IdealHNF&) const = default;
};

std::int64_t ideal_norm(const IdealHNF& ideal);

// HNF basis of the lattice spanned by the given vectors (must have rank 2).
IdealHNF hnf_from_vectors(const std::vector<Coord>& vectors);

// The ideal generated by `gens`: HNF of the span of the gens and their
// theta-multiples. Throws on all-zero generators.
IdealHNF ideal_from_generators(const QuadOrder& order, const std::vector<Coord>& gens);
IdealHNF principal_ideal(const QuadOrder& order, Coord g);

// Throws domain_error unless (a, b, c) satisfies the HNF constraints and the
// lattice is closed under multiplication by theta.
void validate_ideal(const QuadOrder& order, const IdealHNF& ideal);

IdealHNF ideal_mul(const QuadOrder& order, const IdealHNF& i, const IdealHNF& j);
bool ideal_contains(const QuadOrder& order, const IdealHNF& ideal, Coord x);

enum class SplitKind { ramified, split, inert };

struct SplittingResult {
  SplitKind kind = SplitKind::inert;
  std::vector<IdealHNF> primes;  // one ideal (ramified/inert) or two (split)
};

// Behavior of the rational prime p in the maximal order Z[omega_n], decided
// by kronecker(d_n, p); prime ideals built from roots of the minimal
// polynomial of omega_n mod p.
SplittingResult split_prime(std::int64_t n, std::int64_t p);

// Coordinates of x + y*theta in the quotient basis (1, b/c + theta); length
// 2 when c > 1, length 1 when the quotient is cyclic of order a.
FiniteRing::Coords quotient_project(const QuadOrder& order, const IdealHNF& ideal, Coord x);

// The finite ring R/I of cardinality norm(I), additive group Z_a x Z_c.
FiniteRing quotient_ring(const QuadOrder& order, const IdealHNF& ideal,
                         std::uint64_t norm_bound = 65536);

}  // namespace afdim
