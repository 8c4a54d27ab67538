#include "afdim/quadorder.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "afdim/errors.hpp"
#include "afdim/numtheory.hpp"

namespace afdim {

namespace {

using i64 = std::int64_t;

i64 positive_mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

// g = gcd(a, b) >= 0 together with x, y such that a*x + b*y = g.
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
  if (b == 0) {
    x = a < 0 ? -1 : 1;
    y = 0;
    return std::abs(a);
  }
  i64 x1, y1;
  i64 g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

i64 discriminant(i64 n) {
  if (n == 0 || n == 1) throw domain_error("discriminant: n must not be 0 or 1");
  if (!is_squarefree(n)) throw domain_error("discriminant: n must be squarefree");
  return positive_mod(n, 4) == 1 ? n : 4 * n;
}

QuadOrder make_order(i64 n, i64 r) {
  if (r < 1) throw domain_error("make_order: r must be positive");
  QuadOrder o;
  o.field = {n, discriminant(n)};
  o.r = r;
  if (positive_mod(n, 4) == 1) {
    o.t = r;
    o.u = r * r * (1 - n) / 4;
  } else {
    o.t = 0;
    o.u = -r * r * n;
  }
  return o;
}

Coord coord_mul(const QuadOrder& order, Coord x, Coord y) {
  // (x1 + y1*theta)(x2 + y2*theta) with theta^2 = t*theta - u.
  auto [x1, y1] = x;
  auto [x2, y2] = y;
  return {x1 * x2 - order.u * y1 * y2, x1 * y2 + x2 * y1 + order.t * y1 * y2};
}

i64 ideal_norm(const IdealHNF& ideal) {
  return ideal.a * ideal.c;
}

IdealHNF hnf_from_vectors(const std::vector<Coord>& vectors) {
  // Reduce the theta-coordinates to their gcd c, tracking one vector (b0, c),
  // then the 1-coordinates of the residual y = 0 vectors give a.
  i64 c = 0, b0 = 0;
  for (auto [x, y] : vectors) {
    i64 s, t;
    i64 g = ext_gcd(c, y, s, t);
    b0 = s * b0 + t * x;
    c = g;
  }
  if (c == 0) throw domain_error("hnf_from_vectors: lattice has rank < 2");
  i64 a = 0;
  for (auto [x, y] : vectors) {
    a = std::gcd(a, x - (y / c) * b0);
  }
  if (a == 0) throw domain_error("hnf_from_vectors: lattice has rank < 2");
  return {a, positive_mod(b0, a), c};
}

IdealHNF ideal_from_generators(const QuadOrder& order, const std::vector<Coord>& gens) {
  std::vector<Coord> vectors;
  for (auto [x, y] : gens) {
    if (x == 0 && y == 0) continue;
    vectors.push_back({x, y});
    // theta * (x + y*theta) = -u*y + (x + t*y)*theta
    vectors.push_back({-order.u * y, x + order.t * y});
  }
  if (vectors.empty()) throw domain_error("ideal_from_generators: all generators are zero");
  return hnf_from_vectors(vectors);
}

IdealHNF principal_ideal(const QuadOrder& order, Coord g) {
  return ideal_from_generators(order, {g});
}

bool ideal_contains(const QuadOrder&, const IdealHNF& ideal, Coord x) {
  auto [p, q] = x;
  if (q % ideal.c != 0) return false;
  return (p - (q / ideal.c) * ideal.b) % ideal.a == 0;
}

void validate_ideal(const QuadOrder& order, const IdealHNF& ideal) {
  if (ideal.a <= 0 || ideal.c <= 0 || ideal.b < 0 || ideal.b >= ideal.a)
    throw domain_error("validate_ideal: HNF bounds violated");
  if (ideal.a % ideal.c != 0 || ideal.b % ideal.c != 0)
    throw domain_error("validate_ideal: c must divide a and b");
  // Closure under multiplication by theta.
  if (!ideal_contains(order, ideal, {0, ideal.a}) ||
      !ideal_contains(order, ideal, {-order.u * ideal.c, ideal.b + order.t * ideal.c}))
    throw domain_error("validate_ideal: lattice not closed under theta");
}

IdealHNF ideal_mul(const QuadOrder& order, const IdealHNF& i, const IdealHNF& j) {
  validate_ideal(order, i);
  validate_ideal(order, j);
  std::vector<Coord> bi = {{i.a, 0}, {i.b, i.c}};
  std::vector<Coord> bj = {{j.a, 0}, {j.b, j.c}};
  std::vector<Coord> products;
  for (Coord g : bi)
    for (Coord h : bj) products.push_back(coord_mul(order, g, h));
  return hnf_from_vectors(products);
}

SplittingResult split_prime(i64 n, i64 p) {
  if (!is_prime(p)) throw domain_error("split_prime: p must be prime");
  QuadOrder order = make_order(n, 1);
  const i64 d = order.field.d;
  const int sym = kronecker(d, p);

  // Roots of the minimal polynomial x^2 - t*x + u of omega_n mod p.
  std::vector<i64> roots;
  if (p == 2) {
    if (sym == 0) {
      roots = {positive_mod(order.u, 2)};  // x^2 = u has the double root u mod 2
    } else if (sym == 1) {
      roots = {0, 1};  // x^2 + x factors as x(x + 1) mod 2
    }
  } else {
    if (sym == 0) {
      roots = {mulmod(order.t, (p + 1) / 2, p)};  // t/2, the double root
    } else if (sym == 1) {
      i64 s = *sqrt_mod(d, p);
      i64 inv2 = powmod(2, p - 2, p);
      roots = {mulmod(order.t + s, inv2, p), mulmod(positive_mod(order.t - s, p), inv2, p)};
    }
  }

  SplittingResult result;
  result.kind = sym == 0 ? SplitKind::ramified : (sym == 1 ? SplitKind::split : SplitKind::inert);
  if (sym == -1) {
    result.primes = {principal_ideal(order, {p, 0})};
  } else {
    for (i64 c0 : roots) {
      result.primes.push_back(ideal_from_generators(order, {{p, 0}, {-c0, 1}}));
    }
    std::sort(result.primes.begin(), result.primes.end(),
              [](const IdealHNF& x, const IdealHNF& y) { return x.b < y.b; });
  }
  return result;
}

FiniteRing::Coords quotient_project(const QuadOrder& order, const IdealHNF& ideal, Coord v) {
  auto [x, y] = v;
  (void)order;
  // x + y*theta = (x - y*beta)*1 + y*(beta + theta); the multiples of
  // c*(beta + theta) = (b, c) vanish mod I without touching the 1-part.
  const i64 beta = ideal.b / ideal.c;
  i64 g2 = positive_mod(y, ideal.c);
  i64 g1 = positive_mod(x - y * beta, ideal.a);
  if (ideal.c == 1) return {g1};
  return {g1, g2};
}

FiniteRing quotient_ring(const QuadOrder& order, const IdealHNF& ideal,
                         std::uint64_t norm_bound) {
  validate_ideal(order, ideal);
  const i64 norm = ideal_norm(ideal);
  if (norm == 1) throw domain_error("quotient_ring: quotient by the unit ideal is the zero ring");
  if ((std::uint64_t)norm > norm_bound)
    throw capacity_error("quotient_ring: norm " + std::to_string(norm) + " exceeds bound " +
                         std::to_string(norm_bound));

  if (ideal.c == 1) return FiniteRing::cyclic(ideal.a);

  // Basis (1, beta + theta) with beta = b/c gives additive group Z_a x Z_c.
  const i64 beta = ideal.b / ideal.c;
  Coord u2 = {beta, 1};
  std::vector<std::vector<FiniteRing::Coords>> sc(2, std::vector<FiniteRing::Coords>(2));
  sc[0][0] = quotient_project(order, ideal, coord_mul(order, {1, 0}, {1, 0}));
  sc[0][1] = sc[1][0] = quotient_project(order, ideal, u2);
  sc[1][1] = quotient_project(order, ideal, coord_mul(order, u2, u2));
  return FiniteRing({ideal.a, ideal.c}, std::move(sc),
                    quotient_project(order, ideal, {1, 0}));
}

}  // namespace afdim
