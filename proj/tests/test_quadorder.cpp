#include <doctest.h>

#include <algorithm>
#include <random>

#include "afdim/errors.hpp"
#include "afdim/numtheory.hpp"
#include "afdim/quadorder.hpp"

using namespace afdim;
using i64 = std::int64_t;

namespace {

const std::vector<i64> kTestN = {-5, -3, -1, 2, 3, 5};

std::vector<i64> primes_below(i64 bound) {
  std::vector<i64> ps;
  for (i64 p = 2; p < bound; ++p) {
    if (is_prime(p)) ps.push_back(p);
  }
  return ps;
}

IdealHNF ideal_pow(const QuadOrder& o, IdealHNF base, int e) {
  IdealHNF acc = principal_ideal(o, {1, 0});
  for (int i = 0; i < e; ++i) acc = ideal_mul(o, acc, base);
  return acc;
}

}  // namespace

TEST_CASE("discriminant on fixed inputs") {
  CHECK(discriminant(5) == 5);
  CHECK(discriminant(-1) == -4);
  CHECK(discriminant(2) == 8);
  CHECK(discriminant(-3) == -3);
  CHECK_THROWS_AS(discriminant(0), domain_error);
  CHECK_THROWS_AS(discriminant(1), domain_error);
  CHECK_THROWS_AS(discriminant(4), domain_error);
  CHECK_THROWS_AS(discriminant(-12), domain_error);
}

TEST_CASE("make_order minimal polynomial data") {
  QuadOrder o1 = make_order(-1, 2);
  CHECK(o1.t == 0);
  CHECK(o1.u == 4);  // theta = 2i, theta^2 = -4

  QuadOrder o2 = make_order(5, 1);
  CHECK(o2.t == 1);
  CHECK(o2.u == -1);  // x^2 - x - 1

  QuadOrder o3 = make_order(5, 2);
  CHECK(o3.t == 2);
  CHECK(o3.u == -4);  // (1+sqrt5)^2 = 2(1+sqrt5) + 4

  CHECK_THROWS_AS(make_order(4, 1), domain_error);
  CHECK_THROWS_AS(make_order(-1, 0), domain_error);
}

TEST_CASE("coord_mul satisfies the minimal polynomial") {
  for (i64 n : kTestN) {
    for (i64 r = 1; r <= 4; ++r) {
      QuadOrder o = make_order(n, r);
      // theta * theta = t*theta - u
      CHECK(coord_mul(o, {0, 1}, {0, 1}) == Coord{-o.u, o.t});
      // associativity spot check
      Coord a{3, -2}, b{-1, 4}, c{2, 5};
      CHECK(coord_mul(o, coord_mul(o, a, b), c) == coord_mul(o, a, coord_mul(o, b, c)));
    }
  }
}

TEST_CASE("ideal_from_generators on fixed inputs") {
  QuadOrder zi = make_order(-1, 1);
  CHECK(ideal_from_generators(zi, {{2, 0}, {1, 1}}) == IdealHNF{2, 1, 1});
  CHECK(ideal_from_generators(zi, {{5, 0}}) == IdealHNF{5, 0, 5});
  CHECK(ideal_from_generators(zi, {{0, 1}}) == IdealHNF{1, 0, 1});  // i is a unit
  CHECK_THROWS_AS(ideal_from_generators(zi, {{0, 0}}), domain_error);
}

TEST_CASE("HNF is canonical: generator order and redundancy do not matter") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> dist(-9, 9);
  for (i64 n : kTestN) {
    QuadOrder o = make_order(n, 2);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Coord> gens;
      for (int i = 0; i < 3; ++i) gens.push_back({dist(rng), dist(rng)});
      if (std::all_of(gens.begin(), gens.end(),
                      [](Coord g) { return g.first == 0 && g.second == 0; }))
        continue;
      IdealHNF ideal = ideal_from_generators(o, gens);
      validate_ideal(o, ideal);

      std::vector<Coord> shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(ideal_from_generators(o, shuffled) == ideal);

      // Regenerating from the HNF basis is idempotent.
      CHECK(ideal_from_generators(o, {{ideal.a, 0}, {ideal.b, ideal.c}}) == ideal);
    }
  }
}

TEST_CASE("ideal_mul on fixed inputs") {
  QuadOrder zi = make_order(-1, 1);
  IdealHNF p2{2, 1, 1};
  // P^2 = 2R when 2 ramifies; 2R = Z*2 + Z*2i has HNF (2, 0, 2) and norm 4.
  CHECK(ideal_mul(zi, p2, p2) == principal_ideal(zi, {2, 0}));
  CHECK(ideal_mul(zi, p2, p2) == IdealHNF{2, 0, 2});

  IdealHNF r{1, 0, 1}, i5{5, 0, 5};
  CHECK(ideal_mul(zi, r, i5) == i5);

  CHECK(ideal_mul(zi, IdealHNF{5, 2, 1}, IdealHNF{5, 3, 1}) == IdealHNF{5, 0, 5});
}

TEST_CASE("ideal_contains on fixed inputs") {
  QuadOrder zi = make_order(-1, 1);
  CHECK(ideal_contains(zi, {2, 1, 1}, {1, 1}));
  CHECK_FALSE(ideal_contains(zi, {2, 1, 1}, {1, 0}));
  CHECK(ideal_contains(zi, {5, 0, 5}, {5, 0}));
  CHECK(ideal_contains(zi, {5, 0, 5}, {0, 0}));
}

TEST_CASE("norm is multiplicative for coprime-norm ideals of the maximal order") {
  for (i64 n : kTestN) {
    QuadOrder o = make_order(n, 1);
    std::vector<IdealHNF> pool;
    for (i64 p : primes_below(30)) {
      SplittingResult s = split_prime(n, p);
      for (const IdealHNF& q : s.primes) {
        pool.push_back(q);
        pool.push_back(ideal_mul(o, q, q));
      }
    }
    for (const IdealHNF& a : pool) {
      for (const IdealHNF& b : pool) {
        if (std::gcd(ideal_norm(a), ideal_norm(b)) != 1) continue;
        if (ideal_norm(a) * ideal_norm(b) > 10000) continue;
        CHECK(ideal_norm(ideal_mul(o, a, b)) == ideal_norm(a) * ideal_norm(b));
      }
    }
  }
}

TEST_CASE("split_prime on fixed inputs") {
  SplittingResult s5 = split_prime(-1, 5);
  CHECK(s5.kind == SplitKind::split);
  REQUIRE(s5.primes.size() == 2);
  CHECK(s5.primes[0] == IdealHNF{5, 2, 1});
  CHECK(s5.primes[1] == IdealHNF{5, 3, 1});

  SplittingResult s2 = split_prime(-1, 2);
  CHECK(s2.kind == SplitKind::ramified);
  REQUIRE(s2.primes.size() == 1);
  CHECK(s2.primes[0] == IdealHNF{2, 1, 1});

  SplittingResult s3 = split_prime(-1, 3);
  CHECK(s3.kind == SplitKind::inert);
  REQUIRE(s3.primes.size() == 1);
  CHECK(s3.primes[0] == IdealHNF{3, 0, 3});

  CHECK_THROWS_AS(split_prime(-1, 4), domain_error);
  CHECK_THROWS_AS(split_prime(4, 3), domain_error);
}

TEST_CASE("split_prime reconstructs pR for all p < 50") {
  for (i64 n : kTestN) {
    QuadOrder o = make_order(n, 1);
    for (i64 p : primes_below(50)) {
      SplittingResult s = split_prime(n, p);
      int expected = kronecker(o.field.d, p);
      int got = s.kind == SplitKind::ramified ? 0 : (s.kind == SplitKind::split ? 1 : -1);
      CHECK(got == expected);

      IdealHNF product = s.kind == SplitKind::split
                             ? ideal_mul(o, s.primes[0], s.primes[1])
                             : (s.kind == SplitKind::ramified
                                    ? ideal_mul(o, s.primes[0], s.primes[0])
                                    : s.primes[0]);
      CHECK(product == principal_ideal(o, {p, 0}));

      for (const IdealHNF& q : s.primes) {
        validate_ideal(o, q);
        CHECK(ideal_norm(q) == (s.kind == SplitKind::inert ? p * p : p));
      }
      if (s.kind == SplitKind::split) CHECK_FALSE(s.primes[0] == s.primes[1]);
    }
  }
}

TEST_CASE("quotient_ring sizes and degenerate cases") {
  QuadOrder zi = make_order(-1, 1);
  CHECK(quotient_ring(zi, {2, 0, 2}).cardinality() == 4);
  CHECK(quotient_ring(zi, {5, 2, 1}).cardinality() == 5);

  QuadOrder z2i = make_order(-1, 2);
  CHECK(quotient_ring(z2i, {16, 0, 16}).cardinality() == 256);

  CHECK_THROWS_AS(quotient_ring(zi, {1, 0, 1}), domain_error);
  CHECK_THROWS_AS(quotient_ring(z2i, {1024, 0, 1024}, 65536), capacity_error);
}

TEST_CASE("quotient of a split prime is a field") {
  FiniteRing f5 = quotient_ring(make_order(-1, 1), {5, 2, 1});
  REQUIRE(f5.cardinality() == 5);
  for (FiniteRing::Elem x = 1; x < 5; ++x) CHECK(f5.is_unit(x));
}

TEST_CASE("quotient projection is a ring homomorphism with kernel I") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<i64> dist(-40, 40);
  for (i64 n : kTestN) {
    for (i64 r : {1, 2, 3}) {
      QuadOrder o = make_order(n, r);
      for (IdealHNF ideal : {principal_ideal(o, {8, 0}), principal_ideal(o, {9, 0}),
                             ideal_from_generators(o, {{4, 0}, {2, 2}})}) {
        validate_ideal(o, ideal);
        FiniteRing q = quotient_ring(o, ideal);
        REQUIRE(q.cardinality() == (std::uint32_t)ideal_norm(ideal));
        auto project = [&](Coord v) { return q.encode(quotient_project(o, ideal, v)); };
        for (int trial = 0; trial < 100; ++trial) {
          Coord x{dist(rng), dist(rng)}, y{dist(rng), dist(rng)};
          CHECK(project({x.first + y.first, x.second + y.second}) ==
                q.add(project(x), project(y)));
          CHECK(project(coord_mul(o, x, y)) == q.mul(project(x), project(y)));
          CHECK((project(x) == q.zero()) == ideal_contains(o, ideal, x));
        }
        CHECK(project({1, 0}) == q.one());
      }
    }
  }
}
