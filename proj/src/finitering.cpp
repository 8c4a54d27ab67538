#include "afdim/finitering.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_set>

#include "afdim/errors.hpp"

namespace afdim {

namespace {

using i64 = std::int64_t;
using Elem = FiniteRing::Elem;

constexpr std::uint64_t kMaxCardinality = 1u << 20;
constexpr std::uint32_t kMulTableMaxCard = 2048;
constexpr std::uint32_t kCosetTableMaxCosets = 2896;
constexpr std::size_t kAbsorbingStateCap = 20'000'000;

i64 positive_mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

FiniteRing::FiniteRing(std::vector<i64> cyclic_orders,
                       std::vector<std::vector<Coords>> structure_constants, Coords one)
    : orders_(std::move(cyclic_orders)), sc_(std::move(structure_constants)),
      one_coords_(std::move(one)) {
  const std::size_t k = orders_.size();
  if (k == 0) throw domain_error("FiniteRing: empty additive decomposition");
  std::uint64_t card = 1;
  for (i64 e : orders_) {
    if (e < 1) throw domain_error("FiniteRing: cyclic orders must be positive");
    card *= (std::uint64_t)e;
    if (card > kMaxCardinality) throw capacity_error("FiniteRing: cardinality exceeds bound");
  }
  if (card < 2) throw domain_error("FiniteRing: the zero ring is not supported");
  card_ = (std::uint32_t)card;

  if (sc_.size() != k || one_coords_.size() != k)
    throw domain_error("FiniteRing: malformed structure constants or unity");
  for (auto& row : sc_) {
    if (row.size() != k) throw domain_error("FiniteRing: malformed structure constants");
    for (auto& v : row) {
      if (v.size() != k) throw domain_error("FiniteRing: malformed structure constants");
      for (std::size_t i = 0; i < k; ++i) v[i] = positive_mod(v[i], orders_[i]);
    }
  }
  for (std::size_t i = 0; i < k; ++i) one_coords_[i] = positive_mod(one_coords_[i], orders_[i]);

  digits_.resize(card_);
  for (Elem x = 0; x < card_; ++x) {
    auto& d = digits_[x];
    d.resize(k);
    Elem rest = x;
    for (std::size_t i = 0; i < k; ++i) {
      d[i] = (std::int32_t)(rest % (std::uint32_t)orders_[i]);
      rest /= (std::uint32_t)orders_[i];
    }
  }
  one_ = encode(one_coords_);

  // Fail fast on malformed rings: commutativity, associativity, unity.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (sc_[i][j] != sc_[j][i]) throw domain_error("FiniteRing: multiplication not commutative");
    }
  }
  std::vector<Elem> basis(k);
  for (std::size_t i = 0; i < k; ++i) {
    Coords unit(k, 0);
    unit[i] = orders_[i] == 1 ? 0 : 1;
    basis[i] = encode(unit);
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (mul_raw(one_, basis[i]) != basis[i])
      throw domain_error("FiniteRing: unity does not act as identity");
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        if (mul_raw(mul_raw(basis[i], basis[j]), basis[l]) !=
            mul_raw(basis[i], mul_raw(basis[j], basis[l])))
          throw domain_error("FiniteRing: multiplication not associative");
      }
    }
  }

  if (card_ <= kMulTableMaxCard) {
    mul_table_.resize((std::size_t)card_ * card_);
    for (Elem x = 0; x < card_; ++x) {
      for (Elem y = x; y < card_; ++y) {
        Elem p = mul_raw(x, y);
        mul_table_[(std::size_t)x * card_ + y] = p;
        mul_table_[(std::size_t)y * card_ + x] = p;
      }
    }
  }
}

FiniteRing FiniteRing::cyclic(i64 m) {
  return FiniteRing({m}, {{{1}}}, {1});
}

FiniteRing FiniteRing::product(const FiniteRing& a, const FiniteRing& b) {
  const std::size_t ka = a.rank(), kb = b.rank(), k = ka + kb;
  std::vector<i64> orders = a.orders_;
  orders.insert(orders.end(), b.orders_.begin(), b.orders_.end());
  std::vector<std::vector<Coords>> sc(k, std::vector<Coords>(k, Coords(k, 0)));
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < ka; ++j)
      for (std::size_t l = 0; l < ka; ++l) sc[i][j][l] = a.sc_[i][j][l];
  for (std::size_t i = 0; i < kb; ++i)
    for (std::size_t j = 0; j < kb; ++j)
      for (std::size_t l = 0; l < kb; ++l) sc[ka + i][ka + j][ka + l] = b.sc_[i][j][l];
  Coords one(k, 0);
  for (std::size_t i = 0; i < ka; ++i) one[i] = a.one_coords_[i];
  for (std::size_t i = 0; i < kb; ++i) one[ka + i] = b.one_coords_[i];
  return FiniteRing(std::move(orders), std::move(sc), std::move(one));
}

FiniteRing FiniteRing::f2_xy_mod_square() {
  // Basis (1, x, y) over F2 with x^2 = xy = y^2 = 0.
  std::vector<std::vector<Coords>> sc(3, std::vector<Coords>(3, Coords(3, 0)));
  sc[0][0] = {1, 0, 0};
  sc[0][1] = sc[1][0] = {0, 1, 0};
  sc[0][2] = sc[2][0] = {0, 0, 1};
  return FiniteRing({2, 2, 2}, std::move(sc), {1, 0, 0});
}

Elem FiniteRing::encode(const Coords& v) const {
  const std::size_t k = orders_.size();
  if (v.size() != k) throw domain_error("FiniteRing: coordinate vector has wrong length");
  Elem x = 0;
  for (std::size_t i = k; i-- > 0;) {
    x = x * (Elem)orders_[i] + (Elem)positive_mod(v[i], orders_[i]);
  }
  return x;
}

FiniteRing::Coords FiniteRing::decode(Elem x) const {
  const auto& d = digits_[x];
  return Coords(d.begin(), d.end());
}

Elem FiniteRing::add(Elem x, Elem y) const {
  const auto& dx = digits_[x];
  const auto& dy = digits_[y];
  Elem r = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    std::int64_t s = dx[i] + dy[i];
    if (s >= orders_[i]) s -= orders_[i];
    r = r * (Elem)orders_[i] + (Elem)s;
  }
  return r;
}

Elem FiniteRing::neg(Elem x) const {
  const auto& dx = digits_[x];
  Elem r = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    std::int64_t s = dx[i] == 0 ? 0 : orders_[i] - dx[i];
    r = r * (Elem)orders_[i] + (Elem)s;
  }
  return r;
}

Elem FiniteRing::mul_raw(Elem x, Elem y) const {
  const std::size_t k = orders_.size();
  const auto& dx = digits_[x];
  const auto& dy = digits_[y];
  Coords acc(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (dx[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (dy[j] == 0) continue;
      i64 m = (i64)dx[i] * dy[j];
      const Coords& c = sc_[i][j];
      for (std::size_t l = 0; l < k; ++l) {
        if (c[l] != 0) acc[l] = (acc[l] + m % orders_[l] * c[l]) % orders_[l];
      }
    }
  }
  Elem r = 0;
  for (std::size_t i = k; i-- > 0;) r = r * (Elem)orders_[i] + (Elem)acc[i];
  return r;
}

Elem FiniteRing::mul(Elem x, Elem y) const {
  if (!mul_table_.empty()) return mul_table_[(std::size_t)x * card_ + y];
  return mul_raw(x, y);
}

bool FiniteRing::is_unit(Elem x) const {
  for (Elem y = 0; y < card_; ++y) {
    if (mul(x, y) == one_) return true;
  }
  return false;
}

std::vector<Elem> FiniteRing::units() const {
  std::vector<Elem> result;
  for (Elem x = 0; x < card_; ++x) {
    if (is_unit(x)) result.push_back(x);
  }
  return result;
}

std::vector<Elem> FiniteRing::associate_representatives() const {
  std::vector<Elem> us = units();
  std::vector<char> seen(card_, 0);
  std::vector<Elem> reps;
  for (Elem x = 0; x < card_; ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (Elem u : us) seen[mul(u, x)] = 1;
  }
  return reps;
}

// ---------------------------------------------------------------------------
// Ideal machinery.

namespace {

struct SubgroupBuilder {
  const FiniteRing& ring;
  std::vector<char> in;
  std::vector<Elem> list;

  explicit SubgroupBuilder(const FiniteRing& r) : ring(r), in(r.cardinality(), 0) {
    in[0] = 1;
    list.push_back(0);
  }

  // Close the subgroup under addition of g: add the cosets S + g, S + 2g, ...
  // until a multiple of g lands in an already-covered coset.
  void extend(Elem g) {
    const std::size_t base = list.size();
    Elem cur = g;
    while (!in[cur]) {
      for (std::size_t i = 0; i < base; ++i) {
        Elem e = ring.add(list[i], cur);
        if (!in[e]) {
          in[e] = 1;
          list.push_back(e);
        }
      }
      cur = ring.add(cur, g);
    }
  }

  std::vector<Elem> sorted() const {
    std::vector<Elem> v = list;
    std::sort(v.begin(), v.end());
    return v;
  }
};

std::vector<Elem> basis_elements(const FiniteRing& ring) {
  std::vector<Elem> basis;
  const auto& e = ring.cyclic_orders();
  for (std::size_t i = 0; i < e.size(); ++i) {
    FiniteRing::Coords unit(e.size(), 0);
    unit[i] = e[i] == 1 ? 0 : 1;
    basis.push_back(ring.encode(unit));
  }
  return basis;
}

// Additive generators of the principal ideal (g): the products b_i * g.
void extend_by_principal(const FiniteRing& ring, SubgroupBuilder& b,
                         const std::vector<Elem>& basis, Elem g) {
  for (Elem bi : basis) b.extend(ring.mul(bi, g));
}

std::vector<Elem> dedup_generators(std::vector<Elem> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  gens.erase(std::remove(gens.begin(), gens.end(), (Elem)0), gens.end());
  return gens;
}

}  // namespace

bool FiniteIdeal::contains(Elem x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool ideal_equal(const FiniteIdeal& a, const FiniteIdeal& b) {
  return a.elements == b.elements;
}

bool ideal_subset(const FiniteIdeal& a, const FiniteIdeal& b) {
  return std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(),
                       a.elements.end());
}

FiniteIdeal ideal_from_generators(const FiniteRing& ring, const std::vector<Elem>& gens) {
  SubgroupBuilder b(ring);
  auto basis = basis_elements(ring);
  for (Elem g : gens) extend_by_principal(ring, b, basis, g);
  return {b.sorted(), dedup_generators(gens)};
}

FiniteIdeal ideal_sum(const FiniteRing& ring, const FiniteIdeal& a, const FiniteIdeal& b) {
  SubgroupBuilder sb(ring);
  for (Elem e : a.elements) sb.extend(e);
  for (Elem e : b.elements) sb.extend(e);
  std::vector<Elem> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  return {sb.sorted(), dedup_generators(std::move(gens))};
}

FiniteIdeal ideal_product(const FiniteRing& ring, const FiniteIdeal& a, const FiniteIdeal& b) {
  std::vector<Elem> gens;
  for (Elem g : a.generators)
    for (Elem h : b.generators) gens.push_back(ring.mul(g, h));
  return ideal_from_generators(ring, gens);
}

FiniteIdeal zero_ideal(const FiniteRing&) {
  return {{0}, {}};
}

FiniteIdeal unit_ideal(const FiniteRing& ring) {
  std::vector<Elem> all(ring.cardinality());
  std::iota(all.begin(), all.end(), 0);
  return {std::move(all), {ring.one()}};
}

bool is_proper(const FiniteRing& ring, const FiniteIdeal& ideal) {
  return ideal.elements.size() < ring.cardinality();
}

std::vector<FiniteIdeal> enumerate_ideals(const FiniteRing& ring, std::size_t max_ideals) {
  std::vector<FiniteIdeal> principal;
  std::map<std::vector<Elem>, std::size_t> seen;
  for (Elem r : ring.associate_representatives()) {
    FiniteIdeal p = ideal_from_generators(ring, {r});
    p.generators = r == 0 ? std::vector<Elem>{} : std::vector<Elem>{r};
    if (seen.emplace(p.elements, principal.size()).second) principal.push_back(std::move(p));
  }

  // Every ideal is a finite sum of principal ideals.
  std::vector<FiniteIdeal> ideals = principal;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (const FiniteIdeal& p : principal) {
      if (ideal_subset(p, ideals[i])) continue;
      FiniteIdeal s = ideal_sum(ring, ideals[i], p);
      if (seen.emplace(s.elements, ideals.size()).second) {
        if (ideals.size() + 1 > max_ideals)
          throw capacity_error("enumerate_ideals: ideal count exceeds cap");
        ideals.push_back(std::move(s));
      }
    }
  }

  std::sort(ideals.begin(), ideals.end(), [](const FiniteIdeal& a, const FiniteIdeal& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return ideals;
}

// ---------------------------------------------------------------------------
// The n-absorbing predicate.

namespace {

// Multiplication on cosets of an ideal; membership of a product in I depends
// only on residues mod I, so the whole search runs here.
class QuotientView {
 public:
  QuotientView(const FiniteRing& ring, const FiniteIdeal& ideal) : ring_(ring) {
    coset_of_.assign(ring.cardinality(), UINT32_MAX);
    for (Elem x = 0; x < ring.cardinality(); ++x) {
      if (coset_of_[x] != UINT32_MAX) continue;
      std::uint32_t id = (std::uint32_t)rep_.size();
      rep_.push_back(x);
      for (Elem j : ideal.elements) coset_of_[ring.add(x, j)] = id;
    }
    one_ = coset_of_[ring.one()];
    if (num_cosets() <= kCosetTableMaxCosets) {
      std::uint32_t n = num_cosets();
      table_.resize((std::size_t)n * n);
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a; b < n; ++b) {
          std::uint32_t p = coset_of_[ring.mul(rep_[a], rep_[b])];
          table_[(std::size_t)a * n + b] = p;
          table_[(std::size_t)b * n + a] = p;
        }
    }
  }

  std::uint32_t num_cosets() const { return (std::uint32_t)rep_.size(); }
  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return one_; }
  std::uint32_t coset_of(Elem x) const { return coset_of_[x]; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!table_.empty()) return table_[(std::size_t)a * num_cosets() + b];
    return coset_of_[ring_.mul(rep_[a], rep_[b])];
  }

  // Nonzero non-unit cosets up to multiplication by units of the quotient.
  std::vector<std::uint32_t> nonunit_representatives() const {
    const std::uint32_t n = num_cosets();
    std::vector<char> unit(n, 0);
    std::vector<std::uint32_t> us;
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        if (mul(a, b) == one_) {
          unit[a] = 1;
          us.push_back(a);
          break;
        }
      }
    }
    std::vector<char> seen(n, 0);
    std::vector<std::uint32_t> reps;
    for (std::uint32_t a = 1; a < n; ++a) {
      if (seen[a] || unit[a]) continue;
      reps.push_back(a);
      for (std::uint32_t u : us) seen[mul(u, a)] = 1;
    }
    return reps;
  }

 private:
  const FiniteRing& ring_;
  std::vector<std::uint32_t> coset_of_;
  std::vector<Elem> rep_;
  std::uint32_t one_ = 0;
  std::vector<std::uint32_t> table_;
};

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

bool is_n_absorbing(const FiniteRing& ring, const FiniteIdeal& ideal, int n) {
  if (n < 1) throw domain_error("is_n_absorbing: n must be positive");
  if (!is_proper(ring, ideal)) throw domain_error("is_n_absorbing: ideal must be proper");

  QuotientView q(ring, ideal);
  // A violating tuple contains no unit (dropping a unit factor keeps the
  // product in I) and no zero, and scaling entries by units preserves the
  // violation, so entries range over non-unit associate-class reps.
  std::vector<std::uint32_t> cands = q.nonunit_representatives();
  if (cands.empty()) return true;

  // State after choosing j entries: the prefix product P followed by the
  // sorted distinct omit-one products; a violation is P = 0 at depth n+1
  // with no omit-one product hitting zero.
  using State = std::vector<std::uint32_t>;
  std::unordered_set<State, VecHash> layer;
  std::size_t total_states = 0;
  for (std::uint32_t a : cands) layer.insert({a, q.one()});

  for (int depth = 2; depth <= n + 1; ++depth) {
    std::unordered_set<State, VecHash> next;
    for (const State& st : layer) {
      const std::uint32_t p = st[0];
      for (std::uint32_t a : cands) {
        std::uint32_t p2 = q.mul(p, a);
        if (p2 == q.zero() && depth <= n) continue;
        State ns;
        ns.reserve(st.size() + 1);
        ns.push_back(p2);
        bool dead = false;
        for (std::size_t i = 1; i < st.size(); ++i) {
          std::uint32_t qa = q.mul(st[i], a);
          if (qa == q.zero()) {
            dead = true;
            break;
          }
          ns.push_back(qa);
        }
        if (dead || p == q.zero()) continue;
        ns.push_back(p);
        std::sort(ns.begin() + 1, ns.end());
        ns.erase(std::unique(ns.begin() + 1, ns.end()), ns.end());
        if (depth == n + 1) {
          if (p2 == q.zero()) return false;  // violating tuple exists
          continue;
        }
        if (next.insert(std::move(ns)).second) {
          if (++total_states > kAbsorbingStateCap)
            throw capacity_error("is_n_absorbing: state cap exceeded");
        }
      }
    }
    layer = std::move(next);
  }
  return true;
}

CappedValue omega(const FiniteRing& ring, const FiniteIdeal& ideal, int cap) {
  for (int n = 1; n <= cap; ++n) {
    if (is_n_absorbing(ring, ideal, n)) return {n, false};
  }
  return {cap, true};
}

CappedValue omega_power_criterion(const FiniteRing& ring, const FiniteIdeal& maximal,
                                  const FiniteIdeal& ideal, int cap) {
  FiniteIdeal power = maximal;
  for (int n = 1; n <= cap; ++n) {
    if (ideal_subset(power, ideal)) return {n, false};
    power = ideal_product(ring, power, maximal);
  }
  return {cap, true};
}

namespace {

std::vector<Elem> minimal_generators(const FiniteRing& ring, const std::vector<Elem>& elements) {
  auto basis = basis_elements(ring);
  SubgroupBuilder span(ring);
  std::vector<Elem> gens;
  for (Elem e : elements) {
    if (!span.in[e]) {
      gens.push_back(e);
      extend_by_principal(ring, span, basis, e);
    }
  }
  return gens;
}

}  // namespace

std::optional<FiniteIdeal> local_structure(const FiniteRing& ring) {
  std::vector<Elem> nonunits;
  std::vector<char> in(ring.cardinality(), 0);
  for (Elem x = 0; x < ring.cardinality(); ++x) {
    if (!ring.is_unit(x)) {
      nonunits.push_back(x);
      in[x] = 1;
    }
  }
  // The non-units absorb multiplication; locality needs additive closure.
  for (Elem x : nonunits) {
    for (Elem y : nonunits) {
      if (!in[ring.add(x, y)]) return std::nullopt;
    }
  }
  FiniteIdeal m;
  m.elements = nonunits;
  m.generators = minimal_generators(ring, nonunits);
  return m;
}

CappedValue af_dim(const FiniteRing& ring, int cap) {
  std::vector<FiniteIdeal> ideals = enumerate_ideals(ring);
  std::vector<const FiniteIdeal*> proper;
  for (const FiniteIdeal& i : ideals) {
    if (is_proper(ring, i)) proper.push_back(&i);
  }

  for (int n = 1; n <= cap; ++n) {
    std::vector<const FiniteIdeal*> absorbing;
    for (const FiniteIdeal* i : proper) {
      if (is_n_absorbing(ring, *i, n)) absorbing.push_back(i);
    }
    std::map<std::vector<Elem>, FiniteIdeal> closure;
    std::deque<const FiniteIdeal*> work;
    for (const FiniteIdeal* i : absorbing) {
      closure.emplace(i->elements, *i);
    }
    for (auto& [key, ideal] : closure) work.push_back(&ideal);
    while (!work.empty()) {
      const FiniteIdeal* cur = work.front();
      work.pop_front();
      for (const FiniteIdeal* a : absorbing) {
        FiniteIdeal prod = ideal_product(ring, *cur, *a);
        auto [it, inserted] = closure.emplace(prod.elements, std::move(prod));
        if (inserted) work.push_back(&it->second);
      }
    }
    bool all_covered = true;
    for (const FiniteIdeal* i : proper) {
      if (!closure.count(i->elements)) {
        all_covered = false;
        break;
      }
    }
    if (all_covered) return {n, false};
  }
  return {cap, true};
}

namespace {

std::optional<std::vector<FiniteIdeal>> taf_search(const FiniteRing& ring,
                                                   const FiniteIdeal& ideal,
                                                   const std::vector<FiniteIdeal>& absorbing) {
  auto finish = [&](const std::vector<std::size_t>& witness) {
    std::vector<FiniteIdeal> factors;
    for (std::size_t idx : witness) factors.push_back(absorbing[idx]);
    std::stable_sort(factors.begin(), factors.end(),
                     [](const FiniteIdeal& a, const FiniteIdeal& b) {
                       return a.elements.size() > b.elements.size();
                     });
    return factors;
  };

  // Breadth-first over products; first hit is a shortest witness.
  std::map<std::vector<Elem>, std::vector<std::size_t>> visited;
  std::deque<std::pair<FiniteIdeal, std::vector<std::size_t>>> work;
  for (std::size_t i = 0; i < absorbing.size(); ++i) {
    if (visited.emplace(absorbing[i].elements, std::vector<std::size_t>{i}).second) {
      if (ideal_equal(absorbing[i], ideal)) return finish({i});
      work.emplace_back(absorbing[i], std::vector<std::size_t>{i});
    }
  }
  while (!work.empty()) {
    auto [cur, witness] = std::move(work.front());
    work.pop_front();
    for (std::size_t i = 0; i < absorbing.size(); ++i) {
      FiniteIdeal prod = ideal_product(ring, cur, absorbing[i]);
      std::vector<std::size_t> w = witness;
      w.push_back(i);
      if (visited.emplace(prod.elements, w).second) {
        if (ideal_equal(prod, ideal)) return finish(w);
        work.emplace_back(std::move(prod), std::move(w));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<FiniteIdeal>> taf_factorization(const FiniteRing& ring,
                                                          const FiniteIdeal& ideal) {
  if (!is_proper(ring, ideal)) throw domain_error("taf_factorization: ideal must be proper");
  std::vector<FiniteIdeal> absorbing, strictly_above;
  for (const FiniteIdeal& i : enumerate_ideals(ring)) {
    if (!is_proper(ring, i) || !is_n_absorbing(ring, i, 2)) continue;
    absorbing.push_back(i);
    if (ideal_subset(ideal, i) && !ideal_equal(ideal, i)) strictly_above.push_back(i);
  }
  // Prefer genuine factorizations over the trivial one-factor witness.
  if (auto w = taf_search(ring, ideal, strictly_above)) return w;
  return taf_search(ring, ideal, absorbing);
}

// ---------------------------------------------------------------------------
// Honest quotient construction via Smith normal form of the relation lattice.

namespace {

struct SnfResult {
  std::vector<i64> diag;               // d_1, ..., d_k (positive)
  std::vector<std::vector<i64>> q;     // column transform: new coords = x^T Q
  std::vector<std::vector<i64>> qinv;  // rows give representatives of new generators
};

SnfResult smith_diagonalize(std::vector<std::vector<i64>> a, std::size_t k) {
  SnfResult r;
  r.q.assign(k, std::vector<i64>(k, 0));
  r.qinv.assign(k, std::vector<i64>(k, 0));
  for (std::size_t i = 0; i < k; ++i) r.q[i][i] = r.qinv[i][i] = 1;
  const std::size_t rows = a.size();

  auto col_add = [&](std::size_t dst, std::size_t src, i64 f) {
    for (std::size_t i = 0; i < rows; ++i) a[i][dst] += f * a[i][src];
    for (std::size_t i = 0; i < k; ++i) r.q[i][dst] += f * r.q[i][src];
    for (std::size_t i = 0; i < k; ++i) r.qinv[src][i] -= f * r.qinv[dst][i];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
    for (std::size_t i = 0; i < k; ++i) std::swap(r.q[i][x], r.q[i][y]);
    std::swap(r.qinv[x], r.qinv[y]);
  };
  auto col_neg = [&](std::size_t x) {
    for (std::size_t i = 0; i < rows; ++i) a[i][x] = -a[i][x];
    for (std::size_t i = 0; i < k; ++i) r.q[i][x] = -r.q[i][x];
    for (std::size_t i = 0; i < k; ++i) r.qinv[x][i] = -r.qinv[x][i];
  };

  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      // Pick the smallest nonzero entry in the remaining block as pivot.
      std::size_t pi = rows, pj = k;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < k; ++j)
          if (a[i][j] != 0 && (pi == rows || std::abs(a[i][j]) < std::abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;  // cannot happen: relations have full rank
      std::swap(a[t], a[pi]);
      if (pj != t) col_swap(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] != 0) {
          i64 f = a[i][t] / a[t][t];
          for (std::size_t j = t; j < k; ++j) a[i][j] -= f * a[t][j];
          if (a[i][t] != 0) clean = false;
        }
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (a[t][j] != 0) {
          col_add(j, t, -(a[t][j] / a[t][t]));
          if (a[t][j] != 0) clean = false;
        }
      }
      if (clean) break;
    }
    if (a[t][t] < 0) col_neg(t);
    r.diag.push_back(a[t][t]);
  }
  return r;
}

}  // namespace

QuotientRing quotient_by_ideal(const FiniteRing& ring, const FiniteIdeal& ideal) {
  const std::size_t k = ring.rank();
  std::vector<std::vector<i64>> relations;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<i64> row(k, 0);
    row[i] = ring.cyclic_orders()[i];
    relations.push_back(std::move(row));
  }
  for (Elem e : ideal.elements) {
    FiniteRing::Coords c = ring.decode(e);
    relations.emplace_back(c.begin(), c.end());
  }
  SnfResult snf = smith_diagonalize(std::move(relations), k);

  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < k; ++j) {
    if (snf.diag[j] > 1) kept.push_back(j);
  }
  if (kept.empty()) throw domain_error("quotient_by_ideal: quotient is the zero ring");

  auto project = [&](const FiniteRing::Coords& x) {
    FiniteRing::Coords y(kept.size(), 0);
    for (std::size_t jj = 0; jj < kept.size(); ++jj) {
      std::size_t j = kept[jj];
      i64 s = 0;
      for (std::size_t i = 0; i < k; ++i) s += x[i] * snf.q[i][j];
      y[jj] = positive_mod(s, snf.diag[j]);
    }
    return y;
  };
  auto representative = [&](std::size_t j) {
    FiniteRing::Coords c(k, 0);
    for (std::size_t i = 0; i < k; ++i) c[i] = positive_mod(snf.qinv[j][i], ring.cyclic_orders()[i]);
    return ring.encode(c);
  };

  std::vector<i64> orders;
  std::vector<Elem> reps;
  for (std::size_t j : kept) {
    orders.push_back(snf.diag[j]);
    reps.push_back(representative(j));
  }
  std::vector<std::vector<FiniteRing::Coords>> sc(
      kept.size(), std::vector<FiniteRing::Coords>(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j)
      sc[i][j] = project(ring.decode(ring.mul(reps[i], reps[j])));
  FiniteRing quotient(std::move(orders), std::move(sc), project(ring.one_coords()));

  std::vector<Elem> elem_map(ring.cardinality());
  for (Elem x = 0; x < ring.cardinality(); ++x) {
    elem_map[x] = quotient.encode(project(ring.decode(x)));
  }
  return {std::move(quotient), std::move(elem_map)};
}

}  // namespace afdim
