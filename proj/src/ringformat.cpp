#include "afdim/ringformat.hpp"

#include <sstream>
#include <vector>

#include "afdim/errors.hpp"

namespace afdim {

FiniteRing parse_ring(std::istream& in) {
  std::vector<std::int64_t> orders;
  FiniteRing::Coords one;
  std::vector<std::vector<FiniteRing::Coords>> sc;
  bool have_orders = false, have_unity = false;

  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::string key;
    if (!(row >> key)) continue;

    if (key == "orders") {
      std::int64_t e;
      while (row >> e) orders.push_back(e);
      if (orders.empty()) throw domain_error("ring format: empty orders line");
      have_orders = true;
      sc.assign(orders.size(),
                std::vector<FiniteRing::Coords>(orders.size(), FiniteRing::Coords(orders.size(), 0)));
    } else if (key == "unity") {
      if (!have_orders) throw domain_error("ring format: unity before orders");
      std::int64_t c;
      while (row >> c) one.push_back(c);
      if (one.size() != orders.size()) throw domain_error("ring format: unity length mismatch");
      have_unity = true;
    } else if (key == "mul") {
      if (!have_orders) throw domain_error("ring format: mul before orders");
      std::size_t i, j;
      if (!(row >> i >> j) || i >= orders.size() || j >= orders.size() || i > j)
        throw domain_error("ring format: bad mul indices");
      FiniteRing::Coords c;
      std::int64_t v;
      while (row >> v) c.push_back(v);
      if (c.size() != orders.size()) throw domain_error("ring format: mul row length mismatch");
      sc[i][j] = c;
      sc[j][i] = std::move(c);
    } else {
      throw domain_error("ring format: unknown keyword '" + key + "'");
    }
  }
  if (!have_orders || !have_unity) throw domain_error("ring format: orders and unity required");
  return FiniteRing(std::move(orders), std::move(sc), std::move(one));
}

FiniteRing parse_ring(const std::string& text) {
  std::istringstream in(text);
  return parse_ring(in);
}

std::string serialize_ring(const FiniteRing& ring) {
  std::ostringstream out;
  out << "orders";
  for (auto e : ring.cyclic_orders()) out << ' ' << e;
  out << "\nunity";
  for (auto c : ring.one_coords()) out << ' ' << c;
  out << '\n';
  const auto& sc = ring.structure_constants();
  for (std::size_t i = 0; i < sc.size(); ++i) {
    for (std::size_t j = i; j < sc.size(); ++j) {
      bool zero = true;
      for (auto v : sc[i][j]) {
        if (v != 0) zero = false;
      }
      if (zero) continue;
      out << "mul " << i << ' ' << j;
      for (auto v : sc[i][j]) out << ' ' << v;
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace afdim
