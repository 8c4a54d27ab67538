#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "afdim/classify.hpp"
#include "afdim/errors.hpp"
#include "afdim/finitering.hpp"
#include "afdim/json.hpp"
#include "afdim/numtheory.hpp"
#include "afdim/quadorder.hpp"
#include "afdim/ringformat.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

std::vector<afdim::FiniteFieldDesc> to_fields(const std::vector<std::pair<std::int64_t, int>>& v) {
  std::vector<afdim::FiniteFieldDesc> out;
  for (auto [p, k] : v) out.push_back({p, k});
  return out;
}

}  // namespace

PYBIND11_MODULE(afdim, m) {
  m.doc() = "Classification of quadratic orders by AF-dimension, plus a finite "
            "commutative ring engine for brute-force verification";

  py::register_exception<afdim::domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<afdim::capacity_error>(m, "CapacityError", PyExc_RuntimeError);

  m.def("is_prime", &afdim::is_prime, py::arg("n"));
  m.def(
      "factorize",
      [](std::int64_t n) {
        auto f = afdim::factorize(n);
        return py::make_tuple(f.sign, f.factorization.factors);
      },
      py::arg("n"), "Returns (sign, [(prime, exponent), ...])");
  m.def("is_squarefree", &afdim::is_squarefree, py::arg("n"));
  m.def("legendre", &afdim::legendre, py::arg("a"), py::arg("p"));
  m.def("kronecker", &afdim::kronecker, py::arg("a"), py::arg("p"));
  m.def("sqrt_mod", &afdim::sqrt_mod, py::arg("a"), py::arg("p"));

  m.def("discriminant", &afdim::discriminant, py::arg("n"));
  m.def(
      "split_prime",
      [](std::int64_t n, std::int64_t p) { return json_to_py(json(afdim::split_prime(n, p))); },
      py::arg("n"), py::arg("p"));

  m.def(
      "af_dim_order",
      [](std::int64_t n, std::int64_t r) { return json_to_py(json(afdim::af_dim_order(n, r))); },
      py::arg("n"), py::arg("r"));
  m.def(
      "classify_order",
      [](std::int64_t n, std::int64_t r) { return json_to_py(json(afdim::classify_order(n, r))); },
      py::arg("n"), py::arg("r"));
  m.def(
      "verify_afdim_local",
      [](std::int64_t n, std::int64_t r, std::int64_t p, int exponent_margin,
         std::uint64_t quotient_bound, int omega_cap) {
        afdim::VerifyOptions opts{exponent_margin, quotient_bound, omega_cap};
        return json_to_py(json(afdim::verify_afdim_local(n, r, p, opts)));
      },
      py::arg("n"), py::arg("r"), py::arg("p"), py::arg("exponent_margin") = 2,
      py::arg("quotient_bound") = 65536, py::arg("omega_cap") = 12);
  m.def(
      "classify_axb",
      [](const std::vector<std::pair<std::int64_t, int>>& a,
         const std::vector<std::pair<std::int64_t, int>>& b, const std::vector<int>& spec_map) {
        return json_to_py(json(afdim::classify_axb(to_fields(a), to_fields(b), spec_map)));
      },
      py::arg("a_fields"), py::arg("b_fields"), py::arg("spec_map"),
      "Field descriptors are (characteristic, degree) pairs");

  py::class_<afdim::FiniteRing>(m, "Ring")
      .def_static("from_text", [](const std::string& text) { return afdim::parse_ring(text); })
      .def_static("cyclic", &afdim::FiniteRing::cyclic)
      .def_static("product", &afdim::FiniteRing::product)
      .def("__len__", &afdim::FiniteRing::cardinality)
      .def("serialize", [](const afdim::FiniteRing& r) { return afdim::serialize_ring(r); })
      .def("af_dim",
           [](const afdim::FiniteRing& r, int cap) {
             auto v = afdim::af_dim(r, cap);
             return py::make_tuple(v.value, v.capped);
           },
           py::arg("cap") = 6, "Returns (value, capped)")
      .def("omega",
           [](const afdim::FiniteRing& r, const std::vector<std::vector<std::int64_t>>& gens,
              int cap) {
             std::vector<afdim::FiniteRing::Elem> g;
             for (const auto& c : gens) g.push_back(r.encode(c));
             auto v = afdim::omega(r, afdim::ideal_from_generators(r, g), cap);
             return py::make_tuple(v.value, v.capped);
           },
           py::arg("generators"), py::arg("cap") = 12,
           "Omega of the ideal generated by the given coordinate vectors")
      .def("num_ideals",
           [](const afdim::FiniteRing& r) { return afdim::enumerate_ideals(r).size(); });
}
