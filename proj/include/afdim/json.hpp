#pragma once

#include <nlohmann/json.hpp>

#include "afdim/classify.hpp"
#include "afdim/quadorder.hpp"

namespace afdim {

inline void to_json(nlohmann::json& j, const AfDim& v) {
  j = nlohmann::json{{"finite", v.finite}};
  if (v.finite) j["value"] = v.value;
}

inline void to_json(nlohmann::json& j, const FactorSymbol& f) {
  j = nlohmann::json{{"p", f.p}, {"a", f.a}, {"symbol", f.symbol}};
}

inline void to_json(nlohmann::json& j, const OrderReport& r) {
  j = nlohmann::json{
      {"n", r.n},
      {"r", r.r},
      {"d", r.d},
      {"factor_data", r.factor_data},
      {"f1_set", r.f1_set},
      {"f2_set", r.f2_set},
      {"af_dim", r.af_dim},
      {"flags",
       {{"dedekind", r.dedekind},
        {"gpvd", r.gpvd},
        {"lpvd", r.lpvd},
        {"lapvd", r.lapvd},
        {"locally_conducive", r.locally_conducive},
        {"taf", r.taf}}},
  };
}

inline void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{
      {"target", {{"n", r.n}, {"r", r.r}, {"p", r.p}, {"a", r.a}}},
      {"predicted_local_max", r.predicted_local_max},
      {"observed_local_max", r.observed_local_max},
      {"ideals_examined", r.ideals_examined},
      {"agrees", r.agrees},
  };
}

inline void to_json(nlohmann::json& j, const FiniteFieldDesc& f) {
  j = nlohmann::json{{"p", f.p}, {"k", f.k}};
}

inline void to_json(nlohmann::json& j, const AXBReport& r) {
  j = nlohmann::json{
      {"a_fields", r.a_fields},
      {"b_fields", r.b_fields},
      {"spec_map", r.spec_map},
      {"flags",
       {{"reduced_dim1", r.reduced_dim1},
        {"lpvr", r.lpvr},
        {"taf", r.taf},
        {"general_zpi", r.general_zpi},
        {"bezout", r.bezout}}},
  };
}

inline void to_json(nlohmann::json& j, const IdealHNF& i) {
  j = nlohmann::json{{"a", i.a}, {"b", i.b}, {"c", i.c}, {"norm", ideal_norm(i)}};
}

inline void to_json(nlohmann::json& j, const SplittingResult& s) {
  const char* kind = s.kind == SplitKind::ramified ? "ramified"
                     : s.kind == SplitKind::split  ? "split"
                                                   : "inert";
  j = nlohmann::json{{"kind", kind}, {"primes", s.primes}};
}

}  // namespace afdim
