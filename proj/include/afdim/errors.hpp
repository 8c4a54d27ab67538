#pragma once

#include <stdexcept>
#include <string>

namespace afdim {

// Bad mathematical input: composite p, non-squarefree n, improper ideal, ...
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Input is valid but the requested computation exceeds a configured bound.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace afdim
