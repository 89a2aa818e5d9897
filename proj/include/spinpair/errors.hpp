#pragma once

#include <stdexcept>
#include <string>

namespace spinpair {

// Precondition violations (bad index, non-unit axis, off-shell momentum, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A linear system that is singular or too ill-conditioned to trust.
class DegenerateSystem : public std::runtime_error {
 public:
  explicit DegenerateSystem(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spinpair
