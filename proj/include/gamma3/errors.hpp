#pragma once

#include <stdexcept>
#include <string>

namespace gamma3 {

// Division by a series whose constant term vanishes.
struct DivisionBySingularSeries : std::domain_error {
  explicit DivisionBySingularSeries(const std::string& what)
      : std::domain_error(what) {}
};

// log/sqrt require a unit constant term; the branch is pinned by c0 = 1.
struct NonUnitConstantTerm : std::domain_error {
  explicit NonUnitConstantTerm(const std::string& what)
      : std::domain_error(what) {}
};

// The input series does not carry enough coefficients for the request.
struct InsufficientTruncation : std::invalid_argument {
  explicit InsufficientTruncation(const std::string& what)
      : std::invalid_argument(what) {}
};

// An operation valid only for odd (or only direct) Grunsky tables was
// called with the other kind.
struct ProvenanceMismatch : std::invalid_argument {
  explicit ProvenanceMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

struct OutOfRange : std::invalid_argument {
  explicit OutOfRange(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownCatalogEntry : std::invalid_argument {
  explicit UnknownCatalogEntry(const std::string& what)
      : std::invalid_argument(what) {}
};

struct ParameterOutOfRange : std::invalid_argument {
  explicit ParameterOutOfRange(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace gamma3
