#pragma once

#include <stdexcept>
#include <string>

namespace littlewood {

struct InexactDivision : std::runtime_error {
  explicit InexactDivision(const std::string& what) : std::runtime_error(what) {}
};

struct NonInvertibleSubstitution : std::runtime_error {
  explicit NonInvertibleSubstitution(const std::string& what) : std::runtime_error(what) {}
};

struct NonExpandableDenominator : std::runtime_error {
  explicit NonExpandableDenominator(const std::string& what) : std::runtime_error(what) {}
};

struct NonInvertibleArgument : std::runtime_error {
  explicit NonInvertibleArgument(const std::string& what) : std::runtime_error(what) {}
};

struct NonIntegerResult : std::runtime_error {
  explicit NonIntegerResult(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidMode : std::runtime_error {
  explicit InvalidMode(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace littlewood
