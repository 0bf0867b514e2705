#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace splq {

// Bad input: flags, partitions, unsupported request shapes.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class unsupported_configuration : public validation_error {
 public:
  using validation_error::validation_error;
};

// A rule could not be built for a valid request.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}

  std::optional<int> subinterval() const { return subinterval_; }
  void set_subinterval(int s) { subinterval_ = s; }

 private:
  std::optional<int> subinterval_;
};

class root_count_mismatch : public numeric_error {
 public:
  using numeric_error::numeric_error;
};

class convergence_failure : public numeric_error {
 public:
  using numeric_error::numeric_error;
};

class degenerate_denominator : public numeric_error {
 public:
  using numeric_error::numeric_error;
};

class negative_discriminant : public numeric_error {
 public:
  using numeric_error::numeric_error;
};

class target_unreachable : public numeric_error {
 public:
  using numeric_error::numeric_error;
};

}  // namespace splq
