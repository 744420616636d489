#pragma once

#include <stdexcept>
#include <string>

namespace tinydet {

/// Bad command-line usage or an inconsistent option combination. Exit code 1.
class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Unreadable, malformed, or insufficient input data. Exit code 2.
class data_error : public std::runtime_error {
 public:
  explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical fault: divergence, non-finite values, singular systems. Exit code 3.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tinydet
