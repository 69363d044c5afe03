#pragma once

#include <stdexcept>
#include <string>

namespace dicoder {

/// Raised for invalid input data: unreadable files, missing columns,
/// malformed configuration, degenerate dictionary entries.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dicoder
