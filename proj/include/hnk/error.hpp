#pragma once

#include <stdexcept>
#include <string>

namespace hnk {

/// Raised on malformed input: bad files, shape mismatches, violated
/// operation preconditions. Identity failures are never exceptions;
/// they are reported through CheckReport.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace hnk
