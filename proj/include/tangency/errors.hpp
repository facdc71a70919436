// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tangency {

/// Rejected query. The code is a stable machine-readable tag used by the CLI.
class QueryError : public std::invalid_argument {
 public:
  QueryError(std::string code, const std::string& message)
      : std::invalid_argument(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace tangency
