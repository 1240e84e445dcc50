#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modgame {

enum class ErrorCode {
  kInvalidParameters,
  kInvalidConfig,
  kDomain,
  kWrongVariant,
  kNoConvergence,
  kDegenerateSupply,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library surfaces as this exception. `details` carries
// one entry per offending field (e.g. "params.alpha: must lie in [0, 1]").
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::string> details = {})
      : std::runtime_error(message), code_(code), details_(std::move(details)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  ErrorCode code_;
  std::vector<std::string> details_;
};

}  // namespace modgame
