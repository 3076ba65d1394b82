#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace finsum {

// Library errors carry a stable machine-readable code next to the human
// message. Codes in use:
//   enumeration-too-large, cap-exceeded, dimension-mismatch, not-a-member,
//   ambiguous-representation, term-not-in-set, invalid-spec, invalid-system,
//   uncertified-cover, length-mismatch, zero-coefficient, not-shift-invariant,
//   not-coprime, invalid-equation, target-incompatible, malformed-input
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace finsum
