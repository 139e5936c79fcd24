#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rado {

enum class Errc {
    invalid_equation,
    arity_mismatch,
    not_integral,
    nonpositive_ratio,
    not_linked,
    not_a_ratio,
    incomplete_coloring,
    invalid_coloring,
    precondition,
    infeasible,
    parse,
    schema,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library. The code identifies the error class
/// named in the operation contracts; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace rado
