#pragma once

#include <rado/algebra.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rado::detail {

/// Converts a coefficient row to int64 for hot loops over [-magnitude,
/// magnitude]. Throws when sum |c_i| * magnitude could overflow.
inline std::vector<std::int64_t> to_small_row(std::span<const Integer> row, std::int64_t magnitude,
                                              const std::string& what)
{
    constexpr std::int64_t limit = std::int64_t{1} << 62;
    std::vector<std::int64_t> out;
    out.reserve(row.size());
    Integer bound = 0;
    for (const auto& c : row) {
        if (!c.fits_slong_p())
            throw Error(Errc::precondition, what + " coefficient " + c.get_str() + " is too large");
        out.push_back(c.get_si());
        bound += abs(c);
    }
    bound *= Integer(static_cast<long>(std::max<std::int64_t>(magnitude, 1)));
    if (bound >= Integer(static_cast<long>(limit)))
        throw Error(Errc::precondition, what + " is too large for the search interval");
    return out;
}

} // namespace rado::detail
