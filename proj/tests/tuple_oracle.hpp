#pragma once

// Test-only brute force: every ordered tuple of nonzero classes summing to
// beta, by direct recursion over all candidate first parts.

#include <functional>
#include <vector>

#include "oscount/geometry.hpp"

namespace oscount::testing {

inline void for_each_ordered_tuple(const CurveClass& beta,
                                   const std::function<void(const std::vector<CurveClass>&)>& visit)
{
    std::vector<CurveClass> prefix;
    std::function<void(const CurveClass&)> rec = [&](const CurveClass& rem) {
        if (rem.is_zero()) {
            visit(prefix);
            return;
        }
        std::vector<std::uint32_t> digits(rem.rank(), 0);
        while (true) {
            std::size_t i = 0;
            while (i < digits.size() && digits[i] == rem[i])
                digits[i++] = 0;
            if (i == digits.size())
                return;
            ++digits[i];
            prefix.emplace_back(digits);
            rec(rem - prefix.back());
            prefix.pop_back();
        }
    };
    rec(beta);
}

}  // namespace oscount::testing
