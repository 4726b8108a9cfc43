#pragma once

#include <cmath>
#include <optional>

#include "error.hpp"

namespace test_util {

// Runs f and reports which errc it threw, if any.
template <typename F>
std::optional<freefall::errc> code_of(F&& f) {
    try {
        f();
    } catch (const freefall::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

inline double rel_err(double got, double want) {
    if (want == 0.0) return std::fabs(got);
    return std::fabs(got - want) / std::fabs(want);
}

} // namespace test_util
