#pragma once

#include <stdexcept>
#include <string>

namespace qh {

/// Domain error: bad arguments, mixed field orders, inversion of zero.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A structural identity the library relies on failed to hold.  Carries a
/// witness describing the first offending input.  These are never caught
/// and "fixed up"; suite runners convert them into failed report entries.
struct ConsistencyError : std::runtime_error {
    explicit ConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qh
