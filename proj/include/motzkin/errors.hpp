#pragma once

#include <stdexcept>
#include <string>

namespace motzkin {

enum class errc {
    invalid_input,        // empty set, nonpositive entries, malformed values
    range_exceeded,       // inputs beyond the exactness guarantee
    invalid_modulus,      // modulus below 2
    no_witness,           // residue witness degenerates (d = 0)
    degenerate_input,     // family parameter n collides with a fixed element
    invalid_parameter,    // parameter outside the required residue class / range
    state_cap_exceeded,   // window enumeration aborted
    time_budget_exceeded, // per-call deadline hit
    undefined_reciprocal, // reciprocal of zero requested
    internal,             // invariant violation inside the library
};

struct Error : std::runtime_error {
    errc code;
    Error(errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw Error(c, msg); }

} // namespace motzkin
