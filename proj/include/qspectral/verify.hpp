#pragma once

#include <cstdint>
#include <iosfwd>

namespace qspectral {

/// Runs a seeded sweep of the library invariants, one line per property.
/// Stops at the first violation, prints it with its inputs and returns false.
bool run_invariant_suite(std::uint64_t seed, std::ostream& out);

}  // namespace qspectral
