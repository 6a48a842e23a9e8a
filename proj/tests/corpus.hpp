#pragma once

#include <cstdint>
#include <string>

// Deterministic random form-descriptor generator for property tests. The same
// seed always yields the same descriptor (raw mt19937 output only, no
// library-defined distributions), and every descriptor parses and migrates
// without error diagnostics: all variables are declared, call arities match,
// UI references name real items of the owning window.

namespace corpus {

std::string generate_form(std::uint32_t seed);

}  // namespace corpus
