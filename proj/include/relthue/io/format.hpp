#pragma once

#include <string>

#include "relthue/lattice/reduction.hpp"

namespace relthue::io {

/// Integers below 10^5 verbatim, larger ones as "9.0912·10^50" (5 significant
/// digits). With `trim`, trailing zeros of the mantissa are dropped, so
/// 10^505 prints as "10^505" and 4*10^13 as "4·10^13".
std::string format_integer(const mpz_class& z, bool trim = false);
/// Values below 10^5 with four decimals ("308.5773"), larger ones as above.
std::string format_real(const Real& x);

/// Exact rational from "25", "-3/4", "2.5", "1e100", "10^100" or "3*10^20".
mpq_class parse_exact(const std::string& text);

/// Fixed-width table: step | A0 | ||b1||>= | H | Digits | new A0.
std::string render_table(const lattice::ReductionTrace& trace);

}  // namespace relthue::io
