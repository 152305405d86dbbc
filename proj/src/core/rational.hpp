#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace lef {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// No floating point appears anywhere in the core.
using Int = mpz_class;
using Rat = mpq_class;

// Malformed textual input (as opposed to a violated precondition).
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parses "p" or "p/q" (decimal, optional leading '-'). Throws ParseError on
// malformed input or zero denominator.
Rat parse_rat(const std::string& s);

// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

// mpq_class(num, den) does not reduce to lowest terms; this does.
Rat make_rat(long num, long den);

Rat rat_pow(const Rat& base, unsigned long exp);

Int factorial(unsigned long n);

// Falling factorial n·(n−1)···(n−k+1); equals 1 for k = 0.
Int falling_factorial(unsigned long n, unsigned long k);

std::vector<Rat> parse_rat_vector(const std::vector<std::string>& parts);

}  // namespace lef
