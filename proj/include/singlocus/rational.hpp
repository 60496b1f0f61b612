#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace singlocus {

using Integer = mpz_class;

// Always canonical (lowest terms, positive denominator); every arithmetic
// operator canonicalizes.
using Rat = mpq_class;

using Vec = std::vector<Rat>;

std::string to_string(const Rat& q);

// Accepts "p" or "p/q" with optional leading sign.
Rat parse_rat(std::string_view text);

bool is_zero(const Vec& v);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& s, const Vec& v);
Rat dot(const Vec& a, const Vec& b);

// Positive rescaling of v to a primitive integer vector.
Vec clear_denominators(const Vec& v);

}  // namespace singlocus
