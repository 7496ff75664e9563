#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace latval {

using Int = mpz_class;
/// Exact rational. GMP keeps every value canonical (lowest terms, positive
/// denominator) after each arithmetic operation.
using Rat = mpq_class;

using RatVec = std::vector<Rat>;
using IntVec = std::vector<std::int64_t>;

/// Always "p/q", including integers ("3/1").
std::string to_string(const Rat& q);
/// Accepts "p/q", "p" or a decimal integer.
Rat parse_rat(std::string_view text);

RatVec to_rat(const IntVec& v);
IntVec to_int(const RatVec& v);  // throws if a coordinate is not an int64 integer
std::int64_t to_int64(const Int& z);
double to_double(const Rat& q);
std::vector<double> to_double(const RatVec& v);

Rat dot(const RatVec& a, const RatVec& b);
Rat norm2(const RatVec& a);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rat& s);
bool is_zero(const RatVec& a);

/// Positive multiple of `v` with coprime integer coordinates (zero stays zero).
RatVec primitive(const RatVec& v);

}  // namespace latval
