#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Under C++20, Boost releases before 1.75 turn `rational == int` into a call to
// itself through the reversed-operator rewrite. These exact-match, non-template
// overloads win resolution over the Boost templates, in either operand order
// and for != as well.
namespace boost {
#define MLIM_RATIONAL_EQ(T)                                                  \
  inline bool operator==(const rational<std::int64_t>& a, T b) {             \
    return a == rational<std::int64_t>(static_cast<std::int64_t>(b));        \
  }
MLIM_RATIONAL_EQ(int)
MLIM_RATIONAL_EQ(long)
MLIM_RATIONAL_EQ(long long)
MLIM_RATIONAL_EQ(unsigned)
MLIM_RATIONAL_EQ(unsigned long)
MLIM_RATIONAL_EQ(unsigned long long)
#undef MLIM_RATIONAL_EQ
}  // namespace boost

namespace mlim {

/// Exact rational used for every rank, measure and token quantity.
/// boost::rational keeps values in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

}  // namespace mlim
