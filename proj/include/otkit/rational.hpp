#ifndef OTKIT_RATIONAL_HPP
#define OTKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace otk {

// Exact rational scalar. mpq_class maintains the canonical form this library
// relies on everywhere: positive denominator, coprime numerator/denominator,
// zero stored as 0/1.
using Rational = mpq_class;

using QVector = std::vector<Rational>;

// Parses "p" or "p/q" (q != 0) and canonicalizes.
Rational parse_rational(const std::string& text);

// Renders as "p" or "p/q" with q > 0.
std::string to_string(const Rational& value);

bool is_zero_vector(const QVector& v);

}  // namespace otk

#endif
