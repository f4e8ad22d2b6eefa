#ifndef MAHLER_TEXT_FORMATS_HPP
#define MAHLER_TEXT_FORMATS_HPP

#include <string>

#include <Eigen/Core>

#include "mahler/polynomial.hpp"

namespace mahler {

// Shared polynomial text format: comma-separated integer coefficients in
// descending degree order, e.g. "1,0,-3,1" for X^3 - 3X + 1.
std::string to_comma_string(const IntPolynomial& p);
std::string to_comma_string(const RatPolynomial& p); // entries "n" or "n/d"

// Human-readable form, e.g. "x^3 - 3x + 1".
std::string to_human_string(const IntPolynomial& p);

// Accepts the comma format or the explicit-power human form
// ("x^10+x^9-x^7-..."). Malformed input raises ValidationError naming the
// offending token.
IntPolynomial parse_int_polynomial(const std::string& text);

// Rational coefficients: comma format with optional "n/d" entries.
RatPolynomial parse_rat_polynomial(const std::string& text);

// Matrix text format: rows separated by ';', entries by ','; also accepts a
// JSON array of arrays when the string starts with '['.
Eigen::MatrixXd parse_real_matrix(const std::string& text);

std::string to_matrix_string(const Eigen::MatrixXd& m);

} // namespace mahler

#endif
