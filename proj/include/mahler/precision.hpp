#ifndef MAHLER_PRECISION_HPP
#define MAHLER_PRECISION_HPP

#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gmpxx.h>

namespace mahler {

// Binary floating point at a fixed mantissa width. The root finder escalates
// through the rungs 64 -> 128 -> 256 -> 512 -> 1024 until certification
// succeeds.
template <unsigned Bits>
using RealOf = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::backends::digit_base_2>,
    boost::multiprecision::et_off>;

template <unsigned Bits>
using ComplexOf = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<
        boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::backends::digit_base_2>>,
    boost::multiprecision::et_off>;

using Real128 = RealOf<128>;

template <unsigned Bits>
RealOf<Bits> to_real(const mpz_class& z) {
    if (z.fits_slong_p()) return RealOf<Bits>(z.get_si());
    return RealOf<Bits>(z.get_str());
}

template <unsigned Bits>
RealOf<Bits> to_real(const mpq_class& q) {
    return to_real<Bits>(mpz_class(q.get_num())) / to_real<Bits>(mpz_class(q.get_den()));
}

} // namespace mahler

#endif
