#ifndef MAHLER_CYCLOTOMIC_HPP
#define MAHLER_CYCLOTOMIC_HPP

#include <map>
#include <vector>

#include "mahler/errors.hpp"
#include "mahler/polynomial.hpp"

namespace mahler {

inline unsigned long euler_phi(unsigned long m) {
    unsigned long result = m;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// m-th cyclotomic polynomial: (X^m - 1) / prod_{d | m, d < m} Phi_d.
IntPolynomial cyclotomic_polynomial(unsigned long m);

struct CyclotomicSplit {
    IntPolynomial cyclotomic;    // product of all cyclotomic factors, with multiplicity
    IntPolynomial noncyclotomic; // the exact cofactor
};

// Exact factorization p = cyclotomic * noncyclotomic for monic p in Z[X].
// By Kronecker's theorem the cyclotomic factors of p are exactly the Phi_m
// with phi(m) <= deg p dividing p, so trial division over that finite range
// is complete.
CyclotomicSplit cyclotomic_part(const IntPolynomial& p);

} // namespace mahler

#endif
