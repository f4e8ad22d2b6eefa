#ifndef MAHLER_RATIONAL_LINALG_HPP
#define MAHLER_RATIONAL_LINALG_HPP

#include <Eigen/Core>
#include <gmpxx.h>

#include "mahler/errors.hpp"
#include "mahler/newton_identities.hpp"
#include "mahler/polynomial.hpp"

namespace Eigen {

// Exact rational scalar for dense Eigen types.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    typedef mpq_class Literal;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 100
    };
};

} // namespace Eigen

namespace mahler {

using RatMatrix = Eigen::Matrix<mpq_class, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<mpq_class, Eigen::Dynamic, 1>;

inline RatMatrix rat_identity(Eigen::Index n) {
    RatMatrix m = RatMatrix::Constant(n, n, mpq_class(0));
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

// Exact determinant by Gaussian elimination over Q.
inline mpq_class exact_determinant(RatMatrix m) {
    if (m.rows() != m.cols()) throw ValidationError("determinant needs a square matrix");
    const Eigen::Index n = m.rows();
    mpq_class det = 1;
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = col; r < n; ++r) {
            if (m(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != col) {
            m.row(pivot).swap(m.row(col));
            det = -det;
        }
        det *= m(col, col);
        const mpq_class inv = mpq_class(1) / m(col, col);
        for (Eigen::Index r = col + 1; r < n; ++r) {
            if (m(r, col) == 0) continue;
            const mpq_class f = m(r, col) * inv;
            for (Eigen::Index c = col; c < n; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

// Exact monic characteristic polynomial. Leverrier's scheme: the traces of
// the matrix powers are the power sums of the eigenvalues, and Newton's
// identities turn those into the coefficients.
inline RatPolynomial char_poly_exact(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("characteristic polynomial needs a square matrix");
    const Eigen::Index n = m.rows();
    if (n == 0) throw ValidationError("matrix must be nonempty");
    std::vector<mpq_class> power_sums(static_cast<std::size_t>(n));
    RatMatrix p = m;
    for (Eigen::Index k = 0; k < n; ++k) {
        if (k > 0) p = (p * m).eval();
        power_sums[static_cast<std::size_t>(k)] = p.trace();
    }
    return monic_from_power_sums(power_sums);
}

// Doubles are dyadic rationals; this lift is exact.
inline RatMatrix rational_lift(const Eigen::MatrixXd& m) {
    RatMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = mpq_class(m(i, j));
    return out;
}

inline Eigen::MatrixXd to_double(const RatMatrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
    return out;
}

} // namespace mahler

#endif
