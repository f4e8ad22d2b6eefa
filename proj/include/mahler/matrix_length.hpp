#ifndef MAHLER_MATRIX_LENGTH_HPP
#define MAHLER_MATRIX_LENGTH_HPP

#include <complex>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "mahler/measures.hpp"
#include "mahler/rational_linalg.hpp"

namespace mahler {

using RealMatrix = Eigen::MatrixXd;

// Numeric semisimplicity certificate: eigenvalues are clustered at relative
// tolerance, and for every cluster the algebraic multiplicity is compared
// with the rank deficiency of (x - lambda I). min_geometric_defect is the
// largest algebraic-minus-geometric gap seen (0 for semisimple input).
// clusters_resolved goes false when two distinct eigenvalues sit in the gray
// zone around the clustering threshold, in which case the verdict is
// indeterminate rather than trusted.
struct SemisimpleCertificate {
    bool is_semisimple = false;
    std::vector<std::complex<double>> eigenvalues;
    double min_geometric_defect = 0;
    bool clusters_resolved = true;
};

SemisimpleCertificate check_semisimple(const RealMatrix& x, double cluster_rel_tol = 1e-7);

// Exact characteristic polynomial of the matrix as stored: entries are lifted
// to rationals (doubles are dyadic) and fed to the Leverrier scheme.
RatPolynomial char_poly(const RealMatrix& x);

// l(x) = sqrt(sum 2 (log|eigenvalue|)^2) under the metric <X,Y> = 2 tr(XY).
// Rejects non-semisimple input and determinant far from +-1 (or far from +1
// with strict_det).
std::pair<double, double> translation_length_matrix(const RealMatrix& x, double det_tol = 1e-6,
                                                    bool strict_det = false);

struct TheoremAReport {
    MeasureReport report;           // bounds for the characteristic polynomial
    double matrix_length = 0;       // eigenvalue-side translation length
    double matrix_length_err = 0;
    double cross_check_gap = 0;     // |matrix-side - polynomial-side|
};

// Runs check_bounds on char_poly(x) and cross-checks the matrix-side length.
TheoremAReport verify_theorem_a(const RealMatrix& x, const MeasureOptions& options = {});

// Companion matrix of a monic polynomial (eigenvalues = roots).
RealMatrix companion_matrix(const IntPolynomial& p);
RatMatrix companion_matrix_exact(const IntPolynomial& p);

// Random semisimple element of SL_n(Q) with determinant exactly 1: a block
// diagonal of rational scalars and rational rotation-dilation 2x2 blocks,
// conjugated by a random unimodular integer matrix. Eigenvalue moduli are
// kept pairwise separated so the numeric certificate stays decisive.
struct SemisimpleSample {
    RatMatrix exact;
    RealMatrix approx;
    std::vector<std::complex<double>> spectrum;
};

SemisimpleSample random_semisimple_sl(int n, std::mt19937_64& rng, bool allow_complex_pairs = true);

} // namespace mahler

#endif
