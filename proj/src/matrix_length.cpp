#include "mahler/matrix_length.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "mahler/errors.hpp"

namespace mahler {

namespace {

std::pair<double, double> length_from_eigenvalues(const std::vector<std::complex<double>>& eigenvalues,
                                                  double per_eigenvalue_err) {
    double s = 0, s_hi = 0, s_lo = 0;
    for (const auto& ev : eigenvalues) {
        const double m = std::abs(ev);
        if (m <= per_eigenvalue_err)
            throw ValidationError("an eigenvalue is numerically indistinguishable from zero");
        const double l = std::log(m);
        const double l_lo = std::log(m - per_eigenvalue_err);
        const double l_hi = std::log(m + per_eigenvalue_err);
        s += 2.0 * l * l;
        s_hi += 2.0 * std::max(l_lo * l_lo, l_hi * l_hi);
        if (!(l_lo <= 0.0 && l_hi >= 0.0)) s_lo += 2.0 * std::min(l_lo * l_lo, l_hi * l_hi);
    }
    const double value = std::sqrt(s);
    return {value, std::max(std::sqrt(s_hi) - value, value - std::sqrt(s_lo))};
}

} // namespace

SemisimpleCertificate check_semisimple(const RealMatrix& x, double cluster_rel_tol) {
    if (x.rows() != x.cols() || x.rows() < 1) throw ValidationError("semisimplicity needs a square matrix");
    const Eigen::Index n = x.rows();

    Eigen::EigenSolver<RealMatrix> es(x, /*computeEigenvectors=*/false);
    SemisimpleCertificate cert;
    cert.eigenvalues.reserve(static_cast<std::size_t>(n));
    double scale = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        cert.eigenvalues.push_back(es.eigenvalues()(i));
        scale = std::max(scale, std::abs(es.eigenvalues()(i)));
    }
    const double tol = cluster_rel_tol * scale;

    // union-find clustering of the eigenvalues
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    const auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
        return a;
    };
    for (std::size_t i = 0; i < parent.size(); ++i)
        for (std::size_t j = i + 1; j < parent.size(); ++j)
            if (std::abs(cert.eigenvalues[i] - cert.eigenvalues[j]) <= tol)
                parent[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));

    // gray zone: distinct clusters closer than 3x the threshold are unreliable
    for (std::size_t i = 0; i < parent.size(); ++i)
        for (std::size_t j = i + 1; j < parent.size(); ++j)
            if (find(static_cast<int>(i)) != find(static_cast<int>(j)) &&
                std::abs(cert.eigenvalues[i] - cert.eigenvalues[j]) <= 3.0 * tol)
                cert.clusters_resolved = false;

    const double sigma_zero = std::max(x.cwiseAbs().maxCoeff(), 1.0) * 1e-10;
    double max_defect = 0;
    for (std::size_t ci = 0; ci < parent.size(); ++ci) {
        if (find(static_cast<int>(ci)) != static_cast<int>(ci)) continue;
        std::complex<double> centroid(0, 0);
        int alg = 0;
        for (std::size_t j = 0; j < parent.size(); ++j) {
            if (find(static_cast<int>(j)) != static_cast<int>(ci)) continue;
            centroid += cert.eigenvalues[j];
            ++alg;
        }
        centroid /= static_cast<double>(alg);
        Eigen::MatrixXcd shifted = x.cast<std::complex<double>>();
        for (Eigen::Index d = 0; d < n; ++d) shifted(d, d) -= centroid;
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
        int geo = 0;
        for (Eigen::Index s = 0; s < svd.singularValues().size(); ++s)
            if (svd.singularValues()(s) <= sigma_zero) ++geo;
        if (geo > alg) cert.clusters_resolved = false;
        max_defect = std::max(max_defect, static_cast<double>(alg - geo));
    }
    cert.min_geometric_defect = max_defect;
    cert.is_semisimple = cert.clusters_resolved && max_defect == 0;
    return cert;
}

RatPolynomial char_poly(const RealMatrix& x) {
    if (x.rows() != x.cols() || x.rows() < 1) throw ValidationError("characteristic polynomial needs a square matrix");
    return char_poly_exact(rational_lift(x));
}

std::pair<double, double> translation_length_matrix(const RealMatrix& x, double det_tol, bool strict_det) {
    const SemisimpleCertificate cert = check_semisimple(x);
    if (!cert.clusters_resolved)
        throw ValidationError("eigenvalue clusters are unresolved; semisimplicity cannot be certified");
    if (!cert.is_semisimple)
        throw ValidationError("matrix is not semisimple; translation length is defined for semisimple isometries");
    const double det = x.determinant();
    if (strict_det) {
        if (std::abs(det - 1.0) > det_tol) throw ValidationError("determinant is far from 1");
    } else {
        if (std::abs(std::abs(det) - 1.0) > det_tol) throw ValidationError("determinant is far from +-1");
    }
    const double n = static_cast<double>(x.rows());
    const double err = std::max(1e-13, 50.0 * n * 2.2e-16 * x.norm());
    return length_from_eigenvalues(cert.eigenvalues, err);
}

TheoremAReport verify_theorem_a(const RealMatrix& x, const MeasureOptions& options) {
    TheoremAReport out;
    const auto [len, len_err] = translation_length_matrix(x);
    out.matrix_length = len;
    out.matrix_length_err = len_err;
    out.report = check_bounds(char_poly(x), options);
    out.cross_check_gap = std::abs(out.matrix_length - out.report.translation_length);
    return out;
}

RatMatrix companion_matrix_exact(const IntPolynomial& p) {
    if (!p.is_monic()) throw ValidationError("companion matrix needs a monic polynomial");
    const int n = p.degree();
    if (n < 1) throw ValidationError("companion matrix needs degree >= 1");
    RatMatrix c = RatMatrix::Constant(n, n, mpq_class(0));
    for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) c(i, n - 1) = mpq_class(-p.coefficient(i));
    return c;
}

RealMatrix companion_matrix(const IntPolynomial& p) { return to_double(companion_matrix_exact(p)); }

SemisimpleSample random_semisimple_sl(int n, std::mt19937_64& rng, bool allow_complex_pairs) {
    if (n < 2) throw ValidationError("SL_n sampling needs n >= 2");
    // unit Pythagorean rotations (a/c, b/c)
    static const int pyth[4][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {20, 21, 29}};

    std::uniform_int_distribution<int> num_dist(1, 6), den_dist(1, 6), scale_dist(1, 4), sign_dist(0, 1);

    for (int attempt = 0; attempt < 200; ++attempt) {
        const int max_pairs = allow_complex_pairs ? (n - 1) / 2 : 0;
        const int pairs = max_pairs > 0 ? std::uniform_int_distribution<int>(0, max_pairs)(rng) : 0;
        const int singles = n - 2 * pairs; // >= 1, so the determinant can be fixed exactly

        std::vector<std::complex<double>> spectrum;
        std::vector<mpq_class> single_values;
        struct PairBlock {
            mpq_class s; // dilation
            int a, b, c; // rotation a/c, b/c with a^2 + b^2 = c^2
        };
        std::vector<PairBlock> pair_blocks;
        mpq_class det_so_far = 1;
        for (int k = 0; k < pairs; ++k) {
            const auto& t = pyth[std::uniform_int_distribution<int>(0, 3)(rng)];
            mpq_class s = make_rational(num_dist(rng), den_dist(rng)) * scale_dist(rng);
            pair_blocks.push_back({s, t[0], t[1], t[2]});
            det_so_far *= s * s;
            const double sd = s.get_d();
            spectrum.emplace_back(sd * t[0] / t[2], sd * t[1] / t[2]);
            spectrum.emplace_back(sd * t[0] / t[2], -sd * t[1] / t[2]);
        }
        for (int k = 0; k + 1 < singles; ++k) {
            mpq_class v = make_rational(num_dist(rng), den_dist(rng));
            if (sign_dist(rng)) v = -v;
            single_values.push_back(v);
            det_so_far *= v;
            spectrum.emplace_back(v.get_d(), 0.0);
        }
        single_values.push_back(mpq_class(1) / det_so_far);
        spectrum.emplace_back(single_values.back().get_d(), 0.0);

        // keep eigenvalues pairwise separated and of moderate modulus so the
        // numeric certificates stay decisive
        bool usable = true;
        for (std::size_t i = 0; i < spectrum.size() && usable; ++i) {
            const double m = std::abs(spectrum[i]);
            if (m < 0.04 || m > 25.0) usable = false;
            for (std::size_t j = i + 1; j < spectrum.size() && usable; ++j) {
                const double s = std::max({1.0, m, std::abs(spectrum[j])});
                if (std::abs(spectrum[i] - spectrum[j]) < 1e-2 * s) usable = false;
            }
        }
        if (!usable) continue;

        RatMatrix b = RatMatrix::Constant(n, n, mpq_class(0));
        int pos = 0;
        for (const auto& pb : pair_blocks) {
            const mpq_class re = pb.s * make_rational(pb.a, pb.c);
            const mpq_class im = pb.s * make_rational(pb.b, pb.c);
            b(pos, pos) = re;
            b(pos, pos + 1) = -im;
            b(pos + 1, pos) = im;
            b(pos + 1, pos + 1) = re;
            pos += 2;
        }
        for (const auto& v : single_values) {
            b(pos, pos) = v;
            ++pos;
        }

        // unimodular conjugation by a short product of elementary matrices
        RatMatrix g = rat_identity(n), ginv = rat_identity(n);
        std::uniform_int_distribution<int> idx_dist(0, n - 1), coef_dist(0, 3);
        for (int t = 0; t < n + 2; ++t) {
            int i = idx_dist(rng), j = idx_dist(rng);
            if (i == j) continue;
            static const int coefs[4] = {-2, -1, 1, 2};
            const mpq_class c(coefs[coef_dist(rng)]);
            // g <- g * E_ij(c) is a column operation; ginv <- E_ij(-c) * ginv a row operation
            for (int r = 0; r < n; ++r) g(r, j) += c * g(r, i);
            for (int r = 0; r < n; ++r) ginv(i, r) -= c * ginv(j, r);
        }

        SemisimpleSample sample;
        sample.exact = (g * b * ginv).eval();
        sample.approx = to_double(sample.exact);
        sample.spectrum = std::move(spectrum);
        return sample;
    }
    throw std::logic_error("failed to sample a separated semisimple spectrum");
}

} // namespace mahler
