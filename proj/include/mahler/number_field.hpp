#ifndef MAHLER_NUMBER_FIELD_HPP
#define MAHLER_NUMBER_FIELD_HPP

#include <random>
#include <string>
#include <vector>

#include "mahler/polynomial.hpp"
#include "mahler/precision.hpp"
#include "mahler/rational_linalg.hpp"
#include "mahler/roots.hpp"

namespace mahler {

// Element of k = Q(theta) in the power basis: coords[i] is the coefficient of
// theta^i. Arithmetic is performed by the owning NumberField, exactly modulo
// the minimal polynomial.
struct FieldElement {
    std::vector<mpq_class> coords;

    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.coords == b.coords; }
};

// Square matrix over k, row major.
struct FieldMatrix {
    int dim = 0;
    std::vector<FieldElement> entries;

    FieldElement& at(int i, int j) { return entries[static_cast<std::size_t>(i * dim + j)]; }
    const FieldElement& at(int i, int j) const { return entries[static_cast<std::size_t>(i * dim + j)]; }
};

struct IntegralityReport {
    bool pass = false;
    RatPolynomial char_poly;
    std::vector<int> fractional_powers; // powers of X carrying a non-integer coefficient
};

// Totally real number field k given by a monic minimal polynomial.
// Construction verifies: monic, exactly squarefree, exactly irreducible up to
// degree 8 (Kronecker factor search; above that the flag records that
// irreducibility is asserted by the caller), and totally real via certified
// numeric roots.
class NumberField {
public:
    static NumberField make(const IntPolynomial& min_poly, const RootOptions& options = {});

    int degree() const { return min_poly_.degree(); }
    const IntPolynomial& min_poly() const { return min_poly_; }
    bool irreducibility_verified() const { return irreducibility_verified_; }
    // real embeddings theta -> R, ascending; certified to ~1e-35
    const std::vector<Real128>& embeddings() const { return embeddings_; }
    std::vector<double> embeddings_double() const;

    // -- elements -----------------------------------------------------------
    FieldElement element(std::vector<mpq_class> coords) const; // reduces mod min_poly
    FieldElement rational_element(const mpq_class& q) const;
    FieldElement zero() const { return rational_element(0); }
    FieldElement one() const { return rational_element(1); }
    FieldElement generator() const;

    bool is_zero(const FieldElement& a) const;
    bool is_integral(const FieldElement& a) const; // integer power-basis coordinates

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement scalar_mul(const mpq_class& c, const FieldElement& a) const;
    FieldElement inverse(const FieldElement& a) const;

    // matrix of multiplication by a in the power basis; an exact ring
    // homomorphism k -> Mat_d1(Q)
    RatMatrix regular_representation(const FieldElement& a) const;
    mpq_class norm(const FieldElement& a) const; // N_{k/Q} = det of the regular representation
    double embed(const FieldElement& a, int embedding_index) const;

    // -- matrices over k ----------------------------------------------------
    FieldMatrix matrix(int dim, std::vector<FieldElement> entries) const;
    FieldMatrix identity_matrix(int dim) const;
    FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b) const;
    FieldElement mat_trace(const FieldMatrix& a) const;
    FieldElement determinant(const FieldMatrix& a) const;

    // exact monic characteristic polynomial over k, coefficients in
    // descending degree order (traces of powers + Newton's identities)
    std::vector<FieldElement> char_poly_field(const FieldMatrix& a) const;

    // block embedding: entrywise regular representation, (d1 d2) x (d1 d2)
    RatMatrix iota1(const FieldMatrix& y) const;

    // characteristic polynomial of the diagonal embedding across all real
    // embeddings: the numeric product over sigma of sigma(char poly of y)
    Polynomial<double> iota2_char_poly(const FieldMatrix& y) const;

    // char_poly_exact(iota1(y)) with an exact integrality verdict
    IntegralityReport verify_integrality(const FieldMatrix& y) const;

    // random element of SL_2(Z[theta]) as a product of elementary matrices
    // (determinant exactly 1 by construction)
    FieldMatrix random_sl2(std::mt19937_64& rng, int factors = 8, long coord_height = 3) const;

private:
    NumberField() = default;

    IntPolynomial min_poly_;
    std::vector<Real128> embeddings_;
    bool irreducibility_verified_ = false;
};

} // namespace mahler

#endif
