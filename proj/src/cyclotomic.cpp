#include "mahler/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace mahler {

namespace {
std::mutex g_cyclo_mutex;
std::map<unsigned long, IntPolynomial>& cyclo_cache() {
    static std::map<unsigned long, IntPolynomial> cache;
    return cache;
}
} // namespace

IntPolynomial cyclotomic_polynomial(unsigned long m) {
    if (m == 0) throw ValidationError("cyclotomic index must be >= 1");
    {
        std::lock_guard<std::mutex> lock(g_cyclo_mutex);
        auto it = cyclo_cache().find(m);
        if (it != cyclo_cache().end()) return it->second;
    }
    IntPolynomial result;
    if (m == 1) {
        result = IntPolynomial({mpz_class(1), mpz_class(-1)});
    } else {
        // Phi_m = (X^m - 1) / prod of Phi_d over proper divisors d
        std::vector<mpz_class> xm(m + 1, mpz_class(0));
        xm[0] = 1;
        xm[m] = -1;
        IntPolynomial num(std::move(xm));
        for (unsigned long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            IntPolynomial q;
            if (!try_divide_monic(num, cyclotomic_polynomial(d), &q))
                throw std::logic_error("cyclotomic division must be exact");
            num = std::move(q);
        }
        result = std::move(num);
    }
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return cyclo_cache().emplace(m, std::move(result)).first->second;
}

CyclotomicSplit cyclotomic_part(const IntPolynomial& p) {
    if (p.is_zero() || !p.is_monic()) throw ValidationError("cyclotomic split requires a monic polynomial");
    const int n = p.degree();
    IntPolynomial cyc = IntPolynomial::one();
    IntPolynomial rest = p;
    // phi(m) >= sqrt(m/2) for all m >= 1, so phi(m) <= n forces m <= 2n^2.
    const unsigned long m_max = 2ul * static_cast<unsigned long>(n) * static_cast<unsigned long>(n) + 1;
    for (unsigned long m = 1; m <= m_max && rest.degree() > 0; ++m) {
        const unsigned long phi = euler_phi(m);
        if (phi > static_cast<unsigned long>(rest.degree())) continue;
        const IntPolynomial phi_m = cyclotomic_polynomial(m);
        IntPolynomial q;
        while (rest.degree() >= phi_m.degree() && try_divide_monic(rest, phi_m, &q)) {
            cyc = cyc * phi_m;
            rest = q;
        }
    }
    return {cyc, rest};
}

} // namespace mahler
