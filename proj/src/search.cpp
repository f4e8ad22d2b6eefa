#include "mahler/search.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "mahler/cyclotomic.hpp"
#include "mahler/errors.hpp"

namespace mahler {

bool is_reciprocal(const IntPolynomial& p) {
    const auto& c = p.coeffs();
    for (std::size_t i = 0, j = c.size() - 1; i < j; ++i, --j)
        if (c[i] != c[j]) return false;
    return true;
}

namespace {

struct ShardResult {
    bool found = false;
    double measure = std::numeric_limits<double>::infinity();
    std::vector<mpz_class> witness; // full coefficient vector, descending
    std::uint64_t scanned = 0;
    std::uint64_t skipped = 0;
    std::vector<CandidateRow> rows;
};

bool lex_less(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

// Mahler measure of the noncyclotomic part, with an optional early cutoff:
// once the partial product of max(1, |a_i|) (descending moduli) exceeds the
// cutoff the exact value no longer matters and NaN is returned.
double measure_with_cutoff(const IntPolynomial& noncyc, double cutoff, const RootOptions& options) {
    const RootSet rs = find_roots(noncyc, options);
    auto mods = moduli(rs);
    double product = 1.0;
    for (const auto& [m, err] : mods) {
        product *= std::max(1.0, m);
        if (product > cutoff) return std::numeric_limits<double>::quiet_NaN();
    }
    return product;
}

} // namespace

SearchRecord enumerate_and_minimize(const SearchSpec& spec, double report_threshold,
                                    std::vector<CandidateRow>* report_rows) {
    if (spec.degree < 2) throw ValidationError("search degree must be >= 2");
    if (spec.height < 1) throw ValidationError("search height must be >= 1");
    const int workers = std::max(1, spec.workers);

    const auto t0 = std::chrono::steady_clock::now();

    const int d = spec.degree;
    const std::uint64_t base = 2ull * static_cast<std::uint64_t>(spec.height) + 1ull;
    // free coefficient slots: c_1..c_{d/2} mirrored for palindromes, else c_1..c_d
    const int free_slots = spec.reciprocal_only ? d / 2 : d;
    double space = std::pow(static_cast<double>(base), free_slots);
    if (space > 1e9) throw ValidationError("search space exceeds 10^9 candidates");

    // shards split on the first two free coefficients
    const int shard_slots = std::min(2, free_slots);
    std::uint64_t shard_count = 1;
    for (int i = 0; i < shard_slots; ++i) shard_count *= base;
    std::uint64_t per_shard = 1;
    for (int i = shard_slots; i < free_slots; ++i) per_shard *= base;

    std::atomic<double> global_best{std::numeric_limits<double>::infinity()};
    std::atomic<std::uint64_t> next_shard{0};
    std::vector<ShardResult> results(shard_count);
    const bool pruning_enabled = report_rows == nullptr;

    const auto run_worker = [&] {
        for (;;) {
            const std::uint64_t shard = next_shard.fetch_add(1, std::memory_order_relaxed);
            if (shard >= shard_count) return;
            ShardResult& local = results[shard];
            for (std::uint64_t inner = 0; inner < per_shard; ++inner) {
                // decode the candidate: mixed-radix digits -> coefficients in [-h, h]
                std::vector<mpz_class> coeffs(static_cast<std::size_t>(d) + 1, mpz_class(0));
                coeffs[0] = 1;
                std::uint64_t code = shard * per_shard + inner;
                for (int slot = 0; slot < free_slots; ++slot) {
                    const long digit = static_cast<long>(code % base) - spec.height;
                    code /= base;
                    coeffs[static_cast<std::size_t>(slot) + 1] = digit;
                }
                if (spec.reciprocal_only) {
                    for (std::size_t i = 0, j = coeffs.size() - 1; i < j; ++i, --j) coeffs[j] = coeffs[i];
                }
                ++local.scanned;

                IntPolynomial p(std::vector<mpz_class>(coeffs));
                // strip roots at 0: X^k contributes measure 1
                {
                    std::vector<mpz_class> c = p.coeffs();
                    while (c.size() > 1 && c.back() == 0) c.pop_back();
                    p = IntPolynomial(std::move(c));
                }
                if (p.degree() == 0) {
                    ++local.skipped;
                    continue;
                }
                const CyclotomicSplit split = cyclotomic_part(p);
                if (split.noncyclotomic.degree() == 0) {
                    ++local.skipped;
                    continue;
                }

                double cutoff = std::numeric_limits<double>::infinity();
                if (pruning_enabled) {
                    const double seen = global_best.load(std::memory_order_relaxed);
                    if (std::isfinite(seen)) cutoff = seen * 1.1;
                }
                const double measure = measure_with_cutoff(split.noncyclotomic, cutoff, spec.roots);
                if (std::isnan(measure)) continue; // pruned: provably above the cutoff

                if (report_rows != nullptr && measure > report_threshold)
                    local.rows.push_back({IntPolynomial(std::vector<mpz_class>(coeffs)), measure});

                if (measure <= 1.0 + 1e-12) continue; // numerically trivial; guarded by the exact split above
                if (!local.found || measure < local.measure ||
                    (measure == local.measure && lex_less(coeffs, local.witness))) {
                    local.found = true;
                    local.measure = measure;
                    local.witness = coeffs;
                    // advisory prune bound; stale reads only weaken pruning
                    double seen = global_best.load(std::memory_order_relaxed);
                    while (measure < seen &&
                           !global_best.compare_exchange_weak(seen, measure, std::memory_order_relaxed)) {
                    }
                }
            }
        }
    };

    if (workers == 1) {
        run_worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker);
        for (auto& th : pool) th.join();
    }

    // deterministic reduction in shard order
    SearchRecord rec;
    bool found = false;
    double best = std::numeric_limits<double>::infinity();
    std::vector<mpz_class> witness;
    for (const auto& r : results) {
        rec.candidates_scanned += r.scanned;
        rec.cyclotomic_skipped += r.skipped;
        if (!r.found) continue;
        if (!found || r.measure < best || (r.measure == best && lex_less(r.witness, witness))) {
            found = true;
            best = r.measure;
            witness = r.witness;
        }
    }
    if (!found) throw ValidationError("no noncyclotomic candidate in the search box");
    rec.best_measure = best;
    rec.witness = IntPolynomial(std::move(witness));
    if (report_rows != nullptr) {
        for (auto& r : results)
            for (auto& row : r.rows) report_rows->push_back(std::move(row));
    }
    rec.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

} // namespace mahler
