#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gmcc/codes.hpp"
#include "gmcc/record.hpp"

namespace gmcc {

/// Pairs of exponents (e, e') with e <= e' in lex order, diagonal included.
using ExponentPair = std::pair<Exponent, Exponent>;

struct OrthogonalityReport {
    bool gram_is_zero = true;
    /// The sufficient first-coordinate predicate holds for every row pair.
    bool predicate_all_pairs = true;
    /// Pairs whose rows have a nonzero Hermitian product. Empty iff gram_is_zero.
    std::vector<ExponentPair> offending_pairs;
    /// Pairs for which the predicate gives no guarantee.
    std::vector<ExponentPair> predicate_failures;
};

/// e1 = e1' (mod q+1) or e1 != e1' (mod (q+1)/2). Sufficient for the
/// twisted evaluations of two monomials to be Hermitian orthogonal.
bool monomials_orthogonal(std::uint64_t e1, std::uint64_t e1p, std::uint32_t q);

/// Hermitian Gram matrix of the rows of G, exact.
OrthogonalityReport check_self_orthogonal(const GeneratorMatrix& g);

struct DistanceResult {
    std::uint32_t value = 0;
    bool exact = false;
    /// "column-dependence", "brute-force" or "footprint-only".
    std::string method;
    std::uint64_t work = 0;
    /// Column indices of the first minimal dependent subset in colex order.
    std::vector<std::size_t> witness;
};

inline constexpr std::uint64_t kDefaultDistanceBudget = 100'000'000;

/// 0 selects std::thread::hardware_concurrency().
unsigned resolve_threads(unsigned threads);

/// Minimum distance of the Euclidean dual of the row space of G: the
/// size of the smallest linearly dependent set of columns.
///
/// Subsets are visited level by level in colex order. `budget` caps the
/// number of subsets tested; the cap is applied to the colex prefix, so the
/// result and `work` do not depend on `threads`. Requires full row rank.
DistanceResult dual_distance_by_columns(const Matrix& g, const Field& f,
                                        std::uint64_t budget = kDefaultDistanceBudget, unsigned threads = 0);

inline constexpr std::uint64_t kBruteForceLimit = 10'000'000;

/// Minimum weight of the Euclidean dual by enumerating its codewords.
/// Throws UsageError when the dual has more than kBruteForceLimit words.
DistanceResult brute_force_dual_distance(const Matrix& g, const Field& f);

/// Minimum distance of the row space of G by enumerating its codewords.
/// Throws UsageError when the code has more than kBruteForceLimit words.
std::uint32_t brute_force_min_distance(const Matrix& g, const Field& f);

/// Weight distribution of the row space of G, A_0..A_n.
std::vector<std::uint64_t> weight_enumerator(const Matrix& g, const Field& f);

struct QuantumParamsOptions {
    bool verify_distance = false;
    std::uint64_t budget = kDefaultDistanceBudget;
    unsigned threads = 0;
};

/// Builds Delta_t, checks self-orthogonality (InvariantViolation on failure),
/// and returns [[n, n - 2 #Delta_t, >= t]]_q, upgraded to an exact distance
/// when requested and affordable.
QuantumCodeRecord quantum_params(const CodeParams& params, std::uint32_t t, const QuantumParamsOptions& opts = {});

}  // namespace gmcc
