#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gmcc {

using BigInt = boost::multiprecision::cpp_int;

enum class SingletonLabel { kMds, kQhamds, kDefect };

/// Quantum Singleton defect n - (k + 2d - 2) and its label.
struct SingletonClassification {
    std::int64_t defect = 0;
    SingletonLabel label = SingletonLabel::kDefect;

    /// "MDS", "QHAMDS" or "defect(s)".
    std::string to_string() const;
};

/// Throws UsageError unless n > 0, 0 <= k <= n, d >= 1 and the quantum
/// Singleton bound n >= k + 2d - 2 holds.
SingletonClassification classify_singleton(std::int64_t n, std::int64_t k, std::int64_t d);

/// Quantum Gilbert-Varshamov inequality
///   (q^(n-k+2) - 1) / (q^2 - 1) >= sum_{i=1}^{d-1} (q^2-1)^(i-1) C(n, i),
/// evaluated in exact integers. The parameters beat the bound when the
/// inequality fails. The comparison is done after multiplying through by
/// q^2 - 1, so `lhs` is only the floor when n - k is odd.
struct QgvVerdict {
    BigInt lhs;
    bool lhs_exact = true;
    BigInt rhs;
    bool beaten = false;
    /// n > k >= 2, d >= 2 and n = k (mod 2); reported, never enforced.
    bool preconditions_met = false;
};

QgvVerdict qgv(std::int64_t n, std::int64_t k, std::int64_t d, std::uint32_t q);

BigInt binomial(std::uint64_t n, std::uint64_t i);
/// Right-hand side summed term by term.
BigInt qgv_rhs_termwise(std::uint64_t n, std::uint64_t d, std::uint32_t q);
/// Right-hand side by Horner accumulation in (q^2 - 1).
BigInt qgv_rhs_horner(std::uint64_t n, std::uint64_t d, std::uint32_t q);

/// Smallest integer n with
///   n > (q^2 - 3 + sqrt(8q^8 + q^4 - 6q^2 + 1)) / (2(q^2 - 1)),
/// the length from which m = 2, d = 3 codes beat the QGV bound. Exact.
std::uint64_t qgv_threshold_d3(std::uint32_t q);

/// Lengths for which m = 2 codes of designed distance d provably beat the
/// QGV bound: n_low <= n <= n_high = (q^2 - 1)^2.
///
/// n_low is the smallest even integer at or above the real lower bound.
/// Every admissible length lambda(q+1)a_2 is even.
struct GvInterval {
    std::uint32_t q = 0;
    std::uint32_t d = 0;
    std::uint64_t n_low = 0;
    std::uint64_t n_high = 0;
    /// Real lower bound, rounded to 12 significant digits.
    std::string lower_bound;

    bool empty() const { return n_low > n_high; }
};

/// Requires an odd prime power q and 5 <= d <= (q+3)/2.
GvInterval gv_interval(std::uint32_t q, std::uint32_t d);

enum class LengthParity { kAny, kEven };

/// Smallest length n (within [1, (q^2-1)^2] and of the given parity) such
/// that every length n' >= n of that parity beats the QGV bound with
/// k = k_of_n(n'). Lengths with k outside [0, n] are skipped. Returns
/// nullopt when the largest length does not beat the bound.
std::optional<std::uint64_t> qgv_scan_threshold(std::uint32_t q, std::uint32_t d,
                                                const std::function<std::int64_t(std::uint64_t)>& k_of_n,
                                                LengthParity parity = LengthParity::kEven);

/// Same, with k_of_n(n) = n - 2 #Delta_d for m = 2.
std::optional<std::uint64_t> qgv_scan_threshold(std::uint32_t q, std::uint32_t d,
                                                LengthParity parity = LengthParity::kEven);

/// Decimal string of a big integer.
std::string to_decimal(const BigInt& v);

}  // namespace gmcc
