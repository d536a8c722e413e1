#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gmcc/bounds.hpp"

namespace gmcc {

/// Parameters of one quantum code [[n, k, >= t]]_q from the Delta_t construction.
struct QuantumCodeRecord {
    std::uint32_t q = 0;
    std::uint32_t lambda = 0;
    std::uint32_t m = 0;
    /// (a_1, ..., a_m) with a_1 = lambda(q+1).
    std::vector<std::uint32_t> sizes;
    std::uint32_t t = 0;
    std::uint64_t n = 0;
    std::int64_t k = 0;
    std::uint32_t d_bound = 0;
    std::optional<std::uint32_t> d_exact;
    /// "column-dependence", "brute-force" or "footprint-only".
    std::string method = "footprint-only";
    std::uint64_t work = 0;
    SingletonClassification singleton;
    bool qgv_beaten = false;
    bool qgv_preconditions = false;
    std::string construction;

    /// Distance used for classification: d_exact when known, else t.
    std::uint32_t distance() const { return d_exact.value_or(d_bound); }

    friend bool operator==(const QuantumCodeRecord& a, const QuantumCodeRecord& b) {
        return a.q == b.q && a.lambda == b.lambda && a.m == b.m && a.sizes == b.sizes && a.t == b.t && a.n == b.n &&
               a.k == b.k && a.d_bound == b.d_bound && a.d_exact == b.d_exact && a.method == b.method &&
               a.work == b.work && a.singleton.defect == b.singleton.defect &&
               a.singleton.label == b.singleton.label && a.qgv_beaten == b.qgv_beaten &&
               a.qgv_preconditions == b.qgv_preconditions && a.construction == b.construction;
    }
};

/// "q=5,lambda=1,sizes=6x13,t=3"
std::string construction_string(std::uint32_t q, std::uint32_t lambda, const std::vector<std::uint32_t>& sizes,
                                std::uint32_t t);

/// Checks k = n - 2 #Delta_t, lambda | q - 1, 2 <= t <= (q+3)/2, n = prod sizes
/// and d_exact >= t. Throws InvariantViolation on the first failure.
void validate_record(const QuantumCodeRecord& r);

}  // namespace gmcc
