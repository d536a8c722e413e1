#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gmcc/record.hpp"
#include "gmcc/verify.hpp"

namespace gmcc {

enum class SweepFilter { kNone, kMds, kQhamds, kBeatsQgv };

/// Parameter ranges for a sweep. Empty `qs` yields no records.
struct SweepSpec {
    std::vector<std::uint32_t> qs;
    /// Restricts lambda to these divisors of q - 1; empty means all divisors.
    std::vector<std::uint32_t> lambdas;
    std::uint32_t m_min = 1;
    std::uint32_t m_max = 2;
    /// Range for every a_j, j >= 2, clipped to q^2 - 1.
    std::uint32_t size_min = 2;
    std::uint32_t size_max = 8;
    /// Clipped to [2, (q+3)/2]; unset means the full range.
    std::optional<std::uint32_t> t_min;
    std::optional<std::uint32_t> t_max;
    SweepFilter filter = SweepFilter::kNone;
    std::optional<std::uint64_t> n_max;
    /// 0 skips exact distances.
    std::uint64_t verify_budget = 0;
    unsigned threads = 0;
    /// Keep one record per (q, n, k, t): the smallest construction string.
    bool dedupe = true;
};

/// Records in (q, lambda, m, sizes lex, t) order.
std::vector<QuantumCodeRecord> sweep(const SweepSpec& spec);

enum class OutputFormat { kJson, kCsv };

/// Serializes records. JSON integers above 2^53 are written as strings.
void emit(const std::vector<QuantumCodeRecord>& records, OutputFormat format, std::ostream& out);
std::string to_json(const std::vector<QuantumCodeRecord>& records);
std::vector<QuantumCodeRecord> records_from_json(const std::string& text);

/// Raw CSV text of each bundled golden table, keyed by name
/// (table1..table5, ranges, ranges2).
const std::map<std::string, std::string>& golden_tables();

std::vector<std::string> table_names();

struct CellDiff {
    std::string table;
    std::size_t row = 0;
    std::string column;
    std::string expected;
    std::string actual;
};

struct TableResult {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> expected;
    std::vector<std::vector<std::string>> actual;
    /// Code tables only.
    std::vector<QuantumCodeRecord> records;
    std::vector<CellDiff> diffs;
};

struct ReproduceOptions {
    /// Exact distances for m = 1 rows and m = 2, t = 3 rows with n <= 64.
    bool verify = true;
    std::uint64_t budget = kDefaultDistanceBudget;
    unsigned threads = 0;
    /// Empty means all tables.
    std::vector<std::string> only;
};

std::vector<TableResult> reproduce_tables(const ReproduceOptions& opts = {});

/// "table1 row 3 k: expected 14, got 12"
std::string describe(const CellDiff& d);

}  // namespace gmcc
