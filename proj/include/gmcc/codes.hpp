#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gmcc/field.hpp"
#include "gmcc/lattice.hpp"
#include "gmcc/matrix.hpp"

namespace gmcc {

/// Parameters of a generalized monomial-Cartesian code over GF(q^2).
///
/// A_1 is implicit: the lambda(q+1)-th roots of unity zeta^0, zeta^1, ...
/// `eval_sets[j-2]` holds A_j for j >= 2 in its configured order.
struct CodeParams {
    std::uint32_t q = 0;
    std::uint32_t lambda = 0;
    ExponentBox box{std::vector<std::uint32_t>{1}};
    std::vector<std::vector<Element>> eval_sets;
    FieldPtr field;

    std::size_t m() const { return box.m(); }
    std::uint64_t n() const { return box.n(); }

    /// Validates and builds parameters. `tail_sizes` are (a_2, ..., a_m).
    /// Without `eval_sets`, A_j defaults to the first a_j powers of
    /// zeta_{q^2-1}. Throws UsageError on any domain violation.
    static CodeParams make(std::uint32_t q, std::uint32_t lambda, std::span<const std::uint32_t> tail_sizes,
                           std::optional<std::vector<std::vector<Element>>> eval_sets = std::nullopt);

    /// Same, with A_j given as generator exponents.
    static CodeParams make_from_exponents(std::uint32_t q, std::uint32_t lambda,
                                          const std::vector<std::vector<std::uint32_t>>& eval_set_exponents);
};

/// GF(q^2) for odd prime power q, cached per q.
FieldPtr field_for_q(std::uint32_t q);

/// The evaluation grid Z in lex order of the index tuples alpha.
class PointGrid {
  public:
    PointGrid(std::size_t m, std::vector<Element> coords) : m_(m), coords_(std::move(coords)) {}

    std::size_t m() const { return m_; }
    std::size_t size() const { return m_ == 0 ? 0 : coords_.size() / m_; }
    std::span<const Element> point(std::size_t alpha) const { return {coords_.data() + alpha * m_, m_}; }

  private:
    std::size_t m_;
    std::vector<Element> coords_;
};

inline constexpr std::uint64_t kMaxGridPoints = 1u << 16;

/// Throws UsageError when n exceeds kMaxGridPoints.
PointGrid build_grid(const CodeParams& params);

/// q+1 alternating blocks of zeta_{q^2-1}^((q-1)/2) and 1.
Vector build_twist(const CodeParams& params);

/// The all-ones twist.
Vector unit_twist(std::size_t n);

/// Coordinate alpha: v_alpha * prod_j (P_alpha)_j^(e_j).
Vector eval_monomial(const Field& f, const Exponent& e, std::span<const Element> twist, const PointGrid& grid);

/// Evaluates sum coeffs[i] X^(support[i]).
Vector eval_polynomial(const Field& f, const std::vector<Exponent>& support, std::span<const Element> coeffs,
                       std::span<const Element> twist, const PointGrid& grid);

/// Generator matrix of C_{v,Delta}: one row per exponent of Delta in lex
/// order, one column per grid point.
struct GeneratorMatrix {
    ExponentSet delta;
    Matrix rows;
    FieldPtr field;
};

GeneratorMatrix generator_matrix(const ExponentSet& delta, std::span<const Element> twist, const PointGrid& grid,
                                 FieldPtr field);

/// sum a_i b_i^q
Element hermitian_ip(const Field& f, std::span<const Element> a, std::span<const Element> b);
/// sum a_i b_i
Element euclidean_ip(const Field& f, std::span<const Element> a, std::span<const Element> b);
Vector star(const Field& f, std::span<const Element> a, std::span<const Element> b);

/// Hermitian product of the canonically twisted evaluations of X^e and
/// X^f, computed from the per-variable factorization of the sum. Needs
/// no grid, so it works for any length.
Element twisted_monomial_hermitian_ip(const CodeParams& params, const Exponent& e, const Exponent& f);

/// w_i = 1 / v_i^q
Vector dual_twist(const Field& f, std::span<const Element> v);

}  // namespace gmcc
