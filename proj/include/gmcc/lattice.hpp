#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

namespace gmcc {

using Exponent = std::vector<std::uint32_t>;

/// The exponent box E = {0..a_1-1} x ... x {0..a_m-1}.
///
/// Linear indices follow lex order with the last coordinate varying
/// fastest, which is also the column order of every generator matrix.
class ExponentBox {
  public:
    explicit ExponentBox(std::vector<std::uint32_t> sizes);

    /// Box for a code: a_1 = lambda(q+1) followed by `tail` = (a_2, ..., a_m).
    static ExponentBox for_code(std::uint32_t q, std::uint32_t lambda, std::span<const std::uint32_t> tail);

    std::size_t m() const { return sizes_.size(); }
    std::uint32_t size(std::size_t j) const { return sizes_[j]; }
    const std::vector<std::uint32_t>& sizes() const { return sizes_; }
    std::uint64_t n() const { return n_; }

    bool contains(const Exponent& e) const;
    std::uint64_t index_of(const Exponent& e) const;
    Exponent at(std::uint64_t index) const;

    /// Visits every exponent in lex order.
    void for_each(const std::function<void(const Exponent&)>& fn) const;

    friend bool operator==(const ExponentBox&, const ExponentBox&) = default;

  private:
    std::vector<std::uint32_t> sizes_;
    std::uint64_t n_ = 1;
};

/// Lex comparison, leftmost coordinate most significant.
std::strong_ordering lex_compare(const Exponent& e, const Exponent& f);

/// A lex-sorted subset of an ExponentBox.
class ExponentSet {
  public:
    ExponentSet(ExponentBox box, std::vector<Exponent> members);

    const ExponentBox& box() const { return box_; }
    const std::vector<Exponent>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(const Exponent& e) const;
    bool is_subset_of(const ExponentSet& other) const;

  private:
    ExponentBox box_;
    std::vector<Exponent> members_;
};

/// Dis(e) = prod_j (a_j - e_j).
std::uint64_t dis(const ExponentBox& box, const Exponent& e);

/// d_0 = min over the set of Dis(e); throws on an empty set.
std::uint64_t footprint_bound(const ExponentSet& delta);

/// E_0: exponents with e_1 <= (q-1)/2.
ExponentSet build_e0(const ExponentBox& box, std::uint32_t q);

/// Delta_t: exponents with prod (e_j + 1) < t, for 2 <= t <= (q+3)/2.
ExponentSet build_delta_t(const ExponentBox& box, std::uint32_t q, std::uint32_t t);

/// Counts (l_1..l_m) with 1 <= l_j <= b and prod l_j <= a, memoized per b.
class HyperbolicCounter {
  public:
    explicit HyperbolicCounter(std::uint64_t b) : b_(b) {}

    std::uint64_t operator()(std::uint32_t m, std::uint64_t a);
    std::uint64_t b() const { return b_; }

  private:
    std::uint64_t b_;
    std::map<std::pair<std::uint32_t, std::uint64_t>, std::uint64_t> memo_;
};

/// V_b(m, a) through a fresh HyperbolicCounter.
std::uint64_t hyperbolic_count(std::uint64_t b, std::uint32_t m, std::uint64_t a);

/// #Delta_t. Uses the V recursion when all sizes are equal, otherwise
/// counts the sub-box [0, min(a_j, t-1)) directly.
std::uint64_t delta_size(const ExponentBox& box, std::uint32_t t);

/// Closed forms for m = 2 and m = 3, valid when every a_j >= t - 1.
std::uint64_t delta_size_m2_closed(std::uint32_t t);
std::uint64_t delta_size_m3_closed(std::uint32_t t);

}  // namespace gmcc
