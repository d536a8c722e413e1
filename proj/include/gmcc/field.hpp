#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmcc {

/// Raised for inputs outside an operation's domain (maps to CLI exit code 1).
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a proven invariant fails to hold (maps to CLI exit code 2).
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Element of a table-based finite field in discrete-log form.
///
/// `log` is the exponent with respect to the field generator, or
/// `Element::kZero` for the additive identity. Elements carry no field
/// pointer; use `BoundElement` when mixed-field checks are wanted.
struct Element {
    static constexpr std::uint32_t kZero = 0xFFFFFFFFu;

    std::uint32_t log = kZero;

    static constexpr Element zero() { return Element{kZero}; }
    static constexpr Element one() { return Element{0}; }
    static constexpr Element gen_pow(std::uint32_t e) { return Element{e}; }

    constexpr bool is_zero() const { return log == kZero; }
    friend constexpr bool operator==(Element, Element) = default;
};

/// GF(p^k) with the canonical modulus: the lexicographically first monic
/// irreducible polynomial (leading coefficient first, constant term last)
/// whose X-residue is primitive. The generator is always that residue.
///
/// Immutable after construction; share through `FieldPtr`.
class Field {
  public:
    static constexpr std::uint64_t kMaxSize = 1u << 20;

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t size() const { return size_; }
    /// Order of the multiplicative group, p^k - 1.
    std::uint32_t order() const { return size_ - 1; }
    /// Modulus coefficients, leading (=1) first, constant term last.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool is_quadratic_extension() const { return k_ % 2 == 0; }
    /// q for GF(q^2); throws when k is odd.
    std::uint32_t sqrt_size() const;

    Element generator() const { return Element{size_ == 2 ? 0u : 1u}; }
    Element minus_one() const { return Element{p_ == 2 ? 0u : order() / 2}; }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element inv(Element a) const;
    Element pow(Element a, std::uint64_t e) const;
    /// Frobenius x -> x^q on GF(q^2).
    Element conj(Element a) const;

    /// zeta_t = generator^((p^k-1)/t); throws unless t | p^k - 1.
    Element root_of_unity(std::uint64_t t) const;
    /// Multiplicative order of a nonzero element.
    std::uint64_t multiplicative_order(Element a) const;

    /// Integer index of an element: sum of c_i p^i over its polynomial
    /// coefficients. Zero maps to 0, one maps to 1.
    std::uint32_t to_index(Element a) const;
    Element from_index(std::uint32_t index) const;
    /// Embeds an integer of the prime subfield.
    Element from_int(std::int64_t v) const;

    bool contains(Element a) const { return a.is_zero() || a.log < order(); }

    /// All field elements in index order.
    std::vector<Element> elements() const;

    friend std::shared_ptr<const Field> make_field(std::uint32_t p, std::uint32_t k);

  private:
    Field() = default;

    std::uint32_t p_ = 0;
    std::uint32_t k_ = 0;
    std::uint32_t size_ = 0;
    std::uint32_t q_ = 0;  // p^(k/2) when k is even
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;   // exp_[i] = index of g^i, i < order
    std::vector<std::uint32_t> log_;   // log_[index], index > 0
    std::vector<std::uint32_t> zech_;  // zech_[i] = log(1 + g^i) or kZero
};

using FieldPtr = std::shared_ptr<const Field>;

/// Builds the canonical GF(p^k). Throws UsageError when p is not prime,
/// k == 0, or p^k exceeds Field::kMaxSize.
FieldPtr make_field(std::uint32_t p, std::uint32_t k);

/// Returns all x in GF(q^2) with x^(q+1) = -1, in increasing log order.
std::vector<Element> solve_qplus1_power_eq_minus_one(const Field& f);

/// Element paired with its field; arithmetic checks that both operands
/// come from the same field object.
class BoundElement {
  public:
    BoundElement(FieldPtr field, Element value);

    const FieldPtr& field() const { return field_; }
    Element value() const { return value_; }

    BoundElement operator+(const BoundElement& o) const;
    BoundElement operator-(const BoundElement& o) const;
    BoundElement operator*(const BoundElement& o) const;
    BoundElement operator/(const BoundElement& o) const;
    BoundElement operator-() const;
    BoundElement inv() const;
    BoundElement pow(std::uint64_t e) const;
    BoundElement conj() const;

    friend bool operator==(const BoundElement& a, const BoundElement& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

  private:
    const Field& same_field(const BoundElement& o) const;

    FieldPtr field_;
    Element value_;
};

bool is_prime(std::uint64_t n);
/// Returns (p, s) with q = p^s, or nullopt-like {0,0} when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_decomposition(std::uint64_t q);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace gmcc
