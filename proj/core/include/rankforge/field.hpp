#ifndef RANKFORGE_FIELD_HPP
#define RANKFORGE_FIELD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "rankforge/errors.hpp"

namespace rankforge {

class FieldSpec;

/// Shared handle to an immutable field description. Elements, matrices and
/// codes keep one of these; arithmetic goes through the spec's value-level ops.
using Field = std::shared_ptr<const FieldSpec>;

/// Polynomial over F_p, little-endian coefficient list (constant term first).
using PrimePoly = std::vector<std::uint32_t>;

bool is_prime(std::uint64_t n);

/// Trial division by every monic polynomial of degree <= deg(f)/2.
bool is_irreducible(const PrimePoly& f, std::uint32_t p);

/// Lexicographically smallest (little-endian coefficient tuple, first entry most
/// significant) monic irreducible polynomial of degree n over F_p. Deterministic.
PrimePoly find_irreducible(std::uint32_t p, std::uint32_t n);

/// The tower F_p <= F_q <= F_{q^m} with q = p^sub_degree and q^m = p^degree.
///
/// Elements are canonical integers in [0, p^degree): the base-p little-endian
/// digit vector is the coefficient vector of the residue polynomial modulo the
/// spec's modulus. F_q is realized inside the big field as the fixed field of
/// the q-Frobenius. All value-level operations are pure; a constructed spec is
/// immutable and safe to share between threads.
class FieldSpec {
   public:
    /// Builds and validates a spec. An empty modulus means "use the canonical
    /// (lex-least) irreducible"; sub_degree 0 means "no proper tower" (e = n).
    static Field make(std::uint32_t p, std::uint32_t degree, PrimePoly modulus = {},
                      std::uint32_t sub_degree = 0, std::uint64_t max_order = kMaxFieldOrder);

    /// Convenience: F_q itself (q = p^e a prime power), no proper subfield tower.
    static Field make_prime_power(std::uint64_t q, std::uint64_t max_order = kMaxFieldOrder);

    /// Convenience: the tower F_q <= F_{q^m} with the canonical modulus.
    static Field make_tower(std::uint64_t q, std::uint32_t m, std::uint64_t max_order = kMaxFieldOrder);

    std::uint32_t p() const { return p_; }
    std::uint32_t degree() const { return n_; }
    std::uint32_t sub_degree() const { return e_; }
    std::uint32_t tower_m() const { return m_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t order() const { return order_; }
    const PrimePoly& modulus() const { return modulus_; }

    // -- value-level arithmetic on canonical integers ------------------------
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    /// x -> x^q, the generator of Gal(F_{q^m}/F_q).
    std::uint64_t frobenius_q(std::uint64_t a) const;

    /// Relative trace onto F_q: a + a^q + ... + a^{q^(m-1)}.
    std::uint64_t trace(std::uint64_t a) const;

    /// a lies in F_q iff it is fixed by the q-Frobenius.
    bool in_subfield(std::uint64_t a) const;

    /// The q elements of F_q, ascending canonical values.
    std::vector<std::uint64_t> subfield_elements() const;

    /// i-th element of the canonical polynomial basis {1, x, ..., x^(m-1)} of
    /// F_{q^m} over F_q (always F_q-independent). Requires i < tower_m().
    std::uint64_t poly_basis_element(std::uint32_t i) const;

    bool same_as(const FieldSpec& other) const;

    static constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 24;

   private:
    FieldSpec() = default;

    std::uint32_t p_ = 0, n_ = 0, e_ = 0, m_ = 0;
    std::uint64_t q_ = 0, order_ = 0;
    PrimePoly modulus_;

    // log/exp tables for fields small enough to afford them
    bool has_tables_ = false;
    std::vector<std::uint32_t> log_;  // defined for values 1..order-1
    std::vector<std::uint32_t> exp_;  // doubled so mul never reduces mod order-1

    std::uint64_t mul_poly(std::uint64_t a, std::uint64_t b) const;
    void build_tables();
};

void require_same_spec(const Field& a, const Field& b);

/// Immutable boxed element; the convenience layer over value-level arithmetic.
class FieldElement {
   public:
    FieldElement(Field field, std::uint64_t value);

    const Field& field() const { return field_; }
    std::uint64_t value() const { return value_; }

    static FieldElement zero(Field f) { return {std::move(f), 0}; }
    static FieldElement one(Field f) { return {std::move(f), 1}; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
    FieldElement inverse() const { return {field_, field_->inv(value_)}; }
    FieldElement frobenius_q() const { return {field_, field_->frobenius_q(value_)}; }
    FieldElement trace() const { return {field_, field_->trace(value_)}; }
    bool in_subfield() const { return field_->in_subfield(value_); }
    bool is_zero() const { return value_ == 0; }

   private:
    Field field_;
    std::uint64_t value_;
};

std::vector<FieldElement> subfield_elements(const Field& spec);

/// An F_q-basis of F_{q^m}. Construction verifies independence by inverting the
/// Moore matrix (gamma_j^(q^i)); the cached inverse turns coordinate extraction
/// into a matrix-vector product.
class ExtensionBasis {
   public:
    ExtensionBasis(Field field, std::vector<std::uint64_t> elements);
    ExtensionBasis(const Field& field, const std::vector<FieldElement>& elements);

    /// {1, x, x^2, ...}: the default basis used when callers do not supply one.
    static ExtensionBasis polynomial_basis(const Field& field);

    const Field& field() const { return field_; }
    std::uint32_t m() const { return static_cast<std::uint32_t>(elems_.size()); }
    std::uint64_t element_value(std::uint32_t j) const { return elems_[j]; }
    FieldElement element(std::uint32_t j) const { return {field_, elems_[j]}; }
    const std::vector<std::uint64_t>& element_values() const { return elems_; }

    /// F_q-coordinates of v: the unique c with v = sum_j c_j gamma_j.
    std::vector<std::uint64_t> coordinates(std::uint64_t v) const;

    /// Inverse of coordinates().
    std::uint64_t combine(const std::vector<std::uint64_t>& coords) const;

    bool operator==(const ExtensionBasis& o) const;

   private:
    Field field_;
    std::vector<std::uint64_t> elems_;
    std::vector<std::uint64_t> inv_moore_;  // m x m, row-major
};

/// The unique basis G' with trace(g'_i g_j) = delta_ij.
ExtensionBasis dual_basis(const ExtensionBasis& basis);

/// Field isomorphism between the designated F_q subfields of two specs with the
/// same q, as a value -> value map. Deterministic: the smallest generator of
/// the source subfield is sent to the smallest root of its minimal polynomial
/// in the target. For prime q both subfields are the constants and the map is
/// the identity.
std::map<std::uint64_t, std::uint64_t> subfield_isomorphism(const Field& from, const Field& to);

}  // namespace rankforge

#endif
