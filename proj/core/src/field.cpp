#include "rankforge/field.hpp"

#include <algorithm>
#include <optional>

namespace rankforge {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

int poly_degree(const PrimePoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

// remainder of a / b over F_p; b monic of positive degree
PrimePoly poly_rem(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
    const int db = poly_degree(b);
    for (int i = poly_degree(a); i >= db; i = poly_degree(a)) {
        const std::uint64_t c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            std::uint64_t t = a[i - db + j] + static_cast<std::uint64_t>(p - b[j] % p) * c % p;
            a[i - db + j] = static_cast<std::uint32_t>(t % p);
        }
    }
    return a;
}

bool poly_is_zero(const PrimePoly& f) { return poly_degree(f) < 0; }

// decode index -> monic polynomial of degree d, digits of idx give the low coefficients
PrimePoly monic_from_index(std::uint64_t idx, int d, std::uint32_t p) {
    PrimePoly g(d + 1, 0);
    for (int i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(idx % p);
        idx /= p;
    }
    g[d] = 1;
    return g;
}

std::uint64_t upow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

bool is_irreducible(const PrimePoly& f, std::uint32_t p) {
    const int n = poly_degree(f);
    if (n < 1) return false;
    if (n == 1) return true;
    for (int d = 1; d <= n / 2; ++d) {
        const std::uint64_t count = upow(p, static_cast<std::uint32_t>(d));
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PrimePoly g = monic_from_index(idx, d, p);
            if (poly_is_zero(poly_rem(f, g, p))) return false;
        }
    }
    return true;
}

PrimePoly find_irreducible(std::uint32_t p, std::uint32_t n) {
    if (!is_prime(p)) throw invalid_parameter_error("find_irreducible: p must be prime");
    if (n < 1) throw invalid_parameter_error("find_irreducible: degree must be >= 1");
    // lex order on (c_0, ..., c_{n-1}): c_0 is the most significant position
    const std::uint64_t count = upow(p, n);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        PrimePoly f(n + 1, 0);
        std::uint64_t rest = idx;
        for (std::uint32_t i = 0; i < n; ++i) {
            f[i] = static_cast<std::uint32_t>(rest / upow(p, n - 1 - i));
            rest %= upow(p, n - 1 - i);
        }
        f[n] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw invalid_parameter_error("find_irreducible: no irreducible found (unreachable)");
}

Field FieldSpec::make(std::uint32_t p, std::uint32_t degree, PrimePoly modulus,
                      std::uint32_t sub_degree, std::uint64_t max_order) {
    if (!is_prime(p)) throw invalid_parameter_error("field: p must be prime");
    if (degree < 1) throw invalid_parameter_error("field: degree must be >= 1");

    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < degree; ++i) {
        order *= p;
        if (order > max_order)
            throw resource_limit_error("field: p^degree exceeds the configured ceiling of " +
                                       std::to_string(max_order));
    }

    if (modulus.empty()) {
        modulus = find_irreducible(p, degree);
    } else {
        for (auto c : modulus)
            if (c >= p) throw invalid_parameter_error("field: modulus coefficient out of range");
        if (poly_degree(modulus) != static_cast<int>(degree) || modulus[degree] != 1)
            throw invalid_parameter_error("field: modulus must be monic of the given degree");
        modulus.resize(degree + 1);
        if (!is_irreducible(modulus, p))
            throw invalid_parameter_error("field: modulus is reducible over F_p");
    }

    if (sub_degree == 0) sub_degree = degree;
    if (degree % sub_degree != 0)
        throw invalid_parameter_error("field: sub_degree must divide degree");

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->n_ = degree;
    spec->e_ = sub_degree;
    spec->m_ = degree / sub_degree;
    spec->order_ = order;
    spec->q_ = upow(p, sub_degree);
    spec->modulus_ = std::move(modulus);
    spec->build_tables();
    return spec;
}

Field FieldSpec::make_prime_power(std::uint64_t q, std::uint64_t max_order) {
    if (q < 2) throw invalid_parameter_error("field: q must be >= 2");
    std::uint32_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = static_cast<std::uint32_t>(d);
            break;
        }
    if (p == 0) return make(static_cast<std::uint32_t>(q), 1, {}, 0, max_order);
    std::uint32_t e = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw invalid_parameter_error("field: q is not a prime power");
    return make(p, e, {}, 0, max_order);
}

Field FieldSpec::make_tower(std::uint64_t q, std::uint32_t m, std::uint64_t max_order) {
    if (m < 1) throw invalid_parameter_error("field: tower degree must be >= 1");
    const Field base = make_prime_power(q, max_order);
    return make(base->p(), base->degree() * m, {}, base->degree(), max_order);
}

std::uint64_t FieldSpec::add(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2) return a ^ b;
    if (n_ == 1) return (a + b) % p_;
    std::uint64_t r = 0, shift = 1;
    while (a || b) {
        r += (a % p_ + b % p_) % p_ * shift;
        a /= p_;
        b /= p_;
        shift *= p_;
    }
    return r;
}

std::uint64_t FieldSpec::neg(std::uint64_t a) const {
    if (p_ == 2) return a;
    if (n_ == 1) return a ? p_ - a : 0;
    std::uint64_t r = 0, shift = 1;
    while (a) {
        std::uint64_t d = a % p_;
        r += (d ? p_ - d : 0) * shift;
        a /= p_;
        shift *= p_;
    }
    return r;
}

std::uint64_t FieldSpec::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t FieldSpec::mul_poly(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (n_ == 1) return a * b % p_;
    std::uint32_t da[64], db[64];
    std::uint64_t prod[128] = {0};
    for (std::uint32_t i = 0; i < n_; ++i) {
        da[i] = static_cast<std::uint32_t>(a % p_);
        db[i] = static_cast<std::uint32_t>(b % p_);
        a /= p_;
        b /= p_;
    }
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < n_; ++j) prod[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
    }
    // fold x^n = -(modulus tail) from the top down
    for (int i = 2 * static_cast<int>(n_) - 2; i >= static_cast<int>(n_); --i) {
        const std::uint64_t c = prod[i] % p_;
        if (c == 0) continue;
        for (std::uint32_t j = 0; j < n_; ++j)
            prod[i - n_ + j] += c * (p_ - modulus_[j] % p_);
    }
    std::uint64_t r = 0, shift = 1;
    for (std::uint32_t i = 0; i < n_; ++i) {
        r += prod[i] % p_ * shift;
        shift *= p_;
    }
    return r;
}

void FieldSpec::build_tables() {
    constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;
    if (order_ > kTableLimit) return;
    const std::uint64_t ord = order_ - 1;
    exp_.assign(2 * ord, 0);
    log_.assign(order_, 0);
    for (std::uint64_t g = 2; g < order_; ++g) {
        std::uint64_t cur = 1;
        bool generates = true;
        for (std::uint64_t j = 0; j < ord; ++j) {
            exp_[j] = static_cast<std::uint32_t>(cur);
            cur = mul_poly(cur, g);
            if (cur == 1 && j + 1 < ord) {
                generates = false;
                break;
            }
        }
        if (generates && cur == 1) {
            for (std::uint64_t j = 0; j < ord; ++j) {
                exp_[j + ord] = exp_[j];
                log_[exp_[j]] = static_cast<std::uint32_t>(j);
            }
            has_tables_ = true;
            return;
        }
    }
}

std::uint64_t FieldSpec::mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables_) return exp_[log_[a] + static_cast<std::uint64_t>(log_[b])];
    return mul_poly(a, b);
}

std::uint64_t FieldSpec::inv(std::uint64_t a) const {
    if (a == 0) throw division_by_zero_error("field: inverse of zero");
    if (has_tables_) {
        const std::uint64_t ord = order_ - 1;
        return exp_[(ord - log_[a]) % ord];
    }
    return pow(a, order_ - 2);
}

std::uint64_t FieldSpec::pow(std::uint64_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    const std::uint64_t ord = order_ - 1;
    e %= ord;
    if (has_tables_) return exp_[log_[a] * e % ord];
    std::uint64_t r = 1, b = a;
    while (e) {
        if (e & 1) r = mul_poly(r, b);
        b = mul_poly(b, b);
        e >>= 1;
    }
    return r;
}

std::uint64_t FieldSpec::frobenius_q(std::uint64_t a) const { return pow(a, q_); }

std::uint64_t FieldSpec::trace(std::uint64_t a) const {
    std::uint64_t acc = a, t = a;
    for (std::uint32_t i = 1; i < m_; ++i) {
        t = frobenius_q(t);
        acc = add(acc, t);
    }
    return acc;
}

bool FieldSpec::in_subfield(std::uint64_t a) const { return frobenius_q(a) == a; }

std::vector<std::uint64_t> FieldSpec::subfield_elements() const {
    std::vector<std::uint64_t> out;
    out.reserve(q_);
    if (e_ == n_) {
        for (std::uint64_t v = 0; v < order_; ++v) out.push_back(v);
        return out;
    }
    if (has_tables_) {
        // F_q^* is the unique subgroup of index (order-1)/(q-1)
        const std::uint64_t ord = order_ - 1, step = ord / (q_ - 1);
        out.push_back(0);
        for (std::uint64_t j = 0; j < q_ - 1; ++j) out.push_back(exp_[j * step]);
        std::sort(out.begin(), out.end());
        return out;
    }
    for (std::uint64_t v = 0; v < order_; ++v)
        if (in_subfield(v)) out.push_back(v);
    return out;
}

std::uint64_t FieldSpec::poly_basis_element(std::uint32_t i) const {
    std::uint64_t r = 1;
    for (std::uint32_t j = 0; j < i; ++j) r *= p_;
    return r;
}

bool FieldSpec::same_as(const FieldSpec& other) const {
    if (this == &other) return true;
    return p_ == other.p_ && n_ == other.n_ && e_ == other.e_ && modulus_ == other.modulus_;
}

void require_same_spec(const Field& a, const Field& b) {
    if (!a || !b || !a->same_as(*b))
        throw spec_mismatch_error("operands belong to different field specs");
}

FieldElement::FieldElement(Field field, std::uint64_t value) : field_(std::move(field)), value_(value) {
    if (!field_) throw invalid_parameter_error("element: null field");
    if (value_ >= field_->order()) throw invalid_parameter_error("element: value out of range");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_spec(field_, o.field_);
    return {field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_spec(field_, o.field_);
    return {field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_spec(field_, o.field_);
    return {field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same_spec(field_, o.field_);
    return {field_, field_->mul(value_, field_->inv(o.value_))};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

bool FieldElement::operator==(const FieldElement& o) const {
    require_same_spec(field_, o.field_);
    return value_ == o.value_;
}

std::vector<FieldElement> subfield_elements(const Field& spec) {
    std::vector<FieldElement> out;
    for (auto v : spec->subfield_elements()) out.emplace_back(spec, v);
    return out;
}

namespace {

// Gauss-Jordan inverse of an n x n matrix of field values; nullopt if singular.
std::optional<std::vector<std::uint64_t>> invert_square(const FieldSpec& F,
                                                        std::vector<std::uint64_t> a, std::size_t n) {
    std::vector<std::uint64_t> inv(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv * n + col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[piv * n + j], a[col * n + j]);
                std::swap(inv[piv * n + j], inv[col * n + j]);
            }
        const std::uint64_t s = F.inv(a[col * n + col]);
        for (std::size_t j = 0; j < n; ++j) {
            a[col * n + j] = F.mul(s, a[col * n + j]);
            inv[col * n + j] = F.mul(s, inv[col * n + j]);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r * n + col] == 0) continue;
            const std::uint64_t f = a[r * n + col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r * n + j] = F.sub(a[r * n + j], F.mul(f, a[col * n + j]));
                inv[r * n + j] = F.sub(inv[r * n + j], F.mul(f, inv[col * n + j]));
            }
        }
    }
    return inv;
}

}  // namespace

ExtensionBasis::ExtensionBasis(Field field, std::vector<std::uint64_t> elements)
    : field_(std::move(field)), elems_(std::move(elements)) {
    const std::uint32_t m = field_->tower_m();
    if (elems_.size() != m)
        throw not_a_basis_error("basis: expected " + std::to_string(m) + " elements");
    for (auto v : elems_)
        if (v >= field_->order()) throw invalid_parameter_error("basis: value out of range");
    // Moore matrix M_ij = gamma_j^(q^i); invertible iff the gammas are F_q-independent
    std::vector<std::uint64_t> moore(static_cast<std::size_t>(m) * m);
    for (std::uint32_t j = 0; j < m; ++j) {
        std::uint64_t t = elems_[j];
        for (std::uint32_t i = 0; i < m; ++i) {
            moore[static_cast<std::size_t>(i) * m + j] = t;
            t = field_->frobenius_q(t);
        }
    }
    auto inv = invert_square(*field_, std::move(moore), m);
    if (!inv) throw not_a_basis_error("basis: elements are F_q-dependent");
    inv_moore_ = std::move(*inv);
}

ExtensionBasis::ExtensionBasis(const Field& field, const std::vector<FieldElement>& elements)
    : ExtensionBasis(field, [&] {
          std::vector<std::uint64_t> vals;
          for (const auto& e : elements) {
              require_same_spec(field, e.field());
              vals.push_back(e.value());
          }
          return vals;
      }()) {}

ExtensionBasis ExtensionBasis::polynomial_basis(const Field& field) {
    std::vector<std::uint64_t> vals;
    for (std::uint32_t i = 0; i < field->tower_m(); ++i) vals.push_back(field->poly_basis_element(i));
    return {field, std::move(vals)};
}

std::vector<std::uint64_t> ExtensionBasis::coordinates(std::uint64_t v) const {
    const std::uint32_t m = this->m();
    std::vector<std::uint64_t> rhs(m);
    std::uint64_t t = v;
    for (std::uint32_t i = 0; i < m; ++i) {
        rhs[i] = t;
        t = field_->frobenius_q(t);
    }
    std::vector<std::uint64_t> c(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        std::uint64_t acc = 0;
        for (std::uint32_t j = 0; j < m; ++j)
            acc = field_->add(acc, field_->mul(inv_moore_[static_cast<std::size_t>(i) * m + j], rhs[j]));
        c[i] = acc;
    }
    return c;
}

std::uint64_t ExtensionBasis::combine(const std::vector<std::uint64_t>& coords) const {
    if (coords.size() != elems_.size())
        throw invalid_parameter_error("basis: coordinate count mismatch");
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < elems_.size(); ++j)
        acc = field_->add(acc, field_->mul(coords[j], elems_[j]));
    return acc;
}

bool ExtensionBasis::operator==(const ExtensionBasis& o) const {
    return field_->same_as(*o.field_) && elems_ == o.elems_;
}

std::map<std::uint64_t, std::uint64_t> subfield_isomorphism(const Field& from, const Field& to) {
    if (from->q() != to->q())
        throw spec_mismatch_error("subfield isomorphism: the designated subfields differ in size");
    const std::uint64_t q = from->q();
    const std::uint32_t p = from->p(), e = from->sub_degree();
    std::map<std::uint64_t, std::uint64_t> iso;
    if (e == 1) {
        // the prime subfield is the constants 0..p-1 in every representation
        for (std::uint64_t c = 0; c < q; ++c) iso[c] = c;
        return iso;
    }
    // smallest generator of the source subfield's multiplicative group
    std::vector<std::uint64_t> prime_factors;
    std::uint64_t rest = q - 1;
    for (std::uint64_t d = 2; d * d <= rest; ++d)
        while (rest % d == 0) {
            if (prime_factors.empty() || prime_factors.back() != d) prime_factors.push_back(d);
            rest /= d;
        }
    if (rest > 1) prime_factors.push_back(rest);
    auto sub_from = from->subfield_elements();
    std::uint64_t g = 0;
    for (auto v : sub_from) {
        if (v == 0) continue;
        bool generates = true;
        for (auto r : prime_factors)
            if (from->pow(v, (q - 1) / r) == 1) {
                generates = false;
                break;
            }
        if (generates) {
            g = v;
            break;
        }
    }
    if (g == 0) throw invalid_parameter_error("subfield isomorphism: no generator found (internal)");

    // minimal polynomial of g over F_p: prod_i (y - g^(p^i)), coefficients are constants
    std::vector<std::uint64_t> minpoly{1};
    std::uint64_t conj = g;
    for (std::uint32_t i = 0; i < e; ++i) {
        std::vector<std::uint64_t> next(minpoly.size() + 1, 0);
        const std::uint64_t ng = from->neg(conj);
        for (std::size_t t = 0; t < minpoly.size(); ++t) {
            next[t + 1] = from->add(next[t + 1], minpoly[t]);
            next[t] = from->add(next[t], from->mul(ng, minpoly[t]));
        }
        minpoly = std::move(next);
        conj = from->pow(conj, p);
    }
    for (auto c : minpoly)
        if (c >= p) throw invalid_parameter_error("subfield isomorphism: minimal polynomial not over F_p");

    // smallest root of that polynomial in the target subfield
    std::uint64_t h = 0;
    bool found = false;
    for (auto v : to->subfield_elements()) {
        std::uint64_t acc = 0, power = 1;
        for (std::size_t t = 0; t < minpoly.size(); ++t) {
            acc = to->add(acc, to->mul(minpoly[t], power));
            power = to->mul(power, v);
        }
        if (acc == 0) {
            h = v;
            found = true;
            break;
        }
    }
    if (!found) throw invalid_parameter_error("subfield isomorphism: no root in the target (internal)");

    iso[0] = 0;
    std::uint64_t gp = 1, hp = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
        iso[gp] = hp;
        gp = from->mul(gp, g);
        hp = to->mul(hp, h);
    }
    return iso;
}

ExtensionBasis dual_basis(const ExtensionBasis& basis) {
    const Field& F = basis.field();
    const std::uint32_t m = basis.m();
    std::vector<std::uint64_t> gram(static_cast<std::size_t>(m) * m);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            gram[static_cast<std::size_t>(i) * m + j] =
                F->trace(F->mul(basis.element_value(i), basis.element_value(j)));
    auto inv = invert_square(*F, std::move(gram), m);
    if (!inv) throw not_a_basis_error("dual_basis: trace form singular, input is not a basis");
    std::vector<std::uint64_t> duals(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        std::uint64_t acc = 0;
        for (std::uint32_t l = 0; l < m; ++l)
            acc = F->add(acc, F->mul((*inv)[static_cast<std::size_t>(i) * m + l], basis.element_value(l)));
        duals[i] = acc;
    }
    return {F, std::move(duals)};
}

}  // namespace rankforge
