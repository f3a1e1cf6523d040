#include "rankforge/macwilliams.hpp"

#include "rankforge/linalg.hpp"

namespace rankforge {

namespace {

bool is_prime_power(std::uint64_t q) {
    if (q < 2) return false;
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    while (q % p == 0) q /= p;
    return q == 1;
}

void require_distribution(const WeightDistribution& W, const CodeParams& params) {
    if (static_cast<int>(W.counts.size()) != params.k + 1)
        throw invalid_parameter_error("weights: expected entries W_0..W_k");
    Int total = W.total();
    if (total != params.code_size)
        throw inconsistent_input_error("weights: sum " + total.str() + " does not equal |C| = " +
                                       params.code_size.str());
}

std::int64_t c2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

CodeParams::CodeParams(std::uint64_t q_, int k_, int m_, Int code_size_)
    : q(q_), k(k_), m(m_), code_size(std::move(code_size_)) {
    if (!is_prime_power(q)) throw invalid_parameter_error("params: q must be a prime power");
    if (k < 1 || m < 1) throw invalid_parameter_error("params: k, m must be positive");
    if (k > m) throw invalid_parameter_error("params: k <= m is assumed throughout");
    if (code_size < 1) throw invalid_parameter_error("params: |C| must be >= 1");
}

CodeParams CodeParams::for_linear(std::uint64_t q, int k, int m, int dim) {
    return CodeParams(q, k, m, int_pow(Int(q), static_cast<std::uint64_t>(dim)));
}

WeightDistribution macwilliams_transform(const WeightDistribution& W, const CodeParams& params) {
    require_distribution(W, params);
    const int k = params.k;
    const Int Q(params.q);
    WeightDistribution out;
    out.counts.reserve(k + 1);
    for (int i = 0; i <= k; ++i) {
        Int acc = 0;
        for (int j = 0; j <= k; ++j) {
            if (W.counts[j] == 0) continue;
            Int inner = 0;
            for (int u = 0; u <= k; ++u) {
                // the outer sum runs over all u; q-binomials kill the terms with u > i
                Int b1 = q_binomial(k - u, k - i, params.q);
                if (b1 == 0) continue;
                Int b2 = q_binomial(k - j, u, params.q);
                if (b2 == 0) continue;
                Int term = int_pow(Q, static_cast<std::uint64_t>(params.m) * u +
                                          static_cast<std::uint64_t>(c2(i - u))) *
                           b1 * b2;
                if ((i - u) % 2 != 0) term = -term;
                inner += term;
            }
            acc += W.counts[j] * inner;
        }
        if (acc % params.code_size != 0)
            throw inconsistent_input_error("macwilliams: W_" + std::to_string(i) +
                                           " of the dual is not an integer; input is not the weight "
                                           "distribution of a linear code");
        Int w = acc / params.code_size;
        if (w < 0)
            throw inconsistent_input_error("macwilliams: negative dual weight W_" + std::to_string(i));
        out.counts.push_back(std::move(w));
    }
    return out;
}

Int binomial_moment(const WeightDistribution& W, int nu, const CodeParams& params) {
    if (static_cast<int>(W.counts.size()) != params.k + 1)
        throw invalid_parameter_error("weights: expected entries W_0..W_k");
    if (nu < 0 || nu > params.k) throw invalid_parameter_error("binomial_moment: need 0 <= nu <= k");
    Int acc = 0;
    for (int i = 0; i <= params.k - nu; ++i) acc += W.counts[i] * q_binomial(params.k - i, nu, params.q);
    return acc;
}

WeightDistribution dual_weights_from_moments(const WeightDistribution& W, const CodeParams& params) {
    require_distribution(W, params);
    const int k = params.k;
    const Int Q(params.q);
    // nu-th identity involves W'_0..W'_nu with unit coefficient on W'_nu:
    // a triangular system, solved by forward substitution over the rationals
    std::vector<Rat> dual(k + 1);
    WeightDistribution out;
    for (int nu = 0; nu <= k; ++nu) {
        Rat target = Rat(binomial_moment(W, nu, params) *
                         int_pow(Q, static_cast<std::uint64_t>(params.m) * nu)) /
                     Rat(params.code_size);
        for (int j = 0; j < nu; ++j) target -= dual[j] * Rat(q_binomial(k - j, nu - j, params.q));
        dual[nu] = target;
        if (!is_integral(target) || target < 0)
            throw inconsistent_input_error("moments: dual weight W_" + std::to_string(nu) +
                                           " is not a nonnegative integer");
        out.counts.push_back(to_integer(target));
    }
    return out;
}

WeightDistribution weight_recursion(const RecursionInput& input) {
    const CodeParams& P = input.params;
    const int k = P.k, m = P.m;
    if (input.dim < 1 || input.dim > k * m - 1)
        throw invalid_parameter_error("recursion: need 1 <= dim <= km-1");
    if (input.d < 1 || input.d_perp < 1 || input.d > k || input.d_perp > k)
        throw invalid_parameter_error("recursion: distances must lie in [1, k]");
    if (input.epsilon != 0 && input.epsilon != 1)
        throw invalid_parameter_error("recursion: epsilon must be 0 or 1");
    const int mid_lo = input.d, mid_hi = k - input.d_perp;
    const int expected = mid_hi >= mid_lo ? mid_hi - mid_lo + 1 : 0;
    if (static_cast<int>(input.known.size()) != expected)
        throw invalid_parameter_error("recursion: expected " + std::to_string(expected) +
                                      " middle weights W_d..W_{k-d_perp}");

    const Int Q(P.q);
    std::vector<Int> W(k + 1, 0);
    W[0] = 1;
    for (int i = mid_lo; i <= mid_hi; ++i) W[i] = input.known[i - mid_lo];

    for (int i = 1; i <= input.d_perp; ++i) {
        const int idx = k - input.d_perp + i;
        if (idx < 0 || idx > k) continue;
        Int first = 0;
        for (int u = input.d_perp; u <= k - input.d; ++u) {
            Int b1 = q_binomial(u, input.d_perp - i, P.q);
            if (b1 == 0) continue;
            Int b2 = q_binomial(u - input.d_perp + i - 1, i - 1, P.q);
            if (b2 == 0) continue;
            first += b1 * b2 * W[k - u];
        }
        Int lead = int_pow(Q, static_cast<std::uint64_t>(c2(i)));
        if (i % 2 != 0) lead = -lead;
        Rat value = Rat(lead * first);

        Int outer = q_binomial(k, input.d_perp - i, P.q);
        if (outer != 0) {
            Rat second = 0;
            for (int u = 0; u <= i - 1 - input.epsilon; ++u) {
                Int b = q_binomial(k - input.d_perp + i, u, P.q);
                if (b == 0) continue;
                const std::int64_t e = static_cast<std::int64_t>(input.dim) -
                                       static_cast<std::int64_t>(m) * (input.d_perp - i + u);
                Rat term = Rat(int_pow(Q, static_cast<std::uint64_t>(c2(u))) * b) * (rat_pow(Q, e) - 1);
                if (u % 2 != 0) term = -term;
                second += term;
            }
            value += Rat(outer) * second;
        }
        if (!is_integral(value) || value < 0)
            throw inconsistent_input_error("recursion: W_" + std::to_string(idx) +
                                           " is not a nonnegative integer");
        W[idx] = to_integer(value);
    }

    Int total = 0;
    for (const auto& w : W) total += w;
    const Int expected_total = int_pow(Q, static_cast<std::uint64_t>(input.dim));
    if (total != expected_total)
        throw inconsistent_input_error("recursion: checksum failed, sum " + total.str() + " != q^dim = " +
                                       expected_total.str() +
                                       " (inconsistent d, d_perp, epsilon or middle weights)");
    WeightDistribution out;
    out.counts = std::move(W);
    return out;
}

ZeroPattern::ZeroPattern(int k_, int m_, std::set<std::pair<int, int>> positions_)
    : k(k_), m(m_), positions(std::move(positions_)) {
    if (k < 1 || m < 1) throw invalid_parameter_error("pattern: k, m must be positive");
    if (k > m) throw invalid_parameter_error("pattern: k <= m is assumed throughout");
    for (const auto& [i, j] : positions) {
        if (i != j) throw invalid_parameter_error("pattern: only diagonal positions (i, i) are allowed");
        if (i < 1 || i > std::min(k, m)) throw invalid_parameter_error("pattern: position out of range");
    }
}

Int count_zero_diagonal(const ZeroPattern& pattern, std::uint64_t q, int r) {
    if (!is_prime_power(q)) throw invalid_parameter_error("count: q must be a prime power");
    if (r < 0 || r > pattern.k) throw invalid_parameter_error("count: need 0 <= r <= k");
    const int k = pattern.k, m = pattern.m;
    const auto sz = static_cast<std::int64_t>(pattern.positions.size());
    const Int Q(q);
    Int acc = 0;
    for (int t = 0; t <= k; ++t) {
        Int outer = binomial(sz, t) * int_pow(Int(q - 1), static_cast<std::uint64_t>(t));
        if (outer == 0) continue;
        Int inner = 0;
        for (int u = 0; u <= k; ++u) {
            Int b1 = q_binomial(k - u, k - r, q);
            if (b1 == 0) continue;
            Int b2 = q_binomial(k - t, u, q);
            if (b2 == 0) continue;
            Int term = int_pow(Q, static_cast<std::uint64_t>(m) * u +
                                      static_cast<std::uint64_t>(c2(r - u))) *
                       b1 * b2;
            if ((r - u) % 2 != 0) term = -term;
            inner += term;
        }
        acc += outer * inner;
    }
    const Int denom = int_pow(Q, static_cast<std::uint64_t>(sz));
    if (acc % denom != 0)
        throw inconsistent_input_error("count: non-integer result (internal inconsistency)");
    return acc / denom;
}

}  // namespace rankforge
