#include "mstep/fast_eval.hpp"

namespace mstep {
namespace {

using Poly = std::vector<Rational>; // dense, ascending degree, no trailing zeros required

// In-place remainder modulo the spec's characteristic polynomial, using
// x^m == r_1 x^(m-1) + ... + r_m repeatedly on the leading term.
void reduce(Poly& p, const SequenceSpec& spec) {
    const int m = spec.order();
    for (int d = static_cast<int>(p.size()) - 1; d >= m; --d) {
        Rational lead = std::move(p[static_cast<std::size_t>(d)]);
        p[static_cast<std::size_t>(d)] = Rational(0);
        if (lead.is_zero()) continue;
        for (int i = 1; i <= m; ++i)
            p[static_cast<std::size_t>(d - i)] +=
                lead * spec.coefficients()[static_cast<std::size_t>(i - 1)];
    }
    p.resize(static_cast<std::size_t>(m));
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const SequenceSpec& spec) {
    Poly prod(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] += a[i] * b[j];
    }
    reduce(prod, spec);
    return prod;
}

// x^n mod char_poly for n >= 0, MSB-first squaring.
Poly x_pow_mod(const SequenceSpec& spec, std::uint64_t n) {
    const auto m = static_cast<std::size_t>(spec.order());
    if (n < m) {
        Poly p(m, Rational(0));
        p[static_cast<std::size_t>(n)] = Rational(1);
        return p;
    }
    Poly x(2, Rational(0));
    x[1] = Rational(1);
    Poly acc(1, Rational(1));
    for (int bit = 63; bit >= 0; --bit) {
        acc = poly_mul_mod(acc, acc, spec);
        if ((n >> bit) & 1u) acc = poly_mul_mod(acc, x, spec);
    }
    acc.resize(m, Rational(0));
    return acc;
}

} // namespace

CompanionMatrix companion_matrix(const SequenceSpec& spec) {
    const int m = spec.order();
    CompanionMatrix c;
    c.order = m;
    c.entries.assign(static_cast<std::size_t>(m),
                     std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));
    c.entries[0] = spec.coefficients();
    for (int i = 1; i < m; ++i) c.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i - 1)] = Rational(1);
    return c;
}

CompanionMatrix mat_mul(const CompanionMatrix& a, const CompanionMatrix& b) {
    const int m = a.order;
    CompanionMatrix out;
    out.order = m;
    out.entries.assign(static_cast<std::size_t>(m),
                       std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            const Rational& aik = a.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            if (aik.is_zero()) continue;
            for (int j = 0; j < m; ++j)
                out.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    aik * b.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        }
    return out;
}

CompanionMatrix mat_identity(int order) {
    CompanionMatrix out;
    out.order = order;
    out.entries.assign(static_cast<std::size_t>(order),
                       std::vector<Rational>(static_cast<std::size_t>(order), Rational(0)));
    for (int i = 0; i < order; ++i) out.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Rational(1);
    return out;
}

CompanionMatrix mat_pow(const CompanionMatrix& base, std::uint64_t exponent) {
    CompanionMatrix acc = mat_identity(base.order);
    for (int bit = 63; bit >= 0; --bit) {
        acc = mat_mul(acc, acc);
        if ((exponent >> bit) & 1u) acc = mat_mul(acc, base);
    }
    return acc;
}

CharPoly char_poly(const SequenceSpec& spec) {
    const int m = spec.order();
    CharPoly c;
    c.coefficients.assign(static_cast<std::size_t>(m + 1), Rational(0));
    c.coefficients[static_cast<std::size_t>(m)] = Rational(1);
    for (int i = 1; i <= m; ++i)
        c.coefficients[static_cast<std::size_t>(m - i)] = -spec.coefficients()[static_cast<std::size_t>(i - 1)];
    return c;
}

Rational matrix_pow_term(const SequenceSpec& spec, std::int64_t n) {
    if (n < 0) return matrix_pow_term(reversed_spec(spec), -n);
    const int m = spec.order();
    if (n < m) return spec.initials()[static_cast<std::size_t>(n)];

    const CompanionMatrix p =
        mat_pow(companion_matrix(spec), static_cast<std::uint64_t>(n - m + 1));
    // top row of M^(n-m+1) against the state [V(m-1), ..., V(0)]
    Rational value;
    for (int j = 0; j < m; ++j)
        value += p.entries[0][static_cast<std::size_t>(j)] *
                 spec.initials()[static_cast<std::size_t>(m - 1 - j)];
    return value;
}

Rational kitamasa_term(const SequenceSpec& spec, std::int64_t n) {
    if (n < 0) return kitamasa_term(reversed_spec(spec), -n);
    const int m = spec.order();
    if (n < m) return spec.initials()[static_cast<std::size_t>(n)];

    const Poly residue = x_pow_mod(spec, static_cast<std::uint64_t>(n));
    Rational value;
    for (int k = 0; k < m; ++k)
        value += residue[static_cast<std::size_t>(k)] * spec.initials()[static_cast<std::size_t>(k)];
    return value;
}

} // namespace mstep
