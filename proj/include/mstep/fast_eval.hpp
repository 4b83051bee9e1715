#pragma once

/**
 * @file fast_eval.hpp
 * @brief Fast exact single-term evaluators.
 *
 * Two routes to V(n) that beat the O(|n|) iteration for large |n|:
 *  - companion-matrix binary exponentiation, O(m^3 log|n|) rational products;
 *  - Kitamasa: x^n mod the characteristic polynomial by repeated squaring
 *    with schoolbook remainder, O(m^2 log|n|).
 *
 * Negative n is evaluated through reversed_spec so both evaluators share the
 * one tested forward code path.  All results equal term() exactly.
 */

#include <cstdint>
#include <vector>

#include "mstep/sequence.hpp"

namespace mstep {

/// m x m matrix advancing the state [V(n-1),...,V(n-m)] to [V(n),...,V(n-m+1)]:
/// first row r_1..r_m, ones on the subdiagonal.  det = (-1)^(m+1) * r_m.
struct CompanionMatrix {
    int order = 0;
    std::vector<std::vector<Rational>> entries;
};

CompanionMatrix companion_matrix(const SequenceSpec& spec);

CompanionMatrix mat_mul(const CompanionMatrix& a, const CompanionMatrix& b);
CompanionMatrix mat_identity(int order);
CompanionMatrix mat_pow(const CompanionMatrix& base, std::uint64_t exponent);

/// x^m - r_1 x^(m-1) - ... - r_m, dense ascending coefficients; monic of degree m.
struct CharPoly {
    std::vector<Rational> coefficients; // coefficients[k] multiplies x^k
    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

CharPoly char_poly(const SequenceSpec& spec);

/// V(n) via companion-matrix power; throws NegativeIndexUnavailable when
/// n < 0 and r_m == 0.
Rational matrix_pow_term(const SequenceSpec& spec, std::int64_t n);

/// V(n) via x^n mod char_poly combined with the initial terms; same domain
/// and error behavior as matrix_pow_term.
Rational kitamasa_term(const SequenceSpec& spec, std::int64_t n);

} // namespace mstep
