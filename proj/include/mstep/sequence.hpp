#pragma once

/**
 * @file sequence.hpp
 * @brief Order-m linear recurrences with exact evaluation at any integer index.
 *
 * A SequenceSpec fixes the recurrence
 *
 *     V(n) = r_1*V(n-1) + r_2*V(n-2) + ... + r_m*V(n-m)
 *
 * together with the initial terms V(0)..V(m-1).  When r_m != 0 the
 * recurrence extends uniquely to negative indices by solving for its oldest
 * term; every negative-index operation throws NegativeIndexUnavailable when
 * r_m == 0 rather than producing a silently wrong value.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mstep/rational.hpp"

namespace mstep {

class SequenceSpec {
public:
    /// Validates and stores a spec; throws OrderTooSmall (m < 2) or LengthMismatch.
    SequenceSpec(std::vector<Rational> coefficients,
                 std::vector<Rational> initials,
                 std::string id = "");

    int order() const { return static_cast<int>(coefficients_.size()); }
    const std::vector<Rational>& coefficients() const { return coefficients_; } // r_1..r_m
    const std::vector<Rational>& initials() const { return initials_; }         // c_0..c_{m-1}
    const std::string& id() const { return id_; }

    const Rational& trailing_coefficient() const { return coefficients_.back(); } // r_m
    bool backward_available() const { return !coefficients_.back().is_zero(); }

private:
    std::vector<Rational> coefficients_;
    std::vector<Rational> initials_;
    std::string id_;
};

/// Exact value of V(n); O(|n|) time, O(m) memory.
/// Throws NegativeIndexUnavailable when n < 0 and r_m == 0.
Rational term(const SequenceSpec& spec, std::int64_t n);

/// Values for lo..hi inclusive. Throws EmptyRange when lo > hi, and
/// NegativeIndexUnavailable when lo < 0 with r_m == 0.
std::vector<Rational> term_range(const SequenceSpec& spec, std::int64_t lo, std::int64_t hi);

/// Spec of W(k) = V(-k): coefficients (-r_{m-1}/r_m, ..., -r_1/r_m, 1/r_m),
/// initials [V(0), V(-1), ..., V(-m+1)].  Applying it twice restores the
/// original coefficients and initials.
SequenceSpec reversed_spec(const SequenceSpec& spec);

/// Grow-on-demand store of a contiguous index window of terms.
///
/// The window always contains 0..m-1 and is extended in either direction as
/// indices are requested; values never change once computed.  Single writer;
/// concurrent readers may use known() on an already-grown window.
class TermCache {
public:
    explicit TermCache(SequenceSpec spec);

    const SequenceSpec& spec() const { return spec_; }

    std::int64_t lo() const { return -static_cast<std::int64_t>(bwd_.size()); }
    std::int64_t hi() const { return static_cast<std::int64_t>(fwd_.size()) - 1; }

    /// Value at n, growing the window as needed.
    const Rational& at(std::int64_t n);

    /// Grows the window to cover [lo, hi].
    void ensure(std::int64_t lo, std::int64_t hi);

    /// Read-only access to an index already inside the window.
    const Rational& known(std::int64_t n) const;

private:
    SequenceSpec spec_;
    std::vector<Rational> fwd_; // fwd_[k] = V(k)
    std::vector<Rational> bwd_; // bwd_[k] = V(-1-k)
};

/// JSON object {"order", "coefficients", "initials", "id"}; rationals as
/// literal strings, so the round-trip is bit-exact.
std::string spec_to_json(const SequenceSpec& spec);
SequenceSpec spec_from_json(std::string_view json_text);

} // namespace mstep
