#include "mstep/sequence.hpp"

#include <algorithm>
#include <utility>

#include <nlohmann/json.hpp>

namespace mstep {
namespace {

// Next forward value from the m values window[0..m-1] = V(n-m)..V(n-1).
Rational step_forward(const SequenceSpec& spec, const std::vector<Rational>& window) {
    const int m = spec.order();
    Rational next;
    for (int i = 1; i <= m; ++i)
        next += spec.coefficients()[static_cast<std::size_t>(i - 1)] *
                window[static_cast<std::size_t>(m - i)];
    return next;
}

// Oldest value V(j) from window[0..m-1] = V(j+1)..V(j+m), solving the
// recurrence at index j+m for its last summand.
Rational step_backward(const SequenceSpec& spec, const std::vector<Rational>& window) {
    const int m = spec.order();
    Rational acc = window[static_cast<std::size_t>(m - 1)]; // V(j+m)
    for (int i = 1; i <= m - 1; ++i)
        acc -= spec.coefficients()[static_cast<std::size_t>(i - 1)] *
               window[static_cast<std::size_t>(m - 1 - i)];
    return acc / spec.trailing_coefficient();
}

} // namespace

SequenceSpec::SequenceSpec(std::vector<Rational> coefficients,
                           std::vector<Rational> initials,
                           std::string id)
    : coefficients_(std::move(coefficients)),
      initials_(std::move(initials)),
      id_(std::move(id)) {
    if (coefficients_.size() != initials_.size()) throw LengthMismatch();
    if (coefficients_.size() < 2) throw OrderTooSmall();
}

Rational term(const SequenceSpec& spec, std::int64_t n) {
    const int m = spec.order();
    if (n >= 0 && n < m) return spec.initials()[static_cast<std::size_t>(n)];
    if (n < 0 && !spec.backward_available()) throw NegativeIndexUnavailable();

    std::vector<Rational> window = spec.initials();
    if (n >= m) {
        // window holds V(k-m+1)..V(k) as k advances
        for (std::int64_t k = m - 1; k < n; ++k) {
            Rational next = step_forward(spec, window);
            window.erase(window.begin());
            window.push_back(std::move(next));
        }
        return window.back();
    }
    // window holds V(j)..V(j+m-1) as j descends
    for (std::int64_t j = -1; j >= n; --j) {
        Rational oldest = step_backward(spec, window);
        window.pop_back();
        window.insert(window.begin(), std::move(oldest));
    }
    return window.front();
}

std::vector<Rational> term_range(const SequenceSpec& spec, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw EmptyRange();
    if (lo < 0 && !spec.backward_available()) throw NegativeIndexUnavailable();

    const int m = spec.order();
    std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
    const auto slot = [&](std::int64_t n) -> Rational& {
        return out[static_cast<std::size_t>(n - lo)];
    };

    if (hi >= 0) {
        std::vector<Rational> window = spec.initials();
        for (std::int64_t n = 0; n < m && n <= hi; ++n)
            if (n >= lo) slot(n) = window[static_cast<std::size_t>(n)];
        for (std::int64_t k = m; k <= hi; ++k) {
            Rational next = step_forward(spec, window);
            if (k >= lo) slot(k) = next;
            window.erase(window.begin());
            window.push_back(std::move(next));
        }
    }
    if (lo < 0) {
        std::vector<Rational> window = spec.initials();
        for (std::int64_t j = -1; j >= lo; --j) {
            Rational oldest = step_backward(spec, window);
            if (j <= hi) slot(j) = oldest;
            window.pop_back();
            window.insert(window.begin(), std::move(oldest));
        }
    }
    return out;
}

SequenceSpec reversed_spec(const SequenceSpec& spec) {
    if (!spec.backward_available()) throw NegativeIndexUnavailable();
    const int m = spec.order();
    const Rational& rm = spec.trailing_coefficient();

    std::vector<Rational> coefficients;
    coefficients.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m - 1; ++i)
        coefficients.push_back(-(spec.coefficients()[static_cast<std::size_t>(m - i - 1)] / rm));
    coefficients.push_back(inv(rm));

    std::vector<Rational> initials = term_range(spec, -(m - 1), 0);
    std::reverse(initials.begin(), initials.end()); // [V(0), V(-1), ..., V(-m+1)]

    return SequenceSpec(std::move(coefficients), std::move(initials));
}

TermCache::TermCache(SequenceSpec spec)
    : spec_(std::move(spec)), fwd_(spec_.initials()) {}

const Rational& TermCache::at(std::int64_t n) {
    ensure(n, n);
    return known(n);
}

void TermCache::ensure(std::int64_t lo, std::int64_t hi) {
    const int m = spec_.order();
    while (this->hi() < hi) {
        std::vector<Rational> window(fwd_.end() - m, fwd_.end());
        fwd_.push_back(step_forward(spec_, window));
    }
    if (lo < this->lo() && !spec_.backward_available()) throw NegativeIndexUnavailable();
    while (this->lo() > lo) {
        const std::int64_t j = this->lo() - 1; // next index to fill, j < 0
        std::vector<Rational> window(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) window[static_cast<std::size_t>(i)] = known(j + 1 + i);
        bwd_.push_back(step_backward(spec_, window));
    }
}

const Rational& TermCache::known(std::int64_t n) const {
    if (n >= 0) return fwd_[static_cast<std::size_t>(n)];
    return bwd_[static_cast<std::size_t>(-1 - n)];
}

std::string spec_to_json(const SequenceSpec& spec) {
    nlohmann::json j;
    j["order"] = spec.order();
    auto literals = [](const std::vector<Rational>& values) {
        std::vector<std::string> out;
        out.reserve(values.size());
        for (const auto& v : values) out.push_back(v.str());
        return out;
    };
    j["coefficients"] = literals(spec.coefficients());
    j["initials"] = literals(spec.initials());
    if (spec.id().empty())
        j["id"] = nullptr;
    else
        j["id"] = spec.id();
    return j.dump();
}

SequenceSpec spec_from_json(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid spec JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("coefficients") || !j.contains("initials"))
        throw ParseError("spec JSON must be an object with coefficients and initials");
    auto rationals = [](const nlohmann::json& arr) {
        if (!arr.is_array()) throw ParseError("expected an array of rational literals");
        std::vector<Rational> out;
        out.reserve(arr.size());
        for (const auto& e : arr) out.push_back(Rational::from_string(e.get<std::string>()));
        return out;
    };
    std::string id;
    if (j.contains("id") && !j["id"].is_null()) id = j["id"].get<std::string>();
    SequenceSpec spec(rationals(j["coefficients"]), rationals(j["initials"]), id);
    if (j.contains("order") && j["order"].get<int>() != spec.order())
        throw ParseError("spec JSON order field disagrees with coefficient count");
    return spec;
}

} // namespace mstep
