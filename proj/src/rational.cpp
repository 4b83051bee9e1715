#include "mstep/rational.hpp"

#include <cctype>
#include <ostream>

namespace mstep {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw ZeroDenominator();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    const auto bad = [&] { return ParseError("invalid rational literal '" + std::string(text) + "'"); };
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && rest.front() == '-') {
        negative = true;
        rest.remove_prefix(1);
    }
    const auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num_part = rest;
    std::string_view den_part = "1";
    if (const auto slash = rest.find('/'); slash != std::string_view::npos) {
        num_part = rest.substr(0, slash);
        den_part = rest.substr(slash + 1);
    }
    if (!digits(num_part) || !digits(den_part)) throw bad();
    mpz_class num(std::string(num_part), 10);
    mpz_class den(std::string(den_part), 10);
    if (negative) num = -num;
    return Rational(num, den); // throws ZeroDenominator on ".../0"
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational out;
    out.v_ = -v_;
    return out;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    v_ /= rhs.v_;
    return *this;
}

Rational inv(const Rational& a) {
    if (a.is_zero()) throw DivisionByZero();
    return Rational(a.den(), a.num());
}

Rational pow(const Rational& a, std::int64_t k) {
    if (k == 0) return Rational(1);
    const Rational base = k < 0 ? inv(a) : a; // throws DivisionByZero for 0^negative
    const auto e = static_cast<unsigned long>(k < 0 ? -static_cast<std::uint64_t>(k)
                                                    : static_cast<std::uint64_t>(k));
    // num and den are coprime, so num^e and den^e are too: no re-reduction needed.
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), e);
    return Rational(num, den);
}

Rational abs(const Rational& a) {
    return a.sign() < 0 ? -a : a;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace mstep
