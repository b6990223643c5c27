#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tropica {

/// Arbitrary-precision rational, always kept in reduced form.
///
/// All finite tropical values are rationals: singularity verdicts and
/// Hungarian dual variables must be exact, so there is no floating-point
/// construction anywhere in the library.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long n, long d) : v_(n, d) { v_.canonicalize(); }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    static std::optional<Rational> parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    std::string str() const;

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const { return Rational(mpq_class(v_ / o.v_)); }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    int sign() const { return sgn(v_); }

  private:
    mpq_class v_;
};

inline std::string Rational::str() const {
    return v_.get_str();
}

inline std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    // Accept "p" or "p/q" with decimal integers, optional leading '-' or '+'.
    auto is_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) return std::nullopt;
        return Rational(mpq_class(std::string(text)));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    mpz_class d{std::string(den)};
    if (d == 0) return std::nullopt;
    mpz_class nu{std::string(num)};
    mpq_class q(nu, d);
    q.canonicalize();
    return Rational(q);
}

}  // namespace tropica
