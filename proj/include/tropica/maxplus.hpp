#pragma once

#include <compare>
#include <optional>
#include <string>

#include "tropica/rational.hpp"

namespace tropica {

/// Element of the max-plus semiring: a finite rational or -inf.
/// Addition is max, multiplication is +, zero is -inf, unit is 0.
class MaxPlus {
  public:
    MaxPlus() : finite_(false) {}  // bottom
    MaxPlus(Rational v) : finite_(true), v_(std::move(v)) {}  // NOLINT
    MaxPlus(long v) : finite_(true), v_(v) {}                 // NOLINT

    static MaxPlus bottom() { return MaxPlus(); }
    static MaxPlus zero() { return MaxPlus(); }
    static MaxPlus one() { return MaxPlus(Rational(0)); }

    bool is_bottom() const { return !finite_; }
    bool is_finite() const { return finite_; }
    /// Finite value; undefined for bottom.
    const Rational& value() const { return v_; }

    friend MaxPlus operator+(const MaxPlus& a, const MaxPlus& b) {
        if (!a.finite_) return b;
        if (!b.finite_) return a;
        return a.v_ < b.v_ ? b : a;
    }
    friend MaxPlus operator*(const MaxPlus& a, const MaxPlus& b) {
        if (!a.finite_ || !b.finite_) return bottom();
        return MaxPlus(a.v_ + b.v_);
    }
    /// Multiplicative inverse of a finite element.
    MaxPlus inv() const { return MaxPlus(-v_); }

    bool operator==(const MaxPlus& o) const {
        if (finite_ != o.finite_) return false;
        return !finite_ || v_ == o.v_;
    }
    bool operator!=(const MaxPlus& o) const { return !(*this == o); }
    // Total order with bottom as least element.
    bool operator<(const MaxPlus& o) const {
        if (!finite_) return o.finite_;
        if (!o.finite_) return false;
        return v_ < o.v_;
    }
    bool operator<=(const MaxPlus& o) const { return *this < o || *this == o; }
    bool operator>(const MaxPlus& o) const { return o < *this; }
    bool operator>=(const MaxPlus& o) const { return o <= *this; }

  private:
    bool finite_;
    Rational v_;
};

}  // namespace tropica
