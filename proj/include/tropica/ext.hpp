#pragma once

#include <cstdint>

#include "tropica/maxplus.hpp"

namespace tropica {

enum class ExtClass : std::uint8_t { zero, real, ghost };

/// Element of the extended tropical semiring T_e = N_2 R_max: zero, a real
/// a, or a ghost a^v with finite a. Ghosts record that a maximum was
/// attained at least twice. The symmetry of T_e is the identity map.
class Ext {
  public:
    Ext() : tag_(ExtClass::zero) {}

    static Ext zero() { return Ext(); }
    static Ext one() { return real(Rational(0)); }
    static Ext real(Rational a) { return Ext(ExtClass::real, std::move(a)); }
    static Ext ghost(Rational a) { return Ext(ExtClass::ghost, std::move(a)); }
    /// The injection iota: R_max -> T_e (not a semiring morphism).
    static Ext from_maxplus(const MaxPlus& x) {
        return x.is_bottom() ? zero() : real(x.value());
    }

    ExtClass tag() const { return tag_; }
    const Rational& value() const { return a_; }
    MaxPlus modulus() const {
        return tag_ == ExtClass::zero ? MaxPlus::bottom() : MaxPlus(a_);
    }

    bool is_zero() const { return tag_ == ExtClass::zero; }
    bool is_real() const { return tag_ == ExtClass::real; }
    bool is_ghost() const { return tag_ == ExtClass::ghost; }
    /// T_e-vee, playing the role of the signed elements: zero or real.
    bool is_signed_el() const { return tag_ != ExtClass::ghost; }
    /// The balance ideal T_e°: zero or ghost.
    bool is_balanced_el() const { return tag_ != ExtClass::real; }
    bool is_invertible() const { return tag_ == ExtClass::real; }

    friend Ext operator+(const Ext& a, const Ext& b) {
        if (a.tag_ == ExtClass::zero) return b;
        if (b.tag_ == ExtClass::zero) return a;
        if (a.a_ > b.a_) return a;
        if (b.a_ > a.a_) return b;
        // Equal heights: N_2 coefficients add and saturate at 2.
        return ghost(a.a_);
    }
    friend Ext operator*(const Ext& a, const Ext& b) {
        if (a.tag_ == ExtClass::zero || b.tag_ == ExtClass::zero) return zero();
        Rational h = a.a_ + b.a_;
        if (a.tag_ == ExtClass::ghost || b.tag_ == ExtClass::ghost)
            return ghost(std::move(h));
        return real(std::move(h));
    }
    Ext operator-() const { return *this; }
    friend Ext operator-(const Ext& a, const Ext& b) { return a + b; }

    Ext inv() const { return Ext(tag_, -a_); }

    bool operator==(const Ext& o) const {
        if (tag_ != o.tag_) return false;
        return tag_ == ExtClass::zero || a_ == o.a_;
    }
    bool operator!=(const Ext& o) const { return !(*this == o); }

  private:
    Ext(ExtClass tag, Rational a) : tag_(tag), a_(std::move(a)) {}
    ExtClass tag_;
    Rational a_;
};

inline bool balance(const Ext& a, const Ext& b) { return (a + b).is_balanced_el(); }

inline bool circ_geq(const Ext& a, const Ext& b) {
    if (a == b) return true;
    return a.is_ghost() && a.modulus() >= b.modulus();
}

}  // namespace tropica
