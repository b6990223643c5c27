#pragma once

#include <cstdint>
#include <string>

#include "tropica/maxplus.hpp"

namespace tropica {

enum class SignClass : std::uint8_t { zero, pos, neg, bal };

/// Element of the symmetrized max-plus semiring, stored in canonical class
/// form: zero, sign-positive t, sign-negative (-)t, or balanced t° with t a
/// finite rational modulus.
///
/// The subtractivity rules are
///   a (-) b = a      if a > b,
///   a (-) b = (-)b   if a < b,
///   a (-) a = a°.
class Sym {
  public:
    Sym() : tag_(SignClass::zero) {}

    static Sym zero() { return Sym(); }
    static Sym one() { return pos(Rational(0)); }
    static Sym pos(Rational t) { return Sym(SignClass::pos, std::move(t)); }
    static Sym neg(Rational t) { return Sym(SignClass::neg, std::move(t)); }
    static Sym bal(Rational t) { return Sym(SignClass::bal, std::move(t)); }
    /// Embedding of R_max onto the sign-positive elements.
    static Sym from_maxplus(const MaxPlus& x) {
        return x.is_bottom() ? zero() : pos(x.value());
    }

    SignClass tag() const { return tag_; }
    /// Finite modulus value; undefined for zero.
    const Rational& value() const { return t_; }
    MaxPlus modulus() const {
        return tag_ == SignClass::zero ? MaxPlus::bottom() : MaxPlus(t_);
    }

    /// Signed means sign-positive, sign-negative or zero (the set S-vee).
    bool is_signed_el() const { return tag_ != SignClass::bal; }
    /// Member of the balance ideal S°: zero or balanced.
    bool is_balanced_el() const { return tag_ == SignClass::bal || tag_ == SignClass::zero; }
    bool is_zero() const { return tag_ == SignClass::zero; }
    bool is_invertible() const { return tag_ == SignClass::pos || tag_ == SignClass::neg; }

    friend Sym operator+(const Sym& a, const Sym& b) {
        if (a.tag_ == SignClass::zero) return b;
        if (b.tag_ == SignClass::zero) return a;
        if (a.t_ > b.t_) return a;
        if (b.t_ > a.t_) return b;
        // Equal moduli: same sign keeps it, anything else balances.
        if (a.tag_ == b.tag_) return a;
        return bal(a.t_);
    }
    friend Sym operator*(const Sym& a, const Sym& b) {
        if (a.tag_ == SignClass::zero || b.tag_ == SignClass::zero) return zero();
        Rational m = a.t_ + b.t_;
        if (a.tag_ == SignClass::bal || b.tag_ == SignClass::bal) return bal(std::move(m));
        return a.tag_ == b.tag_ ? pos(std::move(m)) : neg(std::move(m));
    }
    Sym operator-() const {
        switch (tag_) {
            case SignClass::pos: return neg(t_);
            case SignClass::neg: return pos(t_);
            default: return *this;
        }
    }
    friend Sym operator-(const Sym& a, const Sym& b) { return a + (-b); }

    /// Multiplicative inverse; only Pos/Neg elements are invertible.
    Sym inv() const {
        return Sym(tag_, -t_);
    }

    bool operator==(const Sym& o) const {
        if (tag_ != o.tag_) return false;
        return tag_ == SignClass::zero || t_ == o.t_;
    }
    bool operator!=(const Sym& o) const { return !(*this == o); }

  private:
    Sym(SignClass tag, Rational t) : tag_(tag), t_(std::move(t)) {}
    SignClass tag_;
    Rational t_;
};

/// a nabla b: a - b lies in the balance ideal.
inline bool balance(const Sym& a, const Sym& b) { return (a - b).is_balanced_el(); }

/// a >=° b: a = b + c for some c in S°. Equivalently a equals b, or a is
/// balanced with modulus at least that of b.
inline bool circ_geq(const Sym& a, const Sym& b) {
    if (a == b) return true;
    return a.tag() == SignClass::bal && a.modulus() >= b.modulus();
}

}  // namespace tropica
