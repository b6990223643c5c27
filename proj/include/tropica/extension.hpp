#pragma once

#include <cstdint>
#include <utility>

#include "tropica/errors.hpp"
#include "tropica/ext.hpp"
#include "tropica/maxplus.hpp"
#include "tropica/nq.hpp"
#include "tropica/sym.hpp"

namespace tropica {

/// The symmetrized Boolean semiring B^s = {0, 1, (-)1, 1°}, i.e. S_max
/// restricted to moduli {bottom, 0}. It is the coefficient semiring whose
/// extension B^s R_max is isomorphic to S_max.
class BoolSym {
  public:
    static constexpr bool zero_sum_free = true;
    static constexpr bool zero_divisor_free = true;

    enum class V : std::uint8_t { zero, one, neg_one, bal };

    BoolSym() : v_(V::zero) {}
    explicit BoolSym(V v) : v_(v) {}
    static BoolSym zero() { return BoolSym(V::zero); }
    static BoolSym one() { return BoolSym(V::one); }
    static BoolSym neg_one() { return BoolSym(V::neg_one); }
    static BoolSym bal() { return BoolSym(V::bal); }

    V v() const { return v_; }
    bool is_zero() const { return v_ == V::zero; }

    BoolSym add(const BoolSym& o) const {
        if (v_ == V::zero) return o;
        if (o.v_ == V::zero) return *this;
        if (v_ == o.v_) return *this;
        return BoolSym(V::bal);
    }
    BoolSym mul(const BoolSym& o) const {
        if (v_ == V::zero || o.v_ == V::zero) return zero();
        if (v_ == V::bal || o.v_ == V::bal) return bal();
        return v_ == o.v_ ? one() : neg_one();
    }
    BoolSym neg() const {
        if (v_ == V::one) return neg_one();
        if (v_ == V::neg_one) return one();
        return *this;
    }

    bool operator==(const BoolSym& o) const { return v_ == o.v_; }
    bool operator!=(const BoolSym& o) const { return v_ != o.v_; }

  private:
    V v_;
};

/// The semiring of natural numbers, as used by the jets instantiation of
/// the extension construction.
class Naturals {
  public:
    static constexpr bool zero_sum_free = true;
    static constexpr bool zero_divisor_free = true;

    Naturals() : v_(0) {}
    explicit Naturals(unsigned long v) : v_(v) {}
    static Naturals zero() { return Naturals(0); }
    static Naturals one() { return Naturals(1); }

    unsigned long value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    Naturals add(const Naturals& o) const { return Naturals(v_ + o.v_); }
    Naturals mul(const Naturals& o) const { return Naturals(v_ * o.v_); }

    bool operator==(const Naturals& o) const { return v_ == o.v_; }
    bool operator!=(const Naturals& o) const { return v_ != o.v_; }

  private:
    unsigned long v_;
};

/// Wrapper giving N_q the static interface the extension expects.
template <long Q>
class NqFixed {
  public:
    static constexpr bool zero_sum_free = true;
    static constexpr bool zero_divisor_free = true;

    NqFixed() : v_(0, Q) {}
    explicit NqFixed(long v) : v_(v, Q) {}
    static NqFixed zero() { return NqFixed(0); }
    static NqFixed one() { return NqFixed(1); }

    long value() const { return v_.value(); }
    bool is_zero() const { return v_.value() == 0; }
    NqFixed add(const NqFixed& o) const { return NqFixed(v_.add(o.v_).value()); }
    NqFixed mul(const NqFixed& o) const { return NqFixed(v_.mul(o.v_).value()); }

    bool operator==(const NqFixed& o) const { return v_ == o.v_; }
    bool operator!=(const NqFixed& o) const { return !(*this == o); }

  private:
    Nq v_;
};

/// The generic extension S R_max of the max-plus semiring by a coefficient
/// semiring S: pairs (coefficient, height) with lexicographic-by-height
/// addition, coefficient addition on height ties, and componentwise
/// multiplication. Requires S zero-sum free and without zero divisors so
/// that the pairs with nonzero coefficient form a subsemiring.
///
/// Instantiations: Extension<BoolSym> ~ S_max, Extension<NqFixed<2>> = T_e,
/// Extension<Naturals> = jets.
template <class S>
class Extension {
  public:
    Extension() : is_zero_(true) {}
    Extension(S coeff, Rational height) : is_zero_(false), c_(std::move(coeff)), h_(std::move(height)) {
        require_lawful();
        if (c_.is_zero()) is_zero_ = true;
    }

    static Extension zero() { return Extension(); }
    static Extension one() { return Extension(S::one(), Rational(0)); }

    bool is_zero() const { return is_zero_; }
    const S& coeff() const { return c_; }
    const Rational& height() const { return h_; }
    MaxPlus modulus() const { return is_zero_ ? MaxPlus::bottom() : MaxPlus(h_); }

    friend Extension operator+(const Extension& a, const Extension& b) {
        if (a.is_zero_) return b;
        if (b.is_zero_) return a;
        if (a.h_ > b.h_) return a;
        if (b.h_ > a.h_) return b;
        return Extension(a.c_.add(b.c_), a.h_);
    }
    friend Extension operator*(const Extension& a, const Extension& b) {
        if (a.is_zero_ || b.is_zero_) return zero();
        return Extension(a.c_.mul(b.c_), a.h_ + b.h_);
    }

    bool operator==(const Extension& o) const {
        if (is_zero_ != o.is_zero_) return false;
        return is_zero_ || (c_ == o.c_ && h_ == o.h_);
    }
    bool operator!=(const Extension& o) const { return !(*this == o); }

  private:
    static void require_lawful() {
        if (!S::zero_sum_free || !S::zero_divisor_free)
            throw Error("scalars: extension requires a zero-sum free coefficient semiring without zero divisors");
    }
    bool is_zero_;
    S c_;
    Rational h_;
};

/// Symmetry on an extension whose coefficient semiring has one.
inline Extension<BoolSym> operator-(const Extension<BoolSym>& x) {
    if (x.is_zero()) return x;
    return Extension<BoolSym>(x.coeff().neg(), x.height());
}

/// The isomorphism B^s R_max -> S_max.
inline Sym to_sym(const Extension<BoolSym>& x) {
    if (x.is_zero()) return Sym::zero();
    switch (x.coeff().v()) {
        case BoolSym::V::one: return Sym::pos(x.height());
        case BoolSym::V::neg_one: return Sym::neg(x.height());
        default: return Sym::bal(x.height());
    }
}

inline Extension<BoolSym> from_sym(const Sym& s) {
    switch (s.tag()) {
        case SignClass::zero: return Extension<BoolSym>::zero();
        case SignClass::pos: return Extension<BoolSym>(BoolSym::one(), s.value());
        case SignClass::neg: return Extension<BoolSym>(BoolSym::neg_one(), s.value());
        default: return Extension<BoolSym>(BoolSym::bal(), s.value());
    }
}

/// The isomorphism N_2 R_max -> T_e.
inline Ext to_ext(const Extension<NqFixed<2>>& x) {
    if (x.is_zero()) return Ext::zero();
    return x.coeff().value() == 1 ? Ext::real(x.height()) : Ext::ghost(x.height());
}

inline Extension<NqFixed<2>> from_ext(const Ext& e) {
    if (e.is_zero()) return Extension<NqFixed<2>>::zero();
    return Extension<NqFixed<2>>(NqFixed<2>(e.is_real() ? 1 : 2), e.value());
}

}  // namespace tropica
