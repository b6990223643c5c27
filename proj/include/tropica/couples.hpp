#pragma once

#include "tropica/maxplus.hpp"
#include "tropica/sym.hpp"

namespace tropica {

/// Element (x', x'') of the couples semiring R_max^2, with the symmetry
/// (x', x'') -> (x'', x'). S_max is its quotient by the relation gluing
/// couples with the same balance solution set; quotient_map realizes it.
class Couple {
  public:
    Couple() = default;
    Couple(MaxPlus pos, MaxPlus neg) : p_(std::move(pos)), n_(std::move(neg)) {}

    static Couple zero() { return Couple(); }
    static Couple one() { return Couple(MaxPlus::one(), MaxPlus::bottom()); }
    static Couple from_maxplus(const MaxPlus& x) { return Couple(x, MaxPlus::bottom()); }

    const MaxPlus& pos() const { return p_; }
    const MaxPlus& neg() const { return n_; }
    MaxPlus modulus() const { return p_ + n_; }

    friend Couple operator+(const Couple& a, const Couple& b) {
        return Couple(a.p_ + b.p_, a.n_ + b.n_);
    }
    friend Couple operator*(const Couple& a, const Couple& b) {
        return Couple(a.p_ * b.p_ + a.n_ * b.n_, a.p_ * b.n_ + a.n_ * b.p_);
    }
    Couple operator-() const { return Couple(n_, p_); }
    friend Couple operator-(const Couple& a, const Couple& b) { return a + (-b); }

    bool is_balanced_el() const { return p_ == n_; }
    bool is_zero() const { return p_.is_bottom() && n_.is_bottom(); }

    bool operator==(const Couple& o) const { return p_ == o.p_ && n_ == o.n_; }
    bool operator!=(const Couple& o) const { return !(*this == o); }

  private:
    MaxPlus p_;
    MaxPlus n_;
};

/// (x', x'') nabla (y', y'') iff x' + y'' = x'' + y'.
inline bool balance(const Couple& a, const Couple& b) {
    return a.pos() + b.neg() == a.neg() + b.pos();
}

/// a >=° b in R_max^2: a = b + (t, t) for some t.
inline bool circ_geq(const Couple& a, const Couple& b) {
    if (a == b) return true;
    if (!(a.pos() >= b.pos() && a.neg() >= b.neg())) return false;
    bool pgrew = a.pos() != b.pos();
    bool ngrew = a.neg() != b.neg();
    // Coordinates that grew must have been set by the balanced summand t.
    if (pgrew && ngrew) return a.pos() == a.neg();
    if (pgrew) return a.pos() <= a.neg();
    return a.neg() <= a.pos();
}

/// Canonical projection R_max^2 -> S_max.
inline Sym quotient_map(const Couple& c) {
    if (c.pos() > c.neg()) return Sym::pos(c.pos().value());
    if (c.neg() > c.pos()) return Sym::neg(c.neg().value());
    if (c.pos().is_bottom()) return Sym::zero();
    return Sym::bal(c.pos().value());
}

}  // namespace tropica
