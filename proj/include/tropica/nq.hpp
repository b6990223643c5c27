#pragma once

#include <stdexcept>

#include "tropica/errors.hpp"

namespace tropica {

/// Element of N_q, the quotient of the natural numbers identifying q with
/// q+1, q+2, ... Addition and multiplication saturate at q. Only q = 2 is
/// needed for T_e, but the construction is kept general.
class Nq {
  public:
    Nq(long value, long q) : q_(q), v_(value < 0 ? 0 : value) {
        if (q < 1) throw Error("scalars: N_q modulus must be positive");
        if (v_ > q_) v_ = q_;
    }

    long value() const { return v_; }
    long q() const { return q_; }

    Nq add(const Nq& o) const {
        check(o);
        long s = v_ + o.v_;
        return Nq(s > q_ ? q_ : s, q_);
    }
    Nq mul(const Nq& o) const {
        check(o);
        long p = v_ * o.v_;
        return Nq(p > q_ ? q_ : p, q_);
    }

    bool operator==(const Nq& o) const { return q_ == o.q_ && v_ == o.v_; }
    bool operator!=(const Nq& o) const { return !(*this == o); }

  private:
    void check(const Nq& o) const {
        if (q_ != o.q_) throw Error("scalars: mixed N_q moduli");
    }
    long q_;
    long v_;
};

}  // namespace tropica
