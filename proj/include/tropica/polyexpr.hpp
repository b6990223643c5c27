#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tropica/errors.hpp"

namespace tropica {

/// Commutative monomial: variable index -> positive exponent.
using Monomial = std::map<int, int>;

/// Element of Z[x_1..x_m]: monomial -> nonzero integer coefficient.
struct SignedPolynomial {
    std::map<Monomial, mpz_class> terms;

    bool operator==(const SignedPolynomial& o) const { return terms == o.terms; }
    bool empty() const { return terms.empty(); }
    /// True if every coefficient is nonnegative (i.e. the image lies in N[x]).
    bool nonnegative() const;
    SignedPolynomial operator+(const SignedPolynomial& o) const;
    SignedPolynomial operator-(const SignedPolynomial& o) const;
    SignedPolynomial operator*(const SignedPolynomial& o) const;
    /// Canonical sorted listing, e.g. "3*x1*x3 + x2".
    std::string str() const;
};

/// Immutable expression tree for (formal differences of) positive polynomial
/// expressions: grammar nodes 0, 1, x_i, sums, products, and a formal minus
/// usable only when the target semiring has a symmetry.
class PolyExpr {
  public:
    enum class Kind { zero, one, var, sum, prod, minus };

    PolyExpr() : PolyExpr(zero()) {}

    static PolyExpr zero();
    static PolyExpr one();
    static PolyExpr var(int index);
    /// Small integer constant built as 1+1+...+1.
    static PolyExpr constant(int n);

    friend PolyExpr operator+(const PolyExpr& a, const PolyExpr& b);
    friend PolyExpr operator*(const PolyExpr& a, const PolyExpr& b);
    PolyExpr operator-() const;
    friend PolyExpr operator-(const PolyExpr& a, const PolyExpr& b) { return a + (-b); }

    Kind kind() const { return n_->kind; }
    int var_index() const { return n_->var; }
    const PolyExpr left() const { return PolyExpr(n_->l); }
    const PolyExpr right() const { return PolyExpr(n_->r); }
    const PolyExpr child() const { return PolyExpr(n_->l); }

    /// 1 + the largest variable index used (0 for constant expressions).
    int var_count() const;
    bool has_minus() const;

  private:
    struct Node {
        Kind kind;
        int var = -1;
        std::shared_ptr<const Node> l, r;
    };
    explicit PolyExpr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

/// Full distribution into the monomial basis of Z[x], with exact integer
/// coefficients; Minus negates.
SignedPolynomial expand(const PolyExpr& e);

/// Structural evaluation in a semiring; the scalar type needs zero(), one(),
/// operator+ and operator*, plus unary operator- when the expression
/// contains Minus nodes.
template <class S>
S eval_poly(const PolyExpr& e, std::span<const S> assignment) {
    switch (e.kind()) {
        case PolyExpr::Kind::zero: return S::zero();
        case PolyExpr::Kind::one: return S::one();
        case PolyExpr::Kind::var: {
            int i = e.var_index();
            if (i < 0 || static_cast<std::size_t>(i) >= assignment.size())
                throw Error("polyid: assignment too short for x" + std::to_string(i + 1));
            return assignment[static_cast<std::size_t>(i)];
        }
        case PolyExpr::Kind::sum:
            return eval_poly<S>(e.left(), assignment) + eval_poly<S>(e.right(), assignment);
        case PolyExpr::Kind::prod:
            return eval_poly<S>(e.left(), assignment) * eval_poly<S>(e.right(), assignment);
        default: {
            if constexpr (requires(const S& s) { -s; }) {
                return -eval_poly<S>(e.child(), assignment);
            } else {
                throw SymmetryUnavailable("Minus node evaluated in a semiring without symmetry");
            }
        }
    }
}

}  // namespace tropica
