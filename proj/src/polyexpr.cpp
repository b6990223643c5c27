#include "tropica/polyexpr.hpp"

#include <algorithm>
#include <sstream>

namespace tropica {

bool SignedPolynomial::nonnegative() const {
    for (const auto& [m, c] : terms)
        if (c < 0) return false;
    return true;
}

SignedPolynomial SignedPolynomial::operator+(const SignedPolynomial& o) const {
    SignedPolynomial r = *this;
    for (const auto& [m, c] : o.terms) {
        auto it = r.terms.find(m);
        if (it == r.terms.end()) {
            r.terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

SignedPolynomial SignedPolynomial::operator-(const SignedPolynomial& o) const {
    SignedPolynomial neg;
    for (const auto& [m, c] : o.terms) neg.terms.emplace(m, mpz_class(-c));
    return *this + neg;
}

SignedPolynomial SignedPolynomial::operator*(const SignedPolynomial& o) const {
    SignedPolynomial r;
    for (const auto& [ma, ca] : terms)
        for (const auto& [mb, cb] : o.terms) {
            Monomial m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            mpz_class c = ca * cb;
            auto it = r.terms.find(m);
            if (it == r.terms.end()) {
                r.terms.emplace(std::move(m), std::move(c));
            } else {
                it->second += c;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    return r;
}

std::string SignedPolynomial::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        mpz_class a = c < 0 ? mpz_class(-c) : c;
        if (first) {
            if (c < 0) out << "- ";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (a != 1 || m.empty()) {
            out << a.get_str();
            need_star = true;
        }
        for (const auto& [v, e] : m) {
            if (need_star) out << "*";
            out << "x" << (v + 1);
            if (e > 1) out << "^" << e;
            need_star = true;
        }
    }
    return out.str();
}

PolyExpr PolyExpr::zero() {
    return PolyExpr(std::make_shared<const Node>(Node{Kind::zero, -1, nullptr, nullptr}));
}

PolyExpr PolyExpr::one() {
    return PolyExpr(std::make_shared<const Node>(Node{Kind::one, -1, nullptr, nullptr}));
}

PolyExpr PolyExpr::var(int index) {
    if (index < 0) throw Error("polyid: negative variable index");
    return PolyExpr(std::make_shared<const Node>(Node{Kind::var, index, nullptr, nullptr}));
}

PolyExpr PolyExpr::constant(int n) {
    if (n < 0) return -constant(-n);
    if (n == 0) return zero();
    PolyExpr e = one();
    for (int i = 1; i < n; ++i) e = e + one();
    return e;
}

PolyExpr operator+(const PolyExpr& a, const PolyExpr& b) {
    return PolyExpr(std::make_shared<const PolyExpr::Node>(
        PolyExpr::Node{PolyExpr::Kind::sum, -1, a.n_, b.n_}));
}

PolyExpr operator*(const PolyExpr& a, const PolyExpr& b) {
    return PolyExpr(std::make_shared<const PolyExpr::Node>(
        PolyExpr::Node{PolyExpr::Kind::prod, -1, a.n_, b.n_}));
}

PolyExpr PolyExpr::operator-() const {
    return PolyExpr(std::make_shared<const Node>(Node{Kind::minus, -1, n_, nullptr}));
}

namespace {

void scan_vars(const PolyExpr& e, int& max_var, bool& minus) {
    switch (e.kind()) {
        case PolyExpr::Kind::var: max_var = std::max(max_var, e.var_index()); return;
        case PolyExpr::Kind::sum:
        case PolyExpr::Kind::prod:
            scan_vars(e.left(), max_var, minus);
            scan_vars(e.right(), max_var, minus);
            return;
        case PolyExpr::Kind::minus:
            minus = true;
            scan_vars(e.child(), max_var, minus);
            return;
        default: return;
    }
}

}  // namespace

int PolyExpr::var_count() const {
    int mv = -1;
    bool minus = false;
    scan_vars(*this, mv, minus);
    return mv + 1;
}

bool PolyExpr::has_minus() const {
    int mv = -1;
    bool minus = false;
    scan_vars(*this, mv, minus);
    return minus;
}

SignedPolynomial expand(const PolyExpr& e) {
    switch (e.kind()) {
        case PolyExpr::Kind::zero: return {};
        case PolyExpr::Kind::one: {
            SignedPolynomial p;
            p.terms.emplace(Monomial{}, mpz_class(1));
            return p;
        }
        case PolyExpr::Kind::var: {
            SignedPolynomial p;
            p.terms.emplace(Monomial{{e.var_index(), 1}}, mpz_class(1));
            return p;
        }
        case PolyExpr::Kind::sum: return expand(e.left()) + expand(e.right());
        case PolyExpr::Kind::prod: return expand(e.left()) * expand(e.right());
        default: return SignedPolynomial{} - expand(e.child());
    }
}

}  // namespace tropica
