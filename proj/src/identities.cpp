#include "tropica/identities.hpp"

#include <algorithm>
#include <numeric>

#include "tropica/det.hpp"
#include "tropica/errors.hpp"

namespace tropica {

namespace {

int perm_sign(const std::vector<int>& p) {
    int n = static_cast<int>(p.size());
    std::vector<bool> seen(n, false);
    int sgn = 1;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int j = i, len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        if (len % 2 == 0) sgn = -sgn;
    }
    return sgn;
}

template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        fn(p, perm_sign(p));
    } while (std::next_permutation(p.begin(), p.end()));
}

constexpr int kSymbolicDetGuard = 4;

void det_guard(int n, const char* what) {
    if (n < 1 || n > kSymbolicDetGuard)
        throw SizeGuard(std::string(what) + " limited to 1 <= n <= " +
                        std::to_string(kSymbolicDetGuard));
}

}  // namespace

bool weak_transfer_check(const PolyExpr& p, const PolyExpr& q) {
    return expand(p) == expand(q);
}

SignedPolynomial strong_transfer_residual(const PolyExpr& p_plus, const PolyExpr& p_minus,
                                          const PolyExpr& q_plus, const PolyExpr& q_minus) {
    if (p_plus.has_minus() || p_minus.has_minus() || q_plus.has_minus() || q_minus.has_minus())
        throw NotAnIdentity("strong transfer needs positive polynomial expressions");
    SignedPolynomial pp = expand(p_plus), pm = expand(p_minus);
    SignedPolynomial qp = expand(q_plus), qm = expand(q_minus);
    if (!(pp - pm == qp - qm))
        throw NotAnIdentity("P+ - P- and Q+ - Q- differ over the integers");
    for (const auto& [m, c] : qp.terms)
        if (qm.terms.count(m))
            throw MonomialOverlap("monomial " + SignedPolynomial{{{m, c}}}.str() +
                                  " appears in both Q+ and Q-");
    SignedPolynomial r = pp - qp;
    if (!r.nonnegative() || !(pm == qm + r))
        throw NotAnIdentity("residual is not a common positive remainder");
    return r;
}

ExprMatrix symbolic_matrix(int rows, int cols, int base, const std::string& name,
                           std::vector<std::string>& legend) {
    ExprMatrix m(rows, cols);
    if (static_cast<int>(legend.size()) < base + rows * cols)
        legend.resize(base + rows * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            int idx = base + i * cols + j;
            m(i, j) = PolyExpr::var(idx);
            legend[idx] = name + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
        }
    return m;
}

std::pair<PolyExpr, PolyExpr> expr_bidet(const ExprMatrix& a) {
    if (!a.is_square()) throw ShapeMismatch("bideterminant of non-square matrix");
    int n = a.rows();
    PolyExpr plus = PolyExpr::zero();
    PolyExpr minus = PolyExpr::zero();
    bool first_p = true, first_m = true;
    for_each_permutation(n, [&](const std::vector<int>& p, int sgn) {
        PolyExpr term = PolyExpr::one();
        for (int i = 0; i < n; ++i) term = term * a(i, p[i]);
        if (sgn > 0) {
            plus = first_p ? term : plus + term;
            first_p = false;
        } else {
            minus = first_m ? term : minus + term;
            first_m = false;
        }
    });
    return {plus, minus};
}

PolyExpr expr_det(const ExprMatrix& a) {
    auto [plus, minus] = expr_bidet(a);
    return plus - minus;
}

IdentityPair det_mult_identity(int n) {
    det_guard(n, "det_mult");
    std::vector<std::string> legend;
    ExprMatrix a = symbolic_matrix(n, n, 0, "a", legend);
    ExprMatrix b = symbolic_matrix(n, n, n * n, "b", legend);
    ExprMatrix c = a * b;
    return {"det_mult(" + std::to_string(n) + ")", expr_det(c), expr_det(a) * expr_det(b),
            std::move(legend)};
}

IdentitySplit det_mult_split(int n) {
    det_guard(n, "det_mult");
    std::vector<std::string> legend;
    ExprMatrix a = symbolic_matrix(n, n, 0, "a", legend);
    ExprMatrix b = symbolic_matrix(n, n, n * n, "b", legend);
    auto [cp, cm] = expr_bidet(a * b);
    auto [ap, am] = expr_bidet(a);
    auto [bp, bm] = expr_bidet(b);
    return {"det_mult(" + std::to_string(n) + ")",
            cp,
            cm,
            ap * bp + am * bm,
            ap * bm + am * bp,
            std::move(legend)};
}

namespace {

void check_index_set(const std::vector<int>& s, int bound, const char* what) {
    if (s.empty()) throw SizeGuard(std::string(what) + " index set is empty");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= bound) throw SizeGuard(std::string(what) + " index out of range");
        if (i && s[i] <= s[i - 1]) throw SizeGuard(std::string(what) + " indices must increase");
    }
}

}  // namespace

IdentityPair binet_cauchy_identity(int n, int p, int m, const std::vector<int>& alpha,
                                   const std::vector<int>& beta) {
    det_guard(static_cast<int>(alpha.size()), "binet_cauchy");
    if (n > 4 || p > 4 || m > 4) throw SizeGuard("binet_cauchy limited to dimensions <= 4");
    check_index_set(alpha, n, "alpha");
    check_index_set(beta, m, "beta");
    if (alpha.size() != beta.size()) throw ShapeMismatch("alpha and beta sizes differ");
    int r = static_cast<int>(alpha.size());
    if (r > p) throw SizeGuard("binet_cauchy needs r <= p");
    std::vector<std::string> legend;
    ExprMatrix a = symbolic_matrix(n, p, 0, "a", legend);
    ExprMatrix b = symbolic_matrix(p, m, n * p, "b", legend);
    ExprMatrix c = a * b;
    PolyExpr lhs = expr_det(c.submatrix(alpha, beta));
    PolyExpr rhs = PolyExpr::zero();
    bool first = true;
    for (const auto& omega : k_subsets(p, r)) {
        PolyExpr term = expr_det(a.submatrix(alpha, omega)) * expr_det(b.submatrix(omega, beta));
        rhs = first ? term : rhs + term;
        first = false;
    }
    return {"binet_cauchy", lhs, rhs, std::move(legend)};
}

IdentitySplit binet_cauchy_split(int n, int p, int m, const std::vector<int>& alpha,
                                 const std::vector<int>& beta) {
    det_guard(static_cast<int>(alpha.size()), "binet_cauchy");
    if (n > 4 || p > 4 || m > 4) throw SizeGuard("binet_cauchy limited to dimensions <= 4");
    check_index_set(alpha, n, "alpha");
    check_index_set(beta, m, "beta");
    if (alpha.size() != beta.size()) throw ShapeMismatch("alpha and beta sizes differ");
    int r = static_cast<int>(alpha.size());
    if (r > p) throw SizeGuard("binet_cauchy needs r <= p");
    std::vector<std::string> legend;
    ExprMatrix a = symbolic_matrix(n, p, 0, "a", legend);
    ExprMatrix b = symbolic_matrix(p, m, n * p, "b", legend);
    auto [cp, cm] = expr_bidet((a * b).submatrix(alpha, beta));
    PolyExpr qp = PolyExpr::zero(), qm = PolyExpr::zero();
    bool first = true;
    for (const auto& omega : k_subsets(p, r)) {
        auto [ap, am] = expr_bidet(a.submatrix(alpha, omega));
        auto [bp, bm] = expr_bidet(b.submatrix(omega, beta));
        PolyExpr tp = ap * bp + am * bm;
        PolyExpr tm = ap * bm + am * bp;
        qp = first ? tp : qp + tp;
        qm = first ? tm : qm + tm;
        first = false;
    }
    return {"binet_cauchy", cp, cm, qp, qm, std::move(legend)};
}

namespace {

// Positive parts of the (i,j) entry of A adj(A): P+ uses adj+, P- uses adj-.
std::pair<PolyExpr, PolyExpr> adj_product_entry(const ExprMatrix& a, int i, int j) {
    int n = a.rows();
    PolyExpr pp = PolyExpr::zero(), pm = PolyExpr::zero();
    bool first = true;
    for (int k = 0; k < n; ++k) {
        std::vector<int> rs, cs;
        for (int r = 0; r < n; ++r)
            if (r != j) rs.push_back(r);
        for (int c = 0; c < n; ++c)
            if (c != k) cs.push_back(c);
        auto [mp, mm] = expr_bidet(a.submatrix(rs, cs));
        bool even = (k + j) % 2 == 0;
        PolyExpr adj_plus = even ? mp : mm;
        PolyExpr adj_minus = even ? mm : mp;
        PolyExpr tp = a(i, k) * adj_plus;
        PolyExpr tm = a(i, k) * adj_minus;
        pp = first ? tp : pp + tp;
        pm = first ? tm : pm + tm;
        first = false;
    }
    return {pp, pm};
}

}  // namespace

IdentityPair cramer_adjoint_identity(int n, int i, int j) {
    det_guard(n, "cramer_adjoint");
    if (i < 0 || i >= n || j < 0 || j >= n) throw SizeGuard("entry out of range");
    std::vector<std::string> legend;
    ExprMatrix a = symbolic_matrix(n, n, 0, "a", legend);
    auto [pp, pm] = adj_product_entry(a, i, j);
    PolyExpr rhs = (i == j) ? expr_det(a) : PolyExpr::zero();
    return {"cramer_adjoint", pp - pm, rhs, std::move(legend)};
}

IdentitySplit cramer_adjoint_split(int n, int i, int j) {
    det_guard(n, "cramer_adjoint");
    if (i < 0 || i >= n || j < 0 || j >= n) throw SizeGuard("entry out of range");
    std::vector<std::string> legend;
    ExprMatrix a = symbolic_matrix(n, n, 0, "a", legend);
    auto [pp, pm] = adj_product_entry(a, i, j);
    PolyExpr qp = PolyExpr::zero(), qm = PolyExpr::zero();
    if (i == j) {
        auto [dp, dm] = expr_bidet(a);
        qp = dp;
        qm = dm;
    }
    return {"cramer_adjoint", pp, pm, qp, qm, std::move(legend)};
}

IdentityPair cayley_hamilton_identity(int n, int i, int j) {
    det_guard(n, "cayley_hamilton");
    if (i < 0 || i >= n || j < 0 || j >= n) throw SizeGuard("entry out of range");
    std::vector<std::string> legend;
    ExprMatrix a = symbolic_matrix(n, n, 0, "a", legend);

    std::vector<ExprMatrix> powers;  // A^0 .. A^n
    powers.push_back(ExprMatrix::identity(n));
    for (int k = 1; k <= n; ++k) powers.push_back(powers.back() * a);

    auto compound_trace = [&](int k, bool plus_part) {
        PolyExpr t = PolyExpr::zero();
        bool first = true;
        for (const auto& sub : k_subsets(n, k)) {
            auto [p, m] = expr_bidet(a.submatrix(sub, sub));
            PolyExpr part = plus_part ? p : m;
            t = first ? part : t + part;
            first = false;
        }
        return t;
    };

    PolyExpr lhs = powers[n](i, j);
    PolyExpr rhs = PolyExpr::zero();
    bool rhs_first = true;
    for (int k = 1; k <= n; ++k) {
        bool even = (k % 2 == 0);
        PolyExpr lterm = powers[n - k](i, j) * compound_trace(k, even);
        PolyExpr rterm = powers[n - k](i, j) * compound_trace(k, !even);
        lhs = lhs + lterm;
        rhs = rhs_first ? rterm : rhs + rterm;
        rhs_first = false;
    }
    return {"cayley_hamilton", lhs, rhs, std::move(legend)};
}

IdentityPair amitsur_levitzki_scalar_identity(int n) {
    if (n < 1 || n > 3) throw SizeGuard("amitsur_levitzki scalar form limited to n <= 3");
    int m = 2 * n;
    std::vector<std::string> legend(m);
    for (int i = 0; i < m; ++i) legend[i] = "x" + std::to_string(i + 1);
    PolyExpr lhs = PolyExpr::zero(), rhs = PolyExpr::zero();
    bool fl = true, fr = true;
    for_each_permutation(m, [&](const std::vector<int>& p, int sgn) {
        PolyExpr term = PolyExpr::var(p[0]);
        for (int i = 1; i < m; ++i) term = term * PolyExpr::var(p[i]);
        if (sgn > 0) {
            lhs = fl ? term : lhs + term;
            fl = false;
        } else {
            rhs = fr ? term : rhs + term;
            fr = false;
        }
    });
    return {"amitsur_levitzki(" + std::to_string(n) + ")", lhs, rhs, std::move(legend)};
}

IdentityPair capelli_scalar_identity(int n) {
    if (n < 1 || n > 4) throw SizeGuard("capelli scalar form limited to n <= 4");
    std::vector<std::string> legend(2 * n + 1);
    for (int i = 0; i < n; ++i) legend[i] = "x" + std::to_string(i + 1);
    for (int i = 0; i <= n; ++i) legend[n + i] = "y" + std::to_string(i + 1);
    PolyExpr lhs = PolyExpr::zero(), rhs = PolyExpr::zero();
    bool fl = true, fr = true;
    for_each_permutation(n, [&](const std::vector<int>& p, int sgn) {
        PolyExpr term = PolyExpr::var(n);  // y1
        for (int i = 0; i < n; ++i) term = term * PolyExpr::var(p[i]) * PolyExpr::var(n + i + 1);
        if (sgn > 0) {
            lhs = fl ? term : lhs + term;
            fl = false;
        } else {
            rhs = fr ? term : rhs + term;
            fr = false;
        }
    });
    return {"capelli(" + std::to_string(n) + ")", lhs, rhs, std::move(legend)};
}

IdentitySplit algebraicity_split(int n) {
    if (n != 1) throw SizeGuard("algebraicity split exhibited for n = 1");
    // A(y,z) = S_1([y,z]) = yz - zy; the natural syntactic split has the
    // monomial yz on both sides once interpreted commutatively.
    PolyExpr y = PolyExpr::var(0), z = PolyExpr::var(1);
    PolyExpr plus = y * z;
    PolyExpr minus = z * y;
    return {"algebraicity(1)", plus, minus, plus, minus, {"y", "z"}};
}

}  // namespace tropica
