#include "tropica/solve.hpp"

#include <algorithm>
#include <set>

#include "tropica/assignment.hpp"
#include "tropica/errors.hpp"

namespace tropica {

namespace {

template <class S>
std::vector<S> mat_vec(const Matrix<S>& a, const std::vector<S>& x) {
    if (static_cast<int>(x.size()) != a.cols()) throw ShapeMismatch("matrix-vector product");
    std::vector<S> out(a.rows(), S::zero());
    for (int i = 0; i < a.rows(); ++i) {
        S acc = S::zero();
        for (int j = 0; j < a.cols(); ++j) acc = acc + a(i, j) * x[j];
        out[i] = acc;
    }
    return out;
}

template <class S>
SolveOutcome<S> cramer_solve(const Matrix<S>& a, const std::vector<S>& b) {
    if (!a.is_square() || static_cast<int>(b.size()) != a.rows())
        throw ShapeMismatch("cramer solve needs square A and matching b");
    if (a.rows() > kCramerSizeGuard)
        throw SizeGuard("cramer solve limited to n <= " + std::to_string(kCramerSizeGuard));
    const int n = a.rows();
    SolveOutcome<S> out;
    out.det = sym_det(a);
    Matrix<S> adj = adjoint(a);
    out.cramer.assign(n, S::zero());
    for (int i = 0; i < n; ++i) {
        S acc = S::zero();
        for (int j = 0; j < n; ++j) acc = acc + adj(i, j) * b[j];
        out.cramer[i] = acc;
    }
    if (!out.det.is_invertible()) {
        out.kind = SolveOutcome<S>::Kind::det_not_invertible;
        return out;
    }
    for (int i = 0; i < n; ++i) {
        if (!out.cramer[i].is_signed_el()) {
            out.kind = SolveOutcome<S>::Kind::cramer_not_signed;
            out.bad_index = i;
            return out;
        }
    }
    S dinv = out.det.inv();
    out.x.assign(n, S::zero());
    for (int i = 0; i < n; ++i) out.x[i] = dinv * out.cramer[i];
    std::vector<S> lhs = mat_vec(a, out.x);
    for (int i = 0; i < n; ++i)
        if (!balance(lhs[i], b[i])) throw Error("systems: cramer postcondition violated");
    out.kind = SolveOutcome<S>::Kind::unique_signed;
    return out;
}

}  // namespace

SolveOutcome<Sym> cramer_solve_sym(const Matrix<Sym>& a, const std::vector<Sym>& b) {
    return cramer_solve<Sym>(a, b);
}

SolveOutcome<Ext> cramer_solve_ext(const Matrix<Ext>& a, const std::vector<Ext>& b) {
    return cramer_solve<Ext>(a, b);
}

std::vector<bool> twice_attained(const Matrix<MaxPlus>& a, const Vec& b, const Vec& x) {
    if (static_cast<int>(b.size()) != a.rows() || static_cast<int>(x.size()) != a.cols())
        throw ShapeMismatch("twice_attained shapes");
    std::vector<bool> out(a.rows(), false);
    for (int i = 0; i < a.rows(); ++i) {
        MaxPlus best = MaxPlus::bottom();
        int count = 0;
        auto feed = [&](const MaxPlus& t) {
            if (t.is_bottom()) return;
            if (t > best) {
                best = t;
                count = 1;
            } else if (t == best) {
                ++count;
            }
        };
        for (int j = 0; j < a.cols(); ++j) feed(a(i, j) * x[j]);
        feed(b[i]);
        out[i] = best.is_bottom() || count >= 2;
    }
    return out;
}

TropicalCramerResult tropical_cramer(const Matrix<MaxPlus>& a, const Vec& b) {
    if (!a.is_square() || static_cast<int>(b.size()) != a.rows())
        throw ShapeMismatch("tropical cramer needs square A and matching b");
    if (a.rows() > kCramerSizeGuard)
        throw SizeGuard("tropical cramer limited to n <= " + std::to_string(kCramerSizeGuard));
    const int n = a.rows();
    TropicalCramerResult res;
    if (is_trop_singular(a)) {
        res.failure = "A is tropically singular";
        return res;
    }
    MaxPlus per_a = permanent_assignment(a).value;
    res.x.assign(n, MaxPlus::bottom());
    for (int i = 0; i < n; ++i) {
        Matrix<MaxPlus> bi = a;
        for (int r = 0; r < n; ++r) bi(r, i) = b[r];
        MaxPlus per_bi = permanent_assignment(bi).value;
        if (per_bi.is_bottom()) continue;
        if (is_trop_singular(bi)) {
            res.failure = "Cramer matrix " + std::to_string(i + 1) + " is tropically singular";
            return res;
        }
        res.x[i] = per_bi * per_a.inv();
    }
    auto rows_ok = twice_attained(a, b, res.x);
    for (bool okr : rows_ok)
        if (!okr) throw Error("systems: tropical cramer postcondition violated");
    res.ok = true;
    return res;
}

TwoSidedResult two_sided_cramer(const Matrix<MaxPlus>& a1, const Matrix<MaxPlus>& a2,
                                const Vec& b1, const Vec& b2) {
    if (a1.rows() != a2.rows() || a1.cols() != a2.cols() || b1.size() != b2.size() ||
        static_cast<int>(b1.size()) != a1.rows() || !a1.is_square())
        throw ShapeMismatch("two-sided cramer shapes");
    const int n = a1.rows();
    Matrix<Sym> a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = Sym::from_maxplus(a1(i, j)) - Sym::from_maxplus(a2(i, j));
    std::vector<Sym> b(n);
    for (int i = 0; i < n; ++i) b[i] = Sym::from_maxplus(b2[i]) - Sym::from_maxplus(b1[i]);

    TwoSidedResult res;
    res.inner = cramer_solve_sym(a, b);
    const auto& inner = *res.inner;
    if (inner.kind != SolveOutcome<Sym>::Kind::unique_signed) {
        res.report = inner.kind == SolveOutcome<Sym>::Kind::det_not_invertible
                         ? "determinant of A' (-) A'' is not invertible"
                         : "a Cramer determinant is not signed";
        return res;
    }
    for (int i = 0; i < n; ++i) {
        if (inner.x[i].tag() == SignClass::neg) {
            res.report = "no R_max solution: entry " + std::to_string(i + 1) +
                         " of the signed solution is sign-negative";
            return res;
        }
    }
    Vec x(n, MaxPlus::bottom());
    for (int i = 0; i < n; ++i) x[i] = inner.x[i].modulus();
    Vec lhs = mat_vec(a1, x), rhs = mat_vec(a2, x);
    for (int i = 0; i < n; ++i) {
        lhs[i] = lhs[i] + b1[i];
        rhs[i] = rhs[i] + b2[i];
        if (lhs[i] != rhs[i]) {
            res.report = "unique signed candidate does not satisfy the two-sided system";
            return res;
        }
    }
    res.ok = true;
    res.x = std::move(x);
    return res;
}

GmWitness radon_partition(const std::vector<Vec>& vectors) {
    if (vectors.empty()) throw DimensionMismatch("radon needs n+1 vectors");
    const int n = static_cast<int>(vectors[0].size());
    if (static_cast<int>(vectors.size()) != n + 1)
        throw DimensionMismatch("radon needs exactly n+1 vectors of dimension n");
    if (n > 8) throw SearchGuard("radon limited to dimension 8");
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != n) throw DimensionMismatch("vector dimensions differ");

    // Columns of V_i are all vectors but the i-th.
    auto matrix_without = [&](int skip) {
        Matrix<MaxPlus> m(n, n);
        int c = 0;
        for (int j = 0; j <= n; ++j) {
            if (j == skip) continue;
            for (int r = 0; r < n; ++r) m(r, c) = vectors[j][r];
            ++c;
        }
        return m;
    };

    for (int i = n; i >= 0; --i) {
        Matrix<MaxPlus> vi = matrix_without(i);
        if (!is_sign_singular(vi)) continue;
        // Balanced determinant: the n remaining vectors are GM-dependent.
        std::vector<Vec> cols;
        std::vector<int> ids;
        for (int j = 0; j <= n; ++j)
            if (j != i) {
                cols.push_back(vectors[j]);
                ids.push_back(j);
            }
        auto w = gm_witness(cols);
        if (!w) throw Error("systems: balanced V_i without a GM witness");
        GmWitness full;
        full.lambda.assign(n + 1, MaxPlus::bottom());
        for (int t = 0; t < n; ++t) full.lambda[ids[t]] = w->lambda[t];
        for (int t : w->set_i) full.set_i.push_back(ids[t]);
        for (int t : w->set_j) full.set_j.push_back(ids[t]);
        full.set_j.push_back(i);
        std::sort(full.set_i.begin(), full.set_i.end());
        std::sort(full.set_j.begin(), full.set_j.end());
        if (!verify_gm_witness(vectors, full))
            throw Error("systems: radon witness verification failed");
        return full;
    }

    // All maximal determinants unbalanced: solve V x nabla v_{n+1} and split
    // the unique signed solution by signs.
    Matrix<Sym> a(n, n);
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < n; ++r) a(r, j) = Sym::from_maxplus(vectors[j][r]);
    std::vector<Sym> b(n);
    for (int r = 0; r < n; ++r) b[r] = Sym::from_maxplus(vectors[n][r]);
    auto sol = cramer_solve_sym(a, b);
    if (sol.kind != SolveOutcome<Sym>::Kind::unique_signed)
        throw Error("systems: radon expected a unique signed solution");
    GmWitness w;
    w.lambda.assign(n + 1, MaxPlus::bottom());
    w.lambda[n] = MaxPlus::one();
    for (int j = 0; j < n; ++j) {
        w.lambda[j] = sol.x[j].modulus();
        if (sol.x[j].tag() == SignClass::pos)
            w.set_i.push_back(j);
        else
            w.set_j.push_back(j);
    }
    w.set_j.push_back(n);
    if (!verify_gm_witness(vectors, w)) throw Error("systems: radon witness verification failed");
    return w;
}

SignedSolutionSet enumerate_signed_solutions(const Matrix<Sym>& a, const std::vector<Sym>& b) {
    if (!a.is_square() || static_cast<int>(b.size()) != a.rows())
        throw ShapeMismatch("signed solution enumeration shapes");
    const int n = a.rows();
    if (n > 3) throw SearchGuard("signed solution enumeration limited to n <= 3");

    SignedSolutionSet out;
    out.unique = true;
    std::set<std::vector<std::pair<int, std::string>>> seen;

    auto record = [&](const std::vector<Sym>& x) {
        std::vector<std::pair<int, std::string>> key;
        for (const auto& s : x)
            key.emplace_back(static_cast<int>(s.tag()),
                             s.is_zero() ? std::string("-inf") : s.value().str());
        if (seen.insert(key).second) out.solutions.push_back(x);
    };

    // Affine term: value mu_var + offset (var = -1 means the ground node).
    struct Term {
        int var;
        Rational offset;
    };

    std::vector<int> pattern(n, 0);  // 0 zero, 1 pos, 2 neg
    while (true) {
        std::vector<int> var_of(n, -1);
        int nvars = 0;
        for (int j = 0; j < n; ++j)
            if (pattern[j]) var_of[j] = nvars++;
        const int ground = nvars;

        std::vector<std::vector<Term>> pos_terms(n), neg_terms(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (!pattern[j] || a(i, j).is_zero()) continue;
                Term t{var_of[j], a(i, j).value()};
                bool xj_pos = pattern[j] == 1;
                switch (a(i, j).tag()) {
                    case SignClass::pos:
                        (xj_pos ? pos_terms : neg_terms)[i].push_back(t);
                        break;
                    case SignClass::neg:
                        (xj_pos ? neg_terms : pos_terms)[i].push_back(t);
                        break;
                    default:
                        pos_terms[i].push_back(t);
                        neg_terms[i].push_back(t);
                        break;
                }
            }
            if (!b[i].is_zero()) {
                Term t{-1, b[i].value()};
                switch (b[i].tag()) {
                    case SignClass::pos: neg_terms[i].push_back(t); break;
                    case SignClass::neg: pos_terms[i].push_back(t); break;
                    default:
                        pos_terms[i].push_back(t);
                        neg_terms[i].push_back(t);
                        break;
                }
            }
        }

        bool dead = false;
        for (int i = 0; i < n && !dead; ++i)
            if (pos_terms[i].empty() != neg_terms[i].empty()) dead = true;

        if (!dead) {
            // Choice of an attaining pair per nonempty row.
            std::vector<int> active;
            for (int i = 0; i < n; ++i)
                if (!pos_terms[i].empty()) active.push_back(i);

            std::vector<std::size_t> choice(active.size(), 0);
            const int nodes = nvars + 1;
            while (true) {
                // Collect constraints x_u - x_v <= c for this choice combo.
                std::vector<std::vector<std::optional<Rational>>> d(
                    nodes, std::vector<std::optional<Rational>>(nodes));
                auto add_edge = [&](int u, int v, const Rational& c) {
                    // x_u - x_v <= c  ->  edge v -> u relaxed as d[v][u]
                    auto& cell = d[v][u];
                    if (!cell || c < *cell) cell = c;
                };
                auto node_of = [&](const Term& t) { return t.var < 0 ? ground : t.var; };
                for (std::size_t k = 0; k < active.size(); ++k) {
                    int i = active[k];
                    std::size_t pi = choice[k] / neg_terms[i].size();
                    std::size_t qi = choice[k] % neg_terms[i].size();
                    const Term& p = pos_terms[i][pi];
                    const Term& q = neg_terms[i][qi];
                    add_edge(node_of(p), node_of(q), q.offset - p.offset);
                    add_edge(node_of(q), node_of(p), p.offset - q.offset);
                    for (const auto& w : pos_terms[i]) {
                        add_edge(node_of(w), node_of(p), p.offset - w.offset);
                    }
                    for (const auto& w : neg_terms[i]) {
                        add_edge(node_of(w), node_of(p), p.offset - w.offset);
                    }
                }
                // Floyd-Warshall.
                for (int m = 0; m < nodes; ++m) d[m][m] = std::min(
                    d[m][m].value_or(Rational(0)), Rational(0));
                bool feasible = true;
                for (int k = 0; k < nodes && feasible; ++k)
                    for (int u = 0; u < nodes && feasible; ++u) {
                        if (!d[u][k]) continue;
                        for (int v = 0; v < nodes; ++v) {
                            if (!d[k][v]) continue;
                            Rational cand = *d[u][k] + *d[k][v];
                            if (!d[u][v] || cand < *d[u][v]) d[u][v] = cand;
                            if (u == v && cand < 0) {
                                feasible = false;
                                break;
                            }
                        }
                    }
                if (feasible) {
                    // Maximal feasible offsets relative to ground.
                    std::vector<Sym> x(n, Sym::zero());
                    bool point = true;
                    bool bounded = true;
                    for (int j = 0; j < n && bounded; ++j) {
                        if (!pattern[j]) continue;
                        int v = var_of[j];
                        if (!d[ground][v]) {
                            bounded = false;  // unbounded above: certainly not unique
                            break;
                        }
                        Rational hi = *d[ground][v];
                        if (!d[v][ground] || *d[v][ground] + hi != 0) point = false;
                        x[j] = pattern[j] == 1 ? Sym::pos(hi) : Sym::neg(hi);
                    }
                    if (bounded) {
                        record(x);
                        if (!point) out.unique = false;
                    } else {
                        // Pick an arbitrary large representative by walking
                        // reachable bounds; mark non-unique.
                        out.unique = false;
                        std::vector<Sym> y(n, Sym::zero());
                        for (int j = 0; j < n; ++j) {
                            if (!pattern[j]) continue;
                            int v = var_of[j];
                            Rational off = d[ground][v] ? *d[ground][v]
                                                        : (d[v][ground] ? -*d[v][ground]
                                                                        : Rational(0));
                            y[j] = pattern[j] == 1 ? Sym::pos(off) : Sym::neg(off);
                        }
                        // Only record when it actually solves the system.
                        auto lhs = mat_vec(a, y);
                        bool okpt = true;
                        for (int i = 0; i < n; ++i)
                            if (!balance(lhs[i], b[i])) okpt = false;
                        if (okpt) record(y);
                    }
                }
                // Next combo.
                std::size_t k = 0;
                for (; k < active.size(); ++k) {
                    int i = active[k];
                    std::size_t total = pos_terms[i].size() * neg_terms[i].size();
                    if (++choice[k] < total) break;
                    choice[k] = 0;
                }
                if (k == active.size()) break;
            }
        }

        int j = 0;
        for (; j < n; ++j) {
            if (++pattern[j] <= 2) break;
            pattern[j] = 0;
        }
        if (j == n) break;
    }

    if (out.solutions.size() != 1) out.unique = false;
    return out;
}

}  // namespace tropica
