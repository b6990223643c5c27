#include "tropica/assignment.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tropica/det.hpp"
#include "tropica/errors.hpp"

namespace tropica {

namespace {

// Rational extended with +infinity, for Dijkstra distances and deltas.
struct Dist {
    bool inf = true;
    Rational v;
};

bool less(const Dist& a, const Dist& b) {
    if (a.inf) return false;
    if (b.inf) return true;
    return a.v < b.v;
}

}  // namespace

AssignmentResult permanent_assignment(const Matrix<MaxPlus>& a) {
    if (!a.is_square()) throw ShapeMismatch("assignment needs a square matrix");
    const int n = a.rows();
    AssignmentResult res;
    if (n == 0) {
        res.value = MaxPlus::one();
        return res;
    }

    // Minimization form cost(i,j) = -A_ij with bottom entries forbidden.
    // Row-by-row shortest augmenting paths over reduced costs, exact in
    // rationals; potentials keep u_i + v_j <= cost(i,j) with equality on
    // matched pairs. Column 0 is a virtual start column.
    std::vector<Rational> u(n + 1, Rational(0)), v(n + 1, Rational(0));
    std::vector<int> match(n + 1, -1);  // column -> row (1-based columns)

    for (int s = 0; s < n; ++s) {
        match[0] = s;
        int j0 = 0;
        std::vector<Dist> minv(n + 1);
        std::vector<int> way(n + 1, 0);
        std::vector<bool> used(n + 1, false);
        bool fail = false;
        do {
            used[j0] = true;
            int i0 = match[j0];
            int j1 = -1;
            Dist delta;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                if (!a(i0, j - 1).is_bottom()) {
                    Dist cur;
                    cur.inf = false;
                    cur.v = -a(i0, j - 1).value() - u[i0 + 1] - v[j];
                    // Accumulated path length to column j0 is zero after the
                    // delta updates, so cur is the full path candidate.
                    if (less(cur, minv[j])) {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                }
                if (less(minv[j], delta)) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            if (j1 == -1) {
                fail = true;
                break;
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j] + 1] += delta.v;
                    v[j] -= delta.v;
                } else if (!minv[j].inf) {
                    minv[j].v -= delta.v;
                }
            }
            j0 = j1;
        } while (match[j0] != -1);
        if (fail) {
            res.value = MaxPlus::bottom();
            return res;
        }
        do {
            int j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0);
    }

    res.witness.assign(n, -1);
    for (int j = 1; j <= n; ++j) res.witness[match[j]] = j - 1;
    res.row_duals.resize(n);
    res.col_duals.resize(n);
    for (int i = 0; i < n; ++i) res.row_duals[i] = -u[i + 1];
    for (int j = 0; j < n; ++j) res.col_duals[j] = -v[j + 1];
    MaxPlus value = MaxPlus::one();
    for (int i = 0; i < n; ++i) value = value * a(i, res.witness[i]);
    res.value = value;
    return res;
}

void normalize_to_identity(Matrix<MaxPlus>& a, AssignmentResult& result) {
    if (result.value.is_bottom())
        throw ZeroPermanent("cannot normalize a matrix with bottom permanent");
    const int n = a.rows();
    Matrix<MaxPlus> b(n, n);
    std::vector<Rational> cd(n);
    for (int j = 0; j < n; ++j) {
        int src = result.witness[j];
        for (int i = 0; i < n; ++i) b(i, j) = a(i, src);
        cd[j] = result.col_duals[src];
    }
    a = b;
    result.col_duals = cd;
    for (int i = 0; i < n; ++i) result.witness[i] = i;
}

TightDigraph tight_digraph(const Matrix<MaxPlus>& a, const AssignmentResult& result) {
    if (result.value.is_bottom()) throw ZeroPermanent("tight digraph needs a finite permanent");
    const int n = a.rows();
    for (int i = 0; i < n; ++i)
        if (result.witness[i] != i)
            throw PreconditionUnmet("tight digraph expects an identity-normalized witness");
    TightDigraph g;
    g.n = n;
    g.adj.assign(n, {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (a(i, j).is_bottom()) continue;
            if (a(i, j).value() == result.row_duals[i] + result.col_duals[j])
                g.adj[i].push_back(j);
        }
    return g;
}

bool has_cycle(const TightDigraph& g) {
    std::vector<int> color(g.n, 0);
    std::function<bool(int)> dfs = [&](int v) {
        color[v] = 1;
        for (int w : g.adj[v]) {
            if (w == v) continue;
            if (color[w] == 1) return true;
            if (color[w] == 0 && dfs(w)) return true;
        }
        color[v] = 2;
        return false;
    };
    for (int v = 0; v < g.n; ++v)
        if (color[v] == 0 && dfs(v)) return true;
    return false;
}

namespace {

// Johnson-style elementary circuit enumeration restricted to vertices >= s,
// with early exit as soon as an even-length circuit is seen.
struct CircuitSearch {
    const TightDigraph& g;
    int s = 0;
    long cap;
    long enumerated = 0;
    bool even_found = false;
    bool capped = false;
    std::vector<bool> blocked;
    std::vector<std::set<int>> blist;
    std::vector<int> stack;

    explicit CircuitSearch(const TightDigraph& g_, long cap_) : g(g_), cap(cap_) {}

    void unblock(int v) {
        blocked[v] = false;
        auto bs = std::move(blist[v]);
        blist[v].clear();
        for (int w : bs)
            if (blocked[w]) unblock(w);
    }

    bool circuit(int v) {
        bool found = false;
        stack.push_back(v);
        blocked[v] = true;
        for (int w : g.adj[v]) {
            if (w < s || w == v) continue;
            if (even_found || capped) break;
            if (w == s) {
                ++enumerated;
                if (stack.size() % 2 == 0) even_found = true;
                if (enumerated >= cap) capped = true;
                found = true;
            } else if (!blocked[w]) {
                if (circuit(w)) found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (int w : g.adj[v]) {
                if (w < s || w == v) continue;
                blist[w].insert(v);
            }
        }
        stack.pop_back();
        return found;
    }

    void run() {
        for (s = 0; s < g.n; ++s) {
            if (even_found || capped) return;
            blocked.assign(g.n, false);
            blist.assign(g.n, {});
            stack.clear();
            circuit(s);
        }
    }
};

}  // namespace

std::optional<bool> has_even_cycle(const TightDigraph& g, CycleSearchStats* stats, long cap) {
    CircuitSearch cs(g, cap);
    cs.run();
    if (stats) {
        stats->enumerated = cs.enumerated;
        stats->capped = cs.capped;
    }
    if (cs.even_found) return true;
    if (cs.capped) return std::nullopt;
    return false;
}

bool is_trop_singular(const Matrix<MaxPlus>& a) {
    if (!a.is_square()) throw ShapeMismatch("tropical singularity needs a square matrix");
    AssignmentResult res = permanent_assignment(a);
    if (res.value.is_bottom()) return true;
    Matrix<MaxPlus> b = a;
    normalize_to_identity(b, res);
    return has_cycle(tight_digraph(b, res));
}

bool is_sign_singular(const Matrix<MaxPlus>& a) {
    if (!a.is_square()) throw ShapeMismatch("sign singularity needs a square matrix");
    AssignmentResult res = permanent_assignment(a);
    if (res.value.is_bottom()) return true;
    Matrix<MaxPlus> b = a;
    normalize_to_identity(b, res);
    auto even = has_even_cycle(tight_digraph(b, res));
    if (even.has_value()) return *even;
    if (a.rows() <= 8) {
        auto [plus, minus] = bideterminant(a);
        return plus == minus;
    }
    throw SearchGuard("even-cycle enumeration cap exceeded for n > 8");
}

}  // namespace tropica
