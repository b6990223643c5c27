#include "tropica/ranks.hpp"

#include <algorithm>
#include <limits>
#include <functional>
#include <future>
#include <numeric>

#include "tropica/assignment.hpp"
#include "tropica/det.hpp"
#include "tropica/diffcon.hpp"
#include "tropica/errors.hpp"
#include "tropica/fixtures.hpp"
#include "tropica/witness.hpp"

namespace tropica {

namespace {

std::vector<Vec> axis_vectors(const Matrix<MaxPlus>& a, Axis axis) {
    std::vector<Vec> out;
    if (axis == Axis::rows)
        for (int i = 0; i < a.rows(); ++i) out.push_back(a.row(i));
    else
        for (int j = 0; j < a.cols(); ++j) out.push_back(a.col(j));
    return out;
}

Matrix<MaxPlus> as_columns(const std::vector<Vec>& vecs, const std::vector<int>& pick) {
    int dim = static_cast<int>(vecs[0].size());
    Matrix<MaxPlus> m(dim, static_cast<int>(pick.size()));
    for (std::size_t c = 0; c < pick.size(); ++c)
        for (int r = 0; r < dim; ++r) m(r, static_cast<int>(c)) = vecs[pick[c]][r];
    return m;
}

// Descending sweep over square submatrices; `singular` decides one
// submatrix. Runs the per-size sweep in chunks when threads > 1; the
// result (smallest stopping k) is deterministic either way.
template <class SingularFn>
int square_sweep(const Matrix<MaxPlus>& a, const RankGuards& g, SingularFn&& singular) {
    const int kmax = std::min(a.rows(), a.cols());
    long budget = g.sweep_pair_budget;
    for (int k = kmax; k >= 1; --k) {
        auto rsubs = k_subsets(a.rows(), k);
        auto csubs = k_subsets(a.cols(), k);
        long pairs = static_cast<long>(rsubs.size()) * static_cast<long>(csubs.size());
        auto scan = [&](std::size_t lo, std::size_t hi) -> bool {
            for (std::size_t t = lo; t < hi; ++t) {
                const auto& rs = rsubs[t / csubs.size()];
                const auto& cs = csubs[t % csubs.size()];
                if (!singular(a.submatrix(rs, cs))) return true;
            }
            return false;
        };
        std::size_t total = rsubs.size() * csubs.size();
        bool found = false;
        if (g.threads > 1 && total > 64) {
            std::size_t chunk = (total + g.threads - 1) / g.threads;
            std::vector<std::future<bool>> futs;
            for (int t = 0; t < g.threads; ++t) {
                std::size_t lo = t * chunk, hi = std::min(total, lo + chunk);
                if (lo >= hi) break;
                futs.push_back(std::async(std::launch::async, scan, lo, hi));
            }
            for (auto& f : futs) found = f.get() || found;
        } else {
            found = scan(0, total);
        }
        if (found) return k;
        budget -= pairs;
        if (budget < 0) throw SizeGuard("submatrix sweep budget exceeded");
    }
    return 0;
}

}  // namespace

int trop_rank(const Matrix<MaxPlus>& a, const RankGuards& g) {
    return square_sweep(a, g, [](const Matrix<MaxPlus>& s) { return is_trop_singular(s); });
}

int det_rank(const Matrix<MaxPlus>& a, const RankGuards& g) {
    return square_sweep(a, g, [](const Matrix<MaxPlus>& s) { return is_sign_singular(s); });
}

namespace {

enum class IndependenceKind { gm, tropical };

// Independence of a family of vectors. The determinant shortcut decides the
// square case outright and certifies independence whenever some k x k minor
// is nonsingular; otherwise the exhaustive witness search settles it (or
// SearchGuard when the family exceeds the search limits).
bool family_independent(const std::vector<Vec>& vecs, const std::vector<int>& pick,
                        IndependenceKind kind, const RankGuards& g) {
    const int k = static_cast<int>(pick.size());
    const int dim = static_cast<int>(vecs[0].size());
    auto nonsingular = [&](const Matrix<MaxPlus>& m) {
        return kind == IndependenceKind::gm ? !is_sign_singular(m) : !is_trop_singular(m);
    };
    Matrix<MaxPlus> cols = as_columns(vecs, pick);
    if (k == dim) return nonsingular(cols);
    std::vector<int> all(k);
    std::iota(all.begin(), all.end(), 0);
    for (const auto& coords : k_subsets(dim, k))
        if (nonsingular(cols.submatrix(coords, all))) return true;
    if (k > g.witness_max_vectors)
        throw SearchGuard("axis rank subset size exceeds the witness guard");
    SearchLimits lim{g.witness_max_vectors, g.witness_max_dim, g.witness_solver_budget};
    std::vector<Vec> family;
    for (int i : pick) family.push_back(vecs[i]);
    if (kind == IndependenceKind::gm) return !gm_witness(family, lim).has_value();
    return !trop_witness(family, lim).has_value();
}

int axis_rank(const Matrix<MaxPlus>& a, Axis axis, IndependenceKind kind, const RankGuards& g) {
    std::vector<Vec> vecs = axis_vectors(a, axis);
    const int count = static_cast<int>(vecs.size());
    const int dim = vecs.empty() ? 0 : static_cast<int>(vecs[0].size());
    // n+1 vectors in dimension n are always dependent (Radon).
    for (int k = std::min(count, dim); k >= 1; --k) {
        for (const auto& pick : k_subsets(count, k))
            if (family_independent(vecs, pick, kind, g)) return k;
    }
    return 0;
}

}  // namespace

int gm_rank(const Matrix<MaxPlus>& a, Axis axis, const RankGuards& g) {
    return axis_rank(a, axis, IndependenceKind::gm, g);
}

int trop_axis_rank(const Matrix<MaxPlus>& a, Axis axis, const RankGuards& g) {
    return axis_rank(a, axis, IndependenceKind::tropical, g);
}

int weak_axis_rank(const Matrix<MaxPlus>& a, Axis axis, const RankGuards& g) {
    std::vector<Vec> vecs = axis_vectors(a, axis);
    const int count = static_cast<int>(vecs.size());
    if (count > 62 || (1L << count) > g.weak_subset_budget)
        throw SearchGuard("weak rank subset budget exceeded");
    auto weakly_independent = [&](const std::vector<int>& pick) {
        for (std::size_t i = 0; i < pick.size(); ++i) {
            std::vector<Vec> others;
            for (std::size_t j = 0; j < pick.size(); ++j)
                if (j != i) others.push_back(vecs[pick[j]]);
            if (span_membership(others, vecs[pick[i]])) return false;
        }
        return true;
    };
    for (int k = count; k >= 1; --k)
        for (const auto& pick : k_subsets(count, k))
            if (weakly_independent(pick)) return k;
    return 0;
}

// ---- factor rank ---------------------------------------------------------

namespace {

struct Cell {
    int r, c;
};

// Feasibility oracle for tight cell sets: potentials with u_r + v_c = A_rc
// on the set and u_r + v_c <= A_rc on the support rectangle; a bottom entry
// inside the support rectangle is an immediate contradiction.
//
// The equalities pin relative potentials inside each connected component of
// the tight bipartite graph; the remaining freedom is one shift per
// component, constrained by the rectangle inequalities. Feasibility is a
// negative-cycle check on the component-shift graph. Entries are pre-scaled
// to int64 (exactly, via the common denominator); inputs too large for that
// fall back to the rational difference-constraint solver.
struct TightOracle {
    const Matrix<MaxPlus>& a;
    const std::vector<Cell>& cells;
    bool use_int = false;
    std::vector<std::vector<long long>> w;  // scaled finite values
    std::vector<std::vector<bool>> fin;

    TightOracle(const Matrix<MaxPlus>& a_, const std::vector<Cell>& cells_)
        : a(a_), cells(cells_) {
        mpz_class lcm_den(1);
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                if (!a(i, j).is_bottom())
                    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                            a(i, j).value().raw().get_den().get_mpz_t());
        const mpz_class cap = mpz_class(1) << 40;
        use_int = lcm_den < cap;
        if (!use_int) return;
        w.assign(a.rows(), std::vector<long long>(a.cols(), 0));
        fin.assign(a.rows(), std::vector<bool>(a.cols(), false));
        for (int i = 0; i < a.rows() && use_int; ++i)
            for (int j = 0; j < a.cols() && use_int; ++j) {
                if (a(i, j).is_bottom()) continue;
                mpz_class scaled = a(i, j).value().raw().get_num() *
                                   (lcm_den / a(i, j).value().raw().get_den());
                if (scaled > cap || scaled < -cap || !scaled.fits_slong_p()) {
                    use_int = false;
                    break;
                }
                w[i][j] = scaled.get_si();
                fin[i][j] = true;
            }
    }

    bool feasible(const std::vector<int>& t) const {
        if (t.empty()) return true;
        return use_int ? feasible_int(t) : feasible_rat(t);
    }

    bool feasible_int(const std::vector<int>& t) const {
        const long long none = std::numeric_limits<long long>::min();
        // Node ids: rows 0..a.rows()-1, cols a.rows()..a.rows()+a.cols()-1.
        const int rn = a.rows();
        std::vector<int> rows, cols;
        std::vector<std::vector<int>> adj(rn + a.cols());
        std::vector<long long> val(rn + a.cols(), none);
        std::vector<int> comp(rn + a.cols(), -1);
        for (int idx : t) {
            const Cell& cc = cells[idx];
            if (val[cc.r] == none) {
                val[cc.r] = 0;
                rows.push_back(cc.r);
            }
            if (val[rn + cc.c] == none) {
                val[rn + cc.c] = 0;
                cols.push_back(cc.c);
            }
            adj[cc.r].push_back(rn + cc.c);
            adj[rn + cc.c].push_back(cc.r);
        }
        for (int r : rows)
            for (int c : cols)
                if (!fin[r][c]) return false;
        // BFS-assign relative potentials: u_r = val[r] + s_k, v_c = val[c] - s_k.
        int ncomp = 0;
        std::vector<int> queue;
        for (int r : rows) {
            if (comp[r] >= 0) continue;
            int k = ncomp++;
            comp[r] = k;
            val[r] = 0;
            queue.assign(1, r);
            while (!queue.empty()) {
                int x = queue.back();
                queue.pop_back();
                bool x_is_row = x < rn;
                for (int y : adj[x]) {
                    long long vy = x_is_row ? w[x][y - rn] - val[x] : w[y][x - rn] - val[x];
                    if (comp[y] < 0) {
                        comp[y] = k;
                        val[y] = vy;
                        queue.push_back(y);
                    } else if (val[y] != vy) {
                        return false;  // inconsistent equality cycle
                    }
                }
            }
        }
        // Shift constraints s_k - s_l <= w - val_r - val_c for r in k, c in l;
        // same-component cells must satisfy the inequality outright.
        std::vector<std::vector<long long>> d(ncomp,
                                              std::vector<long long>(ncomp, 1LL << 60));
        for (int k = 0; k < ncomp; ++k) d[k][k] = 0;
        for (int r : rows)
            for (int c : cols) {
                long long slack = w[r][c] - val[r] - val[rn + c];
                int k = comp[r], l = comp[rn + c];
                if (k == l) {
                    if (slack < 0) return false;
                } else if (slack < d[k][l]) {
                    d[k][l] = slack;
                }
            }
        if (ncomp == 1) return true;
        for (int m = 0; m < ncomp; ++m)
            for (int x = 0; x < ncomp; ++x) {
                if (d[x][m] >= (1LL << 59)) continue;
                for (int y = 0; y < ncomp; ++y) {
                    long long cand = d[x][m] + d[m][y];
                    if (cand < d[x][y]) {
                        d[x][y] = cand;
                        if (x == y && cand < 0) return false;
                    }
                }
            }
        for (int k = 0; k < ncomp; ++k)
            if (d[k][k] < 0) return false;
        return true;
    }

    bool feasible_rat(const std::vector<int>& t) const {
        std::vector<int> rows, cols;
        std::vector<int> rloc(a.rows(), -1), cloc(a.cols(), -1);
        for (int idx : t) {
            const Cell& cc = cells[idx];
            if (rloc[cc.r] < 0) {
                rloc[cc.r] = static_cast<int>(rows.size());
                rows.push_back(cc.r);
            }
            if (cloc[cc.c] < 0) {
                cloc[cc.c] = static_cast<int>(cols.size());
                cols.push_back(cc.c);
            }
        }
        for (int r : rows)
            for (int c : cols)
                if (a(r, c).is_bottom()) return false;
        DiffSystem sys;
        const int nr = static_cast<int>(rows.size());
        sys.vars = nr + static_cast<int>(cols.size());
        // Variables: u_r then s_c = -v_c; u_r - s_c <= A_rc encodes
        // u_r + v_c <= A_rc, with equality edges for the tight cells.
        for (int ri = 0; ri < nr; ++ri)
            for (std::size_t ci = 0; ci < cols.size(); ++ci) {
                Rational wr = a(rows[ri], cols[ci]).value();
                sys.constraints.push_back({ri, nr + static_cast<int>(ci), wr});
            }
        for (int idx : t) {
            const Cell& cc = cells[idx];
            Rational wr = a(cc.r, cc.c).value();
            sys.constraints.push_back({nr + cloc[cc.c], rloc[cc.r], -wr});
        }
        return diff_feasible(sys).feasible;
    }
};

// Enumerates the maximal feasible tight sets: include/exclude branching over
// a candidate list whose members are individually feasible with the current
// set (feasibility is downward closed), plus the standard banned-set
// maximality test at the leaves.
struct MaximalTightSets {
    const TightOracle& oracle;
    long cap;
    std::vector<std::vector<int>> out;

    MaximalTightSets(const TightOracle& o, long cap_) : oracle(o), cap(cap_) {}

    void rec(std::vector<int>& t, const std::vector<int>& ext, std::vector<int>& banned) {
        if (static_cast<long>(out.size()) > cap)
            throw SizeGuard("tight-set lattice cap exceeded");
        if (ext.empty()) {
            for (int b : banned) {
                t.push_back(b);
                bool f = oracle.feasible(t);
                t.pop_back();
                if (f) return;  // a maximal superset lives in another branch
            }
            out.push_back(t);
            return;
        }
        int c = ext.front();
        std::vector<int> rest(ext.begin() + 1, ext.end());
        t.push_back(c);
        std::vector<int> ext2;
        for (int x : rest) {
            t.push_back(x);
            if (oracle.feasible(t)) ext2.push_back(x);
            t.pop_back();
        }
        rec(t, ext2, banned);
        t.pop_back();
        banned.push_back(c);
        rec(t, rest, banned);
        banned.pop_back();
    }
};

// Branch-and-bound minimum set cover over bitmasks.
struct SetCover {
    const std::vector<unsigned long long>& sets;
    unsigned long long all;
    int best;
    int lower;

    SetCover(const std::vector<unsigned long long>& s, unsigned long long all_, int ub, int lb)
        : sets(s), all(all_), best(ub), lower(lb) {}

    static int popcount(unsigned long long x) { return static_cast<int>(__builtin_popcountll(x)); }

    // Lower bound: greedy packing of uncovered cells no two of which share a
    // covering set.
    int packing_bound(unsigned long long covered) const {
        unsigned long long blocked = 0;
        int cnt = 0;
        unsigned long long unc = all & ~covered;
        for (int bit = 0; bit < 64; ++bit) {
            unsigned long long m = 1ull << bit;
            if (!(unc & m) || (blocked & m)) continue;
            ++cnt;
            for (const auto& s : sets)
                if (s & m) blocked |= s;
        }
        return cnt;
    }

    void run(unsigned long long covered, int chosen) {
        if (covered == all) {
            best = std::min(best, chosen);
            return;
        }
        if (chosen + 1 >= best) return;
        if (chosen + packing_bound(covered) >= best) return;
        // Branch on the uncovered cell with the fewest covering sets.
        int best_cell = -1;
        int fewest = 1 << 30;
        unsigned long long unc = all & ~covered;
        for (int bit = 0; bit < 64; ++bit) {
            if (!(unc & (1ull << bit))) continue;
            int k = 0;
            for (const auto& s : sets)
                if (s & (1ull << bit)) ++k;
            if (k < fewest) {
                fewest = k;
                best_cell = bit;
            }
        }
        if (best_cell < 0 || fewest == 0) return;  // uncoverable (cannot happen)
        std::vector<int> order;
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (sets[i] & (1ull << best_cell)) order.push_back(static_cast<int>(i));
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            return popcount(sets[x] & ~covered) > popcount(sets[y] & ~covered);
        });
        for (int i : order) {
            run(covered | sets[i], chosen + 1);
            if (best <= lower) return;  // proven optimal
        }
    }
};

}  // namespace

int factor_rank(const Matrix<MaxPlus>& a, const RankGuards& g) {
    std::vector<Cell> cells;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_bottom()) cells.push_back({i, j});
    if (cells.empty()) return 0;
    if (static_cast<int>(cells.size()) > g.factor_max_cells)
        throw SizeGuard("factor rank limited to " + std::to_string(g.factor_max_cells) +
                        " finite cells");

    TightOracle oracle(a, cells);
    MaximalTightSets enumerate(oracle, g.factor_max_tight_sets);
    {
        // Every singleton is feasible, so the initial candidate list is all
        // cells.
        std::vector<int> t, banned, cands(cells.size());
        std::iota(cands.begin(), cands.end(), 0);
        enumerate.rec(t, cands, banned);
    }

    std::vector<unsigned long long> masks;
    masks.reserve(enumerate.out.size());
    for (const auto& s : enumerate.out) {
        unsigned long long m = 0;
        for (int idx : s) m |= 1ull << idx;
        masks.push_back(m);
    }
    unsigned long long all =
        cells.size() == 64 ? ~0ull : ((1ull << cells.size()) - 1);

    // Greedy cover for the initial upper bound.
    int ub = 0;
    unsigned long long covered = 0;
    while (covered != all) {
        int besti = -1, gain = -1;
        for (std::size_t i = 0; i < masks.size(); ++i) {
            int k = SetCover::popcount(masks[i] & ~covered);
            if (k > gain) {
                gain = k;
                besti = static_cast<int>(i);
            }
        }
        covered |= masks[besti];
        ++ub;
    }

    // trop <= f provides the early-stop lower bound for the cover search.
    int lb = 1;
    try {
        lb = std::max(1, trop_rank(a, g));
    } catch (const SizeGuard&) {
    }
    SetCover cover(masks, all, ub, lb);
    cover.run(0, 0);
    return cover.best;
}

int term_rank(const Matrix<MaxPlus>& a) {
    const int m = a.rows(), n = a.cols();
    std::vector<int> match_col(n, -1);
    std::vector<bool> used;
    std::function<bool(int)> try_row = [&](int i) -> bool {
        for (int j = 0; j < n; ++j) {
            if (a(i, j).is_bottom() || used[j]) continue;
            used[j] = true;
            if (match_col[j] == -1 || try_row(match_col[j])) {
                match_col[j] = i;
                return true;
            }
        }
        return false;
    };
    int matched = 0;
    for (int i = 0; i < m; ++i) {
        used.assign(n, false);
        if (try_row(i)) ++matched;
    }
    return matched;
}

namespace {

RankValue run_rank(const std::function<int()>& fn) {
    try {
        return {fn(), ""};
    } catch (const SizeGuard& e) {
        return {std::nullopt, e.what()};
    } catch (const SearchGuard& e) {
        return {std::nullopt, e.what()};
    }
}

void check_le(std::vector<std::string>& out, const RankValue& lo, const RankValue& hi,
              const std::string& name) {
    if (lo.known() && hi.known() && *lo.value > *hi.value)
        out.push_back(name + " (" + std::to_string(*lo.value) + " > " +
                      std::to_string(*hi.value) + ")");
}

void check_eq(std::vector<std::string>& out, const RankValue& x, const RankValue& y,
              const std::string& name) {
    if (x.known() && y.known() && *x.value != *y.value)
        out.push_back(name + " (" + std::to_string(*x.value) + " != " +
                      std::to_string(*y.value) + ")");
}

}  // namespace

RankReport rank_report(const Matrix<MaxPlus>& a, const RankGuards& g) {
    RankReport rep;
    rep.trop = run_rank([&] { return trop_rank(a, g); });
    rep.rk_det = run_rank([&] { return det_rank(a, g); });
    rep.mr_gm = run_rank([&] { return gm_rank(a, Axis::rows, g); });
    rep.mc_gm = run_rank([&] { return gm_rank(a, Axis::cols, g); });
    rep.mr_t = run_rank([&] { return trop_axis_rank(a, Axis::rows, g); });
    rep.mc_t = run_rank([&] { return trop_axis_rank(a, Axis::cols, g); });
    rep.mr_w = run_rank([&] { return weak_axis_rank(a, Axis::rows, g); });
    rep.mc_w = run_rank([&] { return weak_axis_rank(a, Axis::cols, g); });
    rep.r = run_rank([&] { return row_rank(a); });
    rep.c = run_rank([&] { return col_rank(a); });
    rep.sr = run_rank([&] { return spanning_row_rank(a, g.weak_subset_budget); });
    rep.f = run_rank([&] { return factor_rank(a, g); });
    rep.term = run_rank([&] { return term_rank(a); });

    auto& v = rep.violations;
    check_le(v, rep.trop, rep.rk_det, "trop <= rk_det");
    check_le(v, rep.rk_det, rep.mr_gm, "rk_det <= mr_GM");
    check_le(v, rep.rk_det, rep.mc_gm, "rk_det <= mc_GM");
    check_le(v, rep.mr_gm, rep.f, "mr_GM <= f");
    check_le(v, rep.mc_gm, rep.f, "mc_GM <= f");
    check_le(v, rep.f, rep.r, "f <= r");
    check_le(v, rep.f, rep.c, "f <= c");
    check_le(v, rep.f, rep.term, "f <= term");
    check_le(v, rep.r, rep.mr_w, "r <= mr_w");
    check_le(v, rep.c, rep.mc_w, "c <= mc_w");
    check_eq(v, rep.mr_t, rep.trop, "mr_t = trop");
    check_eq(v, rep.mc_t, rep.trop, "mc_t = trop");
    check_eq(v, rep.sr, rep.r, "sr = r");
    return rep;
}

InequalityReport rank_inequality_check(RankInequalityKind kind, const Matrix<MaxPlus>& a,
                                       const Matrix<MaxPlus>& b, const RankGuards& g) {
    InequalityReport rep;
    auto add = [&](const std::string& name, int lhs, int rhs, bool holds) {
        rep.items.push_back({name, std::to_string(lhs) + " vs " + std::to_string(rhs), holds,
                             false});
        rep.all_hold = rep.all_hold && holds;
    };
    auto observe = [&](const std::string& name, const std::string& detail) {
        rep.items.push_back({name, detail, true, true});
    };

    switch (kind) {
        case RankInequalityKind::sum: {
            Matrix<MaxPlus> s = a + b;
            int fa = factor_rank(a, g), fb = factor_rank(b, g), fs = factor_rank(s, g);
            add("f(A+B) <= f(A)+f(B)", fs, fa + fb, fs <= fa + fb);
            int da = det_rank(a, g), db = det_rank(b, g), ds = det_rank(s, g);
            add("rk_det(A+B) <= rk_det(A)+rk_det(B)", ds, da + db, ds <= da + db);
            int ta = trop_rank(a, g), tb = trop_rank(b, g), ts = trop_rank(s, g);
            add("trop(A+B) <= trop(A)+trop(B)", ts, ta + tb, ts <= ta + tb);
            int ra = row_rank(a), rb = row_rank(b), rs = row_rank(s);
            observe("r(A+B) vs r(A)+r(B)",
                    std::to_string(rs) + " vs " + std::to_string(ra + rb) +
                        (rs > ra + rb ? " (documented: no upper bound)" : ""));
            break;
        }
        case RankInequalityKind::product: {
            Matrix<MaxPlus> p = a * b;
            int fa = factor_rank(a, g), fb = factor_rank(b, g), fp = factor_rank(p, g);
            add("f(AB) <= min(f(A),f(B))", fp, std::min(fa, fb), fp <= std::min(fa, fb));
            int da = det_rank(a, g), db = det_rank(b, g), dp = det_rank(p, g);
            add("rk_det(AB) <= min", dp, std::min(da, db), dp <= std::min(da, db));
            int ta = trop_rank(a, g), tb = trop_rank(b, g), tp = trop_rank(p, g);
            add("trop(AB) <= min", tp, std::min(ta, tb), tp <= std::min(ta, tb));
            int rb = row_rank(b), rp = row_rank(p);
            observe("r(AB) vs r(B)", std::to_string(rp) + " vs " + std::to_string(rb) +
                                         (rp > rb ? " (documented: may exceed)" : ""));
            break;
        }
        case RankInequalityKind::matrix_union: {
            Matrix<MaxPlus> u = hconcat(a, b);
            int ra = row_rank(a), rb = row_rank(b), ru = row_rank(u);
            add("max(r(A),r(B)) <= r(A|B)", std::max(ra, rb), ru, std::max(ra, rb) <= ru);
            int ca = col_rank(a), cb = col_rank(b), cu = col_rank(u);
            add("c(A|B) <= c(A)+c(B)", cu, ca + cb, cu <= ca + cb);
            observe("c(A|B) vs min(c(A),c(B))",
                    std::to_string(cu) + " vs " + std::to_string(std::min(ca, cb)) +
                        (cu < std::min(ca, cb) ? " (documented: may be smaller)" : ""));
            int fa = factor_rank(a, g), fb = factor_rank(b, g), fu = factor_rank(u, g);
            add("max(f) <= f(A|B)", std::max(fa, fb), fu, std::max(fa, fb) <= fu);
            add("f(A|B) <= f(A)+f(B)", fu, fa + fb, fu <= fa + fb);
            int ta = trop_rank(a, g), tb = trop_rank(b, g), tu = trop_rank(u, g);
            add("max(trop) <= trop(A|B)", std::max(ta, tb), tu, std::max(ta, tb) <= tu);
            add("trop(A|B) <= trop(A)+trop(B)", tu, ta + tb, tu <= ta + tb);
            int da = det_rank(a, g), db = det_rank(b, g), du = det_rank(u, g);
            add("max(rk_det) <= rk_det(A|B)", std::max(da, db), du, std::max(da, db) <= du);
            add("rk_det(A|B) <= rk_det(A)+rk_det(B)", du, da + db, du <= da + db);
            break;
        }
    }
    return rep;
}

AugmentationReport augmentation_counterexample(bool certify_rows) {
    AugmentationReport rep;
    Matrix<MaxPlus> f = fixture("F");
    if (certify_rows) {
        rep.rows_independent_checked = true;
        std::vector<Vec> rows;
        for (int i = 0; i < f.rows(); ++i) rows.push_back(f.row(i));
        rep.rows_independent = !gm_witness(rows).has_value();
    }
    // Basis vectors are independent: the identity matrix has an unbalanced
    // determinant.
    rep.basis_independent = !is_sign_singular(Matrix<MaxPlus>::identity(7));
    for (int e = 0; e < 7; ++e) {
        Matrix<MaxPlus> augmented(7, 7);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 7; ++j) augmented(i, j) = f(i, j);
        augmented(6, e) = MaxPlus::one();
        // Rows independent iff the 7x7 determinant is unbalanced.
        if (is_sign_singular(augmented)) ++rep.failed_augmentations;
    }
    rep.axiom_violated = rep.failed_augmentations == 7;
    return rep;
}

}  // namespace tropica
