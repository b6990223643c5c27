#include "tropica/witness.hpp"

#include <algorithm>
#include <bit>

#include "tropica/errors.hpp"

namespace tropica {

namespace {

// Incremental difference-constraint state shared by both searches.
// Constraint edges x_a - x_b <= c are pushed per coordinate and popped on
// backtrack; feasibility is re-checked by Bellman-Ford on the stack.
struct ConstraintStack {
    int vars;
    std::vector<DiffConstraint> cs;
    long budget;
    long* used;

    ConstraintStack(int vars_, long budget_, long* used_)
        : vars(vars_), budget(budget_), used(used_) {}

    std::size_t mark() const { return cs.size(); }
    void pop_to(std::size_t m) { cs.resize(m); }
    void push(int a, int b, Rational c) { cs.push_back({a, b, std::move(c)}); }

    std::optional<std::vector<Rational>> solve() {
        if (++*used > budget)
            throw SearchGuard("witness search feasibility budget exceeded");
        DiffSystem sys;
        sys.vars = vars;
        sys.constraints = cs;
        DiffResult r = diff_feasible(sys);
        if (!r.feasible) return std::nullopt;
        return r.potentials;
    }
};

std::vector<int> mask_to_indices(unsigned mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

// Supports ordered by decreasing size, then ascending mask for determinism.
std::vector<unsigned> supports_by_size(int k) {
    std::vector<unsigned> masks;
    for (unsigned m = 1; m < (1u << k); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        return std::popcount(a) > std::popcount(b);
    });
    return masks;
}

void check_limits(const std::vector<Vec>& vectors, const SearchLimits& lim) {
    if (static_cast<int>(vectors.size()) > lim.max_vectors)
        throw SearchGuard("witness search limited to " + std::to_string(lim.max_vectors) +
                          " vectors");
    if (!vectors.empty() && static_cast<int>(vectors[0].size()) > lim.max_dim)
        throw SearchGuard("witness search limited to dimension " + std::to_string(lim.max_dim));
    for (const auto& v : vectors)
        if (v.size() != vectors[0].size()) throw DimensionMismatch("vector dimensions differ");
}

// Per-coordinate search over witness pairs. `pairs_for` yields the candidate
// (i*, j*) pairs for a coordinate; equal-maximum and domination constraints
// are pushed, with local-to-support variable indices.
struct CoordinateSearch {
    const std::vector<Vec>& vectors;
    const std::vector<int>& support;      // global indices
    const std::vector<int>& local_index;  // global -> local
    ConstraintStack& stack;

    // finite_at[l] = supported vectors with a finite entry in coordinate l.
    std::vector<std::vector<int>> finite_at;

    CoordinateSearch(const std::vector<Vec>& vecs, const std::vector<int>& supp,
                     const std::vector<int>& localidx, ConstraintStack& st)
        : vectors(vecs), support(supp), local_index(localidx), stack(st) {
        std::size_t dim = vecs.empty() ? 0 : vecs[0].size();
        finite_at.resize(dim);
        for (std::size_t l = 0; l < dim; ++l)
            for (int g : support)
                if (!vectors[g][l].is_bottom()) finite_at[l].push_back(g);
    }

    void push_pair(std::size_t l, int gi, int gj) {
        // lambda_i + v_i[l] = lambda_j + v_j[l], both dominating the rest.
        const Rational vi = vectors[gi][l].value();
        const Rational vj = vectors[gj][l].value();
        int a = local_index[gi], b = local_index[gj];
        stack.push(a, b, vj - vi);
        stack.push(b, a, vi - vj);
        for (int g : finite_at[l]) {
            if (g == gi || g == gj) continue;
            stack.push(local_index[g], a, vi - vectors[g][l].value());
        }
    }

    template <class PairRange>
    bool dfs(std::size_t l, PairRange&& pairs_for) {
        if (l == finite_at.size()) return stack.solve().has_value();
        if (finite_at[l].empty()) return dfs(l + 1, pairs_for);
        for (auto [gi, gj] : pairs_for(l)) {
            std::size_t m = stack.mark();
            push_pair(l, gi, gj);
            if (stack.solve().has_value() && dfs(l + 1, pairs_for)) return true;
            stack.pop_to(m);
        }
        return false;
    }
};

}  // namespace

bool verify_gm_witness(const std::vector<Vec>& vectors, const GmWitness& w) {
    if (w.lambda.size() != vectors.size()) return false;
    bool any = false;
    for (const auto& l : w.lambda) any = any || !l.is_bottom();
    if (!any) return false;
    std::vector<bool> in_i(vectors.size(), false), seen(vectors.size(), false);
    for (int i : w.set_i) {
        if (i < 0 || i >= static_cast<int>(vectors.size()) || seen[i]) return false;
        in_i[i] = true;
        seen[i] = true;
    }
    for (int j : w.set_j) {
        if (j < 0 || j >= static_cast<int>(vectors.size()) || seen[j]) return false;
        seen[j] = true;
    }
    for (std::size_t i = 0; i < vectors.size(); ++i)
        if (!seen[i]) return false;
    std::size_t dim = vectors.empty() ? 0 : vectors[0].size();
    Vec left(dim, MaxPlus::bottom()), right(dim, MaxPlus::bottom());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        Vec& side = in_i[i] ? left : right;
        for (std::size_t l = 0; l < dim; ++l) side[l] = side[l] + w.lambda[i] * vectors[i][l];
    }
    return left == right;
}

bool verify_trop_witness(const std::vector<Vec>& vectors, const TropWitness& w) {
    if (w.lambda.size() != vectors.size()) return false;
    bool any = false;
    for (const auto& l : w.lambda) any = any || !l.is_bottom();
    if (!any) return false;
    std::size_t dim = vectors.empty() ? 0 : vectors[0].size();
    for (std::size_t l = 0; l < dim; ++l) {
        MaxPlus best = MaxPlus::bottom();
        int count = 0;
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            MaxPlus t = w.lambda[i] * vectors[i][l];
            if (t.is_bottom()) continue;
            if (t > best) {
                best = t;
                count = 1;
            } else if (t == best) {
                ++count;
            }
        }
        if (!best.is_bottom() && count < 2) return false;
    }
    return true;
}

std::optional<GmWitness> gm_witness(const std::vector<Vec>& vectors, SearchLimits lim) {
    check_limits(vectors, lim);
    const int k = static_cast<int>(vectors.size());
    if (k == 0) return std::nullopt;

    // A zero vector is dependent on its own: 1 * 0-vector = empty sum.
    for (int i = 0; i < k; ++i) {
        if (is_zero_vec(vectors[i])) {
            GmWitness w;
            w.set_i = {i};
            for (int j = 0; j < k; ++j)
                if (j != i) w.set_j.push_back(j);
            w.lambda.assign(k, MaxPlus::bottom());
            w.lambda[i] = MaxPlus::one();
            return w;
        }
    }

    long solver_calls = 0;
    for (unsigned sup : supports_by_size(k)) {
        std::vector<int> support = mask_to_indices(sup);
        std::vector<int> local_index(k, -1);
        for (std::size_t i = 0; i < support.size(); ++i) local_index[support[i]] = static_cast<int>(i);

        // Partitions of the support with the lowest supported index pinned to
        // side I (I <-> J symmetry), balanced cardinality first.
        std::vector<unsigned> parts;
        for (unsigned p = 0; p < (1u << support.size()); ++p)
            if (p & 1u) parts.push_back(p);
        std::stable_sort(parts.begin(), parts.end(), [&](unsigned a, unsigned b) {
            int da = std::abs(2 * std::popcount(a) - static_cast<int>(support.size()));
            int db = std::abs(2 * std::popcount(b) - static_cast<int>(support.size()));
            return da < db;
        });

        for (unsigned part : parts) {
            std::vector<bool> on_i(k, false);
            for (std::size_t t = 0; t < support.size(); ++t)
                if (part & (1u << t)) on_i[support[t]] = true;

            ConstraintStack stack(static_cast<int>(support.size()), lim.max_solver_calls,
                                  &solver_calls);
            CoordinateSearch search(vectors, support, local_index, stack);

            // Coordinates whose finite support sits entirely on one side can
            // never balance; skip the partition early.
            bool hopeless = false;
            for (const auto& fl : search.finite_at) {
                if (fl.empty()) continue;
                bool li = false, lj = false;
                for (int g : fl) (on_i[g] ? li : lj) = true;
                if (!li || !lj) {
                    hopeless = true;
                    break;
                }
            }
            if (hopeless) continue;

            auto pairs_for = [&](std::size_t l) {
                std::vector<std::pair<int, int>> out;
                for (int gi : search.finite_at[l]) {
                    if (!on_i[gi]) continue;
                    for (int gj : search.finite_at[l])
                        if (!on_i[gj]) out.emplace_back(gi, gj);
                }
                return out;
            };
            if (search.dfs(0, pairs_for)) {
                auto pot = stack.solve();
                GmWitness w;
                w.lambda.assign(k, MaxPlus::bottom());
                for (std::size_t t = 0; t < support.size(); ++t)
                    w.lambda[support[t]] = MaxPlus((*pot)[t]);
                for (int i = 0; i < k; ++i) (on_i[i] ? w.set_i : w.set_j).push_back(i);
                if (!verify_gm_witness(vectors, w))
                    throw Error("systems: internal witness verification failed");
                return w;
            }
        }
    }
    return std::nullopt;
}

std::optional<TropWitness> trop_witness(const std::vector<Vec>& vectors, SearchLimits lim) {
    check_limits(vectors, lim);
    const int k = static_cast<int>(vectors.size());
    if (k == 0) return std::nullopt;

    for (int i = 0; i < k; ++i) {
        if (is_zero_vec(vectors[i])) {
            TropWitness w;
            w.lambda.assign(k, MaxPlus::bottom());
            w.lambda[i] = MaxPlus::one();
            return w;
        }
    }

    long solver_calls = 0;
    for (unsigned sup : supports_by_size(k)) {
        std::vector<int> support = mask_to_indices(sup);
        std::vector<int> local_index(k, -1);
        for (std::size_t i = 0; i < support.size(); ++i) local_index[support[i]] = static_cast<int>(i);

        ConstraintStack stack(static_cast<int>(support.size()), lim.max_solver_calls,
                              &solver_calls);
        CoordinateSearch search(vectors, support, local_index, stack);

        // Any coordinate with exactly one finite supported entry kills the
        // whole support.
        bool hopeless = false;
        for (const auto& fl : search.finite_at)
            if (fl.size() == 1) {
                hopeless = true;
                break;
            }
        if (hopeless) continue;

        auto pairs_for = [&](std::size_t l) {
            std::vector<std::pair<int, int>> out;
            const auto& fl = search.finite_at[l];
            for (std::size_t x = 0; x < fl.size(); ++x)
                for (std::size_t y = x + 1; y < fl.size(); ++y) out.emplace_back(fl[x], fl[y]);
            return out;
        };
        if (search.dfs(0, pairs_for)) {
            auto pot = stack.solve();
            TropWitness w;
            w.lambda.assign(k, MaxPlus::bottom());
            for (std::size_t t = 0; t < support.size(); ++t)
                w.lambda[support[t]] = MaxPlus((*pot)[t]);
            if (!verify_trop_witness(vectors, w))
                throw Error("systems: internal witness verification failed");
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace tropica
