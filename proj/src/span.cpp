#include "tropica/span.hpp"

#include <algorithm>

#include "tropica/errors.hpp"

namespace tropica {

namespace {

void check_dims(const std::vector<Vec>& v, const Vec& b) {
    for (const auto& vi : v)
        if (vi.size() != b.size()) throw DimensionMismatch("vector dimensions differ");
}

}  // namespace

Vec combine(const std::vector<Vec>& v, const std::vector<MaxPlus>& lambda) {
    if (v.size() != lambda.size()) throw DimensionMismatch("coefficient count differs");
    Vec out(v.empty() ? 0 : v[0].size(), MaxPlus::bottom());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = out[j] + lambda[i] * v[i][j];
    return out;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_bottom()) return false;
    return true;
}

bool proportional(const Vec& y, const Vec& z) {
    if (y.size() != z.size()) throw DimensionMismatch("vector dimensions differ");
    bool have = false;
    Rational ratio;
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j].is_bottom() != z[j].is_bottom()) return false;
        if (y[j].is_bottom()) continue;
        Rational d = y[j].value() - z[j].value();
        if (!have) {
            ratio = d;
            have = true;
        } else if (d != ratio) {
            return false;
        }
    }
    return true;  // equal supports with constant shift (all-bottom included)
}

std::optional<std::vector<MaxPlus>> span_membership(const std::vector<Vec>& v, const Vec& b) {
    check_dims(v, b);
    std::vector<MaxPlus> lambda(v.size(), MaxPlus::bottom());
    for (std::size_t i = 0; i < v.size(); ++i) {
        bool forced_zero = false;
        bool have = false;
        Rational best;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (v[i][j].is_bottom()) continue;
            if (b[j].is_bottom()) {
                forced_zero = true;
                break;
            }
            Rational c = b[j].value() - v[i][j].value();
            if (!have || c < best) {
                best = c;
                have = true;
            }
        }
        if (!forced_zero && have) lambda[i] = MaxPlus(best);
    }
    Vec acc(b.size(), MaxPlus::bottom());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) acc[j] = acc[j] + lambda[i] * v[i][j];
    if (acc == b) return lambda;
    return std::nullopt;
}

namespace {

std::vector<Vec> distinct_scaled_nonzero_rows(const Matrix<MaxPlus>& a) {
    std::vector<Vec> rows;
    for (int i = 0; i < a.rows(); ++i) {
        Vec r = a.row(i);
        if (is_zero_vec(r)) continue;
        // Scale so the top finite entry is the unit.
        MaxPlus top = MaxPlus::bottom();
        for (const auto& x : r) top = top + x;
        for (auto& x : r) x = x * top.inv();
        if (std::find(rows.begin(), rows.end(), r) == rows.end()) rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

int row_rank(const Matrix<MaxPlus>& a) {
    std::vector<Vec> rows = distinct_scaled_nonzero_rows(a);
    int count = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<Vec> others;
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (j != i) others.push_back(rows[j]);
        if (!span_membership(others, rows[i])) ++count;
    }
    return count;
}

int col_rank(const Matrix<MaxPlus>& a) { return row_rank(a.transpose()); }

int spanning_row_rank(const Matrix<MaxPlus>& a, long subset_budget) {
    const int m = a.rows();
    std::vector<Vec> rows;
    for (int i = 0; i < m; ++i) rows.push_back(a.row(i));
    int lower = row_rank(a);

    // Rows that are extremal generators make the natural first candidate.
    std::vector<bool> extremal(m, false);
    for (int i = 0; i < m; ++i) {
        std::vector<Vec> others;
        for (int j = 0; j < m; ++j)
            if (j != i) others.push_back(rows[j]);
        extremal[i] = !span_membership(others, rows[i]).has_value();
    }
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return extremal[x] > extremal[y]; });

    long examined = 0;
    auto spans_all = [&](const std::vector<int>& subset) {
        std::vector<Vec> gen;
        for (int i : subset) gen.push_back(rows[i]);
        for (int i = 0; i < m; ++i)
            if (!span_membership(gen, rows[i])) return false;
        return true;
    };

    for (int k = std::max(lower, 0); k <= m; ++k) {
        // Subsets of the reordered rows, lexicographic; the first candidate at
        // k = lower is exactly the extremal family.
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            if (++examined > subset_budget)
                throw SearchGuard("spanning row rank subset budget exceeded");
            std::vector<int> subset(k);
            for (int i = 0; i < k; ++i) subset[i] = order[idx[i]];
            if (spans_all(subset)) return k;
            int i = k - 1;
            while (i >= 0 && idx[i] == m - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return m;
}

bool anti_exchange_check(const std::vector<Vec>& x, const Vec& y, const Vec& z) {
    if (is_zero_vec(y) || is_zero_vec(z)) throw PreconditionUnmet("y and z must be nonzero");
    if (proportional(y, z)) throw PreconditionUnmet("y and z must not be proportional");
    if (span_membership(x, y)) throw PreconditionUnmet("y must lie outside <X>");
    if (span_membership(x, z)) throw PreconditionUnmet("z must lie outside <X>");
    std::vector<Vec> xz = x;
    xz.push_back(z);
    if (!span_membership(xz, y)) throw PreconditionUnmet("y must lie in <X u {z}>");
    std::vector<Vec> xy = x;
    xy.push_back(y);
    return !span_membership(xy, z).has_value();
}

}  // namespace tropica
