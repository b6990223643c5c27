#include "tropica/diffcon.hpp"

#include <algorithm>

namespace tropica {

DiffResult diff_feasible(const DiffSystem& sys) {
    const int n = sys.vars;
    DiffResult res;
    // Bellman-Ford from an implicit source with zero-weight edges to every
    // variable: dist starts at zero. Edge b -> a with weight c for each
    // constraint x_a - x_b <= c.
    std::vector<Rational> dist(n, Rational(0));
    std::vector<int> pred(n, -1);
    int last_changed = -1;
    for (int pass = 0; pass <= n; ++pass) {
        last_changed = -1;
        for (const auto& con : sys.constraints) {
            Rational cand = dist[con.b] + con.c;
            if (cand < dist[con.a]) {
                dist[con.a] = cand;
                pred[con.a] = con.b;
                last_changed = con.a;
            }
        }
        if (last_changed == -1) break;
    }
    if (last_changed == -1) {
        res.feasible = true;
        res.potentials = std::move(dist);
        return res;
    }
    // Walk predecessors until a node repeats; that node lies on the cycle.
    std::vector<int> mark(n, -1);
    int v = last_changed;
    int step = 0;
    while (v != -1 && mark[v] == -1) {
        mark[v] = step++;
        v = pred[v];
    }
    std::vector<int> cycle;
    if (v != -1) {
        for (int w = v;;) {
            cycle.push_back(w);
            w = pred[w];
            if (w == v) break;
        }
        std::reverse(cycle.begin(), cycle.end());
    } else {
        cycle.push_back(last_changed);
    }
    res.negative_cycle = std::move(cycle);
    return res;
}

}  // namespace tropica
