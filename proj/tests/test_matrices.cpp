#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "support/random_gen.hpp"
#include "tropica/assignment.hpp"
#include "tropica/couples.hpp"
#include "tropica/det.hpp"
#include "tropica/errors.hpp"
#include "tropica/fixtures.hpp"
#include "tropica/identities.hpp"
#include "tropica/io.hpp"

using namespace tropica;

namespace {

MaxPlus fin(long v) { return MaxPlus(Rational(v)); }
const MaxPlus bot = MaxPlus::bottom();

}  // namespace

TEST_CASE("matrix arithmetic basics") {
    auto id = Matrix<MaxPlus>::identity(3);
    std::mt19937_64 rng(3);
    auto x = tgen::rand_rmax_matrix(rng, 3, 3);
    CHECK(id * x == x);
    CHECK(x * id == x);
    CHECK(x + x == x);

    CHECK(fixture("prodA") * fixture("prodB") == fixture("X"));

    auto y = tgen::rand_rmax_matrix(rng, 3, 2);
    CHECK_THROWS_AS(x + y, ShapeMismatch);
    CHECK_THROWS_AS(y * x, ShapeMismatch);

    MaxPlus two = fin(2);
    auto sx = two * x;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(sx(i, j) == two * x(i, j));
}

TEST_CASE("bideterminant on the paper fixtures") {
    auto d3 = fixture("D3");
    auto [p, m] = bideterminant(d3);
    CHECK(p == fin(0));
    CHECK(m == fin(-1));

    Matrix<MaxPlus> one_by_one{{fin(7)}};
    auto [p1, m1] = bideterminant(one_by_one);
    CHECK(p1 == fin(7));
    CHECK(m1.is_bottom());

    Matrix<MaxPlus> ones{{fin(0), fin(0)}, {fin(0), fin(0)}};
    auto [p2, m2] = bideterminant(ones);
    CHECK(p2 == fin(0));
    CHECK(m2 == fin(0));
}

TEST_CASE("bideterminant agrees with brute enumeration and transposition") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 200; ++it) {
        std::uniform_int_distribution<int> dim(1, 5);
        int n = dim(rng);
        auto a = tgen::rand_rmax_matrix(rng, n, n);
        auto got = bideterminant(a);
        auto want = toracle::brute_bidet(a);
        CHECK(got.first == want.first);
        CHECK(got.second == want.second);
        auto t = bideterminant(a.transpose());
        CHECK(t.first == got.first);
        CHECK(t.second == got.second);
    }
}

TEST_CASE("determinant over the symmetrized and extended semirings") {
    Matrix<Sym> a{{Sym::pos(Rational(0)), Sym::neg(Rational(-1))},
                  {Sym::neg(Rational(-1)), Sym::pos(Rational(0))}};
    CHECK(sym_det(a) == Sym::pos(Rational(0)));

    auto d3 = fixture("D3");
    Matrix<Ext> d3e(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d3e(i, j) = Ext::from_maxplus(d3(i, j));
    CHECK(sym_det(d3e) == Ext::ghost(Rational(0)));

    Matrix<Sym> b{{Sym::bal(Rational(2))}};
    CHECK(sym_det(b) == Sym::bal(Rational(2)));

    // Over S_max, lifting R_max entries to sign-positive elements recovers
    // the bideterminant halves.
    Matrix<Sym> d3s(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d3s(i, j) = Sym::from_maxplus(d3(i, j));
    CHECK(sym_det(d3s) == Sym::pos(Rational(0)));  // 0 (-) -1
}

TEST_CASE("optimal assignment: value, duals, witness") {
    auto d3 = fixture("D3");
    auto res = permanent_assignment(d3);
    CHECK(res.value == fin(0));
    auto [p, m] = bideterminant(d3);
    CHECK(res.value == p + m);

    auto id4 = Matrix<MaxPlus>::identity(4);
    auto r2 = permanent_assignment(id4);
    CHECK(r2.value == fin(0));
    for (int i = 0; i < 4; ++i) CHECK(r2.witness[i] == i);

    Matrix<MaxPlus> nope{{fin(0), bot}, {fin(0), bot}};
    CHECK(permanent_assignment(nope).value.is_bottom());
}

TEST_CASE("assignment equals bideterminant max and duals stay feasible") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 300; ++it) {
        std::uniform_int_distribution<int> dim(1, 6);
        int n = dim(rng);
        auto a = tgen::rand_rmax_matrix(rng, n, n);
        auto res = permanent_assignment(a);
        auto [p, m] = bideterminant(a);
        CHECK(res.value == p + m);
        if (res.value.is_bottom()) continue;
        Rational sum(0);
        for (int i = 0; i < n; ++i) sum += res.row_duals[i] + res.col_duals[i];
        CHECK(res.value.value() == sum);
        for (int i = 0; i < n; ++i) {
            CHECK(a(i, res.witness[i]).value() ==
                  res.row_duals[i] + res.col_duals[res.witness[i]]);
            for (int j = 0; j < n; ++j)
                if (!a(i, j).is_bottom())
                    CHECK(a(i, j).value() <= res.row_duals[i] + res.col_duals[j]);
        }
    }
}

TEST_CASE("tight digraph") {
    auto id = Matrix<MaxPlus>::identity(3);
    auto res = permanent_assignment(id);
    auto g = tight_digraph(id, res);
    for (int i = 0; i < 3; ++i) CHECK(g.adj[i] == std::vector<int>{i});

    auto d3 = fixture("D3");
    auto r3 = permanent_assignment(d3);
    auto b = d3;
    normalize_to_identity(b, r3);
    auto g3 = tight_digraph(b, r3);
    CHECK(has_cycle(g3));

    // Perturbed identity with a unique optimum keeps only the witness arcs.
    Matrix<MaxPlus> u{{fin(0), fin(-5)}, {fin(-7), fin(0)}};
    auto ru = permanent_assignment(u);
    auto gu = tight_digraph(u, ru);
    CHECK(gu.adj[0] == std::vector<int>{0});
    CHECK(gu.adj[1] == std::vector<int>{1});
    CHECK_FALSE(has_cycle(gu));

    Matrix<MaxPlus> zp{{bot}};
    auto rz = permanent_assignment(zp);
    CHECK_THROWS_AS(tight_digraph(zp, rz), ZeroPermanent);
}

TEST_CASE("tropical singularity on fixtures") {
    CHECK(is_trop_singular(fixture("D3")));
    Matrix<MaxPlus> a{{fin(0), fin(-1)}, {fin(-1), fin(0)}};
    CHECK_FALSE(is_trop_singular(a));
    Matrix<MaxPlus> nope{{fin(0), bot}, {fin(0), bot}};
    CHECK(is_trop_singular(nope));
}

TEST_CASE("sign singularity on fixtures") {
    CHECK_FALSE(is_sign_singular(fixture("D3")));
    Matrix<MaxPlus> ones{{fin(0), fin(0)}, {fin(0), fin(0)}};
    CHECK(is_sign_singular(ones));

    // All seven maximal minors of F are balanced.
    auto f = fixture("F");
    std::vector<int> rows = {0, 1, 2, 3, 4, 5};
    for (int drop = 0; drop < 7; ++drop) {
        std::vector<int> cols;
        for (int j = 0; j < 7; ++j)
            if (j != drop) cols.push_back(j);
        CHECK(is_sign_singular(f.submatrix(rows, cols)));
    }

    // The {2..6} x {3..7} submatrix is unbalanced.
    CHECK_FALSE(is_sign_singular(f.submatrix({1, 2, 3, 4, 5}, {2, 3, 4, 5, 6})));
}

TEST_CASE("cycle criteria agree with permutation enumeration") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        std::uniform_int_distribution<int> dim(1, 5);
        int n = dim(rng);
        auto a = tgen::rand_rmax_matrix(rng, n, n, -2, 2, 25);
        CHECK(is_trop_singular(a) == toracle::brute_trop_singular(a));
        CHECK(is_sign_singular(a) == toracle::brute_sign_singular(a));
    }
}

TEST_CASE("singularity matches determinant classification in T_e and S_max") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 200; ++it) {
        std::uniform_int_distribution<int> dim(1, 4);
        int n = dim(rng);
        auto a = tgen::rand_rmax_matrix(rng, n, n, -2, 2, 25);
        Matrix<Ext> ae(n, n);
        Matrix<Sym> as(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                ae(i, j) = Ext::from_maxplus(a(i, j));
                as(i, j) = Sym::from_maxplus(a(i, j));
            }
        CHECK(is_trop_singular(a) == sym_det(ae).is_balanced_el());
        CHECK(is_sign_singular(a) == sym_det(as).is_balanced_el());
    }
}

TEST_CASE("adjoint pair") {
    // 2x2 signed adjoint is [[d, -b], [-c, a]].
    Matrix<Sym> a{{Sym::pos(Rational(1)), Sym::neg(Rational(2))},
                  {Sym::bal(Rational(3)), Sym::pos(Rational(4))}};
    auto adj = adjoint(a);
    CHECK(adj(0, 0) == a(1, 1));
    CHECK(adj(0, 1) == -a(0, 1));
    CHECK(adj(1, 0) == -a(1, 0));
    CHECK(adj(1, 1) == a(0, 0));

    auto id = Matrix<MaxPlus>::identity(3);
    auto [plus, minus] = adjoint_pair(id);
    CHECK(plus == id);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(minus(i, j).is_bottom());
}

TEST_CASE("adjoint residual identity over R_max") {
    // A adj+(A) = |A|+ I + R and A adj-(A) = |A|- I + R as a couples
    // circ_geq statement, checked numerically.
    std::mt19937_64 rng(17);
    for (int it = 0; it < 100; ++it) {
        std::uniform_int_distribution<int> dim(1, 4);
        int n = dim(rng);
        auto a = tgen::rand_rmax_matrix(rng, n, n);
        auto [adjp, adjm] = adjoint_pair(a);
        auto [dp, dm] = bideterminant(a);
        auto lp = a * adjp;
        auto lm = a * adjm;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                MaxPlus ip = i == j ? dp : bot;
                MaxPlus im = i == j ? dm : bot;
                // weak form: |A|+ I + A adj- = |A|- I + A adj+
                CHECK(ip + lm(i, j) == im + lp(i, j));
                // strong form via couples
                CHECK(circ_geq(Couple(lp(i, j), lm(i, j)), Couple(ip, im)));
            }
    }
}

TEST_CASE("compound matrices") {
    std::mt19937_64 rng(19);
    auto a = tgen::rand_rmax_matrix(rng, 3, 3);
    auto l1p = compound(a, 1, true);
    auto l1m = compound(a, 1, false);
    CHECK(l1p == a);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(l1m(i, j).is_bottom());
    auto lnp = compound(a, 3, true);
    CHECK(trace(lnp) == bideterminant(a).first);

    Matrix<MaxPlus> ones(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ones(i, j) = fin(0);
    auto l2 = compound(ones, 2, true);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(l2(i, j) == fin(0));
}

TEST_CASE("Cayley-Hamilton evaluates to an identity over R_max") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 60; ++it) {
        std::uniform_int_distribution<int> dim(1, 3);
        int n = dim(rng);
        auto a = tgen::rand_rmax_matrix(rng, n, n);
        std::vector<Matrix<MaxPlus>> pw;
        pw.push_back(Matrix<MaxPlus>::identity(n));
        for (int k = 1; k <= n; ++k) pw.push_back(pw.back() * a);
        Matrix<MaxPlus> lhs = pw[n];
        Matrix<MaxPlus> rhs(n, n);
        for (int k = 1; k <= n; ++k) {
            MaxPlus trp = trace(compound(a, k, true));
            MaxPlus trm = trace(compound(a, k, false));
            bool even = k % 2 == 0;
            lhs = lhs + (even ? trp : trm) * pw[n - k];
            rhs = rhs + (even ? trm : trp) * pw[n - k];
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Cayley-Hamilton corollary: zero prefix forces a zero sequence") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 60; ++it) {
        std::uniform_int_distribution<int> dim(1, 3);
        int n = dim(rng);
        auto a = tgen::rand_rmax_matrix(rng, n, n, -3, 3, 40);
        Matrix<MaxPlus> cvec = tgen::rand_rmax_matrix(rng, 1, n, -3, 3, 40);
        Matrix<MaxPlus> bvec = tgen::rand_rmax_matrix(rng, n, 1, -3, 3, 40);
        std::vector<MaxPlus> s;
        Matrix<MaxPlus> ak = Matrix<MaxPlus>::identity(n);
        for (int k = 0; k <= 3 * n; ++k) {
            s.push_back((cvec * ak * bvec)(0, 0));
            ak = ak * a;
        }
        bool prefix_zero = true;
        for (int k = 0; k < n; ++k) prefix_zero = prefix_zero && s[k].is_bottom();
        if (prefix_zero)
            for (int k = 0; k <= 3 * n; ++k) CHECK(s[k].is_bottom());
    }
}

TEST_CASE("determinant multiplicativity residuals over S_max and T_e") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 120; ++it) {
        std::uniform_int_distribution<int> dim(2, 3);
        int n = dim(rng);
        auto a = tgen::rand_sym_matrix(rng, n, n);
        auto b = tgen::rand_sym_matrix(rng, n, n);
        Sym lhs = sym_det(a * b);
        Sym rhs = sym_det(a) * sym_det(b);
        CHECK(balance(lhs, rhs));
        CHECK(circ_geq(lhs, rhs));

        auto ae = tgen::rand_ext_matrix(rng, n, n);
        auto be = tgen::rand_ext_matrix(rng, n, n);
        Ext le = sym_det(ae * be);
        Ext re = sym_det(ae) * sym_det(be);
        CHECK(balance(le, re));
        CHECK(circ_geq(le, re));
    }
}

TEST_CASE("weak multiplicativity is an equality over R_max") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 120; ++it) {
        std::uniform_int_distribution<int> dim(2, 3);
        int n = dim(rng);
        auto a = tgen::rand_rmax_matrix(rng, n, n);
        auto b = tgen::rand_rmax_matrix(rng, n, n);
        auto [cp, cm] = bideterminant(a * b);
        auto [ap, am] = bideterminant(a);
        auto [bp, bm] = bideterminant(b);
        CHECK(cp + ap * bm + am * bp == cm + ap * bp + am * bm);
    }
}

TEST_CASE("Binet-Cauchy reduces to the product formula for singletons") {
    std::mt19937_64 rng(41);
    auto a = tgen::rand_rmax_matrix(rng, 2, 2);
    auto b = tgen::rand_rmax_matrix(rng, 2, 2);
    auto c = a * b;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            MaxPlus sum = bot;
            for (int k = 0; k < 2; ++k) sum = sum + a(i, k) * b(k, j);
            CHECK(c(i, j) == sum);
        }
}

TEST_CASE("size guards") {
    Matrix<MaxPlus> big(11, 11);
    CHECK_THROWS_AS(bideterminant(big), SizeGuard);
    std::mt19937_64 rng(43);
    auto a = tgen::rand_rmax_matrix(rng, 3, 3);
    CHECK_THROWS_AS(compound(a, 4, true), SizeGuard);
}
