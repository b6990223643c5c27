// tropica: batch front-end for the tropical linear algebra toolkit.
//
// Subcommands: ranks, det, solve, witness, radon, identities, fixtures.
// Exit codes: 0 success, 1 error, 2 mathematically negative result
// (degenerate system / independent family).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropica/assignment.hpp"
#include "tropica/det.hpp"
#include "tropica/errors.hpp"
#include "tropica/fixtures.hpp"
#include "tropica/identities.hpp"
#include "tropica/io.hpp"
#include "tropica/ranks.hpp"
#include "tropica/solve.hpp"
#include "tropica/span.hpp"
#include "tropica/witness.hpp"

namespace {

using namespace tropica;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

struct Options {
    std::string format = "text";
    std::string semiring = "rmax";
    unsigned long seed = 1;
    int threads = 1;
    bool slow = false;
};

bool file_exists(const std::string& path) {
    std::ifstream in(path);
    return in.good();
}

// Inputs resolve as a path, then inside TROPICA_FIXTURES, then as a built-in
// fixture name.
std::string load_input(const std::string& arg) {
    std::string path = arg;
    if (!file_exists(path)) {
        if (const char* dir = std::getenv("TROPICA_FIXTURES")) {
            std::string alt = std::string(dir) + "/" + arg;
            if (file_exists(alt)) path = alt;
        }
    }
    if (file_exists(path)) {
        std::ifstream in(path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return print_matrix(fixture(arg));  // throws UnknownFixture when missing
}

Matrix<MaxPlus> load_rmax(const std::string& arg) { return parse_rmax_matrix(load_input(arg)); }

Vec load_rmax_vector(const std::string& arg) {
    Matrix<MaxPlus> m = load_rmax(arg);
    if (m.cols() == 1) return m.col(0);
    if (m.rows() == 1) return m.row(0);
    throw ShapeMismatch("expected a vector file (one row or one column)");
}

template <class S>
std::vector<S> one_column(const Matrix<S>& m) {
    if (m.cols() == 1) return m.col(0);
    if (m.rows() == 1) return m.row(0);
    throw ShapeMismatch("expected a vector file (one row or one column)");
}

std::string rank_cell(const RankValue& v) { return v.known() ? std::to_string(*v.value) : "?"; }

ordered_json rank_json(const RankValue& v) {
    if (v.known()) return *v.value;
    return nullptr;
}

RankGuards guards_for(const Options& opt) {
    RankGuards g;
    g.threads = opt.threads;
    // The fast tier defers exhaustive independence certifications; --slow
    // lifts the witness budget (the F-matrix row certification tier).
    g.witness_solver_budget = opt.slow ? 500'000'000L : 20'000L;
    return g;
}

int cmd_ranks(const Options& opt, const std::string& path) {
    Matrix<MaxPlus> a = load_rmax(path);
    RankReport rep = rank_report(a, guards_for(opt));
    const std::pair<const char*, const RankValue*> fields[] = {
        {"trop", &rep.trop}, {"rk_det", &rep.rk_det}, {"mr_GM", &rep.mr_gm},
        {"mc_GM", &rep.mc_gm}, {"mr_t", &rep.mr_t},   {"mc_t", &rep.mc_t},
        {"mr_w", &rep.mr_w}, {"mc_w", &rep.mc_w},     {"r", &rep.r},
        {"c", &rep.c},       {"sr", &rep.sr},         {"f", &rep.f},
        {"term", &rep.term}};
    if (opt.format == "json") {
        ordered_json doc;
        doc["schema"] = 1;
        doc["rows"] = a.rows();
        doc["cols"] = a.cols();
        ordered_json ranks;
        for (const auto& [name, v] : fields) ranks[name] = rank_json(*v);
        doc["ranks"] = ranks;
        doc["violations"] = rep.violations;
        std::cout << doc.dump() << "\n";
    } else {
        for (const auto& [name, v] : fields)
            std::cout << name << " = " << rank_cell(*v)
                      << (v->known() ? "" : "  (" + v->note + ")") << "\n";
        for (const auto& viol : rep.violations) std::cout << "VIOLATION: " << viol << "\n";
    }
    return rep.violations.empty() ? kExitOk : kExitError;
}

int cmd_det(const Options& opt, const std::string& path) {
    std::string text = load_input(path);
    SemiringTag tag = semiring_from_string(opt.semiring);
    if (tag == SemiringTag::rmax) {
        Matrix<MaxPlus> a = parse_rmax_matrix(text);
        auto [plus, minus] = bideterminant(a);
        auto res = permanent_assignment(a);
        bool trop_sing = is_trop_singular(a);
        bool sign_sing = is_sign_singular(a);
        if (opt.format == "json") {
            ordered_json doc;
            doc["schema"] = 1;
            doc["det_plus"] = print_token(plus);
            doc["det_minus"] = print_token(minus);
            doc["permanent"] = print_token(res.value);
            doc["tropically_singular"] = trop_sing;
            doc["sign_singular"] = sign_sing;
            if (!res.value.is_bottom()) {
                ordered_json u = ordered_json::array(), v = ordered_json::array();
                for (const auto& x : res.row_duals) u.push_back(x.str());
                for (const auto& x : res.col_duals) v.push_back(x.str());
                doc["row_duals"] = u;
                doc["col_duals"] = v;
                ordered_json w = ordered_json::array();
                for (int x : res.witness) w.push_back(x + 1);
                doc["witness"] = w;
            }
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << "det+ = " << print_token(plus) << "\n";
            std::cout << "det- = " << print_token(minus) << "\n";
            std::cout << "per = " << print_token(res.value) << "\n";
            std::cout << "tropically singular: " << (trop_sing ? "yes" : "no") << "\n";
            std::cout << "sign singular: " << (sign_sing ? "yes" : "no") << "\n";
            if (!res.value.is_bottom()) {
                std::cout << "row duals:";
                for (const auto& x : res.row_duals) std::cout << " " << x.str();
                std::cout << "\ncol duals:";
                for (const auto& x : res.col_duals) std::cout << " " << x.str();
                std::cout << "\nwitness:";
                for (int x : res.witness) std::cout << " " << (x + 1);
                std::cout << "\n";
            }
        }
        return kExitOk;
    }
    std::string token;
    if (tag == SemiringTag::smax) {
        token = print_token(sym_det(parse_smax_matrix(text)));
    } else {
        token = print_token(sym_det(parse_te_matrix(text)));
    }
    if (opt.format == "json") {
        ordered_json doc;
        doc["schema"] = 1;
        doc["det"] = token;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "det = " << token << "\n";
    }
    return kExitOk;
}

template <class S>
int report_solve(const Options& opt, const SolveOutcome<S>& out) {
    ordered_json doc;
    doc["schema"] = 1;
    if (out.kind == SolveOutcome<S>::Kind::unique_signed) {
        if (opt.format == "json") {
            ordered_json x = ordered_json::array();
            for (const auto& s : out.x) x.push_back(print_token(s));
            doc["outcome"] = "unique_signed";
            doc["x"] = x;
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << "unique signed solution:";
            for (const auto& s : out.x) std::cout << " " << print_token(s);
            std::cout << "\n";
        }
        return kExitOk;
    }
    std::string reason = out.kind == SolveOutcome<S>::Kind::det_not_invertible
                             ? "determinant not invertible (balanced or zero)"
                             : "cramer determinant " + std::to_string(out.bad_index + 1) +
                                   " not signed";
    ordered_json cram = ordered_json::array();
    for (const auto& s : out.cramer) cram.push_back(print_token(s));
    if (opt.format == "json") {
        doc["outcome"] = "degenerate";
        doc["reason"] = reason;
        doc["det"] = print_token(out.det);
        doc["cramer"] = cram;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "degenerate: " << reason << "\n";
        std::cout << "det = " << print_token(out.det) << "\ncramer:";
        for (const auto& s : out.cramer) std::cout << " " << print_token(s);
        std::cout << "\n";
    }
    return kExitNegative;
}

int cmd_solve(const Options& opt, const std::string& mode, const std::vector<std::string>& args) {
    if (mode == "sym") {
        Matrix<Sym> a = parse_smax_matrix(load_input(args.at(0)));
        auto b = one_column(parse_smax_matrix(load_input(args.at(1))));
        return report_solve(opt, cramer_solve_sym(a, b));
    }
    if (mode == "ext") {
        Matrix<Ext> a = parse_te_matrix(load_input(args.at(0)));
        auto b = one_column(parse_te_matrix(load_input(args.at(1))));
        return report_solve(opt, cramer_solve_ext(a, b));
    }
    if (mode == "tropical") {
        Matrix<MaxPlus> a = load_rmax(args.at(0));
        Vec b = load_rmax_vector(args.at(1));
        auto res = tropical_cramer(a, b);
        if (res.ok) {
            if (opt.format == "json") {
                ordered_json doc;
                doc["schema"] = 1;
                doc["outcome"] = "unique";
                ordered_json x = ordered_json::array();
                for (const auto& s : res.x) x.push_back(print_token(s));
                doc["x"] = x;
                std::cout << doc.dump() << "\n";
            } else {
                std::cout << "solution:";
                for (const auto& s : res.x) std::cout << " " << print_token(s);
                std::cout << "\n";
            }
            return kExitOk;
        }
        if (opt.format == "json") {
            ordered_json doc;
            doc["schema"] = 1;
            doc["outcome"] = "degenerate";
            doc["reason"] = res.failure;
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << "degenerate: " << res.failure << "\n";
        }
        return kExitNegative;
    }
    if (mode == "two_sided") {
        Matrix<MaxPlus> a1 = load_rmax(args.at(0));
        Vec b1 = load_rmax_vector(args.at(1));
        Matrix<MaxPlus> a2 = load_rmax(args.at(2));
        Vec b2 = load_rmax_vector(args.at(3));
        auto res = two_sided_cramer(a1, a2, b1, b2);
        if (res.ok) {
            if (opt.format == "json") {
                ordered_json doc;
                doc["schema"] = 1;
                doc["outcome"] = "solved";
                ordered_json x = ordered_json::array();
                for (const auto& s : res.x) x.push_back(print_token(s));
                doc["x"] = x;
                std::cout << doc.dump() << "\n";
            } else {
                std::cout << "solution:";
                for (const auto& s : res.x) std::cout << " " << print_token(s);
                std::cout << "\n";
            }
            return kExitOk;
        }
        if (opt.format == "json") {
            ordered_json doc;
            doc["schema"] = 1;
            doc["outcome"] = "no_solution";
            doc["reason"] = res.report;
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << "no solution: " << res.report << "\n";
        }
        return kExitNegative;
    }
    throw Error("cli: unknown solve mode '" + mode + "'");
}

std::vector<Vec> axis_family(const Matrix<MaxPlus>& a, const std::string& axis) {
    std::vector<Vec> out;
    if (axis == "rows")
        for (int i = 0; i < a.rows(); ++i) out.push_back(a.row(i));
    else
        for (int j = 0; j < a.cols(); ++j) out.push_back(a.col(j));
    return out;
}

void print_witness_text(const GmWitness& w) {
    std::cout << "I = {";
    for (std::size_t t = 0; t < w.set_i.size(); ++t)
        std::cout << (t ? "," : "") << w.set_i[t] + 1;
    std::cout << "}  J = {";
    for (std::size_t t = 0; t < w.set_j.size(); ++t)
        std::cout << (t ? "," : "") << w.set_j[t] + 1;
    std::cout << "}\nlambda:";
    for (const auto& l : w.lambda) std::cout << " " << print_token(l);
    std::cout << "\n";
}

int cmd_witness(const Options& opt, const std::string& kind, const std::string& axis,
                const std::string& path) {
    Matrix<MaxPlus> a = load_rmax(path);
    auto family = axis_family(a, axis);
    SearchLimits lim;
    lim.max_solver_calls = opt.slow ? 500'000'000L : 20'000L;
    ordered_json doc;
    doc["schema"] = 1;
    if (kind == "gm") {
        auto w = gm_witness(family, lim);
        if (!w) {
            std::cout << (opt.format == "json" ? "{\"schema\":1,\"outcome\":\"independent\"}"
                                               : "independent")
                      << "\n";
            return kExitNegative;
        }
        if (opt.format == "json") {
            doc["outcome"] = "dependent";
            ordered_json lam = ordered_json::array();
            for (const auto& l : w->lambda) lam.push_back(print_token(l));
            ordered_json si = ordered_json::array(), sj = ordered_json::array();
            for (int i : w->set_i) si.push_back(i + 1);
            for (int j : w->set_j) sj.push_back(j + 1);
            doc["I"] = si;
            doc["J"] = sj;
            doc["lambda"] = lam;
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << "dependent (Gondran-Minoux)\n";
            print_witness_text(*w);
        }
        return kExitOk;
    }
    if (kind == "tropical") {
        auto w = trop_witness(family, lim);
        if (!w) {
            std::cout << (opt.format == "json" ? "{\"schema\":1,\"outcome\":\"independent\"}"
                                               : "independent")
                      << "\n";
            return kExitNegative;
        }
        if (opt.format == "json") {
            doc["outcome"] = "dependent";
            ordered_json lam = ordered_json::array();
            for (const auto& l : w->lambda) lam.push_back(print_token(l));
            doc["lambda"] = lam;
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << "dependent (tropical)\nlambda:";
            for (const auto& l : w->lambda) std::cout << " " << print_token(l);
            std::cout << "\n";
        }
        return kExitOk;
    }
    if (kind == "weak") {
        for (std::size_t i = 0; i < family.size(); ++i) {
            std::vector<Vec> others;
            for (std::size_t j = 0; j < family.size(); ++j)
                if (j != i) others.push_back(family[j]);
            if (auto lam = span_membership(others, family[i])) {
                if (opt.format == "json") {
                    doc["outcome"] = "dependent";
                    doc["member"] = i + 1;
                    ordered_json l = ordered_json::array();
                    for (const auto& x : *lam) l.push_back(print_token(x));
                    doc["lambda"] = l;
                    std::cout << doc.dump() << "\n";
                } else {
                    std::cout << "dependent (weak): vector " << i + 1
                              << " is a combination of the others\nlambda:";
                    for (const auto& x : *lam) std::cout << " " << print_token(x);
                    std::cout << "\n";
                }
                return kExitOk;
            }
        }
        std::cout << (opt.format == "json" ? "{\"schema\":1,\"outcome\":\"independent\"}"
                                           : "independent")
                  << "\n";
        return kExitNegative;
    }
    throw Error("cli: unknown witness kind '" + kind + "'");
}

int cmd_radon(const Options& opt, const std::string& path) {
    Matrix<MaxPlus> a = load_rmax(path);
    if (a.cols() != a.rows() + 1)
        throw ShapeMismatch("radon expects an n x (n+1) matrix whose columns are the vectors");
    std::vector<Vec> family;
    for (int j = 0; j < a.cols(); ++j) family.push_back(a.col(j));
    GmWitness w = radon_partition(family);
    if (opt.format == "json") {
        ordered_json doc;
        doc["schema"] = 1;
        ordered_json lam = ordered_json::array();
        for (const auto& l : w.lambda) lam.push_back(print_token(l));
        ordered_json si = ordered_json::array(), sj = ordered_json::array();
        for (int i : w.set_i) si.push_back(i + 1);
        for (int j : w.set_j) sj.push_back(j + 1);
        doc["I"] = si;
        doc["J"] = sj;
        doc["lambda"] = lam;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "radon partition:\n";
        print_witness_text(w);
    }
    return kExitOk;
}

struct IdentityOutcome {
    std::string name;
    bool pass;
    std::string detail;
};

void emit_outcomes(const Options& opt, const std::vector<IdentityOutcome>& outs) {
    if (opt.format == "json") {
        ordered_json doc;
        doc["schema"] = 1;
        ordered_json arr = ordered_json::array();
        for (const auto& o : outs) {
            ordered_json j;
            j["name"] = o.name;
            j["pass"] = o.pass;
            j["detail"] = o.detail;
            arr.push_back(j);
        }
        doc["checks"] = arr;
        std::cout << doc.dump() << "\n";
    } else {
        for (const auto& o : outs)
            std::cout << (o.pass ? "PASS " : "FAIL ") << o.name
                      << (o.detail.empty() ? "" : ": " + o.detail) << "\n";
    }
}

int cmd_identities(const Options& opt, const std::string& kind, int n) {
    std::vector<IdentityOutcome> outs;
    auto monomials = [](const PolyExpr& e) {
        return std::to_string(expand(e).terms.size()) + " monomials";
    };
    if (kind == "det_mult") {
        auto id = det_mult_identity(n);
        bool ok = weak_transfer_check(id.lhs, id.rhs);
        outs.push_back({id.name + " weak", ok,
                        monomials(id.lhs) + " / " + monomials(id.rhs)});
        auto sp = det_mult_split(n);
        SignedPolynomial r =
            strong_transfer_residual(sp.p_plus, sp.p_minus, sp.q_plus, sp.q_minus);
        outs.push_back({id.name + " strong residual", true, "R = " + r.str()});
    } else if (kind == "binet_cauchy") {
        std::vector<int> ab;
        for (int i = 0; i < n; ++i) ab.push_back(i);
        auto id = binet_cauchy_identity(2, 2, 2, ab, ab);
        bool ok = weak_transfer_check(id.lhs, id.rhs);
        outs.push_back({"binet_cauchy r=" + std::to_string(n), ok,
                        monomials(id.lhs) + " / " + monomials(id.rhs)});
    } else if (kind == "cramer_adjoint") {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto id = cramer_adjoint_identity(n, i, j);
                bool ok = weak_transfer_check(id.lhs, id.rhs);
                auto sp = cramer_adjoint_split(n, i, j);
                SignedPolynomial r =
                    strong_transfer_residual(sp.p_plus, sp.p_minus, sp.q_plus, sp.q_minus);
                outs.push_back({"cramer_adjoint entry (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")",
                                ok, "R = " + r.str()});
            }
    } else if (kind == "cayley_hamilton") {
        bool all = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto id = cayley_hamilton_identity(n, i, j);
                all = all && weak_transfer_check(id.lhs, id.rhs);
            }
        outs.push_back({"cayley_hamilton n=" + std::to_string(n), all,
                        std::to_string(n * n) + " entries checked"});
    } else if (kind == "amitsur_levitzki") {
        if (n <= 3) {
            auto id = amitsur_levitzki_scalar_identity(n);
            outs.push_back({id.name + " scalar", weak_transfer_check(id.lhs, id.rhs),
                            monomials(id.lhs) + " per side"});
        }
        if (n == 2) {
            // S4 over 2x2 max-plus matrices, seeded sampling.
            std::mt19937_64 rng(opt.seed);
            std::uniform_int_distribution<int> val(-5, 5);
            bool ok = true;
            for (int trial = 0; trial < 20 && ok; ++trial) {
                std::vector<Matrix<MaxPlus>> xs;
                for (int i = 0; i < 4; ++i) {
                    Matrix<MaxPlus> x(2, 2);
                    for (int r = 0; r < 2; ++r)
                        for (int c = 0; c < 2; ++c) x(r, c) = MaxPlus(Rational(val(rng)));
                    xs.push_back(x);
                }
                Matrix<MaxPlus> even(2, 2), odd(2, 2);
                std::vector<int> p = {0, 1, 2, 3};
                do {
                    auto term = xs[p[0]] * xs[p[1]] * xs[p[2]] * xs[p[3]];
                    std::vector<bool> seen(4, false);
                    int sgn = 1;
                    for (int i = 0; i < 4; ++i) {
                        if (seen[i]) continue;
                        int j = i, len = 0;
                        while (!seen[j]) {
                            seen[j] = true;
                            j = p[j];
                            ++len;
                        }
                        if (len % 2 == 0) sgn = -sgn;
                    }
                    if (sgn > 0)
                        even = even + term;
                    else
                        odd = odd + term;
                } while (std::next_permutation(p.begin(), p.end()));
                ok = even == odd;
            }
            outs.push_back({"amitsur_levitzki S4 on 2x2 matrices", ok,
                            "24-permutation identity, 20 samples"});
        }
    } else if (kind == "capelli") {
        auto id = capelli_scalar_identity(n);
        outs.push_back({id.name + " scalar", weak_transfer_check(id.lhs, id.rhs),
                        monomials(id.lhs) + " per side"});
    } else if (kind == "algebraicity") {
        auto sp = algebraicity_split(n);
        bool weak = weak_transfer_check(sp.p_plus - sp.p_minus, PolyExpr::zero());
        outs.push_back({"algebraicity weak", weak, ""});
        try {
            strong_transfer_residual(sp.p_plus, sp.p_minus, sp.q_plus, sp.q_minus);
            outs.push_back({"algebraicity strong", false, "unexpectedly admitted a residual"});
        } catch (const MonomialOverlap& e) {
            outs.push_back({"algebraicity strong", true,
                            std::string("not applicable: ") + e.what()});
        }
    } else {
        throw Error("cli: unknown identity kind '" + kind + "'");
    }
    emit_outcomes(opt, outs);
    for (const auto& o : outs)
        if (!o.pass) return kExitError;
    return kExitOk;
}

int cmd_fixtures(const Options& opt, const std::string& name) {
    if (name == "list") {
        for (const auto& n : fixture_names()) std::cout << n << "\n";
        return kExitOk;
    }
    Matrix<MaxPlus> m = fixture(name);
    if (opt.format == "json")
        std::cout << print_matrix_json(m, SemiringTag::rmax) << "\n";
    else
        std::cout << print_matrix(m);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropical linear algebra toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--semiring", opt.semiring, "scalar semiring for det/parse")
        ->check(CLI::IsMember({"rmax", "smax", "te"}));
    app.add_option("--seed", opt.seed, "seed for sampled checks");
    app.add_option("--threads", opt.threads, "worker threads for submatrix sweeps")
        ->check(CLI::PositiveNumber);
    app.add_flag("--slow", opt.slow, "enable exhaustive certification tiers");

    std::string path, mode = "sym", kind = "gm", axis = "rows", name;
    int size = 2;
    std::vector<std::string> solve_args;

    auto* ranks = app.add_subcommand("ranks", "rank report for an R_max matrix");
    ranks->add_option("matrix", path)->required();

    auto* det = app.add_subcommand("det", "(bi)determinant, permanent, singularity");
    det->add_option("matrix", path)->required();

    auto* solve = app.add_subcommand("solve", "cramer solvers");
    solve->add_option("--mode", mode)->check(CLI::IsMember({"sym", "ext", "tropical", "two_sided"}));
    solve->add_option("inputs", solve_args, "A b  (or A' b' A'' b'' for two_sided)")
        ->expected(2, 4);

    auto* wit = app.add_subcommand("witness", "dependence witness search");
    wit->add_option("--kind", kind)->check(CLI::IsMember({"gm", "tropical", "weak"}));
    wit->add_option("--axis", axis)->check(CLI::IsMember({"rows", "cols"}));
    wit->add_option("matrix", path)->required();

    auto* radon = app.add_subcommand("radon", "radon partition of n+1 column vectors");
    radon->add_option("matrix", path)->required();

    auto* ident = app.add_subcommand("identities", "transfer-principle identity checks");
    ident->add_option("kind", name)->required();
    ident->add_option("n", size);

    auto* fix = app.add_subcommand("fixtures", "print a catalogue matrix ('list' to list)");
    fix->add_option("name", path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (ranks->parsed()) return cmd_ranks(opt, path);
        if (det->parsed()) return cmd_det(opt, path);
        if (solve->parsed()) return cmd_solve(opt, mode, solve_args);
        if (wit->parsed()) return cmd_witness(opt, kind, axis, path);
        if (radon->parsed()) return cmd_radon(opt, path);
        if (ident->parsed()) return cmd_identities(opt, name, size);
        if (fix->parsed()) return cmd_fixtures(opt, path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
