// Python bindings for the main operations, on the text interfaces: matrices
// travel as the token-based text format, scalars as tokens.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropica/assignment.hpp"
#include "tropica/det.hpp"
#include "tropica/fixtures.hpp"
#include "tropica/identities.hpp"
#include "tropica/io.hpp"
#include "tropica/ranks.hpp"
#include "tropica/solve.hpp"
#include "tropica/witness.hpp"

namespace py = pybind11;
using namespace tropica;

namespace {

Matrix<MaxPlus> rmax(const std::string& text) { return parse_rmax_matrix(text); }

py::object rank_value(const RankValue& v) {
    if (v.known()) return py::int_(*v.value);
    return py::none();
}

py::dict rank_report_py(const std::string& text, bool slow) {
    RankGuards g;
    g.witness_solver_budget = slow ? 500'000'000L : 20'000L;
    RankReport rep = rank_report(rmax(text), g);
    py::dict d;
    d["trop"] = rank_value(rep.trop);
    d["rk_det"] = rank_value(rep.rk_det);
    d["mr_GM"] = rank_value(rep.mr_gm);
    d["mc_GM"] = rank_value(rep.mc_gm);
    d["mr_t"] = rank_value(rep.mr_t);
    d["mc_t"] = rank_value(rep.mc_t);
    d["mr_w"] = rank_value(rep.mr_w);
    d["mc_w"] = rank_value(rep.mc_w);
    d["r"] = rank_value(rep.r);
    d["c"] = rank_value(rep.c);
    d["sr"] = rank_value(rep.sr);
    d["f"] = rank_value(rep.f);
    d["term"] = rank_value(rep.term);
    py::list viol;
    for (const auto& s : rep.violations) viol.append(s);
    d["violations"] = viol;
    return d;
}

py::tuple bideterminant_py(const std::string& text) {
    auto [p, m] = bideterminant(rmax(text));
    return py::make_tuple(print_token(p), print_token(m));
}

std::string permanent_py(const std::string& text) {
    return print_token(permanent_assignment(rmax(text)).value);
}

std::string det_py(const std::string& text, const std::string& semiring) {
    SemiringTag tag = semiring_from_string(semiring);
    if (tag == SemiringTag::smax) return print_token(sym_det(parse_smax_matrix(text)));
    if (tag == SemiringTag::te) return print_token(sym_det(parse_te_matrix(text)));
    auto [p, m] = bideterminant(rmax(text));
    return "(" + print_token(p) + "," + print_token(m) + ")";
}

py::object solve_sym_py(const std::string& a_text, const std::string& b_text) {
    Matrix<Sym> a = parse_smax_matrix(a_text);
    Matrix<Sym> bm = parse_smax_matrix(b_text);
    std::vector<Sym> b = bm.cols() == 1 ? bm.col(0) : bm.row(0);
    auto out = cramer_solve_sym(a, b);
    py::dict d;
    d["det"] = print_token(out.det);
    py::list cram;
    for (const auto& s : out.cramer) cram.append(print_token(s));
    d["cramer"] = cram;
    if (out.kind == SolveOutcome<Sym>::Kind::unique_signed) {
        d["outcome"] = "unique_signed";
        py::list x;
        for (const auto& s : out.x) x.append(print_token(s));
        d["x"] = x;
    } else {
        d["outcome"] = out.kind == SolveOutcome<Sym>::Kind::det_not_invertible
                           ? "det_not_invertible"
                           : "cramer_not_signed";
    }
    return d;
}

py::object solve_tropical_py(const std::string& a_text, const std::string& b_text) {
    Matrix<MaxPlus> a = rmax(a_text);
    Matrix<MaxPlus> bm = rmax(b_text);
    Vec b = bm.cols() == 1 ? bm.col(0) : bm.row(0);
    auto res = tropical_cramer(a, b);
    py::dict d;
    d["ok"] = res.ok;
    if (res.ok) {
        py::list x;
        for (const auto& s : res.x) x.append(print_token(s));
        d["x"] = x;
    } else {
        d["reason"] = res.failure;
    }
    return d;
}

py::object gm_witness_py(const std::string& text, const std::string& axis) {
    Matrix<MaxPlus> a = rmax(text);
    std::vector<Vec> family;
    if (axis == "rows")
        for (int i = 0; i < a.rows(); ++i) family.push_back(a.row(i));
    else
        for (int j = 0; j < a.cols(); ++j) family.push_back(a.col(j));
    auto w = gm_witness(family);
    if (!w) return py::none();
    py::dict d;
    py::list si, sj, lam;
    for (int i : w->set_i) si.append(i);
    for (int j : w->set_j) sj.append(j);
    for (const auto& l : w->lambda) lam.append(print_token(l));
    d["I"] = si;
    d["J"] = sj;
    d["lambda"] = lam;
    return d;
}

std::string fixture_py(const std::string& name) { return print_matrix(fixture(name)); }

py::dict identity_check_py(const std::string& kind, int n) {
    py::dict d;
    if (kind == "det_mult") {
        auto id = det_mult_identity(n);
        d["weak"] = weak_transfer_check(id.lhs, id.rhs);
        auto sp = det_mult_split(n);
        d["residual"] =
            strong_transfer_residual(sp.p_plus, sp.p_minus, sp.q_plus, sp.q_minus).str();
    } else if (kind == "cayley_hamilton") {
        bool all = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto id = cayley_hamilton_identity(n, i, j);
                all = all && weak_transfer_check(id.lhs, id.rhs);
            }
        d["weak"] = all;
    } else {
        throw Error("unknown identity kind for the python surface: " + kind);
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_tropica, m) {
    m.doc() = "tropical linear algebra toolkit (text-format surface)";

    m.def("rank_report", &rank_report_py, py::arg("matrix"), py::arg("slow") = false,
          "all rank functions of an R_max matrix in the text format");
    m.def("bideterminant", &bideterminant_py, py::arg("matrix"));
    m.def("permanent", &permanent_py, py::arg("matrix"));
    m.def("det", &det_py, py::arg("matrix"), py::arg("semiring"));
    m.def("is_trop_singular",
          [](const std::string& t) { return is_trop_singular(rmax(t)); });
    m.def("is_sign_singular",
          [](const std::string& t) { return is_sign_singular(rmax(t)); });
    m.def("solve_sym", &solve_sym_py, py::arg("a"), py::arg("b"));
    m.def("solve_tropical", &solve_tropical_py, py::arg("a"), py::arg("b"));
    m.def("gm_witness", &gm_witness_py, py::arg("matrix"), py::arg("axis") = "cols");
    m.def("fixture", &fixture_py, py::arg("name"));
    m.def("identity_check", &identity_check_py, py::arg("kind"), py::arg("n"));

    m.def("sym_add", [](const std::string& a, const std::string& b) {
        return print_token(parse_sym_token(a) + parse_sym_token(b));
    });
    m.def("sym_mul", [](const std::string& a, const std::string& b) {
        return print_token(parse_sym_token(a) * parse_sym_token(b));
    });
    m.def("sym_balance", [](const std::string& a, const std::string& b) {
        return balance(parse_sym_token(a), parse_sym_token(b));
    });
    m.def("ext_add", [](const std::string& a, const std::string& b) {
        return print_token(parse_ext_token(a) + parse_ext_token(b));
    });
    m.def("ext_mul", [](const std::string& a, const std::string& b) {
        return print_token(parse_ext_token(a) * parse_ext_token(b));
    });

    py::register_exception<Error>(m, "TropicaError");
}
