#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tropica/errors.hpp"
#include "tropica/ext.hpp"
#include "tropica/matrix.hpp"
#include "tropica/maxplus.hpp"
#include "tropica/sym.hpp"

namespace tropica {

enum class SemiringTag { rmax, smax, te };

std::string to_string(SemiringTag tag);
SemiringTag semiring_from_string(std::string_view s);

// Scalar token grammar, bit-exact round trips:
//   -inf            bottom / zero element (all semirings)
//   3/2             finite rational (R_max), Real (T_e)
//   +3/2 -3/2 3/2*  Pos / Neg / Bal (S_max)
//   3/2v            Ghost (T_e)
std::string print_token(const MaxPlus& x);
std::string print_token(const Sym& x);
std::string print_token(const Ext& x);

MaxPlus parse_maxplus_token(std::string_view tok, int line = 0, int col = 0);
Sym parse_sym_token(std::string_view tok, int line = 0, int col = 0);
Ext parse_ext_token(std::string_view tok, int line = 0, int col = 0);

using AnyMatrix = std::variant<Matrix<MaxPlus>, Matrix<Sym>, Matrix<Ext>>;

/// Parse the matrix text format (one row per line, whitespace-separated
/// tokens) or the JSON alternative ({"rows":..,"cols":..,"semiring":..,
/// "entries":[..]}). Ragged rows are rejected.
AnyMatrix parse_matrix(std::string_view text, SemiringTag tag);
Matrix<MaxPlus> parse_rmax_matrix(std::string_view text);
Matrix<Sym> parse_smax_matrix(std::string_view text);
Matrix<Ext> parse_te_matrix(std::string_view text);

template <class S>
std::string print_matrix(const Matrix<S>& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += print_token(m(i, j));
        }
        out += '\n';
    }
    return out;
}

template <class S>
std::string print_matrix_json(const Matrix<S>& m, SemiringTag tag);

}  // namespace tropica
