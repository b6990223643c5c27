#pragma once

#include <random>

#include "tropica/ext.hpp"
#include "tropica/matrix.hpp"
#include "tropica/maxplus.hpp"
#include "tropica/sym.hpp"

// Seeded generators for the property suites. Counts, densities and seeds for
// the acceptance suite live in acceptance/config.hpp.
namespace tgen {

using tropica::Ext;
using tropica::Matrix;
using tropica::MaxPlus;
using tropica::Rational;
using tropica::Sym;

inline MaxPlus rand_maxplus(std::mt19937_64& rng, int lo = -3, int hi = 3,
                            int bottom_percent = 20) {
    std::uniform_int_distribution<int> pct(0, 99);
    if (pct(rng) < bottom_percent) return MaxPlus::bottom();
    std::uniform_int_distribution<int> val(lo, hi);
    return MaxPlus(Rational(val(rng)));
}

inline Sym rand_sym(std::mt19937_64& rng, int lo = -3, int hi = 3, int zero_percent = 10) {
    std::uniform_int_distribution<int> pct(0, 99);
    if (pct(rng) < zero_percent) return Sym::zero();
    std::uniform_int_distribution<int> val(lo, hi);
    std::uniform_int_distribution<int> tag(0, 2);
    Rational t(val(rng));
    switch (tag(rng)) {
        case 0: return Sym::pos(t);
        case 1: return Sym::neg(t);
        default: return Sym::bal(t);
    }
}

inline Sym rand_signed_sym(std::mt19937_64& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> val(lo, hi);
    std::uniform_int_distribution<int> tag(0, 1);
    Rational t(val(rng));
    return tag(rng) ? Sym::pos(t) : Sym::neg(t);
}

// Mostly signed entries: the ensemble for Cramer systems conditioned on an
// invertible determinant (balanced-heavy matrices almost never qualify).
inline Sym rand_mostly_signed_sym(std::mt19937_64& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> pct(0, 99);
    int p = pct(rng);
    if (p < 10) return Sym::zero();
    if (p < 20) {
        std::uniform_int_distribution<int> val(lo, hi);
        return Sym::bal(Rational(val(rng)));
    }
    return rand_signed_sym(rng, lo, hi);
}

inline Matrix<Sym> rand_mostly_signed_sym_matrix(std::mt19937_64& rng, int rows, int cols,
                                                 int lo = -3, int hi = 3) {
    Matrix<Sym> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rand_mostly_signed_sym(rng, lo, hi);
    return m;
}

inline Ext rand_ext(std::mt19937_64& rng, int lo = -3, int hi = 3, int zero_percent = 10) {
    std::uniform_int_distribution<int> pct(0, 99);
    if (pct(rng) < zero_percent) return Ext::zero();
    std::uniform_int_distribution<int> val(lo, hi);
    std::uniform_int_distribution<int> tag(0, 1);
    Rational t(val(rng));
    return tag(rng) ? Ext::real(t) : Ext::ghost(t);
}

inline Matrix<MaxPlus> rand_rmax_matrix(std::mt19937_64& rng, int rows, int cols, int lo = -3,
                                        int hi = 3, int bottom_percent = 20) {
    Matrix<MaxPlus> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rand_maxplus(rng, lo, hi, bottom_percent);
    return m;
}

inline Matrix<Sym> rand_sym_matrix(std::mt19937_64& rng, int rows, int cols, int lo = -3,
                                   int hi = 3, int zero_percent = 10) {
    Matrix<Sym> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rand_sym(rng, lo, hi, zero_percent);
    return m;
}

inline Matrix<Ext> rand_ext_matrix(std::mt19937_64& rng, int rows, int cols, int lo = -3,
                                   int hi = 3, int zero_percent = 10) {
    Matrix<Ext> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rand_ext(rng, lo, hi, zero_percent);
    return m;
}

}  // namespace tgen
