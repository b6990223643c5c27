#include "tropica/fixtures.hpp"

#include "tropica/errors.hpp"

namespace tropica {

namespace {

// 0 stands for the unit, '.' rows below use bottom; small helper building a
// matrix from a pattern of finite values (INT_MIN = bottom).
constexpr long B = -1000000;  // bottom marker in the tables below

Matrix<MaxPlus> from_table(int rows, int cols, const long* t) {
    Matrix<MaxPlus> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            long v = t[i * cols + j];
            m(i, j) = v == B ? MaxPlus::bottom() : MaxPlus(Rational(v));
        }
    return m;
}

Matrix<MaxPlus> d_matrix(int n) {
    Matrix<MaxPlus> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = i == j ? MaxPlus(Rational(-1)) : MaxPlus::one();
    return m;
}

Matrix<MaxPlus> mrw_matrix(int n) {
    Matrix<MaxPlus> m(n + 3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = i == j ? MaxPlus::one() : MaxPlus::bottom();
    for (int k = 1; k <= n; ++k) {
        m(2 + k, 0) = MaxPlus(Rational(k));
        m(2 + k, 1) = MaxPlus::one();
        m(2 + k, 2) = MaxPlus(Rational(-k));
    }
    return m;
}

Matrix<MaxPlus> f_matrix() {
    static const long t[6 * 7] = {
        B, 0, 0, 0, 0, B, B,  //
        0, B, B, B, 0, B, B,  //
        0, B, 0, 0, B, 0, B,  //
        B, 0, B, B, B, 0, B,  //
        0, 0, B, 0, B, B, 0,  //
        B, B, 0, B, B, B, 0,  //
    };
    return from_table(6, 7, t);
}

Matrix<MaxPlus> g_matrix() {
    Matrix<MaxPlus> f = f_matrix();
    Matrix<MaxPlus> ft = f.transpose();
    Matrix<MaxPlus> g(13, 13);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 7; ++j) g(i, j) = f(i, j);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 6; ++j) g(6 + i, 7 + j) = ft(i, j);
    return g;
}

}  // namespace

Matrix<MaxPlus> fixture(const std::string& name) {
    if (name == "X") {
        static const long t[4 * 3] = {B, 0, B, B, B, 0, 0, B, 0, 0, 0, B};
        return from_table(4, 3, t);
    }
    if (name == "Y") {
        static const long t[5 * 3] = {0, B, B, B, 0, B, B, B, 0, 0, B, 0, 0, 0, B};
        return from_table(5, 3, t);
    }
    if (name == "F") return f_matrix();
    if (name == "G") return g_matrix();
    if (name.size() == 2 && name[0] == 'D' && name[1] >= '3' && name[1] <= '9')
        return d_matrix(name[1] - '0');
    if (name.size() == 4 && name.rfind("mrw", 0) == 0 && name[3] >= '3' && name[3] <= '8')
        return mrw_matrix(name[3] - '0');
    if (name == "exd1d2") {
        Matrix<MaxPlus> m(3, 4);
        for (int i = 1; i <= 4; ++i) {
            m(0, i - 1) = MaxPlus(Rational(i));
            m(1, i - 1) = MaxPlus::one();
            m(2, i - 1) = MaxPlus(Rational(-i));
        }
        return m;
    }
    if (name == "sumA") {
        static const long t[4 * 3] = {B, 0, B, B, B, 0, B, B, 0, B, 0, B};
        return from_table(4, 3, t);
    }
    if (name == "sumB") {
        static const long t[4 * 3] = {B, B, B, B, B, B, 0, B, B, 0, B, B};
        return from_table(4, 3, t);
    }
    if (name == "prodA") {
        static const long t[4 * 4] = {0, B, B, B, B, 0, B, B, B, 0, 0, B, 0, B, 0, B};
        return from_table(4, 4, t);
    }
    if (name == "prodB") {
        static const long t[4 * 3] = {B, 0, B, B, B, 0, 0, B, B, 0, B, B};
        return from_table(4, 3, t);
    }
    if (name == "unionA") {
        static const long t[3 * 4] = {0, B, 0, B, B, 0, B, 0, B, B, 0, 0};
        return from_table(3, 4, t);
    }
    if (name == "unionB") {
        static const long t[3 * 4] = {B, B, 0, 0, B, 0, B, 0, 0, B, 0, B};
        return from_table(3, 4, t);
    }
    throw UnknownFixture("no fixture named '" + name + "'");
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> names = {"X", "Y", "F", "G", "exd1d2", "sumA", "sumB",
                                      "prodA", "prodB", "unionA", "unionB"};
    for (int n = 3; n <= 9; ++n) names.push_back("D" + std::to_string(n));
    for (int n = 3; n <= 8; ++n) names.push_back("mrw" + std::to_string(n));
    return names;
}

}  // namespace tropica
