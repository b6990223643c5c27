#include "tropica/io.hpp"

#include <sstream>

#include <json.hpp>

namespace tropica {

std::string to_string(SemiringTag tag) {
    switch (tag) {
        case SemiringTag::rmax: return "rmax";
        case SemiringTag::smax: return "smax";
        default: return "te";
    }
}

SemiringTag semiring_from_string(std::string_view s) {
    if (s == "rmax") return SemiringTag::rmax;
    if (s == "smax") return SemiringTag::smax;
    if (s == "te") return SemiringTag::te;
    throw SemiringMismatch("unknown semiring '" + std::string(s) + "'");
}

std::string print_token(const MaxPlus& x) {
    return x.is_bottom() ? "-inf" : x.value().str();
}

std::string print_token(const Sym& x) {
    switch (x.tag()) {
        case SignClass::zero: return "-inf";
        case SignClass::pos: return "+" + x.value().str();
        case SignClass::neg: return "-" + x.value().str();
        default: return x.value().str() + "*";
    }
}

std::string print_token(const Ext& x) {
    switch (x.tag()) {
        case ExtClass::zero: return "-inf";
        case ExtClass::real: return x.value().str();
        default: return x.value().str() + "v";
    }
}

namespace {

[[noreturn]] void bad_token(std::string_view tok, const char* semiring, int line, int col) {
    throw SemiringMismatch("token '" + std::string(tok) + "' is not valid under " + semiring +
                           " (line " + std::to_string(line) + ", column " + std::to_string(col) +
                           ")");
}

}  // namespace

MaxPlus parse_maxplus_token(std::string_view tok, int line, int col) {
    if (tok == "-inf") return MaxPlus::bottom();
    if (auto r = Rational::parse(tok)) return MaxPlus(*r);
    bad_token(tok, "rmax", line, col);
}

Sym parse_sym_token(std::string_view tok, int line, int col) {
    if (tok == "-inf") return Sym::zero();
    if (!tok.empty() && tok.back() == '*') {
        if (auto r = Rational::parse(tok.substr(0, tok.size() - 1))) return Sym::bal(*r);
        bad_token(tok, "smax", line, col);
    }
    if (tok.size() > 1 && tok[0] == '+') {
        if (auto r = Rational::parse(tok.substr(1))) return Sym::pos(*r);
        bad_token(tok, "smax", line, col);
    }
    if (tok.size() > 1 && tok[0] == '-') {
        if (auto r = Rational::parse(tok.substr(1))) return Sym::neg(*r);
        bad_token(tok, "smax", line, col);
    }
    // Bare rationals embed as sign-positive elements.
    if (auto r = Rational::parse(tok)) return Sym::pos(*r);
    bad_token(tok, "smax", line, col);
}

Ext parse_ext_token(std::string_view tok, int line, int col) {
    if (tok == "-inf") return Ext::zero();
    if (!tok.empty() && tok.back() == 'v') {
        if (auto r = Rational::parse(tok.substr(0, tok.size() - 1))) return Ext::ghost(*r);
        bad_token(tok, "te", line, col);
    }
    if (auto r = Rational::parse(tok)) return Ext::real(*r);
    bad_token(tok, "te", line, col);
}

namespace {

struct RawCell {
    std::string tok;
    int line;
    int col;
};

std::vector<std::vector<RawCell>> tokenize_rows(std::string_view text) {
    std::vector<std::vector<RawCell>> rows;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line_no;
        std::vector<RawCell> cells;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            if (i > start)
                cells.push_back({std::string(line.substr(start, i - start)), line_no,
                                 static_cast<int>(start + 1)});
        }
        if (!cells.empty()) rows.push_back(std::move(cells));
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return rows;
}

template <class S, class ParseTok>
Matrix<S> parse_text_matrix(std::string_view text, ParseTok&& parse_tok) {
    auto rows = tokenize_rows(text);
    if (rows.empty()) throw ParseError("empty matrix", 1, 1);
    std::size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols)
            throw ParseError("ragged row: expected " + std::to_string(cols) + " entries, got " +
                                 std::to_string(r.size()),
                             r[0].line, r[0].col);
    Matrix<S> m(static_cast<int>(rows.size()), static_cast<int>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(static_cast<int>(i), static_cast<int>(j)) =
                parse_tok(rows[i][j].tok, rows[i][j].line, rows[i][j].col);
    return m;
}

template <class S, class ParseTok>
Matrix<S> parse_json_matrix(std::string_view text, SemiringTag tag, ParseTok&& parse_tok) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
        !doc.contains("entries"))
        throw ParseError("JSON matrix needs rows, cols and entries", 1, 1);
    if (doc.contains("semiring") && doc["semiring"].get<std::string>() != to_string(tag))
        throw SemiringMismatch("JSON matrix is tagged '" + doc["semiring"].get<std::string>() +
                               "', expected '" + to_string(tag) + "'");
    int rows = doc["rows"].get<int>();
    int cols = doc["cols"].get<int>();
    const auto& entries = doc["entries"];
    if (rows < 0 || cols < 0 || !entries.is_array() ||
        static_cast<int>(entries.size()) != rows * cols)
        throw ParseError("JSON entries length does not match rows*cols", 1, 1);
    Matrix<S> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = parse_tok(entries[i * cols + j].get<std::string>(), 1, i * cols + j + 1);
    return m;
}

bool looks_like_json(std::string_view text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}

template <class S, class ParseTok>
Matrix<S> parse_dispatch(std::string_view text, SemiringTag tag, ParseTok&& parse_tok) {
    if (looks_like_json(text))
        return parse_json_matrix<S>(text, tag, std::forward<ParseTok>(parse_tok));
    return parse_text_matrix<S>(text, std::forward<ParseTok>(parse_tok));
}

}  // namespace

Matrix<MaxPlus> parse_rmax_matrix(std::string_view text) {
    return parse_dispatch<MaxPlus>(text, SemiringTag::rmax,
                                   [](const std::string& t, int l, int c) {
                                       return parse_maxplus_token(t, l, c);
                                   });
}

Matrix<Sym> parse_smax_matrix(std::string_view text) {
    return parse_dispatch<Sym>(text, SemiringTag::smax, [](const std::string& t, int l, int c) {
        return parse_sym_token(t, l, c);
    });
}

Matrix<Ext> parse_te_matrix(std::string_view text) {
    return parse_dispatch<Ext>(text, SemiringTag::te, [](const std::string& t, int l, int c) {
        return parse_ext_token(t, l, c);
    });
}

AnyMatrix parse_matrix(std::string_view text, SemiringTag tag) {
    switch (tag) {
        case SemiringTag::rmax: return parse_rmax_matrix(text);
        case SemiringTag::smax: return parse_smax_matrix(text);
        default: return parse_te_matrix(text);
    }
}

template <class S>
std::string print_matrix_json(const Matrix<S>& m, SemiringTag tag) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    doc["semiring"] = to_string(tag);
    auto entries = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) entries.push_back(print_token(m(i, j)));
    doc["entries"] = entries;
    return doc.dump();
}

template std::string print_matrix_json(const Matrix<MaxPlus>&, SemiringTag);
template std::string print_matrix_json(const Matrix<Sym>&, SemiringTag);
template std::string print_matrix_json(const Matrix<Ext>&, SemiringTag);

}  // namespace tropica
