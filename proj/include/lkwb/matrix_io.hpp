#ifndef LKWB_MATRIX_IO_HPP
#define LKWB_MATRIX_IO_HPP

#include <sstream>
#include <string>

#include <json.hpp>

#include "matrix.hpp"
#include "scalar.hpp"

namespace lkwb {

namespace detail {

template <class F>
ModulusPtr find_modulus(const Matrix<F>& m, ModulusPtr given) {
    if constexpr (std::is_same_v<F, AlgebraicNumber>) {
        if (given) return given;
        for (auto& x : m.data())
            if (x.modulus()) return x.modulus();
        throw Error(ErrorKind::InvalidConfig, "algebraic matrix with no modulus to record");
    } else {
        return nullptr;
    }
}

}  // namespace detail

/// Header `rows cols field-tag`, a `mod:` line for algebraic entries, then one
/// entry per line, row-major.
template <class F>
std::string write_matrix_text(const Matrix<F>& m, ModulusPtr mod = nullptr) {
    std::ostringstream os;
    os << m.rows() << ' ' << m.cols() << ' ' << to_string(field_tag_of<F>()) << '\n';
    if constexpr (std::is_same_v<F, AlgebraicNumber>) os << detail::find_modulus(m, mod)->header() << '\n';
    for (auto& x : m.data()) os << x.to_string() << '\n';
    return os.str();
}

template <class F>
Matrix<F> read_matrix_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw Error(ErrorKind::ParseError, "missing matrix header");
    std::istringstream hs(line);
    std::size_t rows = 0, cols = 0;
    std::string tag;
    if (!(hs >> rows >> cols >> tag)) throw Error(ErrorKind::ParseError, "malformed matrix header '" + line + "'");
    if (parse_field_tag(tag) != field_tag_of<F>())
        throw Error(ErrorKind::FieldMismatch, "matrix holds " + tag + " entries");
    ModulusPtr mod;
    if constexpr (std::is_same_v<F, AlgebraicNumber>) {
        if (!std::getline(is, line)) throw Error(ErrorKind::ParseError, "missing modulus line");
        mod = parse_modulus(line);
    }
    std::vector<F> data;
    data.reserve(rows * cols);
    while (data.size() < rows * cols && std::getline(is, line)) data.push_back(parse_as<F>(line, mod));
    if (data.size() != rows * cols) throw Error(ErrorKind::ParseError, "matrix text ends early");
    return Matrix<F>(rows, cols, std::move(data));
}

template <class F>
nlohmann::ordered_json matrix_to_json(const Matrix<F>& m, ModulusPtr mod = nullptr) {
    nlohmann::ordered_json j;
    j["field"] = to_string(field_tag_of<F>());
    if constexpr (std::is_same_v<F, AlgebraicNumber>)
        j["modulus"] = detail::find_modulus(m, mod)->header();
    else
        j["modulus"] = nullptr;
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    return j;
}

template <class F>
Matrix<F> matrix_from_json(const nlohmann::ordered_json& j) {
    try {
        if (parse_field_tag(j.at("field").get<std::string>()) != field_tag_of<F>())
            throw Error(ErrorKind::FieldMismatch, "matrix JSON holds a different field");
        ModulusPtr mod;
        if (!j.at("modulus").is_null()) mod = parse_modulus(j.at("modulus").get<std::string>());
        auto& rows = j.at("matrix");
        const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
        std::vector<F> data;
        for (auto& row : rows) {
            if (row.size() != c) throw Error(ErrorKind::ParseError, "ragged matrix JSON");
            for (auto& x : row) data.push_back(parse_as<F>(x.get<std::string>(), mod));
        }
        return Matrix<F>(r, c, std::move(data));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("matrix JSON: ") + e.what());
    }
}

}  // namespace lkwb

#endif
