#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dwr/blocks.hpp"
#include "dwr/complex_matrix.hpp"
#include "dwr/errors.hpp"

namespace dwr {

// Matrix file format: {"rows": r, "cols": c, "data": [[re, im], ...]} with data
// row-major, or the shorthand of a bare array of rows of [re, im] pairs.

namespace detail {

inline Complex parse_entry(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("matrix entry must be a [re, im] pair of numbers");
    return {j[0].get<double>(), j[1].get<double>()};
}

} // namespace detail

inline ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    try {
        if (j.is_object()) {
            if (!j.contains("rows") || !j.contains("cols") || !j.contains("data"))
                throw ParseError("matrix object needs rows, cols, data");
            if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
                throw ParseError("rows and cols must be integers");
            const auto rows = j["rows"].get<long long>();
            const auto cols = j["cols"].get<long long>();
            if (rows <= 0 || cols <= 0) throw ParseError("rows and cols must be positive");
            const auto& data = j["data"];
            if (!data.is_array() ||
                data.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
                throw ParseError("data length must equal rows*cols");
            std::vector<Complex> entries;
            entries.reserve(data.size());
            for (const auto& e : data) entries.push_back(detail::parse_entry(e));
            return ComplexMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                                 std::move(entries));
        }
        if (j.is_array()) {
            if (j.empty()) throw ParseError("empty matrix");
            const std::size_t rows = j.size();
            std::size_t cols = 0;
            std::vector<Complex> entries;
            for (const auto& row : j) {
                if (!row.is_array() || row.empty()) throw ParseError("matrix rows must be arrays");
                if (cols == 0)
                    cols = row.size();
                else if (row.size() != cols)
                    throw ParseError("ragged matrix rows");
                for (const auto& e : row) entries.push_back(detail::parse_entry(e));
            }
            return ComplexMatrix(rows, cols, std::move(entries));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed matrix json: ") + e.what());
    }
    throw ParseError("matrix must be an object or an array of rows");
}

inline nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json data = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            data.push_back({m(i, j).real(), m(i, j).imag()});
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid json in ") + path + ": " + e.what());
    }
}

inline ComplexMatrix load_matrix_file(const std::string& path) {
    return matrix_from_json(load_json_file(path));
}

// BlockSpec format: {"layout": name, "blocks": {"A": matrix, "B": matrix, "C": matrix}}
// with only the blocks the layout needs.

inline BlockLayout layout_from_name(const std::string& name) {
    if (name == "diag") return BlockLayout::diag;
    if (name == "antidiag") return BlockLayout::antidiag;
    if (name == "upper_left") return BlockLayout::upper_left;
    if (name == "nilpotent") return BlockLayout::nilpotent;
    if (name == "triangular") return BlockLayout::triangular;
    throw LayoutError("unknown layout: " + name);
}

inline BlockSpec block_spec_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("layout") || !j["layout"].is_string())
        throw ParseError("block spec needs a layout string");
    BlockSpec spec;
    spec.layout = layout_from_name(j["layout"].get<std::string>());
    if (!j.contains("blocks") || !j["blocks"].is_object())
        throw ParseError("block spec needs a blocks object");
    const auto& blocks = j["blocks"];
    auto get = [&](const char* name, bool required) -> ComplexMatrix {
        if (!blocks.contains(name)) {
            if (required) throw ParseError(std::string("layout requires block ") + name);
            return {};
        }
        return matrix_from_json(blocks[name]);
    };
    switch (spec.layout) {
        case BlockLayout::diag:
        case BlockLayout::antidiag:
            spec.a = get("A", true);
            spec.b = get("B", true);
            break;
        case BlockLayout::upper_left:
        case BlockLayout::nilpotent:
            spec.b = get("B", true);
            spec.a = get("A", false);
            break;
        case BlockLayout::triangular:
            spec.a = get("A", true);
            spec.b = get("B", true);
            spec.c = get("C", true);
            break;
    }
    return spec;
}

inline BlockSpec load_block_spec_file(const std::string& path) {
    return block_spec_from_json(load_json_file(path));
}

} // namespace dwr
