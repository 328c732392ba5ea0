#pragma once

// File formats: crossing lists as JSON, planar-diagram codes as text, and
// the 2x2 matrix file for custom structure checks. Parsers and serializers
// round-trip each other.

#include <array>
#include <cctype>
#include <string>
#include <string_view>

#include <json.hpp>

#include "alexg/diagram.hpp"
#include "alexg/matrix.hpp"

namespace alexg {

// {"crossings":[{"sign":1,"over_in":1,"under_in":4}, ...]}
inline UpwardDiagram crossings_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("crossings json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("crossings") || !j["crossings"].is_array())
        throw ParseError("crossings json: expected an object with a \"crossings\" array");
    std::vector<Crossing> cs;
    for (const auto& item : j["crossings"]) {
        if (!item.is_object() || !item.contains("sign") || !item.contains("over_in") ||
            !item.contains("under_in") || !item["sign"].is_number_integer() ||
            !item["over_in"].is_number_integer() || !item["under_in"].is_number_integer())
            throw ParseError("crossings json: each crossing needs integer "
                             "sign/over_in/under_in");
        cs.push_back({item["sign"].get<int>(), item["over_in"].get<int>(),
                      item["under_in"].get<int>()});
    }
    try {
        return UpwardDiagram::validate(std::move(cs));
    } catch (const LabelingError& e) {
        throw ParseError(std::string("crossings json: ") + e.what());
    }
}

inline std::string crossings_to_json(const UpwardDiagram& d) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Crossing& c : d.crossings())
        arr.push_back({{"sign", c.sign}, {"over_in", c.over_in}, {"under_in", c.under_in}});
    nlohmann::json j;
    j["crossings"] = arr;
    return j.dump();
}

// whitespace-separated tokens X[a,b,c,d]
inline PDCode pd_from_text(std::string_view text) {
    PDCode pd;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        if (i >= text.size() || text[i] != c)
            throw ParseError("pd text: expected '" + std::string(1, c) + "' at offset " +
                             std::to_string(i));
        ++i;
    };
    auto parse_int = [&]() -> int {
        skip_ws();
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            digits += text[i++];
        if (digits.empty())
            throw ParseError("pd text: expected edge label at offset " + std::to_string(i));
        return std::stoi(digits);
    };
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != 'X' && text[i] != 'x')
            throw ParseError("pd text: expected 'X' at offset " + std::to_string(i));
        ++i;
        skip_ws();
        const char open = i < text.size() ? text[i] : '\0';
        if (open != '[' && open != '(')
            throw ParseError("pd text: expected '[' or '(' at offset " + std::to_string(i));
        ++i;
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) {
            t[static_cast<std::size_t>(k)] = parse_int();
            skip_ws();
            if (k < 3) expect(',');
        }
        skip_ws();
        if (i >= text.size() || (text[i] != ']' && text[i] != ')'))
            throw ParseError("pd text: crossing with arity != 4 at offset " +
                             std::to_string(i));
        ++i;
        pd.tuples.push_back(t);
    }
    return pd;
}

inline std::string pd_to_text(const PDCode& pd) {
    std::string out;
    for (const auto& [a, b, c, d] : pd.tuples) {
        if (!out.empty()) out += " ";
        out += "X[" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + "," + std::to_string(d) + "]";
    }
    return out;
}

// {"m": [["T", "0"], ["1 - T^2", "T"]]}
inline Matrix<LaurentPoly> matrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("matrix json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("m") || !j["m"].is_array())
        throw ParseError("matrix json: expected an object with an \"m\" array");
    const auto& rows = j["m"];
    const std::size_t n = rows.size();
    if (n == 0) throw ParseError("matrix json: empty matrix");
    Matrix<LaurentPoly> m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n)
            throw ParseError("matrix json: matrix must be square");
        for (std::size_t c = 0; c < n; ++c) {
            if (!rows[r][c].is_string())
                throw ParseError("matrix json: entries are polynomial strings");
            m(r, c) = parse_poly(rows[r][c].get<std::string>());
        }
    }
    return m;
}

} // namespace alexg
