#pragma once

// Text formats shared by the CLI and the tests: index lists, generator
// matrix CSV, and code record documents.

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "codes.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "orbits.hpp"
#include "ring.hpp"

namespace multicyclic {

namespace detail {

inline std::string strip_spaces(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    }
    return out;
}

inline std::uint32_t parse_uint(std::string_view token) {
    if (token.empty()) throw Error(Errc::parse_error, "empty number");
    std::uint64_t value = 0;
    for (char c : token) {
        if (c < '0' || c > '9') throw Error(Errc::parse_error, "not a number: '" + std::string(token) + "'");
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (value > 0xffffffffULL) throw Error(Errc::parse_error, "number too large: " + std::string(token));
    }
    return static_cast<std::uint32_t>(value);
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == sep) {
            out.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace detail

/// "2,2,2" -> {2, 2, 2}; whitespace is ignored.
inline std::vector<std::uint32_t> parse_uint_list(std::string_view text) {
    const std::string compact = detail::strip_spaces(text);
    if (compact.empty()) return {};
    std::vector<std::uint32_t> out;
    for (auto token : detail::split(compact, ',')) out.push_back(detail::parse_uint(token));
    return out;
}

/// "(0,0,0);(1,0,0)" -> {{0,0,0}, {1,0,0}}; whitespace-insensitive, empty text is the empty list.
inline std::vector<MultiIndex> parse_index_list(std::string_view text) {
    const std::string compact = detail::strip_spaces(text);
    std::vector<MultiIndex> out;
    if (compact.empty()) return out;
    for (auto token : detail::split(compact, ';')) {
        if (token.empty()) continue;
        if (token.size() < 2 || token.front() != '(' || token.back() != ')')
            throw Error(Errc::parse_error, "expected a parenthesized tuple, got '" + std::string(token) + "'");
        const auto inner = token.substr(1, token.size() - 2);
        MultiIndex idx;
        for (auto part : detail::split(inner, ',')) idx.push_back(detail::parse_uint(part));
        out.push_back(std::move(idx));
    }
    return out;
}

inline std::string format_index_list(const std::vector<MultiIndex>& indices) {
    std::string out;
    for (const auto& idx : indices) {
        if (!out.empty()) out += ';';
        out += format_index(idx);
    }
    return out;
}

/// Header of monomial names in monomial order, then one line of integers per row.
inline std::string generator_csv(const Ring& ring, const GfMatrix& G) {
    std::ostringstream out;
    const auto order = ring.monomial_order();
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        if (pos > 0) out << ',';
        out << ring.monomial_name(ring.digits(order[pos]));
    }
    out << '\n';
    for (std::size_t r = 0; r < G.rows(); ++r) {
        for (std::size_t c = 0; c < G.cols(); ++c) {
            if (c > 0) out << ',';
            out << G.at(r, c).value;
        }
        out << '\n';
    }
    return out.str();
}

struct ParsedCsv {
    std::vector<std::string> header;
    GfMatrix matrix;
};

/// Reads generator_csv output back. Entries are checked against the field order.
inline ParsedCsv parse_generator_csv(std::string_view text, const Field& F) {
    ParsedCsv out;
    std::vector<std::string_view> lines;
    for (auto line : detail::split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) throw Error(Errc::parse_error, "missing header row");
    for (auto name : detail::split(lines.front(), ',')) out.header.emplace_back(name);
    out.matrix = GfMatrix(0, out.header.size());
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<GfElement> row;
        for (auto token : detail::split(lines[i], ',')) row.push_back(F.element(detail::parse_uint(token)));
        if (row.size() != out.header.size())
            throw Error(Errc::parse_error, "row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                               " entries, header has " + std::to_string(out.header.size()));
        out.matrix.append_row(row);
    }
    return out;
}

inline nlohmann::ordered_json field_json(const Field& F) {
    nlohmann::ordered_json out;
    out["p"] = F.characteristic();
    out["m"] = F.degree();
    out["q"] = F.order();
    out["modulus"] = F.modulus();
    return out;
}

inline nlohmann::ordered_json matrix_json(const GfMatrix& G) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < G.rows(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (auto x : G.row(r)) row.push_back(x.value);
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Structured document with a fixed key order.
inline nlohmann::ordered_json record_json(const Ring& ring, const CodeRecord& rec) {
    nlohmann::ordered_json out;
    out["field"] = field_json(ring.field());
    out["lengths"] = ring.lengths();
    out["n"] = rec.n;
    out["K"] = rec.K;
    out["d"] = rec.d ? nlohmann::ordered_json(*rec.d) : nlohmann::ordered_json(nullptr);
    out["d_exact"] = rec.d.has_value();
    out["codewords_examined"] = rec.codewords_examined;
    out["defining_set"] = format_index_list(rec.defining_set.indices());
    out["k_profile"] = rec.k_profile;
    out["basis_kind"] = basis_kind_name(rec.basis_kind);
    out["product_bound"] = {{"value", rec.product_bound.value},
                            {"applicable", rec.product_bound.applicable},
                            {"holds", rec.product_bound_holds()}};
    out["singleton_bound"] = rec.singleton_bound;
    out["idempotent"] = ring.to_string(rec.idempotent);
    auto columns = nlohmann::ordered_json::array();
    for (std::size_t flat : ring.monomial_order()) columns.push_back(ring.monomial_name(ring.digits(flat)));
    out["columns"] = std::move(columns);
    out["generator"] = matrix_json(rec.generator);
    return out;
}

inline std::string record_text(const Ring& ring, const CodeRecord& rec) {
    std::ostringstream out;
    out << "code [" << rec.n << ", " << rec.K << ", " << (rec.d ? std::to_string(*rec.d) : "?") << "]_"
        << ring.field().order() << '\n';
    out << "lengths: ";
    for (std::size_t t = 0; t < ring.rank(); ++t) out << (t ? "," : "") << ring.lengths()[t];
    out << '\n';
    out << "defining set: " << format_index_list(rec.defining_set.indices()) << '\n';
    if (rec.d) {
        out << "d: " << *rec.d << " (exact, " << rec.codewords_examined << " nonzero codewords)\n";
    } else if (rec.K == 0) {
        out << "d: undefined (zero code)\n";
    } else {
        out << "d: not computed (beyond budget)\n";
    }
    out << "k profile: ";
    for (std::size_t t = 0; t < rec.k_profile.size(); ++t) out << (t ? "," : "") << rec.k_profile[t];
    out << '\n';
    out << "basis: " << basis_kind_name(rec.basis_kind) << '\n';
    out << "product bound: " << rec.product_bound.value
        << (rec.product_bound.applicable ? " (applicable)" : " (not applicable)") << '\n';
    out << "singleton bound: " << rec.singleton_bound << '\n';
    out << "e = " << ring.to_string(rec.idempotent) << '\n';
    out << "G (" << rec.generator.rows() << "x" << rec.generator.cols() << "):\n";
    for (std::size_t r = 0; r < rec.generator.rows(); ++r) {
        out << "  ";
        for (std::size_t c = 0; c < rec.generator.cols(); ++c) out << (c ? " " : "") << rec.generator.at(r, c).value;
        out << '\n';
    }
    return out.str();
}

}  // namespace multicyclic
