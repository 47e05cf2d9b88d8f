#pragma once

// Text forms of indices and matrices: the bracket/parenthesis notation for
// labels, the MatrixDocument json schema, csv with label headers, and a
// LaTeX \bordermatrix layout.

#include "kqsym/schur_system.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kqsym {

inline constexpr const char* kSchemaVersion = "1";

/// The published kinds of change-of-basis matrices.
enum class MatrixKind { ns_to_h, qs_to_m, kschur_to_h, dualkschur_to_m, h_to_ns, m_to_qs };

inline std::string_view matrix_kind_name(MatrixKind kind) {
    switch (kind) {
    case MatrixKind::ns_to_h: return "ns-to-h";
    case MatrixKind::qs_to_m: return "qs-to-m";
    case MatrixKind::kschur_to_h: return "kschur-to-h";
    case MatrixKind::dualkschur_to_m: return "dualkschur-to-m";
    case MatrixKind::h_to_ns: return "h-to-ns";
    case MatrixKind::m_to_qs: return "m-to-qs";
    }
    return "?";
}

inline std::optional<MatrixKind> parse_matrix_kind(std::string_view name) {
    for (MatrixKind kind : {MatrixKind::ns_to_h, MatrixKind::qs_to_m, MatrixKind::kschur_to_h,
                            MatrixKind::dualkschur_to_m, MatrixKind::h_to_ns, MatrixKind::m_to_qs})
        if (matrix_kind_name(kind) == name)
            return kind;
    return std::nullopt;
}

inline bool is_partition_kind(MatrixKind kind) {
    return kind == MatrixKind::kschur_to_h || kind == MatrixKind::dualkschur_to_m;
}

// ---------------------------------------------------------------------------
// labels

/// "3", "inf"
inline Bound parse_bound(std::string_view text) {
    if (text == "inf")
        return Bound::unbounded();
    int k = 0;
    std::size_t used = 0;
    try {
        k = std::stoi(std::string(text), &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("k must be a positive integer or \"inf\"");
    }
    if (used != text.size() || k < 1)
        throw std::invalid_argument("k must be a positive integer or \"inf\"");
    return Bound(k);
}

/// Accepts "1,2,3", "[1,2,3]", "(3,2,1)", "[]" and "" with optional spaces.
inline std::vector<int> parse_parts(std::string_view text) {
    std::string body;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            body.push_back(ch);
    if (body.size() >= 2 && ((body.front() == '[' && body.back() == ']') || (body.front() == '(' && body.back() == ')')))
        body = body.substr(1, body.size() - 2);
    std::vector<int> parts;
    if (body.empty())
        return parts;
    std::stringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("cannot parse \"" + std::string(text) + "\" as a list of positive integers");
        const int value = std::stoi(item);
        if (value < 1)
            throw std::invalid_argument("parts must be positive in \"" + std::string(text) + "\"");
        parts.push_back(value);
    }
    if (body.back() == ',')
        throw std::invalid_argument("trailing comma in \"" + std::string(text) + "\"");
    return parts;
}

template <class Index>
std::string label_text(const Index& index, const char* separator = ",") {
    std::string out(1, is_composition_index<Index> ? '[' : '(');
    for (std::size_t i = 0; i < index.length(); ++i) {
        if (i)
            out += separator;
        out += std::to_string(index.parts()[i]);
    }
    out += is_composition_index<Index> ? ']' : ')';
    return out;
}

/// A basis element written as KIND:INDEX[@k=K], e.g. "S:[1,1,1]@k=3".
struct ElementSpec {
    BasisKind kind;
    std::vector<int> parts;
    std::optional<Bound> k;
};

inline ElementSpec parse_element(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("element must look like KIND:INDEX, e.g. S:[1,2]@k=3");
    const auto kind = parse_kind(text.substr(0, colon));
    if (!kind)
        throw std::invalid_argument("unknown basis \"" + std::string(text.substr(0, colon)) + "\"");
    std::string_view rest = text.substr(colon + 1);
    std::optional<Bound> k;
    if (const auto at = rest.find('@'); at != std::string_view::npos) {
        std::string_view suffix = rest.substr(at + 1);
        if (suffix.substr(0, 2) != "k=")
            throw std::invalid_argument("expected @k=K after the index");
        k = parse_bound(suffix.substr(2));
        rest = rest.substr(0, at);
    }
    return {*kind, parse_parts(rest), k};
}

// ---------------------------------------------------------------------------
// matrix documents

struct MatrixDocument {
    std::string schema_version = kSchemaVersion;
    Bound k;
    int n = 0;
    MatrixKind kind = MatrixKind::ns_to_h;
    bool partition_labels = false;
    std::vector<std::vector<int>> row_labels;
    std::vector<std::vector<int>> col_labels;
    std::vector<Integer> entries; // row-major

    friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

template <class Index>
MatrixDocument to_document(MatrixKind kind, const BasisMatrix<Index>& a) {
    MatrixDocument doc;
    doc.k = a.k;
    doc.n = a.n;
    doc.kind = kind;
    doc.partition_labels = !is_composition_index<Index>;
    for (const auto& r : a.rows)
        doc.row_labels.push_back(r.parts());
    for (const auto& c : a.cols)
        doc.col_labels.push_back(c.parts());
    doc.entries = a.entries;
    return doc;
}

/// Builds the requested component matrix through the in-memory caches.
inline MatrixDocument make_document(MatrixKind kind, int n, Bound k, SchurCache& comps, KSchurCache& parts) {
    if (n < 0)
        throw std::invalid_argument("n must be nonnegative");
    switch (kind) {
    case MatrixKind::ns_to_h: return to_document(kind, comps.get(n, k)->schur_to_complete);
    case MatrixKind::qs_to_m: return to_document(kind, comps.get(n, k)->dual_to_monomial);
    case MatrixKind::h_to_ns: return to_document(kind, comps.get(n, k)->complete_to_schur);
    case MatrixKind::m_to_qs: return to_document(kind, comps.get(n, k)->monomial_to_dual);
    case MatrixKind::kschur_to_h: return to_document(kind, parts.get(n, k)->schur_to_complete);
    case MatrixKind::dualkschur_to_m: return to_document(kind, parts.get(n, k)->dual_to_monomial);
    }
    throw std::invalid_argument("unknown matrix kind");
}

namespace detail {

inline nlohmann::ordered_json integer_json(const Integer& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(value);
    return value.str();
}

inline Integer json_integer(const nlohmann::ordered_json& value) {
    if (value.is_number_integer())
        return Integer(value.get<std::int64_t>());
    if (value.is_string())
        return Integer(value.get<std::string>());
    throw std::invalid_argument("matrix entries must be integers");
}

inline std::string display_label(const std::vector<int>& parts, bool partition, const char* separator) {
    return partition ? label_text(Partition::from_rows(parts), separator) : label_text(Composition(parts), separator);
}

} // namespace detail

inline std::string to_json(const MatrixDocument& doc) {
    nlohmann::ordered_json j;
    j["schema_version"] = doc.schema_version;
    if (doc.k.bounded())
        j["k"] = doc.k.value();
    else
        j["k"] = "inf";
    j["n"] = doc.n;
    j["kind"] = std::string(matrix_kind_name(doc.kind));
    j["row_labels"] = doc.row_labels;
    j["col_labels"] = doc.col_labels;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : doc.entries)
        entries.push_back(detail::integer_json(e));
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

/// Parses and validates a MatrixDocument.
inline MatrixDocument document_from_json(std::string_view text) {
    const auto j = nlohmann::ordered_json::parse(text);
    MatrixDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    const auto& k = j.at("k");
    doc.k = k.is_string() ? parse_bound(k.get<std::string>()) : Bound(k.get<int>());
    doc.n = j.at("n").get<int>();
    const auto kind = parse_matrix_kind(j.at("kind").get<std::string>());
    if (!kind)
        throw std::invalid_argument("unknown matrix kind in document");
    doc.kind = *kind;
    doc.partition_labels = is_partition_kind(doc.kind);
    doc.row_labels = j.at("row_labels").get<std::vector<std::vector<int>>>();
    doc.col_labels = j.at("col_labels").get<std::vector<std::vector<int>>>();
    for (const auto& e : j.at("entries"))
        doc.entries.push_back(detail::json_integer(e));
    if (doc.entries.size() != doc.row_labels.size() * doc.col_labels.size())
        throw std::invalid_argument("entries length does not match the label counts");
    for (const auto* labels : {&doc.row_labels, &doc.col_labels})
        for (const auto& parts : *labels) {
            int size = 0;
            for (int p : parts) {
                if (p < 1 || !doc.k.admits(p))
                    throw std::invalid_argument("label part out of range");
                size += p;
            }
            if (size != doc.n)
                throw std::invalid_argument("label size differs from n");
            if (doc.partition_labels && !std::is_sorted(parts.rbegin(), parts.rend()))
                throw std::invalid_argument("partition label is not weakly decreasing");
        }
    return doc;
}

inline std::string to_csv(const MatrixDocument& doc) {
    std::ostringstream out;
    out << "\"\"";
    for (const auto& c : doc.col_labels)
        out << ",\"" << detail::display_label(c, doc.partition_labels, ",") << '"';
    out << '\n';
    for (std::size_t r = 0; r < doc.row_labels.size(); ++r) {
        out << '"' << detail::display_label(doc.row_labels[r], doc.partition_labels, ",") << '"';
        for (std::size_t c = 0; c < doc.col_labels.size(); ++c)
            out << ',' << doc.entries[r * doc.col_labels.size() + c];
        out << '\n';
    }
    return out.str();
}

inline std::string to_latex(const MatrixDocument& doc) {
    auto label = [&](const std::vector<int>& parts) {
        return parts.empty() ? std::string("\\emptyset") : detail::display_label(parts, doc.partition_labels, ", ");
    };
    std::ostringstream out;
    out << "\\[\n\\bordermatrix{\n~";
    for (const auto& c : doc.col_labels)
        out << " & " << label(c);
    out << " \\cr\n";
    for (std::size_t r = 0; r < doc.row_labels.size(); ++r) {
        out << label(doc.row_labels[r]);
        for (std::size_t c = 0; c < doc.col_labels.size(); ++c)
            out << " & " << doc.entries[r * doc.col_labels.size() + c];
        out << " \\cr\n";
    }
    out << "}\n\\]\n";
    return out.str();
}

} // namespace kqsym
