// Serialization: the plain-text subspace format, the JSON code file, and
// JSON views of parameters, verification reports and simulation statistics.
//
// Subspace text format: a header line "N q dim" followed by dim rows of N
// space-separated field-element tokens (each token is the element's digit
// string, lowest coefficient first).  Round-trips are bit-exact because
// subspaces are stored canonically.
//
// Code JSON format: a header carrying {q, p, m, irreducible, n, d, k, N,
// dim, size, D, monomial_order} followed by one {label, basis} object per
// codeword.  `monomial_order` is always "grlex-desc"; `irreducible` is the
// full modulus coefficient list (constant term first) and is empty for
// prime fields.

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "channel.hpp"
#include "code.hpp"
#include "gf.hpp"
#include "linalg.hpp"
#include "veronese.hpp"

namespace veronet {

using json = nlohmann::ordered_json;

// -- linear forms -----------------------------------------------------------

inline std::string linear_form_to_text(const LinearForm& l) {
    std::string out;
    for (std::size_t i = 0; i < l.coeffs().size(); ++i) {
        if (i) out.push_back(' ');
        out += l.field()->to_text(l.coeffs()[i]);
    }
    return out;
}

inline LinearForm linear_form_from_text(const FieldPtr& field, std::uint32_t n,
                                        const std::string& text) {
    std::istringstream in(text);
    std::vector<std::uint32_t> coeffs;
    std::string token;
    while (in >> token) coeffs.push_back(field->parse_text(token));
    if (coeffs.size() != n + 1)
        throw std::invalid_argument("linear form text has wrong coefficient count");
    return LinearForm(field, std::move(coeffs));
}

// -- subspace text format -----------------------------------------------------

inline std::string subspace_to_text(const Subspace& v) {
    std::ostringstream out;
    out << v.ambient_dim() << ' ' << v.field()->order() << ' ' << v.dim() << '\n';
    for (std::size_t r = 0; r < v.dim(); ++r) {
        for (std::size_t c = 0; c < v.ambient_dim(); ++c) {
            if (c) out << ' ';
            out << v.field()->to_text(v.basis()(r, c));
        }
        out << '\n';
    }
    return out.str();
}

/// Parses the text format; the field is rebuilt from q with the default
/// modulus, which is the representation the writer uses.
inline Subspace subspace_from_text(const std::string& text) {
    std::istringstream in(text);
    std::size_t n = 0, dim = 0;
    std::uint64_t q = 0;
    if (!(in >> n >> q >> dim))
        throw std::invalid_argument("malformed subspace header (want \"N q dim\")");
    const FieldPtr field = Field::from_order(q);
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        std::vector<std::uint32_t> row;
        row.reserve(n);
        for (std::size_t c = 0; c < n; ++c) {
            std::string token;
            if (!(in >> token))
                throw std::invalid_argument("subspace text ends before all rows are read");
            row.push_back(field->parse_text(token));
        }
        rows.push_back(std::move(row));
    }
    const Subspace v = Subspace::span(field, n, rows);
    if (v.dim() != dim)
        throw std::invalid_argument("subspace rows are not a basis (rank deficit)");
    return v;
}

// -- code JSON ----------------------------------------------------------------

inline json code_to_json(const Code& code) {
    const FieldPtr& field = code.field();
    json j;
    j["q"] = field->order();
    j["p"] = field->characteristic();
    j["m"] = field->extension_degree();
    j["irreducible"] = field->modulus();
    j["n"] = code.n();
    j["d"] = code.d();
    j["k"] = code.k();
    j["N"] = code.params().packet_length;
    j["dim"] = code.params().dim;
    j["size"] = code.params().size;
    j["D"] = code.params().min_distance;
    j["monomial_order"] = "grlex-desc";
    json words = json::array();
    for (const Codeword& w : code.codewords()) {
        json entry;
        entry["label"] = linear_form_to_text(w.label);
        json basis = json::array();
        for (std::size_t r = 0; r < w.space.dim(); ++r) {
            std::string row;
            for (std::size_t c = 0; c < w.space.ambient_dim(); ++c) {
                if (c) row.push_back(' ');
                row += field->to_text(w.space.basis()(r, c));
            }
            basis.push_back(row);
        }
        entry["basis"] = basis;
        words.push_back(std::move(entry));
    }
    j["codewords"] = std::move(words);
    return j;
}

/// Rebuilds a code from its JSON form and cross-checks every header field
/// against the deserialized codewords; any mismatch means a corrupt file.
inline Code code_from_json(const json& j) {
    for (const char* key : {"q", "p", "m", "irreducible", "n", "d", "k", "N", "dim",
                            "size", "D", "monomial_order", "codewords"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("code file is missing key \"") + key +
                                        "\"");
    if (j["monomial_order"].get<std::string>() != "grlex-desc")
        throw std::invalid_argument("unsupported monomial order");

    const auto p = j["p"].get<std::uint32_t>();
    const auto m = j["m"].get<std::uint32_t>();
    std::vector<std::uint32_t> irreducible = j["irreducible"].get<std::vector<std::uint32_t>>();
    const FieldPtr field = Field::make(p, m, std::move(irreducible));
    if (field->order() != j["q"].get<std::uint64_t>())
        throw std::invalid_argument("q does not equal p^m");

    const auto n = j["n"].get<std::uint32_t>();
    const auto d = j["d"].get<std::uint32_t>();
    const auto k = j["k"].get<std::uint32_t>();
    const std::size_t ambient = j["N"].get<std::size_t>();

    std::vector<Codeword> words;
    for (const json& entry : j["codewords"]) {
        LinearForm label =
            linear_form_from_text(field, n, entry["label"].get<std::string>());
        std::vector<std::vector<std::uint32_t>> rows;
        for (const json& row_text : entry["basis"]) {
            std::istringstream in(row_text.get<std::string>());
            std::vector<std::uint32_t> row;
            std::string token;
            while (in >> token) row.push_back(field->parse_text(token));
            if (row.size() != ambient)
                throw std::invalid_argument("basis row length does not match N");
            rows.push_back(std::move(row));
        }
        Subspace space = Subspace::span(field, ambient, rows);
        if (space.dim() != rows.size())
            throw std::invalid_argument("codeword basis rows are not independent");
        words.push_back(Codeword{std::move(label), std::move(space)});
    }

    const CodeParams params =
        detail::observed_params(words, field->order(), ambient);
    if (params.packet_length != j["N"].get<std::size_t>() ||
        params.dim != j["dim"].get<std::size_t>() ||
        params.size != j["size"].get<std::uint64_t>() ||
        params.min_distance != j["D"].get<std::size_t>())
        throw std::invalid_argument("code file header disagrees with its codewords");
    if (params.packet_length != binomial(n + d, d))
        throw std::invalid_argument("N does not match C(n+d, d)");
    return Code(field, n, d, k, std::move(words), params);
}

// -- parameter / report / statistics JSON --------------------------------------

inline json params_to_json(const CodeParams& p) {
    json j;
    j["N"] = p.packet_length;
    j["dim"] = p.dim;
    j["size"] = p.size;
    j["log_q_size"] = p.log_q_size;
    j["D"] = p.min_distance;
    j["lambda"] = p.lambda;
    j["rate"] = p.rate;
    j["delta"] = p.delta;
    return j;
}

inline json report_to_json(const VerifyReport& r) {
    json j;
    j["q"] = r.q;
    j["n"] = r.n;
    j["d"] = r.d;
    j["k"] = r.k;
    j["pass"] = r.all_pass();
    json checks = json::array();
    for (const Check& c : r.checks) {
        json entry;
        entry["name"] = c.name;
        entry["pass"] = c.pass;
        entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    j["checks"] = std::move(checks);
    return j;
}

inline json stats_to_json(const SimulationStats& s) {
    json j;
    j["config"] = {{"erasures", s.config.erasures},
                   {"errors", s.config.errors},
                   {"seed", s.config.seed}};
    j["trials"] = s.trials;
    j["correct"] = s.correct;
    j["wrong"] = s.wrong;
    j["ambiguous"] = s.ambiguous;
    j["success_rate"] = s.success_rate;
    return j;
}

// -- files ----------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

}  // namespace veronet
