#pragma once

/**
 * @file text.hpp
 * @brief Textual and JSON forms of coefficients, forms and multivector fields.
 *
 * Shorthand:  -1 dx3 + 1/2 x1^2 dx1^dx2        (forms)
 *             1 e[0,0,1] e1 - (1+2i) e[1,0,0] e2^e3   (multivectors, trig modes)
 * Braced:     2-form{ 1/2 x1^2 dx[2,3]; -1 dx[1,2] }
 *             1-vec{ 1 e[0,0,1] e[1] }   (the last e[...] of a term is the basis element)
 * Indices are 1-based in text and 0-based in memory. Every printed value
 * re-parses to an equal object.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "json.hpp"
#include "leibform/cartan.hpp"
#include "leibform/diffop.hpp"

namespace leibform {

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kFormatHeader = "# format-version: 1";

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos + 1)), msg_(msg), pos_(pos) {}
    std::size_t position() const { return pos_; }
    const std::string& message() const { return msg_; }

private:
    std::string msg_;
    std::size_t pos_;
};

enum class ObjectKind { scalar, form, vec };

struct ParsedTerm {
    GaussianRational coeff{1};
    MultiIndex exponent{};
    MultiIndex frequency{};
    int frequency_length = 0;  // 0 when the term carries no trig mode
    IndexSet basis = 0;
    bool has_basis = false;
};

struct ParsedObject {
    ObjectKind kind = ObjectKind::scalar;
    int degree = 0;           // -1 when only "0" was given without a degree
    bool explicit_degree = false;
    bool poly_tokens = false;  // x-variables seen
    bool trig_tokens = false;  // e[...] modes seen
    int max_index = 0;         // largest 1-based axis mentioned
    std::vector<ParsedTerm> terms;
};

/// Parses shorthand or braced text. Throws ParseError.
ParsedObject parse_object(std::string_view text);

/// Drops a leading "# format-version: N" line; throws on an unsupported version.
std::string strip_format_header(std::string_view text);

/// Dimension implied by the text (largest index or mode length).
int implied_dim(const ParsedObject& p);

// --- coefficients ----------------------------------------------------------------

PolyCoeff poly_from_term(const ParsedTerm& t, int n);
TrigCoeff trig_from_term(const ParsedTerm& t, int n);

inline PolyCoeff coeff_from_term(const ParsedTerm& t, int n, const PolyCoeff*) { return poly_from_term(t, n); }
inline TrigCoeff coeff_from_term(const ParsedTerm& t, int n, const TrigCoeff*) { return trig_from_term(t, n); }

/// Single signed pieces "c mono", in storage order.
std::vector<std::pair<GaussianRational, std::string>> coefficient_pieces(const PolyCoeff& f);
std::vector<std::pair<GaussianRational, std::string>> coefficient_pieces(const TrigCoeff& f);

/// Joins signed pieces "c word" with " + " / " - "; "0" when empty.
std::string join_pieces(const std::vector<std::pair<GaussianRational, std::string>>& pieces);

std::string format_coeff(const PolyCoeff& f);
std::string format_coeff(const TrigCoeff& f);

template <DifferentialAlgebra C>
C parse_coeff(std::string_view text, int n) {
    const ParsedObject p = parse_object(text);
    if (p.kind != ObjectKind::scalar) throw ParseError("expected a scalar function", 0);
    C out = C::zero(n);
    for (const auto& t : p.terms) out += coeff_from_term(t, n, static_cast<const C*>(nullptr));
    return out;
}

// --- graded objects ----------------------------------------------------------------

std::string basis_shorthand(IndexSet I, bool vec);
std::string index_list(IndexSet I);

template <DifferentialAlgebra C, class Kind>
constexpr bool is_vec_kind() {
    return std::is_same_v<Kind, VecKind>;
}

/// Shorthand rendering.
template <DifferentialAlgebra C, class Kind>
std::string format(const Graded<C, Kind>& g) {
    std::vector<std::pair<GaussianRational, std::string>> pieces;
    const bool vec = is_vec_kind<C, Kind>();
    for (const auto& [I, c] : g.terms()) {
        const std::string b = basis_shorthand(I, vec);
        for (auto& [z, mono] : coefficient_pieces(c)) {
            std::string word = mono;
            if (!b.empty()) word += (word.empty() ? "" : " ") + b;
            pieces.emplace_back(z, word);
        }
    }
    return join_pieces(pieces);
}

/// Braced rendering carrying the degree, so zero objects round-trip too.
template <DifferentialAlgebra C, class Kind>
std::string format_full(const Graded<C, Kind>& g) {
    const bool vec = is_vec_kind<C, Kind>();
    std::string out = std::to_string(g.degree()) + (vec ? "-vec{" : "-form{");
    bool first = true;
    for (const auto& [I, c] : g.terms())
        for (auto& [z, mono] : coefficient_pieces(c)) {
            out += first ? " " : "; ";
            first = false;
            out += join_pieces({{z, mono}});
            if (g.degree() > 0) out += vec ? " e" + index_list(I) : " dx" + index_list(I);
        }
    return out + " }";
}

template <DifferentialAlgebra C, class Kind>
Graded<C, Kind> build_graded(const ParsedObject& p, int n) {
    const bool vec = is_vec_kind<C, Kind>();
    if (p.kind == (vec ? ObjectKind::form : ObjectKind::vec))
        throw std::invalid_argument(vec ? "expected a multivector, got a form" : "expected a form, got a multivector");
    const int degree = p.degree < 0 ? 0 : p.degree;
    if (degree > n) throw std::invalid_argument("degree exceeds dimension");
    Graded<C, Kind> out(n, degree);
    for (const auto& t : p.terms) {
        if (t.coeff.is_zero()) continue;
        if (t.basis >> n) throw std::out_of_range("basis index exceeds dimension " + std::to_string(n));
        out.add_term(t.basis, coeff_from_term(t, n, static_cast<const C*>(nullptr)));
    }
    return out;
}

template <DifferentialAlgebra C>
Form<C> parse_form(std::string_view text, int n) {
    return build_graded<C, FormKind>(parse_object(strip_format_header(text)), n);
}

template <DifferentialAlgebra C>
MultiVec<C> parse_multivec(std::string_view text, int n) {
    return build_graded<C, VecKind>(parse_object(strip_format_header(text)), n);
}

// --- JSON mirror -----------------------------------------------------------------------

template <DifferentialAlgebra C, class Kind>
nlohmann::ordered_json to_json(const Graded<C, Kind>& g) {
    nlohmann::ordered_json j;
    j["format_version"] = kFormatVersion;
    j["dim"] = g.dim();
    j["ring"] = C::ring_name;
    j["degree"] = g.degree();
    j["kind"] = Kind::name;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [I, c] : g.terms()) {
        nlohmann::ordered_json t;
        std::vector<int> idx;
        for (int i : elements(I)) idx.push_back(i + 1);
        t["indices"] = idx;
        t["coeff"] = format_coeff(c);
        j["terms"].push_back(std::move(t));
    }
    return j;
}

template <DifferentialAlgebra C, class Kind>
Graded<C, Kind> graded_from_json(const nlohmann::json& j) {
    if (j.contains("format_version") && j.at("format_version").get<int>() != kFormatVersion)
        throw std::invalid_argument("unsupported format_version");
    if (j.at("ring").get<std::string>() != C::ring_name) throw std::invalid_argument("ring mismatch in JSON");
    if (j.at("kind").get<std::string>() != Kind::name) throw std::invalid_argument("kind mismatch in JSON");
    const int n = j.at("dim").get<int>();
    Graded<C, Kind> out(n, j.at("degree").get<int>());
    for (const auto& t : j.at("terms")) {
        IndexSet I = 0;
        for (int i : t.at("indices").get<std::vector<int>>()) {
            check_axis(i - 1, n);
            I |= bit(i - 1);
        }
        out.add_term(I, parse_coeff<C>(t.at("coeff").get<std::string>(), n));
    }
    return out;
}

/// {k, n, width, terms: [{I, sigma, value}]} with 1-based I and one polynomial string per output slot.
nlohmann::ordered_json diffop_to_json(const DiffOp& D);
/// Accepts `value` as an array of strings or a single string; width defaults to the value length.
DiffOp diffop_from_json(const nlohmann::json& j);

}  // namespace leibform
