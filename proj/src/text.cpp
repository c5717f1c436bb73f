#include "leibform/text.hpp"

#include <cctype>
#include <cstdlib>

namespace leibform {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek(std::size_t ahead = 0) const { return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0'; }
    bool digit_at(std::size_t ahead) const { return std::isdigit(static_cast<unsigned char>(peek(ahead))) != 0; }
    bool alnum_at(std::size_t ahead) const { return std::isalnum(static_cast<unsigned char>(peek(ahead))) != 0; }
    std::size_t pos() const { return pos_; }
    void advance(std::size_t k = 1) { pos_ += k; }
    std::string_view rest() const { return s_.substr(pos_); }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    int read_uint() {
        if (!digit_at(0)) fail("expected a digit");
        long v = 0;
        while (digit_at(0)) {
            v = v * 10 + (peek() - '0');
            if (v > 1000000) fail("integer too large");
            advance();
        }
        return static_cast<int>(v);
    }

    int read_int() {
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = peek() == '-';
            advance();
        }
        const int v = read_uint();
        return neg ? -v : v;
    }

    std::string_view read_number_text() {
        const std::size_t start = pos_;
        while (digit_at(0)) advance();
        if (peek() == '/' && digit_at(1)) {
            advance();
            while (digit_at(0)) advance();
        }
        return s_.substr(start, pos_ - start);
    }

    /// "[a,b,...]" with signed integers.
    std::vector<int> read_list() {
        if (peek() != '[') fail("expected '['");
        advance();
        std::vector<int> out;
        skip_ws();
        if (peek() == ']') {
            advance();
            return out;
        }
        for (;;) {
            skip_ws();
            out.push_back(read_int());
            skip_ws();
            if (peek() == ',') {
                advance();
                continue;
            }
            if (peek() == ']') {
                advance();
                return out;
            }
            fail("expected ',' or ']'");
        }
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

enum class BasisKind { none, form, vec };

struct RawTerm {
    GaussianRational coeff{1};
    MultiIndex exponent{};
    MultiIndex frequency{};
    int frequency_length = 0;
    std::vector<int> basis_axes;  // 0-based, in written order
    BasisKind basis_kind = BasisKind::none;
    std::vector<std::vector<int>> bracket_lists;  // e[...] in braced vec terms
    int max_index = 0;
    bool poly = false;
};

enum class Mode { shorthand, braced_form, braced_vec };

void add_frequency(RawTerm& t, const std::vector<int>& k, Cursor& c) {
    if (static_cast<int>(k.size()) > kMaxDim) c.fail("mode has too many entries");
    if (t.frequency_length != 0 && t.frequency_length != static_cast<int>(k.size())) c.fail("modes of different lengths");
    t.frequency_length = static_cast<int>(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) t.frequency[i] += k[i];
    t.max_index = std::max(t.max_index, static_cast<int>(k.size()));
}

void set_basis_kind(RawTerm& t, BasisKind k, Cursor& c) {
    if (t.basis_kind != BasisKind::none && t.basis_kind != k) c.fail("a term mixes dx and e basis elements");
    t.basis_kind = k;
}

int axis_from_index(int one_based, Cursor& c) {
    if (one_based < 1 || one_based > kMaxDim) c.fail("index " + std::to_string(one_based) + " out of range 1.." + std::to_string(kMaxDim));
    return one_based - 1;
}

bool at_term_end(Cursor& c) {
    if (c.eof()) return true;
    const char ch = c.peek();
    return ch == '+' || ch == '-' || ch == ';' || ch == '}' || ch == ')' || ch == ',';
}

RawTerm parse_term(Cursor& c, Mode mode) {
    RawTerm t;
    bool any = false;
    while (!at_term_end(c)) {
        const char ch = c.peek();
        if (ch == '*') {
            c.advance();
            continue;
        }
        any = true;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const auto num = c.read_number_text();
            Rational r = parse_rational(num);
            if (c.peek() == 'i' && !c.alnum_at(1)) {
                c.advance();
                t.coeff *= GaussianRational(Rational(0), r);
            } else {
                t.coeff *= GaussianRational(r);
            }
        } else if (ch == '(') {
            const std::size_t start = c.pos();
            const auto close = c.rest().find(')');
            if (close == std::string_view::npos) c.fail("unbalanced '('");
            const std::string inner(c.rest().substr(0, close + 1));
            try {
                t.coeff *= parse_gaussian(inner);
            } catch (const std::exception& e) {
                throw ParseError(std::string("bad complex number: ") + e.what(), start);
            }
            c.advance(close + 1);
        } else if (ch == 'i' && !c.alnum_at(1)) {
            c.advance();
            t.coeff *= GaussianRational::i();
        } else if (ch == 'x' && c.digit_at(1)) {
            c.advance();
            const int axis = axis_from_index(c.read_uint(), c);
            int e = 1;
            if (c.peek() == '^' && c.digit_at(1)) {
                c.advance();
                e = c.read_uint();
            }
            t.exponent[static_cast<std::size_t>(axis)] += e;
            t.max_index = std::max(t.max_index, axis + 1);
            t.poly = true;
        } else if (ch == 'd' && c.peek(1) == 'x') {
            c.advance(2);
            set_basis_kind(t, BasisKind::form, c);
            if (c.peek() == '[') {
                if (mode == Mode::shorthand) c.fail("dx[...] belongs to the braced grammar");
                for (int i : c.read_list()) t.basis_axes.push_back(axis_from_index(i, c));
            } else {
                t.basis_axes.push_back(axis_from_index(c.read_uint(), c));
                while (c.peek() == '^' && c.peek(1) == 'd' && c.peek(2) == 'x') {
                    c.advance(3);
                    t.basis_axes.push_back(axis_from_index(c.read_uint(), c));
                }
            }
        } else if (ch == 'e' && c.peek(1) == '[') {
            c.advance();
            auto list = c.read_list();
            if (mode == Mode::braced_vec)
                t.bracket_lists.push_back(std::move(list));
            else
                add_frequency(t, list, c);
        } else if (ch == 'e' && c.digit_at(1)) {
            c.advance();
            set_basis_kind(t, BasisKind::vec, c);
            t.basis_axes.push_back(axis_from_index(c.read_uint(), c));
            while (c.peek() == '^' && c.peek(1) == 'e' && c.digit_at(2)) {
                c.advance(2);
                t.basis_axes.push_back(axis_from_index(c.read_uint(), c));
            }
        } else {
            c.fail(std::string("unexpected character '") + ch + "'");
        }
    }
    if (!any) c.fail("empty term");
    return t;
}

ParsedTerm finish_term(RawTerm& raw, ParsedObject& obj, Cursor& c) {
    ParsedTerm t;
    t.coeff = raw.coeff;
    t.exponent = raw.exponent;
    t.frequency = raw.frequency;
    t.frequency_length = raw.frequency_length;
    int sign = 1;
    IndexSet set = 0;
    for (int a : raw.basis_axes) {
        if (contains(set, a)) {
            sign = 0;
            break;
        }
        sign *= parity_sign(std::popcount(set >> (a + 1)));
        set |= bit(a);
        obj.max_index = std::max(obj.max_index, a + 1);
    }
    if (sign == 0) t.coeff = GaussianRational();
    if (sign < 0) t.coeff = -t.coeff;
    t.basis = set;
    t.has_basis = !raw.basis_axes.empty();
    obj.max_index = std::max(obj.max_index, raw.max_index);
    obj.poly_tokens = obj.poly_tokens || raw.poly;
    obj.trig_tokens = obj.trig_tokens || raw.frequency_length > 0;
    (void)c;
    return t;
}

void apply_sign(RawTerm& t, bool negative) {
    if (negative) t.coeff = -t.coeff;
}

ParsedObject parse_braced(Cursor& c, int degree, bool vec) {
    ParsedObject obj;
    obj.kind = vec ? ObjectKind::vec : ObjectKind::form;
    obj.degree = degree;
    obj.explicit_degree = true;
    if (degree < 0 || degree > kMaxDim) c.fail("degree out of range");
    const Mode mode = vec ? Mode::braced_vec : Mode::braced_form;
    c.skip_ws();
    if (c.peek() == '}') {
        c.advance();
        return obj;
    }
    for (;;) {
        c.skip_ws();
        bool negative = false;
        while (c.peek() == '+' || c.peek() == '-') {
            negative ^= c.peek() == '-';
            c.advance();
            c.skip_ws();
        }
        const std::size_t start = c.pos();
        RawTerm raw = parse_term(c, mode);
        apply_sign(raw, negative);
        if (vec) {
            if (degree > 0) {
                if (raw.bracket_lists.empty()) throw ParseError("term needs a basis e[...]", start);
                for (int i : raw.bracket_lists.back()) raw.basis_axes.push_back(axis_from_index(i, c));
                raw.bracket_lists.pop_back();
                raw.basis_kind = BasisKind::vec;
            }
            for (const auto& k : raw.bracket_lists) add_frequency(raw, k, c);
        }
        if (raw.basis_kind == (vec ? BasisKind::form : BasisKind::vec)) throw ParseError("wrong basis kind for this object", start);
        if (static_cast<int>(raw.basis_axes.size()) != degree)
            throw ParseError("term degree " + std::to_string(raw.basis_axes.size()) + " does not match " + std::to_string(degree), start);
        obj.terms.push_back(finish_term(raw, obj, c));
        c.skip_ws();
        if (c.peek() == ';') {
            c.advance();
            continue;
        }
        if (c.peek() == '}') {
            c.advance();
            return obj;
        }
        c.fail("expected ';' or '}'");
    }
}

ParsedObject parse_shorthand(Cursor& c) {
    ParsedObject obj;
    bool have_degree = false;
    bool first = true;
    while (!c.eof()) {
        const char ch = c.peek();
        if (ch == ';' || ch == '}' || ch == ')' || ch == ',') break;
        bool negative = false;
        if (ch == '+' || ch == '-') {
            negative = ch == '-';
            c.advance();
        } else if (!first) {
            c.fail("expected '+' or '-' between terms");
        }
        first = false;
        c.skip_ws();
        const std::size_t start = c.pos();
        RawTerm raw = parse_term(c, Mode::shorthand);
        apply_sign(raw, negative);
        const ObjectKind kind = raw.basis_kind == BasisKind::form  ? ObjectKind::form
                                : raw.basis_kind == BasisKind::vec ? ObjectKind::vec
                                                                   : ObjectKind::scalar;
        const int deg = static_cast<int>(raw.basis_axes.size());
        if (!have_degree) {
            obj.kind = kind;
            obj.degree = deg;
            have_degree = true;
        } else if (kind != obj.kind || deg != obj.degree) {
            throw ParseError("terms of different kind or degree", start);
        }
        obj.terms.push_back(finish_term(raw, obj, c));
    }
    if (first) c.fail("empty expression");
    return obj;
}

}  // namespace

ParsedObject parse_object(std::string_view text) {
    Cursor c(text);
    c.skip_ws();
    // Braced form: "<k>-form{" or "<k>-vec{"
    std::size_t i = 0;
    while (c.digit_at(i)) ++i;
    if (i > 0) {
        const std::string_view after = c.rest().substr(i);
        const bool form = after.starts_with("-form{");
        const bool vec = after.starts_with("-vec{");
        if (form || vec) {
            const int degree = c.read_uint();
            c.advance(form ? 6 : 5);
            ParsedObject obj = parse_braced(c, degree, vec);
            if (!c.eof()) c.fail("trailing input after '}'");
            return obj;
        }
    }
    ParsedObject obj = parse_shorthand(c);
    if (!c.eof()) c.fail("trailing input");
    return obj;
}

std::string strip_format_header(std::string_view text) {
    std::string out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        std::size_t k = 0;
        while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
        if (k < line.size() && line[k] == '#') {
            const auto at = line.find("format-version:");
            if (at != std::string_view::npos) {
                const std::string v(line.substr(at + 15));
                if (std::atoi(v.c_str()) != kFormatVersion) throw ParseError("unsupported format-version", pos + at);
            }
        } else {
            out.append(line);
            out.push_back(' ');
        }
        pos = end + 1;
    }
    return out;
}

int implied_dim(const ParsedObject& p) { return std::max(p.max_index, 1); }

PolyCoeff poly_from_term(const ParsedTerm& t, int n) {
    if (t.frequency_length > 0) throw std::invalid_argument("trig mode e[...] in a polynomial coefficient");
    if (!t.coeff.is_real()) throw std::invalid_argument("complex coefficient in a polynomial");
    return PolyCoeff::monomial(n, t.exponent, t.coeff.re());
}

TrigCoeff trig_from_term(const ParsedTerm& t, int n) {
    for (int e : t.exponent)
        if (e != 0) throw std::invalid_argument("polynomial variable in a trig coefficient");
    if (t.frequency_length != 0 && t.frequency_length != n)
        throw std::invalid_argument("mode length " + std::to_string(t.frequency_length) + " does not match n = " + std::to_string(n));
    return TrigCoeff::mode(n, t.frequency, t.coeff);
}

std::vector<std::pair<GaussianRational, std::string>> coefficient_pieces(const PolyCoeff& f) {
    std::vector<std::pair<GaussianRational, std::string>> out;
    for (const auto& [e, c] : f.terms()) {
        std::string mono;
        for (int i = 0; i < f.dim(); ++i) {
            const int p = e[static_cast<std::size_t>(i)];
            if (p == 0) continue;
            if (!mono.empty()) mono += ' ';
            mono += "x" + std::to_string(i + 1);
            if (p > 1) mono += "^" + std::to_string(p);
        }
        out.emplace_back(GaussianRational(c), mono);
    }
    return out;
}

std::vector<std::pair<GaussianRational, std::string>> coefficient_pieces(const TrigCoeff& f) {
    std::vector<std::pair<GaussianRational, std::string>> out;
    for (const auto& [k, z] : f.modes()) {
        std::string mode;
        bool zero = true;
        for (int i = 0; i < f.dim(); ++i) zero = zero && k[static_cast<std::size_t>(i)] == 0;
        if (!zero) {
            mode = "e[";
            for (int i = 0; i < f.dim(); ++i) mode += (i ? "," : "") + std::to_string(k[static_cast<std::size_t>(i)]);
            mode += "]";
        }
        out.emplace_back(z, mode);
    }
    return out;
}

std::string join_pieces(const std::vector<std::pair<GaussianRational, std::string>>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [z, word] : pieces) {
        std::string body;
        bool negative = false;
        if (z.is_real() || sgn(z.re()) == 0) {
            const Rational& r = z.is_real() ? z.re() : z.im();
            negative = sgn(r) < 0;
            const Rational mag = abs(r);
            body = z.is_real() ? to_string(mag) : (mag == 1 ? std::string("i") : to_string(mag) + "i");
        } else {
            body = "(" + to_string(z.re()) + (sgn(z.im()) < 0 ? "" : "+") + to_string(z.im()) + "i)";
        }
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += body;
        if (!word.empty()) out += " " + word;
        first = false;
    }
    return out;
}

std::string format_coeff(const PolyCoeff& f) { return join_pieces(coefficient_pieces(f)); }
std::string format_coeff(const TrigCoeff& f) { return join_pieces(coefficient_pieces(f)); }

std::string basis_shorthand(IndexSet I, bool vec) {
    std::string out;
    for (int i : elements(I)) {
        if (!out.empty()) out += '^';
        out += (vec ? "e" : "dx") + std::to_string(i + 1);
    }
    return out;
}

std::string index_list(IndexSet I) {
    std::string out = "[";
    bool first = true;
    for (int i : elements(I)) {
        out += (first ? "" : ",") + std::to_string(i + 1);
        first = false;
    }
    return out + "]";
}

nlohmann::ordered_json diffop_to_json(const DiffOp& D) {
    nlohmann::ordered_json j;
    j["format_version"] = kFormatVersion;
    j["k"] = D.degree();
    j["n"] = D.dim();
    j["width"] = D.width();
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [key, value] : D.terms()) {
        nlohmann::ordered_json t;
        std::vector<int> idx;
        for (int i : elements(key.I)) idx.push_back(i + 1);
        t["I"] = idx;
        t["sigma"] = std::vector<int>(key.sigma.begin(), key.sigma.begin() + D.dim());
        std::vector<std::string> v;
        for (const auto& p : value) v.push_back(format_coeff(p));
        t["value"] = v;
        j["terms"].push_back(std::move(t));
    }
    return j;
}

DiffOp diffop_from_json(const nlohmann::json& j) {
    if (j.contains("format_version") && j.at("format_version").get<int>() != kFormatVersion)
        throw std::invalid_argument("unsupported format_version");
    const int n = j.at("n").get<int>();
    check_dim(n);
    const int k = j.at("k").get<int>();
    if (k < 0 || k > n) throw std::invalid_argument("operator degree k out of range");
    const auto& terms = j.at("terms");
    auto values = [&](const nlohmann::json& v) {
        std::vector<std::string> out;
        if (v.is_string())
            out.push_back(v.get<std::string>());
        else
            out = v.get<std::vector<std::string>>();
        return out;
    };
    int width = j.contains("width") ? j.at("width").get<int>() : -1;
    if (width < 0) width = terms.empty() ? 1 : static_cast<int>(values(terms.front().at("value")).size());
    DiffOp D(n, k, width);
    for (const auto& t : terms) {
        IndexSet I = 0;
        for (int i : t.at("I").get<std::vector<int>>()) {
            check_axis(i - 1, n);
            if (contains(I, i - 1)) throw std::invalid_argument("repeated index in I");
            I |= bit(i - 1);
        }
        const auto sig = t.at("sigma").get<std::vector<int>>();
        if (static_cast<int>(sig.size()) != n) throw std::invalid_argument("sigma must have n entries");
        MultiIndex sigma{};
        for (int a = 0; a < n; ++a) {
            if (sig[static_cast<std::size_t>(a)] < 0) throw std::invalid_argument("negative entry in sigma");
            sigma[static_cast<std::size_t>(a)] = sig[static_cast<std::size_t>(a)];
        }
        PolyVector v;
        for (const auto& s : values(t.at("value"))) v.push_back(parse_coeff<PolyCoeff>(s, n));
        D.add_term(I, sigma, v);
    }
    return D;
}

}  // namespace leibform
