#include "leibform/eval.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <regex>
#include <variant>

#include "leibform/text.hpp"
#include "leibform/torus.hpp"

namespace leibform {

namespace {

using json = nlohmann::ordered_json;

struct Node {
    std::string fn;  // empty for a leaf
    std::vector<Node> args;
    std::string text;
    std::size_t pos = 0;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

bool known_function(const std::string& name) {
    const auto& f = eval_functions();
    return std::find(f.begin(), f.end(), name) != f.end();
}

class Parser {
public:
    Parser(std::string_view s, std::size_t base) : s_(s), base_(base) {}

    Node parse_all() {
        Node n = item();
        skip();
        if (i_ < s_.size()) throw ParseError("unexpected '" + std::string(1, s_[i_]) + "'", base_ + i_);
        return n;
    }

private:
    void skip() {
        while (i_ < s_.size() && is_space(s_[i_])) ++i_;
    }

    Node item() {
        skip();
        const std::size_t start = i_;
        std::size_t j = i_;
        while (j < s_.size() && is_alpha(s_[j])) ++j;
        const std::string name(s_.substr(start, j - start));
        std::size_t k = j;
        while (k < s_.size() && is_space(s_[k])) ++k;
        if (!name.empty() && k < s_.size() && s_[k] == '(') {
            if (known_function(name)) return call(name, start, k + 1);
            if (name.size() > 1) throw ParseError("unknown function '" + name + "'", base_ + start);
        }
        return leaf(start);
    }

    Node call(const std::string& name, std::size_t start, std::size_t open) {
        Node n;
        n.fn = name;
        n.pos = base_ + start;
        i_ = open;
        skip();
        if (i_ < s_.size() && s_[i_] == ')') {
            ++i_;
            return n;
        }
        for (;;) {
            n.args.push_back(item());
            skip();
            if (i_ >= s_.size()) throw ParseError("missing ')' for " + name, base_ + i_);
            const char c = s_[i_++];
            if (c == ')') return n;
            if (c != ',' && c != ';') throw ParseError("expected ',' or ')'", base_ + i_ - 1);
        }
    }

    Node leaf(std::size_t start) {
        int depth = 0;
        bool in_string = false;
        while (i_ < s_.size()) {
            const char c = s_[i_];
            if (in_string) {
                if (c == '\\')
                    ++i_;
                else if (c == '"')
                    in_string = false;
            } else if (c == '"') {
                in_string = true;
            } else if (c == '(' || c == '[' || c == '{') {
                ++depth;
            } else if (c == ')' || c == ']' || c == '}') {
                if (depth == 0) break;
                --depth;
            } else if ((c == ',' || c == ';') && depth == 0) {
                break;
            }
            ++i_;
        }
        std::size_t a = start, b = i_;
        while (a < b && is_space(s_[a])) ++a;
        while (b > a && is_space(s_[b - 1])) --b;
        if (a == b) throw ParseError("expected an argument", base_ + start);
        Node n;
        n.text = std::string(s_.substr(a, b - a));
        n.pos = base_ + a;
        return n;
    }

    std::string_view s_;
    std::size_t base_;
    std::size_t i_ = 0;
};

/// Position of the top-level '@', if any.
std::optional<std::size_t> suffix_at(std::string_view s) {
    int depth = 0;
    bool in_string = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (in_string) {
            if (c == '\\')
                ++i;
            else if (c == '"')
                in_string = false;
        } else if (c == '"') {
            in_string = true;
        } else if (c == '(' || c == '[' || c == '{') {
            ++depth;
        } else if (c == ')' || c == ']' || c == '}') {
            --depth;
        } else if (c == '@' && depth == 0) {
            return i;
        }
    }
    return std::nullopt;
}

const std::regex& cycle_pattern() {
    static const std::regex re(R"(^\s*x(\d+)\s*=\s*x(\d+)\s*=\s*0\s*$)");
    return re;
}

bool is_json_leaf(const Node& n) { return !n.text.empty() && n.text.front() == '{'; }

struct LeafScan {
    int n = 0;
    bool trig = false;
};

void scan(const Node& node, LeafScan& out) {
    if (!node.fn.empty()) {
        for (const auto& a : node.args) scan(a, out);
        return;
    }
    std::smatch m;
    if (std::regex_match(node.text, m, cycle_pattern())) {
        out.n = std::max({out.n, std::stoi(m[1]), std::stoi(m[2])});
        return;
    }
    try {
        if (is_json_leaf(node)) {
            const auto j = nlohmann::json::parse(node.text);
            if (j.contains("n")) out.n = std::max(out.n, j.at("n").get<int>());
            return;
        }
        const ParsedObject p = parse_object(node.text);
        out.n = std::max(out.n, implied_dim(p));
        out.trig = out.trig || p.trig_tokens;
    } catch (const std::exception&) {
        // reported with its position during evaluation
    }
}

template <DifferentialAlgebra C>
class Evaluator {
public:
    using F = Form<C>;
    using V = MultiVec<C>;
    using Value = std::variant<F, V, GaussianRational, C, std::string>;

    explicit Evaluator(int n) : n_(n) {}

    Value eval(const Node& node) {
        if (node.fn.empty()) return leaf(node);
        std::vector<Value> args;
        for (const auto& a : node.args) args.push_back(eval(a));
        try {
            return apply(node, args);
        } catch (const EvalError&) {
            throw;
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw EvalError(node.fn + ": " + e.what());
        }
    }

    static std::string print(const Value& v) {
        return std::visit(
            [](const auto& x) -> std::string {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, std::string>)
                    return x;
                else if constexpr (std::is_same_v<T, GaussianRational>)
                    return to_string(x);
                else if constexpr (std::is_same_v<T, C>)
                    return format_coeff(x);
                else
                    return format(x);
            },
            v);
    }

private:
    Value leaf(const Node& node) {
        if (is_json_leaf(node) || std::regex_match(node.text, cycle_pattern())) return node.text;
        try {
            const ParsedObject p = parse_object(node.text);
            switch (p.kind) {
                case ObjectKind::vec: return build_graded<C, VecKind>(p, n_);
                case ObjectKind::form: return build_graded<C, FormKind>(p, n_);
                case ObjectKind::scalar: {
                    C out = C::zero(n_);
                    for (const auto& t : p.terms) out += coeff_from_term(t, n_, static_cast<const C*>(nullptr));
                    return out;
                }
            }
        } catch (const ParseError& e) {
            throw ParseError(e.message(), node.pos + e.position());
        } catch (const std::exception& e) {
            throw EvalError("argument at position " + std::to_string(node.pos + 1) + ": " + e.what());
        }
        throw EvalError("unreachable");
    }

    static bool is_vec(const Value& v) { return std::holds_alternative<V>(v); }

    F form(const Value& v) const {
        if (const F* f = std::get_if<F>(&v)) return *f;
        if (const C* c = std::get_if<C>(&v)) return F::basis(n_, 0, *c);
        throw std::invalid_argument("expected a form");
    }

    V vec(const Value& v) const {
        if (const V* a = std::get_if<V>(&v)) return *a;
        if (const C* c = std::get_if<C>(&v)) return V::basis(n_, 0, *c);
        throw std::invalid_argument("expected a multivector");
    }

    static const std::string& text(const Value& v, const char* what) {
        if (const std::string* s = std::get_if<std::string>(&v)) return *s;
        throw std::invalid_argument(std::string("expected ") + what);
    }

    static void arity(const Node& node, std::size_t want) {
        if (node.args.size() != want)
            throw EvalError(node.fn + ": expected " + std::to_string(want) + " argument" + (want == 1 ? "" : "s") +
                            ", got " + std::to_string(node.args.size()));
    }

    static void need_ring(const Node& node, const char* ring) {
        if (std::string(C::ring_name) != ring) throw EvalError(node.fn + ": requires the " + ring + " ring");
    }

    Value apply(const Node& node, const std::vector<Value>& a) {
        const std::string& fn = node.fn;
        if (fn == "d") {
            arity(node, 1);
            return d(form(a[0]));
        }
        if (fn == "bracket") {
            arity(node, 2);
            if (is_vec(a[0]) || is_vec(a[1])) return lie_bracket(vec(a[0]), vec(a[1]));
            return leibniz_bracket(form(a[0]), form(a[1]));
        }
        if (fn == "iota") {
            arity(node, 2);
            return contract(vec(a[0]), form(a[1]));
        }
        if (fn == "flat") {
            arity(node, 1);
            return flat(vec(a[0]));
        }
        if (fn == "sharp") {
            arity(node, 1);
            return sharp(form(a[0]));
        }
        if (fn == "Xfield") {
            arity(node, 1);
            return hamiltonian_field(form(a[0]));
        }
        if (fn == "delta") {
            arity(node, 1);
            return delta(vec(a[0]));
        }
        if (fn == "div") {
            arity(node, 1);
            return divergence(vec(a[0]));
        }
        if (fn == "lie") {
            arity(node, 2);
            if (is_vec(a[1])) return lie_derivative(vec(a[0]), vec(a[1]));
            return lie_derivative(vec(a[0]), form(a[1]));
        }
        if (fn == "wedge") {
            arity(node, 2);
            if (is_vec(a[0]) || is_vec(a[1])) return wedge(vec(a[0]), vec(a[1]));
            return wedge(form(a[0]), form(a[1]));
        }
        if constexpr (std::is_same_v<C, PolyCoeff>) {
            if (fn == "decompose") {
                arity(node, 1);
                const PVec B = is_vec(a[0]) ? vec(a[0]) : sharp(form(a[0]));
                return witness_json(commutator_decompose(B)).dump();
            }
            if (fn == "squares") {
                arity(node, 1);
                return witness_json(square_decompose(form(a[0]))).dump();
            }
            if (fn == "factor") {
                arity(node, 1);
                const DiffOp D = diffop_from_json(nlohmann::json::parse(text(a[0], "an operator in JSON")));
                return factorization_json(D, factor_through_d(D)).dump();
            }
        }
        if constexpr (std::is_same_v<C, TrigCoeff>) {
            if (fn == "lich") {
                arity(node, 3);
                return lichnerowicz(form(a[0]), vec(a[1]), vec(a[2]));
            }
            if (fn == "cycle") {
                arity(node, 3);
                std::smatch m;
                const std::string& spec = text(a[0], "a cycle such as x1=x2=0");
                std::regex_match(spec, m, cycle_pattern());
                const int p = std::stoi(m[1]) - 1, q = std::stoi(m[2]) - 1;
                return cycle_cocycle(CycleSpec::from_fixed(n_, std::min(p, q), std::max(p, q)), vec(a[1]), vec(a[2]));
            }
            if (fn == "cocycle") {
                arity(node, 3);
                const auto [l, r] = cocycle_vs_bracket(form(a[0]), form(a[1]), form(a[2]));
                return to_string(l) + "; " + to_string(r);
            }
            if (fn == "normal") {
                arity(node, 1);
                return normal_form(form(a[0])).rep;
            }
            if (fn == "potential") {
                arity(node, 1);
                return potential(vec(a[0]));
            }
            if (fn == "cbracket") {
                arity(node, 2);
                return central_bracket(normal_form(form(a[0])), normal_form(form(a[1]))).rep;
            }
        }
        static const std::vector<std::string> poly_only = {"decompose", "squares", "factor"};
        need_ring(node, std::find(poly_only.begin(), poly_only.end(), fn) != poly_only.end() ? "poly" : "trig");
        throw EvalError(fn + ": not available");
    }

    int n_;
};

}  // namespace

const std::vector<std::string>& eval_functions() {
    static const std::vector<std::string> f = {"bracket", "d",      "iota",    "flat",   "sharp",     "Xfield",
                                               "delta",   "div",    "lie",     "wedge",  "decompose", "squares",
                                               "factor",  "lich",   "cycle",   "cocycle", "normal",   "potential",
                                               "cbracket"};
    return f;
}

EvalResult eval_expr(std::string_view expr, const EvalOptions& defaults) {
    std::string_view body = expr;
    std::string ring = defaults.ring;
    int n = defaults.n;
    bool explicit_ring = !ring.empty();
    if (const auto at = suffix_at(expr)) {
        body = expr.substr(0, *at);
        std::size_t i = *at + 1;
        while (i < expr.size()) {
            while (i < expr.size() && is_space(expr[i])) ++i;
            if (i >= expr.size()) break;
            std::size_t j = i;
            while (j < expr.size() && !is_space(expr[j])) ++j;
            const std::string tok(expr.substr(i, j - i));
            if (tok == "poly" || tok == "trig") {
                ring = tok;
                explicit_ring = true;
            } else if (tok.rfind("n=", 0) == 0 && tok.size() > 2 &&
                       std::all_of(tok.begin() + 2, tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                n = std::stoi(tok.substr(2));
            } else {
                throw ParseError("unknown suffix '" + tok + "'", i);
            }
            i = j;
        }
    }
    const Node root = Parser(body, 0).parse_all();
    LeafScan info;
    scan(root, info);
    if (!explicit_ring) ring = info.trig ? "trig" : "poly";
    if (ring != "poly" && ring != "trig") throw EvalError("unknown ring '" + ring + "'");
    if (n <= 0) n = std::max(info.n, 1);
    if (n < info.n) throw EvalError("index " + std::to_string(info.n) + " exceeds n=" + std::to_string(n));
    if (n > kMaxDim) throw EvalError("n must be at most " + std::to_string(kMaxDim));

    EvalResult out{"", ring, n};
    if (ring == "trig") {
        Evaluator<TrigCoeff> ev(n);
        out.text = Evaluator<TrigCoeff>::print(ev.eval(root));
    } else {
        Evaluator<PolyCoeff> ev(n);
        out.text = Evaluator<PolyCoeff>::print(ev.eval(root));
    }
    return out;
}

json witness_json(const BracketWitness& w) {
    json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = "brackets";
    j["n"] = w.target.dim();
    j["target"] = format(w.target);
    j["pairs"] = json::array();
    for (const auto& p : w.pairs)
        j["pairs"].push_back({{"left", format(p.left)},
                              {"right", format(p.right)},
                              {"left_bivector", format(p.left_bivector)},
                              {"right_bivector", format(p.right_bivector)}});
    j["verified"] = w.verify();
    j["count"] = w.count();
    j["bound"] = bracket_bound(w.target.dim());
    return j;
}

json witness_json(const SquareWitness& w) {
    const int n = w.target.dim();
    json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = "squares";
    j["n"] = n;
    j["target"] = format(w.target);
    j["potentials"] = json::array();
    PForm squares(n, n - 2);
    bool each = true;
    for (const auto& t : w.terms) {
        const PForm sq = leibniz_bracket(t.alpha, t.alpha);
        squares += sq;
        const bool local = contraction_identity_holds(t) && d(contract(hamiltonian_field(t.alpha), t.alpha)) == sq;
        each = each && local;
        j["potentials"].push_back({{"alpha", format(t.alpha)}, {"X", format(t.X)}, {"Y", format(t.Y)}, {"square", format(sq)}});
    }
    j["sum_of_squares"] = format(squares);
    j["verified"] = w.verify() && each && squares == d(w.target);
    j["count"] = w.count();
    j["bound"] = square_bound(n);
    return j;
}

json factorization_json(const DiffOp& D, const Factorization& f) {
    json j;
    j["format_version"] = kFormatVersion;
    j["D"] = diffop_to_json(D);
    j["Q"] = diffop_to_json(f.Q);
    j["iterations"] = f.iterations;
    j["stages"] = json::array();
    for (const auto& s : f.stages) j["stages"].push_back({{"l", s.l}, {"property1", s.property1}, {"property2", s.property2}});
    j["verified"] = f.verified;
    return j;
}

}  // namespace leibform
