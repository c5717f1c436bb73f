#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

#include "leibform/coefficient.hpp"

namespace leibform {

// --- Rational ---------------------------------------------------------------

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Rational r;
    r.get_num() = mpz_class(std::string(num));
    r.get_den() = mpz_class(std::string(den));
    if (r.get_den() == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

// --- GaussianRational -------------------------------------------------------

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    const Rational n = o.norm2();
    if (sgn(n) == 0) throw std::domain_error("division by zero Gaussian rational");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string to_string(const GaussianRational& z) {
    if (z.is_real()) return to_string(z.re());
    const std::string im = (z.im() == 1) ? "i" : (z.im() == -1) ? "-i" : to_string(z.im()) + "i";
    if (is_zero(z.re())) return im;
    const std::string sep = sgn(z.im()) < 0 ? "" : "+";
    return "(" + to_string(z.re()) + sep + im + ")";
}

GaussianRational parse_gaussian(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw std::invalid_argument("empty Gaussian rational");

    auto parse_imag = [&](std::string_view part) -> Rational {
        // part ends with 'i'
        std::string_view body = part.substr(0, part.size() - 1);
        if (body.empty() || body == "+") return Rational(1);
        if (body == "-") return Rational(-1);
        return parse_rational(body);
    };

    if (s.back() != 'i') return GaussianRational(parse_rational(s));
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size() - 1; i > 0; --i) {
        if (s[i] == '+' || s[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return GaussianRational(Rational(0), parse_imag(s));
    return GaussianRational(parse_rational(std::string_view(s).substr(0, split)),
                            parse_imag(std::string_view(s).substr(split)));
}

// --- index helpers ----------------------------------------------------------

std::vector<MultiIndex> monomials_of_degree(int dim, int deg) {
    std::vector<MultiIndex> out;
    if (deg < 0) return out;
    MultiIndex cur{};
    // Recursive fill of the first dim slots.
    auto rec = [&](auto&& self, int axis, int left) -> void {
        if (axis == dim - 1) {
            cur[static_cast<std::size_t>(axis)] = left;
            out.push_back(cur);
            cur[static_cast<std::size_t>(axis)] = 0;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[static_cast<std::size_t>(axis)] = e;
            self(self, axis + 1, left - e);
        }
        cur[static_cast<std::size_t>(axis)] = 0;
    };
    rec(rec, 0, deg);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

std::vector<IndexSet> subsets_of_size(int dim, int k) {
    std::vector<IndexSet> out;
    if (k < 0 || k > dim) return out;
    for (IndexSet s = 0; s <= full_set(dim); ++s)
        if (set_size(s) == k) out.push_back(s);
    std::sort(out.begin(), out.end(), LexSetLess{});
    return out;
}

// --- PolyCoeff ---------------------------------------------------------------

PolyCoeff PolyCoeff::constant(int dim, const Rational& c) { return monomial(dim, MultiIndex{}, c); }

PolyCoeff PolyCoeff::variable(int dim, int axis) {
    check_axis(axis, dim);
    return monomial(dim, unit_index(axis));
}

PolyCoeff PolyCoeff::monomial(int dim, const MultiIndex& exponent, const Rational& c) {
    PolyCoeff p(dim);
    for (int i = dim; i < kMaxDim; ++i)
        if (exponent[static_cast<std::size_t>(i)] != 0) throw std::invalid_argument("exponent beyond dimension");
    for (int e : exponent)
        if (e < 0) throw std::invalid_argument("negative exponent");
    p.add_term(exponent, c);
    return p;
}

int PolyCoeff::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool PolyCoeff::is_homogeneous(int deg) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return total_degree(t.first) == deg; });
}

Rational PolyCoeff::coefficient(const MultiIndex& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PolyCoeff::add_term(const MultiIndex& exponent, const Rational& c) {
    if (leibform::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (leibform::is_zero(it->second)) terms_.erase(it);
    }
}

PolyCoeff PolyCoeff::derive(int axis) const {
    check_axis(axis, dim_);
    PolyCoeff out(dim_);
    const auto a = static_cast<std::size_t>(axis);
    for (const auto& [e, c] : terms_) {
        if (e[a] == 0) continue;
        MultiIndex lowered = e;
        lowered[a] -= 1;
        out.terms_.emplace(lowered, c * e[a]);
    }
    return out;
}

PolyCoeff PolyCoeff::primitive(int axis) const {
    check_axis(axis, dim_);
    PolyCoeff out(dim_);
    const auto a = static_cast<std::size_t>(axis);
    for (const auto& [e, c] : terms_) {
        MultiIndex raised = e;
        raised[a] += 1;
        out.terms_.emplace(raised, c / raised[a]);
    }
    return out;
}

PolyCoeff PolyCoeff::shifted(const MultiIndex& shift) const {
    PolyCoeff out(dim_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
    return out;
}

PolyCoeff PolyCoeff::operator-() const {
    PolyCoeff out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

void PolyCoeff::check_same_dim(const PolyCoeff& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("polynomial dimension mismatch");
}

PolyCoeff& PolyCoeff::operator+=(const PolyCoeff& o) {
    check_same_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PolyCoeff& PolyCoeff::operator-=(const PolyCoeff& o) {
    check_same_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PolyCoeff& PolyCoeff::operator*=(const Rational& r) {
    if (leibform::is_zero(r)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= r;
    return *this;
}

PolyCoeff operator*(const PolyCoeff& a, const PolyCoeff& b) {
    a.check_same_dim(b);
    PolyCoeff out(a.dim_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

PolyCoeff primitive_in_axis(const PolyCoeff& f, int axis) { return f.primitive(axis); }

// --- TrigCoeff ---------------------------------------------------------------

TrigCoeff TrigCoeff::constant(int dim, const GaussianRational& c) { return mode(dim, MultiIndex{}, c); }

TrigCoeff TrigCoeff::mode(int dim, const MultiIndex& frequency, const GaussianRational& c) {
    TrigCoeff t(dim);
    for (int i = dim; i < kMaxDim; ++i)
        if (frequency[static_cast<std::size_t>(i)] != 0) throw std::invalid_argument("frequency beyond dimension");
    t.add_mode(frequency, c);
    return t;
}

GaussianRational TrigCoeff::coefficient(const MultiIndex& frequency) const {
    auto it = modes_.find(frequency);
    return it == modes_.end() ? GaussianRational() : it->second;
}

void TrigCoeff::add_mode(const MultiIndex& frequency, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = modes_.try_emplace(frequency, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) modes_.erase(it);
    }
}

int TrigCoeff::max_frequency() const {
    int m = 0;
    for (const auto& [k, c] : modes_)
        for (int v : k) m = std::max(m, v < 0 ? -v : v);
    return m;
}

TrigCoeff TrigCoeff::derive(int axis) const {
    check_axis(axis, dim_);
    TrigCoeff out(dim_);
    const auto a = static_cast<std::size_t>(axis);
    for (const auto& [k, c] : modes_)
        if (k[a] != 0) out.modes_.emplace(k, c * Rational(k[a]));
    return out;
}

TrigCoeff TrigCoeff::conj() const {
    TrigCoeff out(dim_);
    for (const auto& [k, c] : modes_) out.modes_.emplace(MultiIndex{} - k, c.conj());
    return out;
}

bool TrigCoeff::is_real() const { return conj() == *this; }

TrigCoeff TrigCoeff::constant_part() const { return constant(dim_, integral()); }

TrigCoeff TrigCoeff::operator-() const {
    TrigCoeff out(*this);
    for (auto& [k, c] : out.modes_) c = -c;
    return out;
}

void TrigCoeff::check_same_dim(const TrigCoeff& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("trig dimension mismatch");
}

TrigCoeff& TrigCoeff::operator+=(const TrigCoeff& o) {
    check_same_dim(o);
    for (const auto& [k, c] : o.modes_) add_mode(k, c);
    return *this;
}

TrigCoeff& TrigCoeff::operator-=(const TrigCoeff& o) {
    check_same_dim(o);
    for (const auto& [k, c] : o.modes_) add_mode(k, -c);
    return *this;
}

TrigCoeff& TrigCoeff::operator*=(const Rational& r) {
    if (leibform::is_zero(r)) {
        modes_.clear();
        return *this;
    }
    for (auto& [k, c] : modes_) c *= r;
    return *this;
}

TrigCoeff& TrigCoeff::operator*=(const GaussianRational& z) {
    if (z.is_zero()) {
        modes_.clear();
        return *this;
    }
    for (auto& [k, c] : modes_) c *= z;
    return *this;
}

TrigCoeff operator*(const TrigCoeff& a, const TrigCoeff& b) {
    a.check_same_dim(b);
    TrigCoeff out(a.dim_);
    for (const auto& [ka, ca] : a.modes_)
        for (const auto& [kb, cb] : b.modes_) out.add_mode(ka + kb, ca * cb);
    return out;
}

}  // namespace leibform
