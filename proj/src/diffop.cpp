#include "leibform/diffop.hpp"

#include <stdexcept>

namespace leibform {

namespace {

PolyCoeff derive_multi(const PolyCoeff& f, const MultiIndex& sigma) {
    PolyCoeff out = f;
    for (int j = 0; j < f.dim(); ++j)
        for (int t = 0; t < sigma[static_cast<std::size_t>(j)] && !out.is_zero(); ++t) out = out.derive(j);
    return out;
}

bool all_zero(const PolyVector& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

PolyVector scaled(const PolyVector& v, const PolyCoeff& f) {
    PolyVector out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p * f);
    return out;
}

PolyVector scaled(const PolyVector& v, const Rational& r) {
    PolyVector out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p * r);
    return out;
}

Rational factorial_ratio(const MultiIndex& tau, const MultiIndex& sigma) {
    // tau! / (tau - sigma)!
    Rational r(1);
    for (std::size_t j = 0; j < tau.size(); ++j)
        for (int t = tau[j] - sigma[j] + 1; t <= tau[j]; ++t) r *= t;
    return r;
}

bool dominated(const MultiIndex& sigma, const MultiIndex& tau) {
    for (std::size_t j = 0; j < tau.size(); ++j)
        if (sigma[j] > tau[j]) return false;
    return true;
}

}  // namespace

DiffOp::DiffOp(int dim, int degree, int width) : dim_(dim), degree_(degree), width_(width) {
    check_dim(dim);
    if (degree < 0) throw std::invalid_argument("operator input degree must be nonnegative");
    if (width < 1) throw std::invalid_argument("operator output width must be positive");
}

int DiffOp::order() const {
    int o = -1;
    for (const auto& [key, v] : terms_) o = std::max(o, total_degree(key.sigma));
    return o;
}

void DiffOp::add_term(IndexSet I, const MultiIndex& sigma, const PolyVector& value) {
    if (set_size(I) != degree_ || (I >> dim_)) throw std::invalid_argument("operator term index does not match input degree");
    if (static_cast<int>(value.size()) != width_) throw std::invalid_argument("operator term has the wrong output width");
    for (int j = dim_; j < kMaxDim; ++j)
        if (sigma[static_cast<std::size_t>(j)] != 0) throw std::invalid_argument("derivative index beyond dimension");
    for (const auto& p : value)
        if (p.dim() != dim_) throw std::invalid_argument("operator value has the wrong dimension");
    if (all_zero(value)) return;
    auto [it, inserted] = terms_.try_emplace(OpKey{I, sigma}, value);
    if (!inserted) {
        for (int s = 0; s < width_; ++s) it->second[static_cast<std::size_t>(s)] += value[static_cast<std::size_t>(s)];
        if (all_zero(it->second)) terms_.erase(it);
    }
}

void DiffOp::check_compatible(const DiffOp& o) const {
    if (o.dim_ != dim_ || o.degree_ != degree_ || o.width_ != width_)
        throw std::invalid_argument("operators differ in dimension, degree or width");
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    check_compatible(o);
    for (const auto& [key, v] : o.terms_) add_term(key.I, key.sigma, v);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    check_compatible(o);
    for (const auto& [key, v] : o.terms_) add_term(key.I, key.sigma, scaled(v, Rational(-1)));
    return *this;
}

DiffOp& DiffOp::operator*=(const Rational& r) {
    if (sgn(r) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_) v = scaled(v, r);
    return *this;
}

PolyVector apply(const DiffOp& D, const PForm& a) {
    if (a.degree() != D.degree() || a.dim() != D.dim())
        throw std::invalid_argument("apply: operator acts on " + std::to_string(D.degree()) + "-forms, got degree " +
                                    std::to_string(a.degree()));
    PolyVector out(static_cast<std::size_t>(D.width()), PolyCoeff::zero(D.dim()));
    for (const auto& [key, v] : D.terms()) {
        const PolyCoeff f = derive_multi(a.component(key.I), key.sigma);
        if (f.is_zero()) continue;
        for (std::size_t s = 0; s < v.size(); ++s) out[s] += f * v[s];
    }
    return out;
}

DiffOp compose_d(const DiffOp& Q) {
    if (Q.degree() < 1) throw std::invalid_argument("compose_d: operator must act on forms of degree >= 1");
    DiffOp D(Q.dim(), Q.degree() - 1, Q.width());
    for (const auto& [key, v] : Q.terms())
        for (int j : elements(key.I)) {
            // (d a)_J = sum_{j in J} sign * d_j a_{J \ j}
            const IndexSet I = key.I & ~bit(j);
            const bool neg = count_below(I, j) % 2 == 1;
            D.add_term(I, key.sigma + unit_index(j), neg ? scaled(v, Rational(-1)) : v);
        }
    return D;
}

DiffOp compose_iota_euler(const DiffOp& D) {
    const int n = D.dim();
    DiffOp out(n, D.degree() + 1, D.width());
    for (const auto& [key, v] : D.terms())
        for (int j = 0; j < n; ++j) {
            if (contains(key.I, j)) continue;
            // (iota_E w)_I = sum_j sign x_j w_{I u j}; d_sigma(x_j f) = x_j d_sigma f + sigma_j d_{sigma - e_j} f
            const IndexSet J = key.I | bit(j);
            const Rational sign(contraction_sign(bit(j), J));
            out.add_term(J, key.sigma, scaled(v, PolyCoeff::variable(n, j) * sign));
            const int sj = key.sigma[static_cast<std::size_t>(j)];
            if (sj > 0) out.add_term(J, key.sigma - unit_index(j), scaled(v, sign * sj));
        }
    return out;
}

DiffOp truncate(const DiffOp& D, int l) {
    if (l < 0) throw std::invalid_argument("truncate: order must be nonnegative");
    DiffOp out(D.dim(), D.degree(), D.width());
    for (const auto& [key, v] : D.terms())
        if (total_degree(key.sigma) <= l) out.add_term(key.I, key.sigma, v);
    return out;
}

DiffOp truncate_by_evaluation(const DiffOp& D, int l) {
    if (l < 0) throw std::invalid_argument("truncate: order must be nonnegative");
    const int n = D.dim();
    DiffOp out(n, D.degree(), D.width());
    const PolyCoeff one = PolyCoeff::constant(n, 1);
    for (IndexSet I : subsets_of_size(n, D.degree())) {
        std::vector<std::pair<MultiIndex, PolyVector>> found;
        for (int deg = 0; deg <= l; ++deg)
            for (const auto& tau : monomials_of_degree(n, deg)) {
                PolyVector rest = apply(D, PForm::basis(n, I, PolyCoeff::monomial(n, tau)));
                for (const auto& [sigma, T] : found) {
                    if (!dominated(sigma, tau)) continue;
                    const PolyCoeff m = PolyCoeff::monomial(n, tau - sigma, factorial_ratio(tau, sigma));
                    for (std::size_t s = 0; s < rest.size(); ++s) rest[s] -= m * T[s];
                }
                const Rational inv = 1 / factorial_ratio(tau, tau);
                PolyVector T = scaled(rest, inv);
                out.add_term(I, tau, T);
                found.emplace_back(tau, std::move(T));
            }
    }
    return out;
}

std::vector<PForm> monomial_forms_of_degree(int n, int k, int degree) {
    std::vector<PForm> out;
    for (IndexSet I : subsets_of_size(n, k))
        for (const auto& tau : monomials_of_degree(n, degree)) out.push_back(PForm::basis(n, I, PolyCoeff::monomial(n, tau)));
    return out;
}

std::vector<PForm> monomial_forms(int n, int k, int max_degree) {
    std::vector<PForm> out;
    for (int deg = 0; deg <= max_degree; ++deg)
        for (auto& f : monomial_forms_of_degree(n, k, deg)) out.push_back(std::move(f));
    return out;
}

bool annihilates(const DiffOp& D, int max_degree) {
    for (const auto& a : monomial_forms(D.dim(), D.degree(), max_degree))
        if (!all_zero(apply(D, a))) return false;
    return true;
}

Factorization factor_through_d(const DiffOp& D) {
    const int k = D.degree();
    const int n = D.dim();
    if (k < 1) throw std::invalid_argument("factor_through_d: needs input degree k >= 1");
    const int order = std::max(D.order(), 0);

    for (const auto& b : monomial_forms(n, k - 1, order + 2))
        if (!all_zero(apply(D, d(b)))) throw PreconditionError("factor_through_d: D o d != 0");

    Factorization f{DiffOp(n, k + 1, D.width()), {}, 0, false};
    DiffOp Dl(n, k, D.width());
    for (int l = 0;; ++l) {
        FactorStage st;
        st.l = l;
        st.property1 = k + 1 <= n ? Dl == compose_d(f.Q) : Dl.is_zero();
        st.property2 = annihilates(D - Dl, l);
        f.stages.push_back(st);
        if (Dl == D) break;
        if (l > order) throw std::logic_error("factor_through_d: induction did not terminate within order(D)+1 steps");
        const Rational scale = Rational(1) / (k + l + 1);
        DiffOp R = truncate(compose_iota_euler(D - Dl), l) * scale;
        f.Q += R;
        Dl += compose_d(R);
        ++f.iterations;
    }

    f.verified = true;
    for (const auto& a : monomial_forms(n, k, order + 2)) {
        const PolyVector lhs = k + 1 <= n ? apply(f.Q, d(a)) : PolyVector(static_cast<std::size_t>(D.width()), PolyCoeff::zero(n));
        if (lhs != apply(D, a)) {
            f.verified = false;
            break;
        }
    }
    return f;
}

PField euler_field(int n) {
    std::vector<PolyCoeff> comps;
    for (int i = 0; i < n; ++i) comps.push_back(PolyCoeff::variable(n, i));
    return vector_field(comps);
}

bool euler_eigencheck(int k, int l, int n) {
    const PField E = euler_field(n);
    for (const auto& a : monomial_forms_of_degree(n, k, l + 1)) {
        PForm lie = contract(E, d(a));
        if (k >= 1) lie += d(contract(E, a));
        if (!(lie == a * Rational(k + l + 1))) return false;
    }
    return true;
}

DiffOp coefficient_extraction(int n, int k, IndexSet I) {
    DiffOp D(n, k, 1);
    D.add_term(I, MultiIndex{}, {PolyCoeff::constant(n, 1)});
    return D;
}

}  // namespace leibform
