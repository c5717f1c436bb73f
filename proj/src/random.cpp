#include "leibform/random.hpp"

namespace leibform {

Rational Rng::rational(const RandomCaps& caps) {
    const long p = range(-caps.num_bound, caps.num_bound);
    const long q = range(1, caps.den_bound);
    return make_rational(p, q);
}

Rational Rng::nonzero_rational(const RandomCaps& caps) {
    long p = range(1, caps.num_bound);
    if (coin()) p = -p;
    return make_rational(p, range(1, caps.den_bound));
}

GaussianRational Rng::gaussian(const RandomCaps& caps) {
    // Half of the draws are real, which keeps cancellations frequent.
    if (coin()) return GaussianRational(nonzero_rational(caps));
    return GaussianRational(rational(caps), nonzero_rational(caps));
}

MultiIndex random_exponent(Rng& rng, int n, int max_degree) {
    MultiIndex e{};
    const long total = rng.range(0, max_degree);
    for (long t = 0; t < total; ++t) ++e[static_cast<std::size_t>(rng.range(0, n - 1))];
    return e;
}

MultiIndex random_frequency(Rng& rng, int n, int freq_cap) {
    MultiIndex k{};
    for (int j = 0; j < n; ++j) k[static_cast<std::size_t>(j)] = static_cast<int>(rng.range(-freq_cap, freq_cap));
    return k;
}

PolyCoeff random_poly(Rng& rng, int n, const RandomCaps& caps) {
    PolyCoeff f(n);
    const long terms = rng.range(1, caps.max_terms);
    for (long t = 0; t < terms; ++t) f.add_term(random_exponent(rng, n, caps.deg_cap), rng.nonzero_rational(caps));
    return f;
}

TrigCoeff random_trig(Rng& rng, int n, const RandomCaps& caps) {
    TrigCoeff f(n);
    const long terms = rng.range(1, caps.max_terms);
    for (long t = 0; t < terms; ++t) f.add_mode(random_frequency(rng, n, caps.freq_cap), rng.gaussian(caps));
    return f;
}

TField random_divfree_trig(Rng& rng, int n, const RandomCaps& caps, bool with_constant) {
    TField X = hamiltonian_field(random_form<TrigCoeff>(rng, n, n - 2, caps));
    if (with_constant)
        for (int j = 0; j < n; ++j)
            if (rng.coin()) X.add_term(bit(j), TrigCoeff::constant(n, GaussianRational(rng.rational(caps))));
    return X;
}

TForm random_constant_two_form(Rng& rng, int n) {
    TForm s(n, 2);
    for (IndexSet I : subsets_of_size(n, 2)) s.add_term(I, TrigCoeff::constant(n, GaussianRational(Rational(static_cast<int>(rng.range(-2, 2))))));
    if (s.is_zero()) s.add_term(bit(0) | bit(1), TrigCoeff::constant(n, GaussianRational(1)));
    return s;
}

DiffOp random_diffop(Rng& rng, int n, int degree, int width, int max_order, const RandomCaps& caps) {
    DiffOp D(n, degree, width);
    const auto sets = subsets_of_size(n, degree);
    if (sets.empty()) return D;
    const long terms = rng.range(1, caps.max_terms);
    for (long t = 0; t < terms; ++t) {
        const IndexSet I = sets[static_cast<std::size_t>(rng.range(0, static_cast<long>(sets.size()) - 1))];
        const MultiIndex sigma = random_exponent(rng, n, max_order);
        PolyVector value;
        for (int s = 0; s < width; ++s) value.push_back(rng.coin() ? random_poly(rng, n, caps) : PolyCoeff::zero(n));
        D.add_term(I, sigma, value);
    }
    return D;
}

Cochain random_cochain(Rng& rng, int arity, std::size_t alg_dim, std::size_t mod_dim, bool alternating) {
    if (alternating) {
        std::size_t count = 1;
        for (int i = 0; i < arity; ++i) count = count * (alg_dim - static_cast<std::size_t>(i)) / static_cast<std::size_t>(i + 1);
        std::vector<Rational> coords;
        for (std::size_t i = 0; i < count * mod_dim; ++i) coords.emplace_back(static_cast<int>(rng.range(-3, 3)));
        return alternating_from_coordinates(arity, alg_dim, mod_dim, coords);
    }
    Cochain c(arity, alg_dim, mod_dim);
    for (std::size_t t = 0; t < c.tuple_count(); ++t)
        for (std::size_t r = 0; r < mod_dim; ++r) c.at_flat(t, r) = static_cast<int>(rng.range(-3, 3));
    return c;
}

}  // namespace leibform
