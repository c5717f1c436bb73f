#include "leibform/torus.hpp"

#include <stdexcept>

namespace leibform {

TForm homotopy(const TForm& a) {
    const int n = a.dim();
    TForm out(n, a.degree() - 1);
    if (!out.in_range()) return out;
    for (const auto& [idx, c] : a.terms())
        for (const auto& [k, z] : c.modes()) {
            Rational norm(0);
            for (int j = 0; j < n; ++j) norm += k[static_cast<std::size_t>(j)] * k[static_cast<std::size_t>(j)];
            if (sgn(norm) == 0) continue;
            // iota_K dx_I, contracting each slot in turn
            for (int j : elements(idx)) {
                const int kj = k[static_cast<std::size_t>(j)];
                if (kj == 0) continue;
                GaussianRational v = z * GaussianRational(Rational(kj) / norm);
                if (count_below(idx, j) % 2) v = -v;
                out.add_term(idx & ~bit(j), TrigCoeff::mode(n, k, v));
            }
        }
    return out;
}

TForm constant_mode(const TForm& a) {
    TForm out(a.dim(), a.degree());
    for (const auto& [idx, c] : a.terms()) out.add_term(idx, c.constant_part());
    return out;
}

QuotientClass normal_form(const TForm& a) {
    return QuotientClass{constant_mode(a) + homotopy(d(a)), a};
}

bool is_exact_divfree(const TField& X) {
    if (!divergence(X).is_zero()) throw std::invalid_argument("is_exact_divfree: field has nonzero divergence");
    return constant_mode(flat(X)).is_zero();
}

TForm potential(const TField& X) {
    if (!is_exact_divfree(X)) throw std::invalid_argument("potential: field is not exact (nonzero mean)");
    return homotopy(flat(X));
}

QuotientClass central_bracket(const QuotientClass& A, const QuotientClass& B) {
    const TField XA = hamiltonian_field(A.rep);
    const TField XB = hamiltonian_field(B.rep);
    return normal_form(contract(XA, contract(XB, volume_form<TrigCoeff>(A.rep.dim()))));
}

namespace {

void require_closed_two_form(const TForm& sigma) {
    if (sigma.degree() != 2) throw std::invalid_argument("sigma must be a 2-form");
    if (!d(sigma).is_zero()) throw std::invalid_argument("sigma is not closed");
}

void require_divfree(const TField& X, const char* op) {
    if (!divergence(X).is_zero()) throw std::invalid_argument(std::string(op) + ": field has nonzero divergence");
}

}  // namespace

GaussianRational lichnerowicz(const TForm& sigma, const TField& X, const TField& Y) {
    require_closed_two_form(sigma);
    require_divfree(X, "lichnerowicz");
    require_divfree(Y, "lichnerowicz");
    // sigma(X, Y) = iota_Y iota_X sigma
    return contract(Y, contract(X, sigma)).component(0).integral();
}

CycleSpec CycleSpec::from_fixed(int dim, int a, int b) {
    check_axis(a, dim);
    check_axis(b, dim);
    if (a == b) throw std::invalid_argument("cycle: the two fixed axes must differ");
    return CycleSpec{bit(a) | bit(b), dim};
}

GaussianRational integrate_over_cycle(const CycleSpec& C, const TForm& w) {
    if (set_size(C.fixed) != 2 || (C.fixed >> C.dim)) throw std::invalid_argument("malformed cycle");
    if (w.degree() != C.dim - 2) throw std::invalid_argument("cycle integral needs an (n-2)-form");
    const IndexSet free = C.free_axes();
    GaussianRational sum;
    // Orientation of C is dx of its free axes in increasing order.
    const TrigCoeff c = w.component(free);
    for (const auto& [k, z] : c.modes()) {
        bool survives = true;
        for (int j : elements(free))
            if (k[static_cast<std::size_t>(j)] != 0) survives = false;
        if (survives) sum += z;  // e_k = 1 at the fixed coordinates 0
    }
    return sum;
}

GaussianRational cycle_cocycle(const CycleSpec& C, const TField& X, const TField& Y) {
    require_divfree(X, "cycle_cocycle");
    require_divfree(Y, "cycle_cocycle");
    return integrate_over_cycle(C, contract(X, contract(Y, volume_form<TrigCoeff>(X.dim()))));
}

std::pair<GaussianRational, GaussianRational> cocycle_vs_bracket(const TForm& sigma, const TForm& a, const TForm& b) {
    require_closed_two_form(sigma);
    const GaussianRational left = lichnerowicz(sigma, hamiltonian_field(a), hamiltonian_field(b));
    const TForm top = wedge(leibniz_bracket(a, b), sigma);
    const GaussianRational right = -top.component(full_set(a.dim())).integral();
    return {left, right};
}

PairingMatrix pairing_matrix(int n) {
    if (n < 3) throw std::invalid_argument("pairing_matrix: needs n >= 3");
    PairingMatrix p;
    p.center = subsets_of_size(n, n - 2);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) p.cycles.push_back(CycleSpec::from_fixed(n, a, b));
    const TrigCoeff one = TrigCoeff::constant(n, GaussianRational(1));
    for (IndexSet I : p.center) {
        std::vector<Rational> row;
        for (const auto& C : p.cycles) row.push_back(integrate_over_cycle(C, TForm::basis(n, I, one)).re());
        p.values.push_back(std::move(row));
    }
    return p;
}

}  // namespace leibform
