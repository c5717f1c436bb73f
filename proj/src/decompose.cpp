#include "leibform/decompose.hpp"

#include <stdexcept>

namespace leibform {

namespace {

std::size_t choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

void require_dim3(int n, const char* op) {
    if (n < 3) throw std::invalid_argument(std::string(op) + ": needs n >= 3, got n = " + std::to_string(n));
}

PField unit_field(int n, int axis, const PolyCoeff& c) { return PField::basis(n, bit(axis), c); }

}  // namespace

std::size_t bracket_bound(int n) { return choose(n, 2) * static_cast<std::size_t>(n + 1); }
std::size_t square_bound(int n) { return 4 * choose(n, 3); }

PForm BracketWitness::evaluate() const {
    PForm sum(target.dim(), target.degree());
    for (const auto& p : pairs) sum += leibniz_bracket(p.left, p.right);
    return sum;
}

PForm SquareWitness::evaluate() const {
    PForm sum(target.dim(), target.degree());
    for (const auto& t : terms) sum += contract(hamiltonian_field(t.alpha), t.alpha);
    return sum;
}

BracketWitness commutator_decompose(const PVec& B) {
    const int n = B.dim();
    require_dim3(n, "commutator_decompose");
    if (B.degree() != 2) throw std::invalid_argument("commutator_decompose: expected a bivector");
    BracketWitness w{{}, flat(B)};
    const PolyCoeff one = PolyCoeff::constant(n, 1);
    for (const auto& [idx, g] : B.terms()) {
        const auto axes = elements(idx);
        const int y = axes[0];
        const int z = axes[1];
        // Derivative axis: smallest index other than y. It may coincide with z.
        const int x = (y == 0) ? 1 : 0;
        // X_{flat(x_y e_x ^ e_y)} = e_x, and L_{e_x}(h e_y ^ e_z) = g e_y ^ e_z.
        PVec left = wedge(unit_field(n, x, PolyCoeff::variable(n, y)), unit_field(n, y, one));
        PVec right = PVec::basis(n, idx, primitive_in_axis(g, x));
        PForm lf = flat(left);
        PForm rf = flat(right);
        w.pairs.push_back({std::move(left), std::move(right), std::move(lf), std::move(rf)});
    }
    return w;
}

SquareWitness square_decompose(const PForm& b) {
    const int n = b.dim();
    require_dim3(n, "square_decompose");
    if (b.degree() != n - 3)
        throw std::invalid_argument("square_decompose: expected a form of degree n-3 = " + std::to_string(n - 3));
    SquareWitness w{{}, b};
    const IndexSet all = full_set(n);
    for (const auto& [idx, coeff] : b.terms()) {
        const IndexSet triple = all & ~idx;
        const auto axes = elements(triple);
        const int x = axes[0], y = axes[1], z = axes[2];
        // b_I dx_I = g iota_{e_x ^ e_y ^ e_z} mu
        const PolyCoeff g = contraction_sign(triple, all) > 0 ? coeff : -coeff;
        const PolyCoeff f = primitive_in_axis(g, x);
        PField X = unit_field(n, x, PolyCoeff::constant(n, 1));
        PField Y = unit_field(n, y, PolyCoeff::constant(n, 1)) - unit_field(n, z, f);
        PForm alpha = flat(wedge(X, Y));
        w.terms.push_back({std::move(X), std::move(Y), std::move(alpha)});
    }
    return w;
}

std::vector<PForm> squares_of_exact(const PForm& c, const PForm& b) {
    if (!(d(b) == c)) throw std::invalid_argument("squares_of_exact: c is not d of the given primitive");
    std::vector<PForm> out;
    for (auto& t : square_decompose(b).terms) out.push_back(std::move(t.alpha));
    return out;
}

bool contraction_identity_holds(const SquareTerm& t) {
    const PForm lhs = contract(hamiltonian_field(t.alpha), t.alpha);
    const PVec triple = wedge(wedge(lie_bracket(t.X, t.Y), t.X), t.Y);
    return lhs == -flat(triple);
}

}  // namespace leibform
