#include "leibform/graded_rep.hpp"

#include <map>
#include <stdexcept>

namespace leibform {

Weight normalize_weight(Weight w, int n) {
    // Representative with last coordinate zero.
    const int shift = w[static_cast<std::size_t>(n - 1)];
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] -= shift;
    for (int i = n; i < kMaxDim; ++i) w[static_cast<std::size_t>(i)] = 0;
    return w;
}

namespace {

std::map<MultiIndex, std::size_t, GrlexLess> monomial_index(const std::vector<MultiIndex>& monos) {
    std::map<MultiIndex, std::size_t, GrlexLess> idx;
    for (std::size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], i);
    return idx;
}

Weight field_weight(const MultiIndex& sigma, int axis, int n) {
    Weight w{};
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = sigma[static_cast<std::size_t>(i)];
    w[static_cast<std::size_t>(axis)] -= 1;
    return normalize_weight(w, n);
}

PField field_from_columns(const FieldSpace& s, const SparseVector& v) {
    std::vector<PolyCoeff> comps(static_cast<std::size_t>(s.n), PolyCoeff::zero(s.n));
    for (const auto& [col, c] : v) {
        const auto m = static_cast<std::size_t>(col / s.n);
        comps[static_cast<std::size_t>(col % s.n)].add_term(s.monomials[m], c);
    }
    return vector_field(comps);
}

std::size_t binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

DenseMatrix zeros(std::size_t r, std::size_t c) { return DenseMatrix(r, std::vector<Rational>(c, Rational(0))); }

void check_n(int n, const char* op) {
    if (n < 2 || n > kMaxDim) throw std::invalid_argument(std::string(op) + ": dimension out of range");
}

}  // namespace

SparseVector FieldSpace::columns_of(const PField& X) const {
    if (X.degree() != 1 || X.dim() != n) throw std::invalid_argument("columns_of: expected a vector field in dimension " + std::to_string(n));
    const auto& idx = monomial_pos;
    SparseVector v;
    for (const auto& [ib, c] : X.terms()) {
        const int j = std::countr_zero(ib);
        for (const auto& [e, val] : c.terms()) {
            auto it = idx.find(e);
            if (it == idx.end()) throw std::invalid_argument("columns_of: coefficient is not homogeneous of degree " + std::to_string(k));
            v.emplace(column(it->second, j), val);
        }
    }
    return v;
}

std::vector<Rational> FieldSpace::coordinates(const PField& X) const {
    const SparseVector v = columns_of(X);
    std::vector<Rational> out(free_columns.size(), Rational(0));
    for (std::size_t i = 0; i < free_columns.size(); ++i) {
        auto it = v.find(free_columns[i]);
        if (it != v.end()) out[i] = it->second;
    }
    return out;
}

bool FieldSpace::contains(const PField& X) const {
    SparseVector v;
    try {
        v = columns_of(X);
    } catch (const std::invalid_argument&) {
        return false;
    }
    const auto coords = coordinates(X);
    SparseVector rebuilt;
    for (std::size_t i = 0; i < coords.size(); ++i) axpy(rebuilt, coords[i], columns_of(vectors[i]));
    return rebuilt == v;
}

FieldSpace basis_all_fields(int n, int k) {
    check_n(n, "basis_all_fields");
    FieldSpace s;
    s.n = n;
    s.k = k;
    s.monomials = monomials_of_degree(n, k);
    s.monomial_pos = monomial_index(s.monomials);
    for (std::size_t m = 0; m < s.monomials.size(); ++m)
        for (int j = 0; j < n; ++j) {
            s.free_columns.push_back(s.column(m, j));
            s.vectors.push_back(PField::basis(n, bit(j), PolyCoeff::monomial(n, s.monomials[m])));
            s.weights.push_back(field_weight(s.monomials[m], j, n));
        }
    return s;
}

FieldSpace basis_divfree(int n, int k) {
    check_n(n, "basis_divfree");
    if (k < 0) throw std::invalid_argument("basis_divfree: negative degree");
    FieldSpace s;
    s.n = n;
    s.k = k;
    s.monomials = monomials_of_degree(n, k);
    s.monomial_pos = monomial_index(s.monomials);
    const auto& idx = s.monomial_pos;
    SparseEchelon e;
    // div(sum c_{m,j} x^{sigma_m} d_j) has x^tau coefficient sum_j (tau_j + 1) c_{tau + e_j, j}.
    for (const auto& tau : monomials_of_degree(n, k - 1)) {
        SparseVector row;
        for (int j = 0; j < n; ++j) {
            const MultiIndex up = tau + unit_index(j);
            row.emplace(s.column(idx.at(up), j), Rational(up[static_cast<std::size_t>(j)]));
        }
        e.add(std::move(row));
    }
    const int cols = static_cast<int>(s.monomials.size()) * n;
    const auto pivots = e.pivot_columns();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    const auto kernel = e.kernel_basis(cols);
    std::size_t next = 0;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        s.free_columns.push_back(c);
        s.vectors.push_back(field_from_columns(s, kernel[next++]));
        s.weights.push_back(field_weight(s.monomials[static_cast<std::size_t>(c / n)], c % n, n));
    }
    return s;
}

std::size_t divfree_dim_formula(int n, int k) {
    return static_cast<std::size_t>(n) * binom(n + k - 1, n - 1) - binom(n + k - 2, n - 1);
}

bool grading_check(int n, int k, int l) {
    const FieldSpace a = basis_divfree(n, k);
    const FieldSpace b = basis_divfree(n, l);
    const int target_deg = k + l - 1;
    if (target_deg < 0) {
        for (const auto& x : a.vectors)
            for (const auto& y : b.vectors)
                if (!lie_bracket(x, y).is_zero()) return false;
        return true;
    }
    const FieldSpace c = basis_divfree(n, target_deg);
    for (const auto& x : a.vectors)
        for (const auto& y : b.vectors)
            if (!c.contains(lie_bracket(x, y))) return false;
    return true;
}

RepMatrix action_on_fields(const FieldSpace& gens, const FieldSpace& space) {
    RepMatrix rep;
    rep.dim = space.dim();
    rep.weights = space.weights;
    rep.generator_weights = gens.weights;
    for (const auto& g : gens.vectors) {
        DenseMatrix a = zeros(rep.dim, rep.dim);
        for (std::size_t q = 0; q < rep.dim; ++q) {
            const PField image = lie_bracket(g, space.vectors[q]);
            if (!space.contains(image)) throw std::logic_error("action_on_fields: image leaves the space");
            const auto coords = space.coordinates(image);
            for (std::size_t p = 0; p < rep.dim; ++p) a[p][q] = coords[p];
        }
        rep.actions.push_back(std::move(a));
    }
    return rep;
}

RepMatrix action_on_wedge(const FieldSpace& gens, int m) {
    const int n = gens.n;
    const auto sets = subsets_of_size(n, m);
    std::map<IndexSet, std::size_t> idx;
    for (std::size_t i = 0; i < sets.size(); ++i) idx.emplace(sets[i], i);
    RepMatrix rep;
    rep.dim = sets.size();
    rep.generator_weights = gens.weights;
    for (IndexSet I : sets) {
        Weight w{};
        for (int i : elements(I)) w[static_cast<std::size_t>(i)] = -1;
        rep.weights.push_back(normalize_weight(w, n));
    }
    const PolyCoeff one = PolyCoeff::constant(n, 1);
    for (const auto& g : gens.vectors) {
        DenseMatrix a = zeros(rep.dim, rep.dim);
        for (std::size_t q = 0; q < sets.size(); ++q) {
            const PVec image = lie_derivative(g, PVec::basis(n, sets[q], one));
            for (const auto& [J, c] : image.terms()) a[idx.at(J)][q] = c.coefficient(MultiIndex{});
        }
        rep.actions.push_back(std::move(a));
    }
    return rep;
}

bool commutator_law_holds(const FieldSpace& gens, const RepMatrix& rep) {
    const std::size_t G = gens.dim();
    auto mul = [&](const DenseMatrix& x, const DenseMatrix& y) {
        DenseMatrix out = zeros(rep.dim, rep.dim);
        for (std::size_t i = 0; i < rep.dim; ++i)
            for (std::size_t l = 0; l < rep.dim; ++l) {
                if (sgn(x[i][l]) == 0) continue;
                for (std::size_t j = 0; j < rep.dim; ++j) out[i][j] += x[i][l] * y[l][j];
            }
        return out;
    };
    for (std::size_t a = 0; a < G; ++a)
        for (std::size_t b = 0; b < G; ++b) {
            DenseMatrix lhs = mul(rep.actions[a], rep.actions[b]);
            const DenseMatrix ba = mul(rep.actions[b], rep.actions[a]);
            const auto coords = gens.coordinates(lie_bracket(gens.vectors[a], gens.vectors[b]));
            for (std::size_t i = 0; i < rep.dim; ++i)
                for (std::size_t j = 0; j < rep.dim; ++j) {
                    Rational rhs(0);
                    for (std::size_t c = 0; c < G; ++c)
                        if (sgn(coords[c]) != 0) rhs += coords[c] * rep.actions[c][i][j];
                    if (lhs[i][j] - ba[i][j] != rhs) return false;
                }
        }
    return true;
}

std::size_t equivariant_dim(const RepMatrix& source, const RepMatrix& target) {
    if (source.actions.size() != target.actions.size()) throw std::invalid_argument("equivariant_dim: generator counts differ");
    // Commuting with the Cartan elements forces D to preserve weights.
    std::map<std::pair<std::size_t, std::size_t>, int> var;
    for (std::size_t p = 0; p < target.dim; ++p)
        for (std::size_t q = 0; q < source.dim; ++q)
            if (target.weights[p] == source.weights[q]) var.emplace(std::make_pair(p, q), static_cast<int>(var.size()));
    if (var.empty()) return 0;

    SparseEchelon e;
    for (std::size_t g = 0; g < source.actions.size(); ++g) {
        const DenseMatrix& At = target.actions[g];
        const DenseMatrix& As = source.actions[g];
        // Equation (p,q): sum_r At[p][r] D[r][q] - sum_r D[p][r] As[r][q]
        std::map<std::pair<std::size_t, std::size_t>, SparseVector> eqs;
        for (const auto& [pq, id] : var) {
            const auto [r, q] = pq;
            for (std::size_t p = 0; p < target.dim; ++p)
                if (sgn(At[p][r]) != 0) axpy(eqs[{p, q}], At[p][r], {{id, Rational(1)}});
        }
        for (const auto& [pr, id] : var) {
            const auto [p, r] = pr;
            for (std::size_t q = 0; q < source.dim; ++q)
                if (sgn(As[r][q]) != 0) axpy(eqs[{p, q}], -As[r][q], {{id, Rational(1)}});
        }
        for (auto& [pq, row] : eqs)
            if (!row.empty()) e.add(std::move(row));
    }
    return var.size() - e.rank();
}

namespace {

std::string field_label(const FieldSpace& s, int col) {
    const MultiIndex& sigma = s.monomials[static_cast<std::size_t>(col / s.n)];
    std::string out;
    for (int i = 0; i < s.n; ++i) {
        const int e = sigma[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        out += "x" + std::to_string(i + 1);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out + "d" + std::to_string(col % s.n + 1);
}

}  // namespace

FiniteAlgebra divfree_algebra(const FieldSpace& space) {
    if (space.k != 1) throw std::invalid_argument("divfree_algebra: only the degree-1 space is closed under the bracket");
    const std::size_t d = space.dim();
    std::vector<std::string> labels;
    for (int c : space.free_columns) labels.push_back(field_label(space, c));
    std::vector<std::vector<SparseVector>> structure(d, std::vector<SparseVector>(d));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            structure[a][b] = to_sparse(space.coordinates(lie_bracket(space.vectors[a], space.vectors[b])));
    return FiniteAlgebra(std::move(labels), std::move(structure), AlgebraKind::lie);
}

Module as_module(const RepMatrix& rep, const std::string& name) { return Module{name, rep.dim, rep.actions}; }

FiniteAlgebra truncated_divfree_algebra(int n, int K) {
    if (K < 0) throw std::invalid_argument("truncated_divfree_algebra: K must be nonnegative");
    std::vector<FieldSpace> pieces;
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (int k = 0; k <= K; ++k) {
        pieces.push_back(basis_divfree(n, k));
        offset.push_back(total);
        total += pieces.back().dim();
    }
    std::vector<std::string> labels;
    std::vector<int> grading;
    for (int k = 0; k <= K; ++k)
        for (int c : pieces[static_cast<std::size_t>(k)].free_columns) {
            labels.push_back(field_label(pieces[static_cast<std::size_t>(k)], c));
            grading.push_back(k);
        }
    std::vector<std::vector<SparseVector>> structure(total, std::vector<SparseVector>(total));
    for (int k = 0; k <= K; ++k)
        for (int l = 0; l <= K; ++l) {
            const int deg = k + l - 1;
            if (deg < 0 || deg > K) continue;
            const auto& A = pieces[static_cast<std::size_t>(k)];
            const auto& B = pieces[static_cast<std::size_t>(l)];
            const auto& C = pieces[static_cast<std::size_t>(deg)];
            for (std::size_t a = 0; a < A.dim(); ++a)
                for (std::size_t b = 0; b < B.dim(); ++b) {
                    const auto coords = C.coordinates(lie_bracket(A.vectors[a], B.vectors[b]));
                    SparseVector& out = structure[offset[static_cast<std::size_t>(k)] + a][offset[static_cast<std::size_t>(l)] + b];
                    for (std::size_t c = 0; c < coords.size(); ++c)
                        if (sgn(coords[c]) != 0) out[static_cast<int>(offset[static_cast<std::size_t>(deg)] + c)] = coords[c];
                }
        }
    return FiniteAlgebra(std::move(labels), std::move(structure), AlgebraKind::truncated, std::move(grading), K);
}

Module truncated_wedge_module(int n, int K, int m) {
    Module out{"wedge(" + std::to_string(n) + "," + std::to_string(m) + ")", 0, {}};
    for (int k = 0; k <= K; ++k) {
        RepMatrix rep = action_on_wedge(basis_divfree(n, k), m);
        out.dim = rep.dim;
        for (auto& a : rep.actions) out.action.push_back(std::move(a));
    }
    return out;
}

std::size_t whitehead_h1(int n, bool trivial) {
    if (n < 3) throw std::invalid_argument("whitehead_h1: needs n >= 3");
    const FieldSpace x1 = basis_divfree(n, 1);
    const FiniteAlgebra g = divfree_algebra(x1);
    const Module m = trivial ? trivial_module(g) : as_module(action_on_wedge(x1, n - 2), "wedge");
    return h_dim(g, m, 1);
}

std::size_t intertwiner_dim(int n, int k) {
    if (n < 3 || k < 2) throw std::invalid_argument("intertwiner_dim: needs n >= 3 and k >= 2");
    const FieldSpace x1 = basis_divfree(n, 1);
    return equivariant_dim(action_on_fields(x1, basis_divfree(n, k)), action_on_wedge(x1, n - 2));
}

std::size_t endo_dim_tensor(int n, int k) {
    if (n < 3 || k < 2) throw std::invalid_argument("endo_dim_tensor: needs n >= 3 and k >= 2");
    const FieldSpace x1 = basis_divfree(n, 1);
    const RepMatrix s = action_on_fields(x1, basis_all_fields(n, k));
    return equivariant_dim(s, s);
}

DenseMatrix wedge_matrix(const DenseMatrix& A, int n, int m) {
    const auto sets = subsets_of_size(n, m);
    std::map<IndexSet, std::size_t> idx;
    for (std::size_t i = 0; i < sets.size(); ++i) idx.emplace(sets[i], i);
    DenseMatrix out = zeros(sets.size(), sets.size());
    for (std::size_t q = 0; q < sets.size(); ++q)
        for (int s : elements(sets[q]))
            for (int r = 0; r < n; ++r) {
                const Rational& a = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
                if (sgn(a) == 0) continue;
                const int sign = detail::replacement_sign(sets[q], s, r);
                if (sign == 0) continue;
                out[idx.at((sets[q] & ~bit(s)) | bit(r))][q] += sign > 0 ? a : Rational(-a);
            }
    return out;
}

DenseMatrix linear_field_matrix(const PField& X) {
    const int n = X.dim();
    DenseMatrix A = zeros(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (const auto& [ib, c] : X.terms()) {
        const auto i = static_cast<std::size_t>(std::countr_zero(ib));
        for (const auto& [e, v] : c.terms()) {
            if (total_degree(e) != 1) throw std::invalid_argument("linear_field_matrix: field is not linear");
            for (int j = 0; j < n; ++j)
                if (e[static_cast<std::size_t>(j)] == 1) A[i][static_cast<std::size_t>(j)] = v;
        }
    }
    return A;
}

}  // namespace leibform
