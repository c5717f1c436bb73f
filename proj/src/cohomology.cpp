#include "leibform/cohomology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "leibform/index.hpp"

namespace leibform {

std::string to_string(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::lie: return "lie";
        case AlgebraKind::leibniz: return "leibniz";
        case AlgebraKind::truncated: return "truncated";
    }
    return "?";
}

// --- FiniteAlgebra -----------------------------------------------------------

SparseVector FiniteAlgebra::bracket(const SparseVector& u, const SparseVector& v) const {
    SparseVector out;
    for (const auto& [i, a] : u)
        for (const auto& [j, b] : v) axpy(out, a * b, structure_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return out;
}

FiniteAlgebra::FiniteAlgebra(std::vector<std::string> labels, std::vector<std::vector<SparseVector>> structure,
                             AlgebraKind kind, std::vector<int> grading, int window)
    : labels_(std::move(labels)), structure_(std::move(structure)), kind_(kind), grading_(std::move(grading)),
      window_(window) {
    const std::size_t n = labels_.size();
    if (structure_.size() != n) throw std::invalid_argument("structure constants: wrong number of rows");
    for (const auto& row : structure_) {
        if (row.size() != n) throw std::invalid_argument("structure constants: wrong row length");
        for (const auto& v : row)
            for (const auto& [c, val] : v)
                if (c < 0 || static_cast<std::size_t>(c) >= n) throw std::invalid_argument("structure constants: index out of range");
    }
    if (kind_ == AlgebraKind::truncated && grading_.size() != n)
        throw std::invalid_argument("truncated algebra needs a degree for every basis element");

    auto unit = [](std::size_t i) { return SparseVector{{static_cast<int>(i), Rational(1)}}; };

    if (kind_ != AlgebraKind::leibniz) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                SparseVector s = structure_[i][j];
                axpy(s, Rational(1), structure_[j][i]);
                if (!s.empty())
                    throw std::invalid_argument("bracket is not antisymmetric on (" + labels_[i] + ", " + labels_[j] + ")");
            }
    }
    auto in_window = [&](std::size_t i, std::size_t j, std::size_t k) {
        if (kind_ != AlgebraKind::truncated) return true;
        const int a = grading_[i], b = grading_[j], c = grading_[k];
        return a + b - 1 <= window_ && b + c - 1 <= window_ && a + c - 1 <= window_ && a + b + c - 2 <= window_;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (!in_window(i, j, k)) continue;
                ++checked_triples_;
                // [x,[y,z]] - [[x,y],z] - [y,[x,z]]
                SparseVector r = bracket(unit(i), structure_[j][k]);
                axpy(r, Rational(-1), bracket(structure_[i][j], unit(k)));
                axpy(r, Rational(-1), bracket(unit(j), structure_[i][k]));
                if (!r.empty())
                    throw std::invalid_argument("bracket violates the " + std::string(kind_ == AlgebraKind::leibniz ? "left Leibniz" : "Jacobi") +
                                                " identity on (" + labels_[i] + ", " + labels_[j] + ", " + labels_[k] + ")");
            }
}

FiniteAlgebra FiniteAlgebra::abelian(std::size_t dim) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("a" + std::to_string(i + 1));
    return FiniteAlgebra(std::move(labels), std::vector<std::vector<SparseVector>>(dim, std::vector<SparseVector>(dim)),
                         AlgebraKind::lie);
}

// --- modules -----------------------------------------------------------------

namespace {

DenseMatrix zero_matrix(std::size_t rows, std::size_t cols) {
    return DenseMatrix(rows, std::vector<Rational>(cols, Rational(0)));
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    DenseMatrix out = zero_matrix(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (sgn(a[i][l]) == 0) continue;
            for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

}  // namespace

Module trivial_module(const FiniteAlgebra& g) {
    return Module{"trivial", 1, std::vector<DenseMatrix>(g.dim(), zero_matrix(1, 1))};
}

Module adjoint_module(const FiniteAlgebra& g) {
    const std::size_t n = g.dim();
    Module m{"adjoint", n, {}};
    for (std::size_t x = 0; x < n; ++x) {
        DenseMatrix a = zero_matrix(n, n);
        for (std::size_t y = 0; y < n; ++y)
            for (const auto& [c, v] : g.bracket(x, y)) a[static_cast<std::size_t>(c)][y] = v;
        m.action.push_back(std::move(a));
    }
    return m;
}

Module coadjoint_module(const FiniteAlgebra& g) {
    const std::size_t n = g.dim();
    Module m{"coadjoint", n, {}};
    for (std::size_t x = 0; x < n; ++x) {
        // (x . T)_y = -sum_c [x,y]_c T_c
        DenseMatrix a = zero_matrix(n, n);
        for (std::size_t y = 0; y < n; ++y)
            for (const auto& [c, v] : g.bracket(x, y)) a[y][static_cast<std::size_t>(c)] = -v;
        m.action.push_back(std::move(a));
    }
    return m;
}

bool is_representation(const FiniteAlgebra& g, const Module& m) {
    const std::size_t n = g.dim();
    if (m.action.size() != n) return false;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            DenseMatrix lhs = multiply(m.action[x], m.action[y]);
            const DenseMatrix yx = multiply(m.action[y], m.action[x]);
            for (std::size_t i = 0; i < m.dim; ++i)
                for (std::size_t j = 0; j < m.dim; ++j) lhs[i][j] -= yx[i][j];
            DenseMatrix rhs = zero_matrix(m.dim, m.dim);
            for (const auto& [c, v] : g.bracket(x, y))
                for (std::size_t i = 0; i < m.dim; ++i)
                    for (std::size_t j = 0; j < m.dim; ++j) rhs[i][j] += v * m.action[static_cast<std::size_t>(c)][i][j];
            if (lhs != rhs) return false;
        }
    return true;
}

// --- Cochain -----------------------------------------------------------------

Cochain::Cochain(int arity, std::size_t alg_dim, std::size_t mod_dim)
    : arity_(arity), alg_dim_(alg_dim), mod_dim_(mod_dim) {
    if (arity < 0 || arity > kMaxArity)
        throw std::invalid_argument("cochain arity " + std::to_string(arity) + " outside 0.." + std::to_string(kMaxArity));
    if (mod_dim == 0) throw std::invalid_argument("module dimension must be positive");
    std::size_t count = 1;
    for (int i = 0; i < arity; ++i) count *= alg_dim;
    values_.assign(count * mod_dim, Rational(0));
}

std::size_t Cochain::flatten(const std::vector<std::size_t>& tuple) const {
    if (static_cast<int>(tuple.size()) != arity_) throw std::invalid_argument("tuple length does not match arity");
    std::size_t idx = 0;
    for (std::size_t t : tuple) {
        if (t >= alg_dim_) throw std::out_of_range("basis index out of range");
        idx = idx * alg_dim_ + t;
    }
    return idx;
}

std::vector<std::size_t> Cochain::unflatten(std::size_t tuple_index) const {
    std::vector<std::size_t> t(static_cast<std::size_t>(arity_));
    for (int i = arity_ - 1; i >= 0; --i) {
        t[static_cast<std::size_t>(i)] = tuple_index % alg_dim_;
        tuple_index /= alg_dim_;
    }
    return t;
}

Rational& Cochain::at(const std::vector<std::size_t>& tuple, std::size_t r) { return values_[flatten(tuple) * mod_dim_ + r]; }
const Rational& Cochain::at(const std::vector<std::size_t>& tuple, std::size_t r) const {
    return values_[flatten(tuple) * mod_dim_ + r];
}

bool Cochain::is_zero() const {
    for (const auto& v : values_)
        if (sgn(v) != 0) return false;
    return true;
}

bool Cochain::is_alternating() const {
    for (std::size_t t = 0; t < tuple_count(); ++t) {
        auto tuple = unflatten(t);
        for (int i = 0; i + 1 < arity_; ++i) {
            auto swapped = tuple;
            std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(i) + 1]);
            const std::size_t s = flatten(swapped);
            for (std::size_t r = 0; r < mod_dim_; ++r)
                if (at_flat(t, r) != -at_flat(s, r)) return false;
        }
    }
    return true;
}

// --- differentials -------------------------------------------------------------

namespace {

std::vector<std::size_t> without(const std::vector<std::size_t>& t, std::size_t i) {
    std::vector<std::size_t> out;
    out.reserve(t.size());
    for (std::size_t k = 0; k < t.size(); ++k)
        if (k != i) out.push_back(t[k]);
    return out;
}

void check_dims(const Cochain& c, const FiniteAlgebra& g, const Module& m) {
    if (c.alg_dim() != g.dim()) throw std::invalid_argument("cochain and algebra dimensions differ");
    if (c.mod_dim() != m.dim || m.action.size() != g.dim()) throw std::invalid_argument("cochain and module dimensions differ");
    if (c.arity() + 1 > kMaxArity) throw std::invalid_argument("arity overflow: output arity exceeds " + std::to_string(kMaxArity));
}

/// Action term sum_i sign(i) x_i . psi(... omit i ...), shared by both complexes.
void add_action_terms(Cochain& out, const Cochain& c, const Module& m, std::size_t t, const std::vector<std::size_t>& tuple) {
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        const bool neg = i % 2 == 1;  // (-1)^(i+1) with 1-based i
        const std::size_t src = c.flatten(without(tuple, i));
        const DenseMatrix& a = m.action[tuple[i]];
        for (std::size_t r = 0; r < m.dim; ++r) {
            Rational acc(0);
            for (std::size_t s = 0; s < m.dim; ++s)
                if (sgn(a[r][s]) != 0) acc += a[r][s] * c.at_flat(src, s);
            out.at_flat(t, r) += neg ? Rational(-acc) : acc;
        }
    }
}

}  // namespace

Cochain ce_d(const Cochain& c, const FiniteAlgebra& g, const Module& m) {
    check_dims(c, g, m);
    if (static_cast<std::size_t>(c.arity()) + 1 > g.dim())
        throw std::invalid_argument("arity overflow: alternating " + std::to_string(c.arity() + 1) +
                                    "-cochains on a " + std::to_string(g.dim()) + "-dimensional algebra vanish");
    Cochain out(c.arity() + 1, g.dim(), m.dim);
    for (std::size_t t = 0; t < out.tuple_count(); ++t) {
        const auto tuple = out.unflatten(t);
        for (std::size_t i = 0; i < tuple.size(); ++i)
            for (std::size_t j = i + 1; j < tuple.size(); ++j) {
                const bool neg = (i + j) % 2 == 1;
                auto rest = without(without(tuple, j), i);
                rest.insert(rest.begin(), 0);
                for (const auto& [b, coef] : g.bracket(tuple[i], tuple[j])) {
                    rest[0] = static_cast<std::size_t>(b);
                    const std::size_t src = c.flatten(rest);
                    for (std::size_t r = 0; r < m.dim; ++r) {
                        const Rational v = coef * c.at_flat(src, r);
                        out.at_flat(t, r) += neg ? Rational(-v) : v;
                    }
                }
            }
        add_action_terms(out, c, m, t, tuple);
    }
    return out;
}

Cochain loday_d(const Cochain& c, const FiniteAlgebra& g, const Module& m) {
    check_dims(c, g, m);
    Cochain out(c.arity() + 1, g.dim(), m.dim);
    for (std::size_t t = 0; t < out.tuple_count(); ++t) {
        const auto tuple = out.unflatten(t);
        for (std::size_t i = 0; i < tuple.size(); ++i)
            for (std::size_t j = i + 1; j < tuple.size(); ++j) {
                const bool neg = i % 2 == 0;  // (-1)^i with 1-based i
                auto rest = without(tuple, i);
                for (const auto& [b, coef] : g.bracket(tuple[i], tuple[j])) {
                    rest[j - 1] = static_cast<std::size_t>(b);  // x_j's slot after dropping x_i
                    const std::size_t src = c.flatten(rest);
                    for (std::size_t r = 0; r < m.dim; ++r) {
                        const Rational v = coef * c.at_flat(src, r);
                        out.at_flat(t, r) += neg ? Rational(-v) : v;
                    }
                }
            }
        add_action_terms(out, c, m, t, tuple);
    }
    return out;
}

Cochain hat(const Cochain& c) {
    if (c.mod_dim() != 1) throw std::invalid_argument("hat: expects scalar-valued cochains");
    if (c.arity() < 1) throw std::invalid_argument("hat: arity must be at least 1");
    Cochain out(c.arity() - 1, c.alg_dim(), c.alg_dim());
    // Tuple-major layout makes the last slot the fastest index, which is exactly the module index.
    for (std::size_t t = 0; t < c.tuple_count(); ++t) out.at_flat(t / c.alg_dim(), t % c.alg_dim()) = c.at_flat(t, 0);
    return out;
}

Cochain unhat(const Cochain& c) {
    if (c.mod_dim() != c.alg_dim()) throw std::invalid_argument("unhat: expects dual-valued cochains");
    Cochain out(c.arity() + 1, c.alg_dim(), 1);
    for (std::size_t t = 0; t < out.tuple_count(); ++t) out.at_flat(t, 0) = c.at_flat(t / c.alg_dim(), t % c.alg_dim());
    return out;
}

// --- cohomology dimensions -----------------------------------------------------------

namespace {

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t dim, int q) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(cur.size()) == q) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < dim; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Insert b into a sorted tuple; returns the sign of the sort, 0 on repetition.
int insert_sorted(std::vector<std::size_t>& rest, std::size_t b) {
    std::size_t pos = 0;
    while (pos < rest.size() && rest[pos] < b) ++pos;
    if (pos < rest.size() && rest[pos] == b) return 0;
    rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(pos), b);
    return parity_sign(static_cast<int>(pos));
}

std::size_t ce_rank(const FiniteAlgebra& g, const Module& m, int q) {
    if (q < 0 || static_cast<std::size_t>(q) + 1 > g.dim()) return 0;
    const auto inputs = increasing_tuples(g.dim(), q);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < inputs.size(); ++i) index.emplace(inputs[i], i);
    const int md = static_cast<int>(m.dim);

    SparseEchelon e;
    for (const auto& tuple : increasing_tuples(g.dim(), q + 1)) {
        for (std::size_t r = 0; r < m.dim; ++r) {
            SparseVector row;
            for (std::size_t i = 0; i < tuple.size(); ++i)
                for (std::size_t j = i + 1; j < tuple.size(); ++j) {
                    const auto base = without(without(tuple, j), i);
                    for (const auto& [b, coef] : g.bracket(tuple[i], tuple[j])) {
                        auto rest = base;
                        const int s = insert_sorted(rest, static_cast<std::size_t>(b));
                        if (s == 0) continue;
                        const int col = static_cast<int>(index.at(rest)) * md + static_cast<int>(r);
                        axpy(row, Rational(s * parity_sign(static_cast<int>(i + j))) * coef, {{col, Rational(1)}});
                    }
                }
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                const std::size_t src = index.at(without(tuple, i));
                const DenseMatrix& a = m.action[tuple[i]];
                for (std::size_t s = 0; s < m.dim; ++s)
                    if (sgn(a[r][s]) != 0)
                        axpy(row, Rational(parity_sign(static_cast<int>(i))) * a[r][s],
                             {{static_cast<int>(src) * md + static_cast<int>(s), Rational(1)}});
            }
            e.add(std::move(row));
        }
    }
    return e.rank();
}

std::size_t loday_rank(const FiniteAlgebra& g, const Module& m, int q) {
    if (q < 0) return 0;
    const Cochain shape_in(q, g.dim(), m.dim);
    const Cochain shape_out(q + 1, g.dim(), m.dim);
    const int md = static_cast<int>(m.dim);
    SparseEchelon e;
    for (std::size_t t = 0; t < shape_out.tuple_count(); ++t) {
        const auto tuple = shape_out.unflatten(t);
        for (std::size_t r = 0; r < m.dim; ++r) {
            SparseVector row;
            for (std::size_t i = 0; i < tuple.size(); ++i)
                for (std::size_t j = i + 1; j < tuple.size(); ++j) {
                    auto rest = without(tuple, i);
                    for (const auto& [b, coef] : g.bracket(tuple[i], tuple[j])) {
                        rest[j - 1] = static_cast<std::size_t>(b);
                        const int col = static_cast<int>(shape_in.flatten(rest)) * md + static_cast<int>(r);
                        axpy(row, Rational(parity_sign(static_cast<int>(i) + 1)) * coef, {{col, Rational(1)}});
                    }
                }
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                const std::size_t src = shape_in.flatten(without(tuple, i));
                const DenseMatrix& a = m.action[tuple[i]];
                for (std::size_t s = 0; s < m.dim; ++s)
                    if (sgn(a[r][s]) != 0)
                        axpy(row, Rational(parity_sign(static_cast<int>(i))) * a[r][s],
                             {{static_cast<int>(src) * md + static_cast<int>(s), Rational(1)}});
            }
            e.add(std::move(row));
        }
    }
    return e.rank();
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

Cochain alternating_from_coordinates(int arity, std::size_t alg_dim, std::size_t mod_dim,
                                     const std::vector<Rational>& coords) {
    const auto tuples = increasing_tuples(alg_dim, arity);
    if (coords.size() != tuples.size() * mod_dim) throw std::invalid_argument("wrong number of alternating coordinates");
    Cochain out(arity, alg_dim, mod_dim);
    std::vector<std::size_t> perm(static_cast<std::size_t>(arity));
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        // Walk all permutations, tracking parity by counting inversions.
        do {
            int inv = 0;
            for (std::size_t a = 0; a < perm.size(); ++a)
                for (std::size_t b = a + 1; b < perm.size(); ++b)
                    if (perm[a] > perm[b]) ++inv;
            std::vector<std::size_t> tuple;
            for (std::size_t p : perm) tuple.push_back(tuples[t][p]);
            const std::size_t dst = out.flatten(tuple);
            for (std::size_t r = 0; r < mod_dim; ++r) {
                const Rational& v = coords[t * mod_dim + r];
                out.at_flat(dst, r) = inv % 2 ? Rational(-v) : v;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

CohomologyDims h_dims(const FiniteAlgebra& g, const Module& m, int q) {
    if (q < 0) throw std::invalid_argument("cohomology degree must be nonnegative");
    if (m.action.size() != g.dim()) throw std::invalid_argument("module does not match the algebra");
    CohomologyDims out;
    if (g.kind() == AlgebraKind::leibniz) {
        if (q + 1 > kMaxArity) throw std::invalid_argument("arity overflow");
        std::size_t count = m.dim;
        for (int i = 0; i < q; ++i) count *= g.dim();
        out.cochains = count;
        out.rank_out = loday_rank(g, m, q);
        out.rank_in = loday_rank(g, m, q - 1);
    } else {
        if (static_cast<std::size_t>(q) > g.dim())
            throw std::invalid_argument("arity overflow: degree exceeds the algebra dimension");
        out.cochains = binomial(g.dim(), static_cast<std::size_t>(q)) * m.dim;
        out.rank_out = ce_rank(g, m, q);
        out.rank_in = ce_rank(g, m, q - 1);
    }
    return out;
}

std::size_t h_dim(const FiniteAlgebra& g, const Module& m, int q) { return h_dims(g, m, q).dim(); }

FiniteAlgebra sl2_algebra() {
    std::vector<std::vector<SparseVector>> s(3, std::vector<SparseVector>(3));
    s[0][1][1] = 2;
    s[1][0][1] = -2;
    s[0][2][2] = -2;
    s[2][0][2] = 2;
    s[1][2][0] = 1;
    s[2][1][0] = -1;
    return FiniteAlgebra({"h", "e", "f"}, s, AlgebraKind::lie);
}

FiniteAlgebra hemisemidirect_sl2() {
    const FiniteAlgebra g = sl2_algebra();
    std::vector<std::vector<SparseVector>> s(5, std::vector<SparseVector>(5));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) s[i][j] = g.bracket(i, j);
    // R^2 = span(m1, m2): h = diag(1,-1), e = E12, f = E21
    s[0][3][3] = 1;
    s[0][4][4] = -1;
    s[1][4][3] = 1;
    s[2][3][4] = 1;
    return FiniteAlgebra({"h", "e", "f", "m1", "m2"}, s, AlgebraKind::leibniz);
}

}  // namespace leibform
