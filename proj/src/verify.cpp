#include "leibform/verify.hpp"

#include <gmp.h>

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include "leibform/cohomology.hpp"
#include "leibform/decompose.hpp"
#include "leibform/diffop.hpp"
#include "leibform/graded_rep.hpp"
#include "leibform/text.hpp"
#include "leibform/torus.hpp"

namespace leibform {

namespace {

using json = nlohmann::ordered_json;

class Runner {
public:
    Runner(const std::string& name, const VerifyConfig& cfg) : cfg_(cfg), rng_(suite_seed(cfg.seed, name)) {
        result_.name = name;
    }

    Rng& rng() { return rng_; }
    const RandomCaps& caps() const { return cfg_.caps; }
    const VerifyConfig& cfg() const { return cfg_; }

    int form_dim(int t) const { return cfg_.n > 0 ? cfg_.n : 3 + t % 2; }

    // The body records its inputs in the payload before computing, so a failure
    // (or an exception) carries everything needed to reproduce it.
    template <class F>
    void instance(const std::string& check, F&& body) {
        json payload = json::object();
        payload["instance"] = result_.instances++;
        bool ok = false;
        try {
            ok = body(payload);
        } catch (const std::exception& e) {
            payload["exception"] = e.what();
        }
        if (!ok) result_.failures.push_back(Failure{check, std::move(payload)});
    }

    SuiteResult take() { return std::move(result_); }

private:
    const VerifyConfig& cfg_;
    Rng rng_;
    SuiteResult result_;
};

template <class G>
json texts(const std::vector<G>& v) {
    json out = json::array();
    for (const auto& g : v) out.push_back(format_full(g));
    return out;
}

template <DifferentialAlgebra C>
C rand_coeff(Runner& r, int n) {
    return random_coeff(r.rng(), n, r.caps(), static_cast<const C*>(nullptr));
}

// ---------------------------------------------------------------- scalar

template <DifferentialAlgebra C>
void scalar_checks(Runner& r) {
    const std::string ring = C::ring_name;
    for (int t = 0; t < 100; ++t) {
        const int n = 3;
        const C f = rand_coeff<C>(r, n), g = rand_coeff<C>(r, n);
        r.instance(ring + ".derivations_commute", [&](json& p) {
            p["f"] = format_coeff(f);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (f.derive(i).derive(j) != f.derive(j).derive(i)) return false;
            return true;
        });
        r.instance(ring + ".product_rule", [&](json& p) {
            p["f"] = format_coeff(f);
            p["g"] = format_coeff(g);
            for (int j = 0; j < n; ++j)
                if ((f * g).derive(j) != f.derive(j) * g + f * g.derive(j)) return false;
            return true;
        });
        if constexpr (std::is_same_v<C, TrigCoeff>) {
            r.instance("trig.integral_of_derivative", [&](json& p) {
                p["f"] = format_coeff(f);
                for (int j = 0; j < n; ++j)
                    if (!integrate_torus(f.derive(j)).is_zero()) return false;
                return true;
            });
            r.instance("trig.integral_positive", [&](json& p) {
                p["f"] = format_coeff(f);
                const GaussianRational m = integrate_torus(f * f.conj());
                return sgn(m.im()) == 0 && sgn(m.re()) >= 0 && (sgn(m.re()) == 0) == f.is_zero();
            });
        } else {
            r.instance("poly.primitive_right_inverse", [&](json& p) {
                p["f"] = format_coeff(f);
                for (int j = 0; j < n; ++j)
                    if (primitive_in_axis(f, j).derive(j) != f) return false;
                return true;
            });
        }
    }
}

void scalar_suite(Runner& r) {
    scalar_checks<PolyCoeff>(r);
    scalar_checks<TrigCoeff>(r);
}

// ---------------------------------------------------------------- cartan

template <DifferentialAlgebra C>
void cartan_checks(Runner& r) {
    using F = Form<C>;
    using V = MultiVec<C>;
    Rng& rng = r.rng();
    const RandomCaps& caps = r.caps();

    for (int t = 0; t < 200; ++t) {
        const int n = r.form_dim(t);
        const F w = random_form<C>(rng, n, static_cast<int>(rng.range(0, n)), caps);
        r.instance("d_squared", [&](json& p) {
            p["w"] = format_full(w);
            return d(d(w)).is_zero();
        });
    }
    for (int t = 0; t < 200; ++t) {
        const int n = r.form_dim(t);
        const V A = random_multivec<C>(rng, n, static_cast<int>(rng.range(2, n)), caps);
        r.instance("delta_squared", [&](json& p) {
            p["A"] = format_full(A);
            return delta(delta(A)).is_zero();
        });
    }
    for (int t = 0; t < 200; ++t) {
        const int n = r.form_dim(t);
        const int ka = static_cast<int>(rng.range(1, n - 1));
        const int kb = static_cast<int>(rng.range(1, n - ka));
        const V A = wedge_all(random_factors<C>(rng, n, ka, caps), n);
        const V B = wedge_all(random_factors<C>(rng, n, kb, caps), n);
        r.instance("contraction_sign_convention", [&](json& p) {
            p["A"] = format_full(A);
            p["B"] = format_full(B);
            const F mu = volume_form<C>(n);
            return contract(wedge(A, B), mu) == contract(B, contract(A, mu));
        });
    }
    for (int t = 0; t < 200; ++t) {
        const int n = r.form_dim(t);
        const int k = static_cast<int>(rng.range(0, n));
        const V A = random_multivec<C>(rng, n, k, caps);
        const F w = random_form<C>(rng, n, k, caps);
        r.instance("flat_sharp_inverse", [&](json& p) {
            p["A"] = format_full(A);
            p["w"] = format_full(w);
            return sharp(flat(A)) == A && flat(sharp(w)) == w;
        });
    }
    for (int t = 0; t < 200; ++t) {
        const int n = r.form_dim(t);
        const auto fs = random_factors<C>(rng, n, 2 + t % 2, caps);
        r.instance("delta_explicit_formula", [&](json& p) {
            p["factors"] = texts(fs);
            return delta_decomposable(fs) == delta(wedge_all(fs, n));
        });
    }
    for (int t = 0; t < 200; ++t) {
        const int n = r.form_dim(t);
        const auto fs = random_factors<C>(rng, n, 2, caps);
        r.instance("hamiltonian_field_of_bivector", [&](json& p) {
            p["factors"] = texts(fs);
            return hamiltonian_field_bivector(fs[0], fs[1]) == hamiltonian_field(flat(wedge(fs[0], fs[1])));
        });
    }
    for (int t = 0; t < 200; ++t) {
        const int n = r.form_dim(t);
        const auto fs = random_factors<C>(rng, n, 4, caps);
        r.instance("bivector_bracket", [&](json& p) {
            p["factors"] = texts(fs);
            const V lifted = sharp(leibniz_bracket(flat(wedge(fs[0], fs[1])), flat(wedge(fs[2], fs[3]))));
            return bivector_bracket(fs[0], fs[1], fs[2], fs[3]) == lifted &&
                   bivector_bracket_expanded(fs[0], fs[1], fs[2], fs[3]) == lifted;
        });
    }
    for (int t = 0; t < 200; ++t) {
        const int n = r.form_dim(t);
        const V X = random_field<C>(rng, n, caps), Y = random_field<C>(rng, n, caps);
        const F w = random_form<C>(rng, n, static_cast<int>(rng.range(1, n)), caps);
        r.instance("cartan_magic_formula", [&](json& p) {
            p["X"] = format_full(X);
            p["w"] = format_full(w);
            return lie_derivative(X, w) == d(contract(X, w)) + contract(X, d(w));
        });
        r.instance("lie_contraction_commutator", [&](json& p) {
            p["X"] = format_full(X);
            p["Y"] = format_full(Y);
            p["w"] = format_full(w);
            return lie_derivative(X, contract(Y, w)) - contract(Y, lie_derivative(X, w)) ==
                   contract(lie_bracket(X, Y), w);
        });
    }
}

// ---------------------------------------------------------------- leibniz

template <DifferentialAlgebra C>
void leibniz_checks(Runner& r) {
    using F = Form<C>;
    Rng& rng = r.rng();
    const RandomCaps& caps = r.caps();
    auto pot = [&](int n) { return random_form<C>(rng, n, n - 2, caps); };

    for (int t = 0; t < 500; ++t) {
        const int n = r.form_dim(t);
        const F a = pot(n), b = pot(n), c = pot(n);
        r.instance("left_leibniz_identity", [&](json& p) {
            p["a"] = format_full(a);
            p["b"] = format_full(b);
            p["c"] = format_full(c);
            return leibniz_bracket(a, leibniz_bracket(b, c)) ==
                   leibniz_bracket(leibniz_bracket(a, b), c) + leibniz_bracket(b, leibniz_bracket(a, c));
        });
    }
    for (int t = 0; t < 200; ++t) {
        const int n = r.form_dim(t);
        const F a = pot(n), b = pot(n);
        r.instance("bracket_homomorphism", [&](json& p) {
            p["a"] = format_full(a);
            p["b"] = format_full(b);
            return hamiltonian_field(leibniz_bracket(a, b)) == lie_bracket(hamiltonian_field(a), hamiltonian_field(b));
        });
        r.instance("symmetric_part_exact", [&](json& p) {
            p["a"] = format_full(a);
            p["b"] = format_full(b);
            const auto Xa = hamiltonian_field(a), Xb = hamiltonian_field(b);
            return leibniz_bracket(a, b) + leibniz_bracket(b, a) == d(contract(Xa, b) + contract(Xb, a));
        });
        r.instance("hamiltonian_field_preserves_volume", [&](json& p) {
            p["a"] = format_full(a);
            return lie_derivative(hamiltonian_field(a), volume_form<C>(n)).is_zero();
        });
    }
}

void cartan_suite(Runner& r) {
    if (r.cfg().ring == "trig")
        cartan_checks<TrigCoeff>(r);
    else
        cartan_checks<PolyCoeff>(r);
}

void leibniz_suite(Runner& r) {
    if (r.cfg().ring == "trig")
        leibniz_checks<TrigCoeff>(r);
    else
        leibniz_checks<PolyCoeff>(r);
}

// ---------------------------------------------------------------- decompose

void perfect_suite(Runner& r) {
    for (int t = 0; t < 200; ++t) {
        const int n = r.form_dim(t);
        const PVec B = random_multivec<PolyCoeff>(r.rng(), n, 2, r.caps());
        r.instance("bracket_witness", [&](json& p) {
            p["B"] = format_full(B);
            const BracketWitness w = commutator_decompose(B);
            p["count"] = w.count();
            // recomputed here rather than trusting evaluate()
            PForm sum(n, n - 2);
            for (const auto& pr : w.pairs) {
                if (pr.left != flat(pr.left_bivector) || pr.right != flat(pr.right_bivector)) return false;
                sum += leibniz_bracket(pr.left, pr.right);
            }
            return w.target == flat(B) && w.verify() && sum == flat(B) && w.count() <= bracket_bound(n);
        });
    }
}

void squares_suite(Runner& r) {
    for (int t = 0; t < 200; ++t) {
        const int n = r.form_dim(t);
        const PForm b = random_form<PolyCoeff>(r.rng(), n, n - 3, r.caps());
        r.instance("square_witness", [&](json& p) {
            p["b"] = format_full(b);
            const SquareWitness w = square_decompose(b);
            p["count"] = w.count();
            if (!w.verify() || w.target != b || w.count() > square_bound(n)) return false;
            PForm squares(n, n - 2);
            for (const auto& term : w.terms) {
                if (term.alpha != flat(wedge(term.X, term.Y))) return false;
                if (!contraction_identity_holds(term)) return false;
                const PForm sq = leibniz_bracket(term.alpha, term.alpha);
                if (d(contract(hamiltonian_field(term.alpha), term.alpha)) != sq) return false;
                squares += sq;
            }
            if (squares != d(b)) return false;
            PForm again(n, n - 2);
            for (const auto& a : squares_of_exact(d(b), b)) again += leibniz_bracket(a, a);
            return again == d(b);
        });
    }
}

// ---------------------------------------------------------------- rep

void rep_suite(Runner& r) {
    const std::size_t expected[] = {3, 8, 15, 24};
    for (int k = 0; k <= 3; ++k)
        r.instance("divfree_dim_table", [&](json& p) {
            p["n"] = 3;
            p["k"] = k;
            const std::size_t dim = basis_divfree(3, k).dim();
            p["dim"] = dim;
            return dim == expected[k] && dim == divfree_dim_formula(3, k);
        });
    for (int n = 3; n <= 4; ++n)
        for (int k = 0; k <= 4; ++k)
            r.instance("divfree_dim_formula", [&](json& p) {
                p["n"] = n;
                p["k"] = k;
                return basis_divfree(n, k).dim() == divfree_dim_formula(n, k);
            });
    for (int n = 3; n <= 4; ++n)
        for (int k = 0; k <= 4; ++k)
            for (int l = 0; k + l <= 4; ++l)
                r.instance("grading", [&](json& p) {
                    p["n"] = n;
                    p["k"] = k;
                    p["l"] = l;
                    return grading_check(n, k, l);
                });
    for (int n = 3; n <= 4; ++n)
        r.instance("whitehead_h1", [&](json& p) {
            p["n"] = n;
            return whitehead_h1(n) == 0;
        });
    for (int n = 3; n <= 4; ++n)
        for (int k = 2; k <= 3; ++k) {
            r.instance("intertwiner_dim", [&](json& p) {
                p["n"] = n;
                p["k"] = k;
                return intertwiner_dim(n, k) == 0;
            });
            r.instance("endo_dim_tensor", [&](json& p) {
                p["n"] = n;
                p["k"] = k;
                return endo_dim_tensor(n, k) == 2;
            });
        }
    for (int n = 3; n <= 4; ++n) {
        const FieldSpace gens = basis_divfree(n, 1);
        for (int k = 0; k <= 2; ++k)
            r.instance("commutator_law_fields", [&](json& p) {
                p["n"] = n;
                p["k"] = k;
                return commutator_law_holds(gens, action_on_fields(gens, basis_divfree(n, k)));
            });
        for (int m = 1; m < n; ++m)
            r.instance("sl_identification", [&](json& p) {
                p["n"] = n;
                p["m"] = m;
                const RepMatrix rep = action_on_wedge(gens, m);
                if (!commutator_law_holds(gens, rep)) return false;
                for (std::size_t i = 0; i < gens.dim(); ++i) {
                    DenseMatrix A = linear_field_matrix(gens.vectors[i]);
                    for (auto& row : A)
                        for (auto& a : row) a = -a;
                    if (rep.actions[i] != wedge_matrix(A, n, m)) return false;
                }
                return true;
            });
    }
}

// ---------------------------------------------------------------- coho

struct NamedAlgebra {
    std::string name;
    FiniteAlgebra g;
    std::vector<Module> modules;
};

std::vector<NamedAlgebra> coho_algebras() {
    std::vector<NamedAlgebra> out;
    const FiniteAlgebra s2 = sl2_algebra();
    out.push_back({"sl(2)", s2, {trivial_module(s2), adjoint_module(s2), coadjoint_module(s2)}});
    const FiniteAlgebra h = hemisemidirect_sl2();
    out.push_back({"sl(2)+R^2", h, {trivial_module(h), adjoint_module(h), coadjoint_module(h)}});
    const FieldSpace gens = basis_divfree(3, 1);
    const FiniteAlgebra s3 = divfree_algebra(gens);
    out.push_back({"sl(3)", s3, {trivial_module(s3), as_module(action_on_wedge(gens, 1), "natural(3)"), adjoint_module(s3)}});
    return out;
}

json cochain_json(const Cochain& c) {
    json v = json::array();
    for (const auto& x : c.values()) v.push_back(to_string(x));
    return json{{"arity", c.arity()}, {"alg_dim", c.alg_dim()}, {"mod_dim", c.mod_dim()}, {"values", v}};
}

void coho_suite(Runner& r) {
    Rng& rng = r.rng();
    for (const auto& A : coho_algebras()) {
        const bool lie = A.g.kind() == AlgebraKind::lie;
        for (const auto& m : A.modules)
            for (int t = 0; t < 20; ++t) {
                // alternating cochains above the algebra dimension vanish, so d^2 of a q-cochain needs q + 2 <= dim
                const int top = std::min<int>(2, static_cast<int>(A.g.dim()) - 2);
                const int q = t % 3;
                if (lie && q <= top) {
                    const Cochain c = random_cochain(rng, q, A.g.dim(), m.dim, true);
                    r.instance("ce_d_squared", [&](json& p) {
                        p["algebra"] = A.name;
                        p["module"] = m.name;
                        p["cochain"] = cochain_json(c);
                        return ce_d(ce_d(c, A.g, m), A.g, m).is_zero();
                    });
                }
                const Cochain c = random_cochain(rng, q, A.g.dim(), m.dim, false);
                r.instance("loday_d_squared", [&](json& p) {
                    p["algebra"] = A.name;
                    p["module"] = m.name;
                    p["cochain"] = cochain_json(c);
                    return loday_d(loday_d(c, A.g, m), A.g, m).is_zero();
                });
            }
    }
    for (const FiniteAlgebra& L : {sl2_algebra(), hemisemidirect_sl2()}) {
        const Module triv = trivial_module(L), co = coadjoint_module(L);
        for (int t = 0; t < 30; ++t) {
            const Cochain c = random_cochain(rng, 1 + t % 3, L.dim(), 1, false);
            r.instance("hat_intertwines", [&](json& p) {
                p["algebra_dim"] = L.dim();
                p["cochain"] = cochain_json(c);
                return unhat(hat(c)) == c && hat(loday_d(c, L, triv)) == loday_d(hat(c), L, co);
            });
        }
    }
    r.instance("H2_sl2_trivial", [&](json& p) {
        const FiniteAlgebra g = sl2_algebra();
        const std::size_t h = h_dim(g, trivial_module(g), 2);
        p["dim"] = h;
        return h == 0;
    });
    r.instance("H1_sl3_natural", [&](json& p) {
        const FieldSpace gens = basis_divfree(3, 1);
        const std::size_t h = h_dim(divfree_algebra(gens), as_module(action_on_wedge(gens, 1), "natural(3)"), 1);
        p["dim"] = h;
        return h == 0;
    });
    // a Loday coboundary whose primitive kills the squares descends to a CE coboundary of sl(2)
    const FiniteAlgebra L = hemisemidirect_sl2(), g = sl2_algebra();
    for (int t = 0; t < 20; ++t) {
        Cochain eta(1, 5, 1), bar(1, 3, 1);
        for (std::size_t i = 0; i < 3; ++i) bar.at({i}, 0) = eta.at({i}, 0) = static_cast<int>(rng.range(-3, 3));
        r.instance("coboundary_descends", [&](json& p) {
            p["eta"] = cochain_json(eta);
            const Cochain psi = loday_d(eta, L, trivial_module(L));
            if (!psi.is_alternating()) return false;
            const Cochain down = ce_d(bar, g, trivial_module(g));
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = 0; j < 5; ++j)
                    if (psi.at({i, j}, 0) != (i < 3 && j < 3 ? down.at({i, j}, 0) : Rational(0))) return false;
            return true;
        });
    }
}

// ---------------------------------------------------------------- torus

void torus_suite(Runner& r) {
    Rng& rng = r.rng();
    const RandomCaps& caps = r.caps();
    RandomCaps small = caps;
    small.max_terms = std::min(caps.max_terms, 2);

    for (int t = 0; t < 200; ++t) {
        const int n = 3 + t % 2;
        TForm w = random_form<TrigCoeff>(rng, n, static_cast<int>(rng.range(0, n)), caps);
        w -= constant_mode(w);
        r.instance("homotopy_identity", [&](json& p) {
            p["w"] = format_full(w);
            return d(homotopy(w)) + homotopy(d(w)) == w;
        });
    }
    for (int t = 0; t < 200; ++t) {
        const int n = 3 + t % 2;
        const TForm a = random_form<TrigCoeff>(rng, n, n - 2, caps);
        const TForm b = random_form<TrigCoeff>(rng, n, n - 3, caps);
        r.instance("normal_form_kills_exact", [&](json& p) {
            p["a"] = format_full(a);
            p["b"] = format_full(b);
            return normal_form(a + d(b)).rep == normal_form(a).rep && normal_form(d(b)).rep.is_zero();
        });
    }
    for (int t = 0; t < 200; ++t) {
        const TForm a0 = random_form<TrigCoeff>(rng, 3, 1, small);
        const TForm b0 = random_form<TrigCoeff>(rng, 3, 1, small);
        const TForm c0 = random_form<TrigCoeff>(rng, 3, 1, small);
        r.instance("central_bracket_lie", [&](json& p) {
            p["a"] = format_full(a0);
            p["b"] = format_full(b0);
            p["c"] = format_full(c0);
            const auto a = normal_form(a0), b = normal_form(b0), c = normal_form(c0);
            if (!(central_bracket(a, b).rep + central_bracket(b, a).rep).is_zero()) return false;
            const TForm jac = central_bracket(a, central_bracket(b, c)).rep + central_bracket(b, central_bracket(c, a)).rep +
                              central_bracket(c, central_bracket(a, b)).rep;
            return jac.is_zero();
        });
    }
    for (int t = 0; t < 200; ++t) {
        const TForm sigma = random_constant_two_form(rng, 3);
        const TField X = random_divfree_trig(rng, 3, small, true);
        const TField Y = random_divfree_trig(rng, 3, small, true);
        const TField Z = random_divfree_trig(rng, 3, small, true);
        const int a = static_cast<int>(rng.range(0, 2));
        const int b = (a + 1 + static_cast<int>(rng.range(0, 1))) % 3;
        const CycleSpec C = CycleSpec::from_fixed(3, std::min(a, b), std::max(a, b));
        auto inputs = [&](json& p) {
            p["X"] = format_full(X);
            p["Y"] = format_full(Y);
            p["Z"] = format_full(Z);
        };
        r.instance("lichnerowicz_cocycle", [&](json& p) {
            p["sigma"] = format_full(sigma);
            inputs(p);
            auto w = [&](const TField& U, const TField& V) { return lichnerowicz(sigma, U, V); };
            return (w(X, Y) + w(Y, X)).is_zero() &&
                   (w(X, lie_bracket(Y, Z)) + w(Y, lie_bracket(Z, X)) + w(Z, lie_bracket(X, Y))).is_zero();
        });
        r.instance("cycle_cocycle", [&](json& p) {
            p["fixed_axes"] = index_list(C.fixed);
            inputs(p);
            auto w = [&](const TField& U, const TField& V) { return cycle_cocycle(C, U, V); };
            return (w(X, Y) + w(Y, X)).is_zero() &&
                   (w(X, lie_bracket(Y, Z)) + w(Y, lie_bracket(Z, X)) + w(Z, lie_bracket(X, Y))).is_zero();
        });
    }
    for (int t = 0; t < 200; ++t) {
        const TForm sigma = random_constant_two_form(rng, 3);
        const TForm a = random_form<TrigCoeff>(rng, 3, 1, caps), b = random_form<TrigCoeff>(rng, 3, 1, caps);
        r.instance("cocycle_vs_bracket", [&](json& p) {
            p["sigma"] = format_full(sigma);
            p["a"] = format_full(a);
            p["b"] = format_full(b);
            const auto [lhs, rhs] = cocycle_vs_bracket(sigma, a, b);
            return lhs == rhs;
        });
    }
    r.instance("pairing_rank", [&](json& p) {
        const std::size_t rk = pairing_matrix(3).rank();
        p["rank"] = rk;
        return rk == 3;
    });
}

// ---------------------------------------------------------------- ophom

void ophom_suite(Runner& r) {
    Rng& rng = r.rng();
    RandomCaps caps = r.caps();
    caps.deg_cap = std::min(caps.deg_cap, 2);
    for (int t = 0; t < 50; ++t) {
        const int n = 2 + t % 2;
        const int k = static_cast<int>(rng.range(1, n - 1));
        const DiffOp Q0 = random_diffop(rng, n, k + 1, 2, 3, caps);
        r.instance("factor_through_d", [&](json& p) {
            p["Q0"] = diffop_to_json(Q0);
            const DiffOp D = compose_d(Q0);
            const Factorization f = factor_through_d(D);
            p["iterations"] = f.iterations;
            if (!f.verified || compose_d(f.Q) != D) return false;
            return std::all_of(f.stages.begin(), f.stages.end(),
                               [](const FactorStage& s) { return s.property1 && s.property2; });
        });
    }
    for (int t = 0; t < 50; ++t) {
        const int n = 2 + t % 2;
        const DiffOp D = random_diffop(rng, n, static_cast<int>(rng.range(0, n)), 2, 3, caps);
        const int l = static_cast<int>(rng.range(0, 3));
        r.instance("truncate_paths_agree", [&](json& p) {
            p["D"] = diffop_to_json(D);
            p["l"] = l;
            return truncate(D, l) == truncate_by_evaluation(D, l);
        });
    }
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= std::min(2, n); ++k)
            for (int l = 0; l <= 3; ++l)
                r.instance("euler_eigencheck", [&](json& p) {
                    p["n"] = n;
                    p["k"] = k;
                    p["l"] = l;
                    return euler_eigencheck(k, l, n);
                });
}

using SuiteFn = void (*)(Runner&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"scalar", scalar_suite}, {"cartan", cartan_suite}, {"leibniz", leibniz_suite},
        {"perfect", perfect_suite}, {"squares", squares_suite}, {"rep", rep_suite},
        {"coho", coho_suite},     {"torus", torus_suite},   {"ophom", ophom_suite},
    };
    return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::vector<std::string> selected(const VerifyConfig& c) {
    if (c.suites.empty()) return suite_names();
    // run order is the registry order whatever order the names came in
    std::vector<std::string> out;
    for (const auto& name : suite_names())
        if (std::find(c.suites.begin(), c.suites.end(), name) != c.suites.end()) out.push_back(name);
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) v.push_back(name);
        return v;
    }();
    return names;
}

std::uint64_t suite_seed(std::uint64_t seed, const std::string& name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (unsigned char ch : name) h = (h ^ ch) * 0x100000001b3ULL;
    return splitmix64(splitmix64(seed) ^ h);
}

void validate(const VerifyConfig& c) {
    if (c.ring != "poly" && c.ring != "trig") throw std::invalid_argument("unknown ring '" + c.ring + "'");
    for (const auto& s : c.suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw std::invalid_argument("unknown suite '" + s + "'");
    if (c.n != 0 && (c.n < 3 || c.n > kMaxDim))
        throw std::invalid_argument("n must be between 3 and " + std::to_string(kMaxDim));
    if (c.caps.deg_cap < 0 || c.caps.deg_cap > 8) throw std::invalid_argument("deg-cap must be in [0, 8]");
    if (c.caps.freq_cap < 0 || c.caps.freq_cap > 8) throw std::invalid_argument("freq-cap must be in [0, 8]");
    if (c.caps.num_bound < 1 || c.caps.den_bound < 1 || c.caps.max_terms < 1)
        throw std::invalid_argument("coefficient bounds and term count must be positive");
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& config) {
    const auto& reg = registry();
    const auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return e.first == name; });
    if (it == reg.end()) throw std::invalid_argument("unknown suite '" + name + "'");
    Runner r(name, config);
    const auto start = std::chrono::steady_clock::now();
    it->second(r);
    SuiteResult out = r.take();
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::size_t Report::failure_count() const {
    std::size_t n = 0;
    for (const auto& s : suites) n += s.failures.size();
    return n;
}

Report run_suites(const VerifyConfig& config) {
    validate(config);
    Report rep{config, {}};
    for (const auto& name : selected(config)) rep.suites.push_back(run_suite(name, config));
    return rep;
}

json report_json(const Report& r) {
    const VerifyConfig& c = r.config;
    json j;
    j["format_version"] = kFormatVersion;
    j["config"] = {{"seed", c.seed},
                   {"ring", c.ring},
                   {"n", c.n},
                   {"deg_cap", c.caps.deg_cap},
                   {"freq_cap", c.caps.freq_cap},
                   {"num_bound", c.caps.num_bound},
                   {"den_bound", c.caps.den_bound},
                   {"max_terms", c.caps.max_terms},
                   {"suites", selected(c)}};
    j["environment"] = {{"compiler", __VERSION__}, {"cxx_standard", __cplusplus}, {"gmp", gmp_version}};
    std::size_t instances = 0;
    j["suites"] = json::array();
    for (const auto& s : r.suites) {
        json e;
        e["name"] = s.name;
        e["instances"] = s.instances;
        e["failure_count"] = s.failures.size();
        if (c.timing) e["seconds"] = s.seconds;
        e["failures"] = json::array();
        for (const auto& f : s.failures) e["failures"].push_back({{"check", f.check}, {"payload", f.payload}});
        j["suites"].push_back(std::move(e));
        instances += s.instances;
    }
    j["total_instances"] = instances;
    j["total_failures"] = r.failure_count();
    j["status"] = r.ok() ? "ok" : "fail";
    return j;
}

std::string report_tsv(const Report& r) {
    std::ostringstream out;
    out << kFormatHeader << "\n";
    out << "# seed\t" << r.config.seed << "\n";
    out << "# ring\t" << r.config.ring << "\n";
    out << "suite\tinstances\tfailures" << (r.config.timing ? "\tseconds" : "") << "\n";
    std::size_t instances = 0;
    for (const auto& s : r.suites) {
        out << s.name << "\t" << s.instances << "\t" << s.failures.size();
        if (r.config.timing) out << "\t" << s.seconds;
        out << "\n";
        instances += s.instances;
    }
    out << "total\t" << instances << "\t" << r.failure_count() << "\n";
    for (const auto& s : r.suites)
        for (const auto& f : s.failures) out << "failure\t" << s.name << "\t" << f.check << "\t" << f.payload.dump() << "\n";
    return out.str();
}

}  // namespace leibform
