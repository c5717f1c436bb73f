// leibform: command-line front end.
// Exit codes: 0 success, 1 a check or verification failed, 2 malformed input or configuration.

#include <fstream>
#include <iostream>
#include <iterator>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "leibform/cohomology.hpp"
#include "leibform/eval.hpp"
#include "leibform/graded_rep.hpp"
#include "leibform/text.hpp"
#include "leibform/torus.hpp"
#include "leibform/verify.hpp"

using namespace leibform;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, const std::string& inline_text) {
    if (!inline_text.empty()) return inline_text;
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// ---------------------------------------------------------------- eval / cartan

int run_eval(const std::string& expr, const std::string& ring, int n, const std::string& fmt) {
    const EvalResult r = eval_expr(expr, EvalOptions{ring, n});
    if (fmt == "json") {
        json j;
        j["format_version"] = kFormatVersion;
        j["expr"] = expr;
        j["ring"] = r.ring;
        j["n"] = r.n;
        // witnesses and factorizations are already JSON; embed them as objects
        if (!r.text.empty() && r.text.front() == '{')
            j["result"] = json::parse(r.text);
        else
            j["result"] = r.text;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << r.text << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- decompose

int run_decompose(const std::string& which, const std::string& path, const std::string& text, int n_opt) {
    const std::string body = strip_format_header(read_input(path, text));
    const ParsedObject p = parse_object(body);
    if (p.trig_tokens) throw UsageError("decompose: polynomial coefficients required");
    const int n = n_opt > 0 ? n_opt : implied_dim(p);
    if (n < 3) throw UsageError("decompose: needs n >= 3 (pass --n)");
    json out;
    if (which == "brackets") {
        PVec B = p.kind == ObjectKind::vec ? build_graded<PolyCoeff, VecKind>(p, n) : sharp(build_graded<PolyCoeff, FormKind>(p, n));
        if (B.degree() != 2) throw UsageError("decompose brackets: expected a bivector or an (n-2)-form");
        out = witness_json(commutator_decompose(B));
    } else {
        if (p.kind == ObjectKind::vec) throw UsageError("decompose squares: expected an (n-3)-form");
        PForm b = build_graded<PolyCoeff, FormKind>(p, n);
        if (b.degree() != n - 3 && !(b.is_zero() && p.degree <= 0))
            throw UsageError("decompose squares: expected a form of degree n-3 = " + std::to_string(n - 3));
        if (b.degree() != n - 3) b = PForm(n, n - 3);
        out = witness_json(square_decompose(b));
    }
    std::cout << out.dump(2) << "\n";
    return out["verified"].get<bool>() ? 0 : 1;
}

// ---------------------------------------------------------------- rep

int run_rep_table(int n, int kmax, const std::string& fmt) {
    if (n < 3 || n > 5) throw UsageError("rep table: --n must be 3, 4 or 5");
    if (kmax < 0 || kmax > 5) throw UsageError("rep table: --kmax must be in [0, 5]");
    json rows = json::array();
    for (int k = 0; k <= kmax; ++k) {
        json r;
        r["n"] = n;
        r["k"] = k;
        r["dim"] = basis_divfree(n, k).dim();
        r["formula"] = divfree_dim_formula(n, k);
        if (k >= 2) {
            r["intertwiner_dim"] = intertwiner_dim(n, k);
            r["endo_dim_tensor"] = endo_dim_tensor(n, k);
        } else {
            r["intertwiner_dim"] = nullptr;
            r["endo_dim_tensor"] = nullptr;
        }
        rows.push_back(std::move(r));
    }
    if (fmt == "json") {
        json j;
        j["format_version"] = kFormatVersion;
        j["whitehead_h1"] = whitehead_h1(n);
        j["rows"] = rows;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << kFormatHeader << "\n# whitehead_h1\t" << whitehead_h1(n) << "\n";
    std::cout << "n\tk\tdim\tformula\tintertwiner_dim\tendo_dim_tensor\n";
    for (const auto& r : rows) {
        auto cell = [](const json& v) { return v.is_null() ? std::string("-") : v.dump(); };
        std::cout << r["n"] << "\t" << r["k"] << "\t" << r["dim"] << "\t" << r["formula"] << "\t"
                  << cell(r["intertwiner_dim"]) << "\t" << cell(r["endo_dim_tensor"]) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- coho

struct AlgebraChoice {
    std::string spec;
    FiniteAlgebra g;
    int n = 0;   // 0 when not built from vector fields
    int K = -1;  // truncation window, -1 otherwise
};

std::vector<int> spec_args(const std::string& spec, const std::string& head, std::size_t count) {
    std::smatch m;
    const std::regex re("^" + head + R"(\((\d+)(?:,\s*(\d+))?\)$)");
    if (!std::regex_match(spec, m, re)) return {};
    std::vector<int> out;
    for (std::size_t i = 1; i <= 2; ++i)
        if (m[i].matched) out.push_back(std::stoi(m[i]));
    if (out.size() != count) return {};
    return out;
}

AlgebraChoice make_algebra(const std::string& spec) {
    if (auto a = spec_args(spec, "sl", 1); !a.empty()) {
        if (a[0] < 2 || a[0] > 4) throw UsageError("coho: sl(N) needs N in [2, 4]");
        return {spec, divfree_algebra(basis_divfree(a[0], 1)), a[0], -1};
    }
    if (auto a = spec_args(spec, "divfree", 2); !a.empty()) {
        if (a[0] < 2 || a[0] > 4 || a[1] < 0 || a[1] > 3) throw UsageError("coho: divfree(N,K) needs N in [2, 4], K in [0, 3]");
        return {spec, truncated_divfree_algebra(a[0], a[1]), a[0], a[1]};
    }
    if (auto a = spec_args(spec, "abelian", 1); !a.empty()) {
        if (a[0] < 1 || a[0] > 12) throw UsageError("coho: abelian(N) needs N in [1, 12]");
        return {spec, FiniteAlgebra::abelian(static_cast<std::size_t>(a[0])), 0, -1};
    }
    if (spec == "sl2+R2") return {spec, hemisemidirect_sl2(), 0, -1};
    throw UsageError("coho: unknown algebra '" + spec + "' (sl(N), divfree(N,K), abelian(N), sl2+R2)");
}

Module make_module(const std::string& spec, const AlgebraChoice& A) {
    if (spec == "trivial") return trivial_module(A.g);
    if (spec == "adjoint") return adjoint_module(A.g);
    if (spec == "coadjoint") return coadjoint_module(A.g);
    int N = 0, M = 0;
    if (auto a = spec_args(spec, "wedge", 2); !a.empty()) {
        N = a[0];
        M = a[1];
    } else if (auto b = spec_args(spec, "natural", 1); !b.empty()) {
        N = b[0];
        M = 1;
    } else {
        throw UsageError("coho: unknown module '" + spec + "' (trivial, adjoint, coadjoint, wedge(N,M), natural(N))");
    }
    if (A.n == 0) throw UsageError("coho: module " + spec + " needs a vector-field algebra");
    if (N != A.n) throw UsageError("coho: module " + spec + " does not match the algebra dimension " + std::to_string(A.n));
    if (M < 0 || M > N) throw UsageError("coho: wedge(N,M) needs 0 <= M <= N");
    Module m = A.K >= 0 ? truncated_wedge_module(N, A.K, M) : as_module(action_on_wedge(basis_divfree(N, 1), M), spec);
    m.name = spec;
    return m;
}

int run_coho(const std::string& alg_spec, const std::string& mod_spec, int q, const std::string& fmt, std::uint64_t seed) {
    const AlgebraChoice A = make_algebra(alg_spec);
    const Module m = make_module(mod_spec, A);
    if (q < 0 || q >= kMaxArity) throw UsageError("coho: --q must be in [0, " + std::to_string(kMaxArity - 1) + "]");
    const CohomologyDims h = h_dims(A.g, m, q);
    const bool rep = is_representation(A.g, m);
    // sampled d^2 = 0 check on the degree q-1 -> q+1 composite
    bool d2 = true;
    if (q >= 1) {
        Rng rng(seed);
        const bool lie_like = A.g.kind() != AlgebraKind::leibniz;
        for (int t = 0; t < 3 && d2; ++t) {
            const Cochain c = random_cochain(rng, q - 1, A.g.dim(), m.dim, lie_like);
            d2 = lie_like ? ce_d(ce_d(c, A.g, m), A.g, m).is_zero() : loday_d(loday_d(c, A.g, m), A.g, m).is_zero();
        }
    }
    json j;
    j["format_version"] = kFormatVersion;
    j["algebra"] = alg_spec;
    j["kind"] = to_string(A.g.kind());
    j["algebra_dim"] = A.g.dim();
    if (A.K >= 0) {
        j["window"] = A.g.window();
        j["checked_triples"] = A.g.checked_triples();
    }
    j["module"] = mod_spec;
    j["module_dim"] = m.dim;
    j["is_representation"] = rep;
    j["q"] = q;
    j["cochains"] = h.cochains;
    j["rank_in"] = h.rank_in;
    j["rank_out"] = h.rank_out;
    j["d_squared_zero_sampled"] = d2;
    // outside a genuine complex the rank count has no meaning
    const bool complex = d2 && h.rank_in + h.rank_out <= h.cochains;
    if (complex)
        j["h_dim"] = h.dim();
    else
        j["h_dim"] = "undefined";
    if (fmt == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << kFormatHeader << "\n";
        for (const auto& [k, v] : j.items())
            if (k != "format_version") std::cout << k << "\t" << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- torus

int run_torus_cocycle(const std::string& sigma, const std::string& X, const std::string& Y, const std::string& cycle,
                      int n_opt, const std::string& fmt) {
    std::string args = sigma + "; " + X + "; " + Y;
    const std::string suffix = n_opt > 0 ? " @ trig n=" + std::to_string(n_opt) : " @ trig";
    const EvalResult lich = eval_expr("lich(" + args + ")" + suffix);
    json j;
    j["format_version"] = kFormatVersion;
    j["n"] = lich.n;
    j["lichnerowicz"] = lich.text;
    if (!cycle.empty()) j["cycle"] = eval_expr("cycle(" + cycle + "; " + X + "; " + Y + ")" + suffix).text;
    if (fmt == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << kFormatHeader << "\n";
        for (const auto& [k, v] : j.items())
            if (k != "format_version") std::cout << k << "\t" << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return 0;
}

int run_torus_pairing(int n, const std::string& fmt) {
    if (n < 3 || n > 6) throw UsageError("torus pairing: --n must be in [3, 6]");
    const PairingMatrix P = pairing_matrix(n);
    auto cycle_name = [](const CycleSpec& c) {
        const auto ax = elements(c.fixed);
        return "x" + std::to_string(ax[0] + 1) + "=x" + std::to_string(ax[1] + 1) + "=0";
    };
    auto form_name = [](IndexSet I) { return basis_shorthand(I, false); };
    if (fmt == "json") {
        json j;
        j["format_version"] = kFormatVersion;
        j["n"] = n;
        j["rank"] = P.rank();
        j["rows"] = json::array();
        for (IndexSet I : P.center) j["rows"].push_back(form_name(I));
        j["columns"] = json::array();
        for (const auto& c : P.cycles) j["columns"].push_back(cycle_name(c));
        j["values"] = json::array();
        for (const auto& row : P.values) {
            json r = json::array();
            for (const auto& v : row) r.push_back(to_string(v));
            j["values"].push_back(r);
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << kFormatHeader << "\n# rank\t" << P.rank() << "\nform";
    for (const auto& c : P.cycles) std::cout << "\t" << cycle_name(c);
    std::cout << "\n";
    for (std::size_t i = 0; i < P.center.size(); ++i) {
        std::cout << form_name(P.center[i]);
        for (const auto& v : P.values[i]) std::cout << "\t" << to_string(v);
        std::cout << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- ophom

int run_ophom_factor(const std::string& path) {
    const std::string text = read_input(path, "");
    nlohmann::json in;
    try {
        in = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("ophom factor: invalid JSON: ") + e.what());
    }
    const DiffOp D = diffop_from_json(in);
    const Factorization f = factor_through_d(D);
    std::cout << factorization_json(D, f).dump(2) << "\n";
    return f.verified ? 0 : 1;
}

// ---------------------------------------------------------------- verify

int run_verify(const VerifyConfig& cfg, const std::string& fmt) {
    try {
        validate(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 2;
    }
    const Report r = run_suites(cfg);
    if (fmt == "json")
        std::cout << report_json(r).dump(2) << "\n";
    else
        std::cout << report_tsv(r);
    return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"leibform: exact Cartan calculus, Leibniz brackets and their witnesses"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "leibform 1.0");

    std::string fmt = "tsv";
    std::string ring;
    int n = 0;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", fmt, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    };

    // cartan <op> <args...>
    auto* cartan = app.add_subcommand("cartan", "apply one Cartan-calculus operation, e.g. cartan d \"x1 dx2\"");
    std::string op;
    std::vector<std::string> op_args;
    cartan->add_option("op", op, "operation name")->required();
    cartan->add_option("args", op_args, "arguments in the form grammar");
    cartan->add_option("--ring", ring, "poly or trig")->check(CLI::IsMember({"poly", "trig"}));
    cartan->add_option("--n", n, "dimension (default: largest index)");
    add_format(cartan);

    auto* ev = app.add_subcommand("eval", "evaluate an expression such as 'bracket(x1 dx3, x2 dx3) @ poly n=3'");
    std::string expr;
    ev->add_option("expr", expr, "expression")->required();
    ev->add_option("--ring", ring, "poly or trig")->check(CLI::IsMember({"poly", "trig"}));
    ev->add_option("--n", n, "dimension (default: largest index)");
    add_format(ev);

    auto* dec = app.add_subcommand("decompose", "bracket or square witnesses for a polynomial form");
    std::string which, input, inline_text;
    dec->add_option("which", which, "brackets or squares")->required()->check(CLI::IsMember({"brackets", "squares"}));
    dec->add_option("text", inline_text, "form text (default: --input or stdin)");
    dec->add_option("--input", input, "file holding the form; '-' for stdin");
    dec->add_option("--n", n, "dimension");
    add_format(dec);

    auto* rep = app.add_subcommand("rep", "dimension table for divergence-free fields");
    std::string rep_what;
    int kmax = 3;
    rep->add_option("what", rep_what, "table")->required()->check(CLI::IsMember({"table"}));
    rep->add_option("--n", n, "dimension")->required();
    rep->add_option("--kmax", kmax, "largest coefficient degree");
    add_format(rep);

    auto* coho = app.add_subcommand("coho", "cohomology dimension by exact ranks");
    std::string alg_spec, mod_spec = "trivial";
    int q = 2;
    std::uint64_t seed = 1;
    coho->add_option("--algebra", alg_spec, "sl(N), divfree(N,K), abelian(N) or sl2+R2")->required();
    coho->add_option("--module", mod_spec, "trivial, adjoint, coadjoint, wedge(N,M) or natural(N)");
    coho->add_option("--q", q, "cochain degree");
    coho->add_option("--seed", seed, "seed for the sampled d^2 check");
    add_format(coho);

    auto* torus = app.add_subcommand("torus", "central extension cocycles on the torus");
    torus->require_subcommand(1);
    auto* tco = torus->add_subcommand("cocycle", "Lichnerowicz (and optionally cycle) cocycle of two fields");
    std::string sigma, fx, fy, cycle;
    tco->add_option("--sigma", sigma, "closed constant 2-form")->required();
    tco->add_option("--X", fx, "divergence-free field")->required();
    tco->add_option("--Y", fy, "divergence-free field")->required();
    tco->add_option("--cycle", cycle, "coordinate subtorus such as x1=x2=0");
    tco->add_option("--n", n, "dimension");
    add_format(tco);
    auto* tpa = torus->add_subcommand("pairing", "pairing of constant (n-2)-forms with coordinate cycles");
    tpa->add_option("--n", n, "dimension")->required();
    add_format(tpa);

    auto* oph = app.add_subcommand("ophom", "differential operators through d");
    oph->require_subcommand(1);
    auto* ofa = oph->add_subcommand("factor", "factor D = Q o d");
    ofa->add_option("--input", input, "operator JSON {k, n, terms:[{I, sigma, value}]}; '-' for stdin")->required();
    add_format(ofa);

    auto* ver = app.add_subcommand("verify", "run the invariant battery");
    VerifyConfig cfg;
    ver->add_option("--seed", cfg.seed, "seed");
    ver->add_option("--ring", cfg.ring, "ring for the cartan and leibniz suites");
    ver->add_option("--n", cfg.n, "fix the dimension of the form suites (default: alternate 3 and 4)");
    ver->add_option("--deg-cap", cfg.caps.deg_cap, "largest polynomial degree");
    ver->add_option("--freq-cap", cfg.caps.freq_cap, "largest |k| per axis for trig modes");
    ver->add_option("--suite", cfg.suites, "suites to run (default: all)");
    ver->add_flag("--timing", cfg.timing, "include wall time (makes output nondeterministic)");
    add_format(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cartan) {
            std::string joined;
            for (std::size_t i = 0; i < op_args.size(); ++i) joined += (i ? "; " : "") + op_args[i];
            return run_eval(op + "(" + joined + ")", ring, n, fmt);
        }
        if (*ev) return run_eval(expr, ring, n, fmt);
        if (*dec) return run_decompose(which, input, inline_text, n);
        if (*rep) return run_rep_table(n, kmax, fmt);
        if (*coho) return run_coho(alg_spec, mod_spec, q, fmt, seed);
        if (*tco) return run_torus_cocycle(sigma, fx, fy, cycle, n, fmt);
        if (*tpa) return run_torus_pairing(n, fmt);
        if (*ofa) return run_ophom_factor(input);
        if (*ver) return run_verify(cfg, fmt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
