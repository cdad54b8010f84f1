#include "vvmf/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>

#include "vvmf/errors.hpp"
#include "vvmf/qseries.hpp"
#include "vvmf/render.hpp"

namespace vvmf {

namespace {

int env_threads() {
    const char* v = std::getenv("VVMF_THREADS");
    if (!v) return 1;
    int n = std::atoi(v);
    if (n < 1) return 1;
    return std::min(n, 64);
}

struct EnumerateArgs {
    int dim = 0;
    std::string format = "markdown";
    std::vector<std::string> filters;
    std::string fixtures_path;
};

struct ComponentArgs {
    int dim = 0;
    std::string parity = "even";
    std::vector<int> s_mults;
    std::vector<int> r_mults;
    int twelve_trL = -1;
};

struct DimsArgs {
    ComponentArgs params;
    int k_min = 0;
    int k_max = 0;
};

struct ReduceArgs {
    std::string input;
    std::string output;
    std::string emit_transform;
};

struct ProfileOpsArgs {
    std::vector<int> weights;
    std::vector<int> mults;
};

ComponentParams parse_component(const ComponentArgs& a) {
    if (a.dim < 1) throw std::invalid_argument("--dim must be >= 1");
    if (a.s_mults.size() != 2)
        throw std::invalid_argument("--s-mults needs two entries a,b");
    if (a.r_mults.size() != 3)
        throw std::invalid_argument("--r-mults needs three entries x,y,z");
    ComponentParams p;
    p.parity = a.parity == "odd" ? Parity::Odd : Parity::Even;
    p.a = a.s_mults[0];
    p.b = a.s_mults[1];
    p.x = a.r_mults[0];
    p.y = a.r_mults[1];
    p.z = a.r_mults[2];
    if (p.a < 0 || p.b < 0 || p.x < 0 || p.y < 0 || p.z < 0)
        throw std::invalid_argument("multiplicities must be nonnegative");
    if (p.a + p.b != a.dim || p.x + p.y + p.z != a.dim)
        throw std::invalid_argument("multiplicities must sum to the dimension");
    return p;
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

int do_enumerate(const EnumerateArgs& args, std::ostream& out, std::ostream& err) {
    if (args.dim < 1) throw std::invalid_argument("--dim must be >= 1");
    EnumerateOptions opt;
    opt.threads = env_threads();
    for (const std::string& f : args.filters) {
        if (f == "advanced")
            opt.advanced = true;
        else if (f == "unitary")
            opt.unitary = true;
        else if (!f.empty() && f != "none")
            throw std::invalid_argument("unknown filter: " + f);
    }
    EnumerateResult res = enumerate_types(args.dim, opt);
    err << "contexts: " << res.stats.contexts_total
        << ", skipped non-integral: " << res.stats.contexts_nonintegral
        << ", skipped weight-sum: " << res.stats.contexts_weight_sum_skipped
        << ", raw candidates: " << res.stats.candidates_raw << "\n";
    if (args.format == "markdown")
        out << render_markdown(res);
    else if (args.format == "json")
        out << render_json(res);
    else if (args.format == "csv")
        out << render_csv(res);
    else
        throw std::invalid_argument("unknown format: " + args.format);
    if (!args.fixtures_path.empty()) {
        std::ifstream in(args.fixtures_path);
        if (!in) throw std::invalid_argument("cannot open " + args.fixtures_path);
        json j = json::parse(in);
        FixtureCheck check = fixtures_check(res, fixture_from_json(j));
        err << check.report;
        if (!check.ok) return 1;
    }
    return 0;
}

int do_component(const ComponentArgs& args, std::ostream& out) {
    ComponentParams p = parse_component(args);
    TraceData t = traces_of(p);
    out << "component: " << component_str(p) << "\n";
    out << "s  = " << t.s << "\n";
    out << "r1 = " << t.r1 << "\n";
    out << "r2 = " << t.r2 << "\n";
    std::vector<int> trls = trace_l_candidates(p);
    out << "twelve_trL candidates: " << join_ints(trls) << "\n";
    if (args.twelve_trL < 0) return 0;
    int trl = args.twelve_trL;
    if (std::find(trls.begin(), trls.end(), trl) == trls.end())
        throw std::invalid_argument("twelve_trL " + std::to_string(trl) +
                                    " is not admissible on this component");
    MiddleRange middle = middle_range(args.dim, trl, p.parity);
    out << "ell_one = " << middle.ell_one
        << ", ell_list = [" << join_ints(middle.ell_list) << "]\n";
    ChiContext ctx = make_chi_context(args.dim, t, trl, middle.ell_one);
    IntPoly P;
    try {
        P = p_polynomial(ctx);
    } catch (const NonIntegralChi& e) {
        out << "non-integral chi: " << e.what() << "\n";
        return 0;
    }
    out << "P coefficients (T^0, T^1, ...): [";
    for (int k = 0; k <= P.degree(); ++k)
        out << (k ? ", " : "") << P.coeff(k).get_str();
    out << "]\n";
    for (auto& [avec, W] : enumerate_a_vectors(P, middle, args.dim)) {
        auto prof = profile_from_poly(W, args.dim);
        if (!prof) continue;
        out << "a = [" << join_ints(avec) << "] weights = ("
            << join_ints(prof->weights) << ")";
        bool pass = filter_weight_bounds(*prof, args.dim, trl) &&
                    filter_no_gap(*prof) &&
                    (args.dim < 2 || filter_mult_bounds(prof->mults()));
        out << (pass ? "  [kept]" : "  [filtered]") << "\n";
    }
    return 0;
}

int do_dims(const DimsArgs& args, std::ostream& out) {
    ComponentParams p = parse_component(args.params);
    if (args.params.twelve_trL < 0)
        throw std::invalid_argument("--twelve-trl is required");
    int trl = args.params.twelve_trL;
    std::vector<int> trls = trace_l_candidates(p);
    if (std::find(trls.begin(), trls.end(), trl) == trls.end())
        throw std::invalid_argument("twelve_trL " + std::to_string(trl) +
                                    " is not admissible on this component");
    TraceData t = traces_of(p);
    MiddleRange middle = middle_range(args.params.dim, trl, p.parity);
    ChiContext ctx = make_chi_context(args.params.dim, t, trl, middle.ell_one);
    int parity_bit = p.parity == Parity::Even ? 0 : 1;
    for (int k = args.k_min; k <= args.k_max; ++k) {
        if (((k % 2) + 2) % 2 != parity_bit) continue;
        DimensionAnswer ans = dimension_M(ctx, middle, k);
        out << "k=" << k << " dim=";
        if (ans.value)
            out << ans.value->get_str();
        else
            out << "chi+a" << (*ans.unknown_index + 1) << " (chi="
                << ans.chi->get_str() << ")";
        out << "\n";
    }
    return 0;
}

int do_reduce(const ReduceArgs& args, std::ostream& out) {
    std::ifstream in(args.input);
    if (!in) throw std::invalid_argument("cannot open " + args.input);
    json j = json::parse(in);
    DMatrix A = dmatrix_from_json(j);
    auto [reduced, P] = reduce_e6(A);
    if (!conjugation_check(A, reduced, P))
        throw InternalInconsistency("conjugation identity failed after reduction");
    json out_j = dmatrix_to_json(reduced);
    if (args.output.empty() || args.output == "-") {
        out << out_j.dump(2) << "\n";
    } else {
        std::ofstream os(args.output);
        if (!os) throw std::invalid_argument("cannot write " + args.output);
        os << out_j.dump(2) << "\n";
    }
    if (!args.emit_transform.empty()) {
        std::ofstream os(args.emit_transform);
        if (!os)
            throw std::invalid_argument("cannot write " + args.emit_transform);
        os << transformation_to_json(P).dump(2) << "\n";
    }
    return 0;
}

int do_qcheck(int terms, std::ostream& out) {
    if (terms < 1) throw std::invalid_argument("--terms must be >= 1");
    bool ok = true;
    auto report = [&](const char* name, bool pass) {
        out << (pass ? "ok: " : "FAIL: ") << name << "\n";
        if (!pass) ok = false;
    };
    QSeries e4 = eisenstein_e4(terms);
    QSeries e6 = eisenstein_e6(terms);
    report("D(E4) = -(1/3) E6",
           serre_derivative(e4, 4) == make_rational(-1, 3) * e6);
    report("D(E6) = -(1/2) E4^2",
           serre_derivative(e6, 6) == make_rational(-1, 2) * (e4 * e4));
    QSeries e2 = derive_e2(terms);
    bool prefix = true;
    long expect[4] = {1, -24, -72, -96};
    for (int i = 0; i < 4 && i < terms; ++i)
        if (e2.coeffs[i] != expect[i]) prefix = false;
    report("E2 = 1 - 24q - 72q^2 - 96q^3 - ...", prefix);
    // Leibniz on E4 * E6 at weight 10.
    QSeries lhs = serre_derivative(e4 * e6, 10);
    QSeries rhs = serre_derivative(e4, 4) * e6 + e4 * serre_derivative(e6, 6);
    report("Leibniz on E4*E6", lhs == rhs);
    // Intertwining on a fixed mixed form of weight 12.
    GradedPoly f = GradedPoly::monomial(3, 0, make_rational(2, 7)) +
                   GradedPoly::monomial(0, 2, make_rational(-5, 3));
    report("graded/series derivative agreement at weight 12",
           graded_to_qseries(serre_derive(f), terms) ==
               serre_derivative(graded_to_qseries(f, terms), 12));
    return ok ? 0 : 1;
}

int do_profile_ops(bool dual, const ProfileOpsArgs& args, std::ostream& out) {
    if (dual) {
        if (args.weights.empty())
            throw std::invalid_argument("--weights must be nonempty");
        Profile p;
        p.weights = args.weights;
        std::sort(p.weights.begin(), p.weights.end());
        out << join_ints(dual_cuspidal_profile(p).weights) << "\n";
    } else {
        if (args.mults.empty())
            throw std::invalid_argument("--mults must be nonempty");
        for (int m : args.mults)
            if (m < 1)
                throw std::invalid_argument("multiplicities must be positive");
        out << join_ints(tensor_standard(args.mults)) << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Exact enumeration of candidate weight profiles of "
                 "irreducible SL2(Z) representations and E6-elimination on "
                 "modular derivative matrices"};
    app.require_subcommand(1);

    EnumerateArgs en;
    auto* cmd_en = app.add_subcommand("enumerate",
                                      "Enumerate candidate type/multiplicity profiles");
    cmd_en->add_option("--dim", en.dim, "Representation dimension")->required();
    cmd_en->add_option("--filters", en.filters,
                       "Optional filters: advanced, unitary")
        ->delimiter(',');
    cmd_en->add_option("--format", en.format, "markdown | json | csv");
    cmd_en->add_option("--fixtures-check", en.fixtures_path,
                       "Compare against a fixture file");

    ComponentArgs co;
    auto* cmd_co = app.add_subcommand("component",
                                      "Inspect one character-variety component");
    cmd_co->add_option("--dim", co.dim)->required();
    cmd_co->add_option("--parity", co.parity, "even | odd");
    cmd_co->add_option("--s-mults", co.s_mults, "a,b")->required()->delimiter(',');
    cmd_co->add_option("--r-mults", co.r_mults, "x,y,z")->required()->delimiter(',');
    cmd_co->add_option("--twelve-trl", co.twelve_trL, "12 Tr(L)");

    DimsArgs di;
    auto* cmd_di = app.add_subcommand("dims", "Dimension trichotomy per weight");
    cmd_di->add_option("--dim", di.params.dim)->required();
    cmd_di->add_option("--parity", di.params.parity, "even | odd");
    cmd_di->add_option("--s-mults", di.params.s_mults, "a,b")->required()->delimiter(',');
    cmd_di->add_option("--r-mults", di.params.r_mults, "x,y,z")->required()->delimiter(',');
    cmd_di->add_option("--twelve-trl", di.params.twelve_trL, "12 Tr(L)")->required();
    cmd_di->add_option("--k-min", di.k_min)->required();
    cmd_di->add_option("--k-max", di.k_max)->required();

    ReduceArgs re;
    auto* cmd_re = app.add_subcommand("reduce", "Eliminate E6 from a matrix file");
    cmd_re->add_option("--input", re.input)->required();
    cmd_re->add_option("--output", re.output, "Path or - for stdout");
    cmd_re->add_option("--emit-transform", re.emit_transform);

    int qterms = 50;
    auto* cmd_qc = app.add_subcommand("qcheck", "q-series identity suite");
    cmd_qc->add_option("--terms", qterms, "Truncation order");

    ProfileOpsArgs po;
    auto* cmd_po = app.add_subcommand("profile-ops", "Profile combinators");
    cmd_po->require_subcommand(1);
    auto* cmd_dual = cmd_po->add_subcommand("dual", "Dual cuspidal profile");
    cmd_dual->add_option("--weights", po.weights)->required()->delimiter(',');
    auto* cmd_tensor = cmd_po->add_subcommand("tensor-std",
                                              "Multiplicities after tensoring "
                                              "with the standard 2-dim profile");
    cmd_tensor->add_option("--mults", po.mults)->required()->delimiter(',');

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_en->parsed()) return do_enumerate(en, out, err);
        if (cmd_co->parsed()) return do_component(co, out);
        if (cmd_di->parsed()) return do_dims(di, out);
        if (cmd_re->parsed()) return do_reduce(re, out);
        if (cmd_qc->parsed()) return do_qcheck(qterms, out);
        if (cmd_po->parsed())
            return do_profile_ops(cmd_dual->parsed(), po, out);
    } catch (const CapViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const InternalInconsistency& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const NonIntegralChi& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace vvmf
