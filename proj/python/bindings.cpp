#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "vvmf/cli.hpp"
#include "vvmf/component.hpp"
#include "vvmf/dmatrix.hpp"
#include "vvmf/euler.hpp"
#include "vvmf/profile.hpp"
#include "vvmf/qseries.hpp"
#include "vvmf/serialize.hpp"

namespace py = pybind11;

namespace {

using vvmf::json;

py::object py_from_json(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& el : j) out.append(py_from_json(el));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = py_from_json(it.value());
            return out;
        }
        default:
            throw std::runtime_error("unsupported JSON payload");
    }
}

json json_from_py(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) {
        // Arbitrary precision survives the trip as a decimal string.
        auto as_str = py::str(obj).cast<std::string>();
        try {
            return json(std::stoll(as_str));
        } catch (const std::out_of_range&) {
            return json(as_str);
        }
    }
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::dict>(obj)) {
        json out = json::object();
        for (auto item : obj.cast<py::dict>())
            out[item.first.cast<std::string>()] = json_from_py(item.second);
        return out;
    }
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        json out = json::array();
        for (auto item : obj.cast<py::sequence>()) out.push_back(json_from_py(item));
        return out;
    }
    throw std::invalid_argument("cannot encode Python object as JSON");
}

vvmf::Rational rational_from_str(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return vvmf::Rational(vvmf::Int(s));
    vvmf::Int num(s.substr(0, slash));
    vvmf::Int den(s.substr(slash + 1));
    return vvmf::make_rational(num, den);
}

vvmf::Parity parity_from_str(const std::string& s) {
    if (s == "even") return vvmf::Parity::Even;
    if (s == "odd") return vvmf::Parity::Odd;
    throw std::invalid_argument("parity must be 'even' or 'odd'");
}

vvmf::ComponentParams component_from_args(const std::string& parity, int a,
                                          int b, int x, int y, int z) {
    vvmf::ComponentParams p;
    p.parity = parity_from_str(parity);
    p.a = a;
    p.b = b;
    p.x = x;
    p.y = y;
    p.z = z;
    if (a < 0 || b < 0 || x < 0 || y < 0 || z < 0 || a + b != x + y + z ||
        a + b <= 0)
        throw std::invalid_argument("multiplicities must be nonnegative with a+b = x+y+z = d > 0");
    return p;
}

vvmf::ChiContext context_from_args(const std::string& parity, int a, int b,
                                   int x, int y, int z, int twelve_trl) {
    auto comp = component_from_args(parity, a, b, x, y, z);
    auto middle = vvmf::middle_range(comp.dimension(), twelve_trl, comp.parity);
    return vvmf::make_chi_context(comp.dimension(), vvmf::traces_of(comp),
                                  twelve_trl, middle.ell_one);
}

}  // namespace

PYBIND11_MODULE(pyvvmf, m) {
    m.doc() = "Exact arithmetic for weight profiles of vector valued modular forms";

    py::register_exception<vvmf::NonIntegralChi>(m, "NonIntegralChi",
                                                 PyExc_ValueError);
    py::register_exception<vvmf::WeightMismatch>(m, "WeightMismatch",
                                                 PyExc_ValueError);
    py::register_exception<vvmf::CapViolation>(m, "CapViolation",
                                               PyExc_RuntimeError);
    py::register_exception<vvmf::InternalInconsistency>(m, "InternalInconsistency",
                                                        PyExc_RuntimeError);

    m.def(
        "enumerate_types",
        [](int d, bool advanced, bool unitary, int threads) {
            vvmf::EnumerateOptions opt;
            opt.advanced = advanced;
            opt.unitary = unitary;
            opt.threads = threads;
            return py_from_json(vvmf::enumerate_to_json(vvmf::enumerate_types(d, opt)));
        },
        py::arg("d"), py::arg("advanced") = false, py::arg("unitary") = false,
        py::arg("threads") = 1,
        "All candidate (type, multiplicity) tuples in dimension d with their realizations");

    m.def(
        "components",
        [](int d) {
            py::list out;
            for (const auto& c : vvmf::enumerate_components(d)) {
                py::dict e;
                e["parity"] = vvmf::parity_name(c.parity);
                e["a"] = c.a;
                e["b"] = c.b;
                e["x"] = c.x;
                e["y"] = c.y;
                e["z"] = c.z;
                e["twelve_trl"] = py::cast(vvmf::trace_l_candidates(c));
                out.append(e);
            }
            return out;
        },
        py::arg("d"), "Eigenvalue-multiplicity components of dimension d");

    m.def(
        "p_polynomial",
        [](const std::string& parity, int a, int b, int x, int y, int z,
           int twelve_trl) {
            auto ctx = context_from_args(parity, a, b, x, y, z, twelve_trl);
            auto P = vvmf::p_polynomial(ctx);
            py::list coeffs;
            for (int k = 0; k <= P.degree(); ++k)
                coeffs.append(py::int_(py::str(P.coeff(k).get_str())));
            py::dict out;
            out["ell_one"] = ctx.ell_one;
            out["coeffs"] = coeffs;
            return out;
        },
        py::arg("parity"), py::arg("a"), py::arg("b"), py::arg("x"),
        py::arg("y"), py::arg("z"), py::arg("twelve_trl"),
        "Numerator polynomial of the chi generating series; raises NonIntegralChi when empty");

    m.def(
        "euler_coefficients",
        [](const std::string& parity, int a, int b, int x, int y, int z,
           int twelve_trl, int n_terms) {
            auto ctx = context_from_args(parity, a, b, x, y, z, twelve_trl);
            py::list out;
            for (int n = 0; n < n_terms; ++n)
                out.append(py::int_(py::str(vvmf::euler_coefficient(ctx, n).get_str())));
            return out;
        },
        py::arg("parity"), py::arg("a"), py::arg("b"), py::arg("x"),
        py::arg("y"), py::arg("z"), py::arg("twelve_trl"), py::arg("n_terms"),
        "chi(V_{l1+2n}) for n = 0..n_terms-1");

    m.def(
        "serre_derive_terms",
        [](const py::object& terms, std::optional<int> weight) {
            auto p = vvmf::graded_from_json(json_from_py(terms), weight);
            return py_from_json(vvmf::graded_to_json(vvmf::serre_derive(p)));
        },
        py::arg("terms"), py::arg("weight") = std::nullopt,
        "Derivation on [e4, e6, num, den] term lists; raises the weight by 2");

    m.def(
        "weight_basis",
        [](int k) {
            py::list out;
            for (auto [e4, e6] : vvmf::weight_basis(k))
                out.append(py::make_tuple(e4, e6));
            return out;
        },
        py::arg("k"), "(e4, e6) exponent pairs of weight k, e6 ascending");

    m.def(
        "eisenstein_series",
        [](int weight, int n_terms) {
            vvmf::QSeries s;
            if (weight == 2)
                s = vvmf::derive_e2(n_terms);
            else if (weight == 4)
                s = vvmf::eisenstein_e4(n_terms);
            else if (weight == 6)
                s = vvmf::eisenstein_e6(n_terms);
            else
                throw std::invalid_argument("weight must be 2, 4 or 6");
            py::list out;
            for (const auto& c : s.coeffs) out.append(py::str(vvmf::rat_str(c)));
            return out;
        },
        py::arg("weight"), py::arg("n_terms"),
        "q-expansion of E2, E4 or E6 as exact fraction strings");

    m.def(
        "serre_derivative_series",
        [](const std::vector<std::string>& coeffs, int k) {
            std::vector<vvmf::Rational> c;
            c.reserve(coeffs.size());
            for (const auto& s : coeffs) c.push_back(rational_from_str(s));
            auto out = vvmf::serre_derivative(vvmf::QSeries(std::move(c)), k);
            py::list res;
            for (const auto& v : out.coeffs) res.append(py::str(vvmf::rat_str(v)));
            return res;
        },
        py::arg("coeffs"), py::arg("k"),
        "q df/dq - (k/12) E2 f on fraction-string coefficients");

    m.def(
        "random_matrix",
        [](const std::vector<int>& mults, int k1, std::uint64_t seed) {
            vvmf::BlockShape shape{mults, k1};
            return py_from_json(vvmf::dmatrix_to_json(vvmf::random_dmatrix(shape, seed)));
        },
        py::arg("mults"), py::arg("k1"), py::arg("seed"),
        "Deterministic dense matrix of the given block shape");

    m.def(
        "reduce",
        [](const py::object& matrix) {
            auto A = vvmf::dmatrix_from_json(json_from_py(matrix));
            auto [B, P] = vvmf::reduce_e6(A);
            py::dict out;
            out["matrix"] = py_from_json(vvmf::dmatrix_to_json(B));
            out["transform"] = py_from_json(vvmf::transformation_to_json(P));
            out["check"] = vvmf::conjugation_check(A, B, P);
            return out;
        },
        py::arg("matrix"),
        "Eliminates e6 from every entry; returns matrix, transform and an exact check");

    m.def(
        "kernel_vector",
        [](const py::object& matrix, int j) -> py::object {
            auto A = vvmf::dmatrix_from_json(json_from_py(matrix));
            auto v = vvmf::kernel_flat_vector(A, j);
            if (!v) return py::none();
            py::list out;
            for (const auto& c : *v) out.append(py::str(vvmf::rat_str(c)));
            return out;
        },
        py::arg("matrix"), py::arg("j"),
        "Scalar kernel certificate for block column j of a reduced matrix");

    m.def(
        "dual_weights",
        [](const std::vector<int>& weights) {
            if (weights.empty()) throw std::invalid_argument("empty weight tuple");
            vvmf::Profile p{weights};
            return vvmf::dual_cuspidal_profile(p).weights;
        },
        py::arg("weights"), "Cuspidal dual weight tuple (12 - k_d, ..., 12 - k_1)");

    m.def("tensor_standard", &vvmf::tensor_standard, py::arg("mults"),
          "Multiplicity tuple of the tensor with the standard two-dimensional type");

    m.def("mult_bounds_ok", &vvmf::filter_mult_bounds, py::arg("mults"),
          "Both alternating-sum multiplicity bounds");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = vvmf::run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Invoke the command-line surface; returns (exit_code, stdout, stderr)");
}
