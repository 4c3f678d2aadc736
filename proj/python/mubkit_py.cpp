// Python bindings for the main operations: fields, MUB sets, protocols,
// phase space, Hadamard families, searches, and the prime-distinguishing
// function. Matrices cross the boundary as nested lists of complex numbers.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mubkit/bellproto.hpp"
#include "mubkit/hadamard.hpp"
#include "mubkit/meanking.hpp"
#include "mubkit/numth.hpp"
#include "mubkit/phasespace.hpp"
#include "mubkit/search.hpp"

namespace py = pybind11;
using namespace mubkit;

namespace {

using PyMatrix = std::vector<std::vector<cdouble>>;

PyMatrix to_py(const CMatrix& m) {
    PyMatrix out(static_cast<size_t>(m.rows()), std::vector<cdouble>(static_cast<size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.value(i, j);
    return out;
}

CMatrix from_py(const PyMatrix& rows) { return CMatrix::from_rows(rows); }

HMat family_by_name(const std::string& name, py::kwargs kw) {
    auto getd = [&](const char* k, double dflt) {
        return kw.contains(k) ? kw[k].cast<double>() : dflt;
    };
    auto geti = [&](const char* k, int dflt) { return kw.contains(k) ? kw[k].cast<int>() : dflt; };
    if (name == "fourier") return fourier(geti("n", 6));
    if (name == "galois_fourier") return galois_fourier(GfSpec(geti("p", 2), geti("m", 2)));
    if (name == "F4") return f4_family(getd("a", 0));
    if (name == "F6") return f6_family(getd("a", 0), getd("b", 0));
    if (name == "F6T") return f6_transposed(getd("a", 0), getd("b", 0));
    if (name == "dita") return dita_family(getd("a", 0));
    if (name == "bjorck_c6") return bjorck_c6();
    if (name == "tao_s6") return tao_s6();
    if (name == "standard_prime") return standard_prime_h(geti("p", 5), geti("r", 0));
    if (name == "karlsson")
        return karlsson(getd("x1", 0), getd("x2", 0), getd("x3", 1),
                        std::polar(1.0, getd("z1arg", 0)), geti("signs", 0));
    fail("BadParameter", "unknown family " + name);
}

} // namespace

PYBIND11_MODULE(_mubkit, mod) {
    mod.doc() = "Galois fields, mutually unbiased bases, Hadamard matrices, and the protocols built on them";

    py::register_exception<Error>(mod, "MubkitError");

    py::class_<GfSpec, std::shared_ptr<GfSpec>>(mod, "GfSpec")
        .def(py::init([](int p, int m, std::optional<std::vector<int>> mu) {
                 return mu ? std::make_shared<GfSpec>(p, m, &*mu) : std::make_shared<GfSpec>(p, m);
             }),
             py::arg("p"), py::arg("m"), py::arg("mu") = std::nullopt)
        .def_property_readonly("p", &GfSpec::p)
        .def_property_readonly("m", &GfSpec::m)
        .def_property_readonly("N", &GfSpec::N)
        .def_property_readonly("mu", &GfSpec::mu)
        .def_property_readonly("mult_matrices", &GfSpec::mult_matrices)
        .def_property_readonly("dual_gens", &GfSpec::dual_gens)
        .def("add", &GfSpec::add)
        .def("sub", &GfSpec::sub)
        .def("neg", &GfSpec::neg)
        .def("mul", &GfSpec::mul)
        .def("div", &GfSpec::divide)
        .def("inv", &GfSpec::inv)
        .def("char_exp", &GfSpec::char_exp)
        .def("digits", &GfSpec::digits)
        .def("verify_axioms", [](const GfSpec& f) {
            auto rep = f.verify_axioms();
            return py::make_tuple(rep.ok, rep.detail);
        });

    py::class_<MubSet>(mod, "MubSet")
        .def_property_readonly("N", &MubSet::N)
        .def("basis", [](const MubSet& s, int i) { return to_py(s.bases.at(static_cast<size_t>(i))); })
        .def("alpha",
             [](const MubSet& s, GfEl i, GfEl l) { return s.alpha.at(i, l).to_complex(); })
        .def("verify_exact", [](const MubSet& s) {
            std::string w;
            bool ok = mub_verify_exact(s, &w);
            return py::make_tuple(ok, w);
        })
        .def("complementary_observable",
             [](const MubSet& s, int i) { return to_py(complementary_observable(s, i)); })
        .def("clifford", [](const MubSet& s, int i) { return to_py(clifford(s, i)); });

    mod.def(
        "build_mub",
        [](int p, int m, bool symmetric) {
            return build_mub(std::make_shared<GfSpec>(p, m), symmetric);
        },
        py::arg("p"), py::arg("m"), py::arg("symmetric") = true);

    mod.def("galois_v", [](const std::shared_ptr<GfSpec>& f, GfEl i, GfEl j) {
        return to_py(GaloisHW(f).V(i, j));
    });

    mod.def("bell_state", [](const std::shared_ptr<GfSpec>& f, GfEl m, GfEl n) {
        return bell_state(*f, m, n);
    });
    mod.def("dense_coding", [](const std::shared_ptr<GfSpec>& f, GfEl m, GfEl n) {
        auto r = dense_coding_sim(*f, m, n);
        return py::make_tuple(r.m, r.n, r.probability);
    });
    mod.def("teleport", [](const std::shared_ptr<GfSpec>& f, const StateVec& psi) {
        py::list out;
        for (const auto& b : teleport_sim(*f, psi))
            out.append(py::make_tuple(b.m, b.n, b.probability, b.fidelity));
        return out;
    });
    mod.def("cerf_clone", [](const std::shared_ptr<GfSpec>& f, const PyMatrix& a, const StateVec& psi) {
        auto r = cerf_clone(*f, a, psi);
        py::dict d;
        d["rho1"] = to_py(r.rho1);
        d["rho2"] = to_py(r.rho2);
        d["rho3"] = to_py(r.rho3);
        d["b"] = r.b;
        d["closed_form_residual1"] = r.closed_form_residual1;
        d["closed_form_residual3"] = r.closed_form_residual3;
        return d;
    });
    mod.def("entanglement_swap", [](const std::shared_ptr<GfSpec>& f, GfEl m, GfEl n) {
        py::list out;
        for (const auto& b : swap_sim(*f, m, n))
            out.append(py::make_tuple(b.m, b.n, b.probability, b.fidelity));
        return out;
    });

    mod.def("mk_infer", [](const std::shared_ptr<GfSpec>& f, int i, GfEl m, GfEl n) {
        return mk_infer(*f, i, m, n);
    });
    mod.def("mk_protocol", [](const MubSet& mub, long long trials, std::uint64_t seed) {
        auto st = mk_protocol_sim(mub, trials, seed);
        py::dict d;
        d["cases"] = st.cases;
        d["success_rate"] = st.success_rate;
        d["max_prob_dev"] = st.max_prob_dev;
        d["mc_trials"] = st.mc_trials;
        d["mc_worst_sigma"] = st.mc_worst_sigma;
        return d;
    }, py::arg("mub"), py::arg("trials") = 0, py::arg("seed") = 1);
    mod.def("mk_grids", [](const std::shared_ptr<GfSpec>& f) { return mk_grids(*f); });
    mod.def("affine_mols", [](const std::shared_ptr<GfSpec>& f) { return affine_mols(*f); });

    mod.def("wigner_criteria", [](const MubSet& mub) {
        WignerBasis wb = wigner_basis(mub);
        auto cr = wigner_criteria(mub, wb);
        py::dict d;
        d["w1_hermitian_dev"] = cr.w1_hermitian_dev;
        d["w2_trace_dev"] = cr.w2_trace_dev;
        d["w3_ortho_dev"] = cr.w3_ortho_dev;
        d["w4_covariance_dev"] = cr.w4_covariance_dev;
        d["w5_marginal_dev"] = cr.w5_marginal_dev;
        d["w6_applicable"] = cr.w6_applicable;
        d["w6_parity_dev"] = cr.w6_parity_dev;
        d["w6_factor_dev"] = cr.w6_factor_dev;
        return d;
    });
    mod.def("wigner_operator", [](const MubSet& mub, GfEl m, GfEl n) {
        return to_py(wigner_basis(mub).at(m, n));
    });
    mod.def("tomography_probs",
            [](const MubSet& mub, const PyMatrix& rho) { return tomography_probs(mub, from_py(rho)); });
    mod.def("tomography_reconstruct", [](const MubSet& mub, const std::vector<std::vector<double>>& p) {
        return to_py(tomography_reconstruct(mub, p));
    });

    py::class_<HMat>(mod, "HMat")
        .def_property_readonly("family", [](const HMat& h) { return h.family; })
        .def_property_readonly("N", &HMat::N)
        .def_property_readonly("matrix", [](const HMat& h) { return to_py(h.m); })
        .def("hadamard_dev", &HMat::hadamard_dev)
        .def("is_hadamard", &HMat::is_hadamard, py::arg("tol") = 1e-10)
        .def("dephased", [](const HMat& h) { return to_py(dephase(h).m); });

    mod.def("hadamard", &family_by_name);
    mod.def("mu_pair", &mu_pair, py::arg("h1"), py::arg("h2"), py::arg("tol") = 1e-10);
    mod.def("defect", &defect);
    mod.def("equivalent", [](const HMat& a, const HMat& b) {
        auto cert = equivalent(a, b);
        return py::make_tuple(cert.verdict, cert.invariant_note);
    });
    mod.def("gauss_sequence", &gauss_sequence);
    mod.def("biunimodular_check", &biunimodular_check, py::arg("z"), py::arg("tol") = 1e-10);
    mod.def("circulant", [](const std::vector<cdouble>& z) { return to_py(circulant(z).m); });
    mod.def("standard_muhm", [](int N) {
        auto rep = standard_muhm(N);
        return py::make_tuple(rep.maximal, rep.failing_rs);
    });

    mod.def("grassmann_d2", [](const PyMatrix& a, const PyMatrix& b) {
        return grassmann_d2(from_py(a), from_py(b));
    });
    mod.def(
        "unbiased_census",
        [](const HMat& anchor, long long restarts, std::uint64_t seed, int window) {
            auto cat = unbiased_vector_search(anchor, restarts, 1e-12, 1e-6, seed, window);
            py::dict d;
            d["Nv"] = cat.Nv;
            d["Nt"] = cat.Nt;
            d["saturated"] = cat.saturated;
            d["restarts_used"] = cat.restarts_used;
            d["worst_residual"] = cat.worst_residual;
            d["vectors"] = cat.vectors;
            d["bases"] = cat.bases;
            if (cat.bases.size() >= 2) {
                auto rep = extendability_probe(cat);
                d["max_d2_raw"] = rep.max_d2_raw;
                d["max_d2_normalized"] = rep.max_d2_normalized;
            }
            return d;
        },
        py::arg("anchor"), py::arg("restarts") = 200000, py::arg("seed") = 7,
        py::arg("saturation_window") = 500);
    mod.def(
        "constellation_search",
        [](const std::vector<int>& shape, int N, int restarts, std::uint64_t seed) {
            auto r = constellation_search(shape, N, restarts, seed);
            py::dict d;
            d["best_penalty"] = r.best_penalty;
            d["success"] = r.success;
            d["restarts_used"] = r.restarts_used;
            return d;
        },
        py::arg("shape"), py::arg("N"), py::arg("restarts") = 20, py::arg("seed") = 7);

    mod.def("g_exact", [](long long N) {
        RadicalValue g = g_exact(N);
        return py::make_tuple(g.str(), g.to_double(), g.is_zero());
    });
    mod.def("g_float", &g_float);
    mod.def("h_value", [](long long N) {
        RadicalValue h = h_value(N);
        return py::make_tuple(h.str(), h.to_double());
    });
    mod.def("is_prime_via_g", &is_prime_via_g);
    mod.def("gauss_sum_check", [](long long N, long long n) {
        auto r = gauss_sum_check(N, n);
        return py::make_tuple(r.float_value, r.exact_value, r.matches);
    });
    mod.def("ring_subgroups", [](int N) {
        auto rep = ring_subgroups(N);
        py::dict d;
        d["generators"] = rep.generators;
        d["partners"] = rep.partners;
        d["clique_number"] = rep.clique_number;
        return d;
    });
}
