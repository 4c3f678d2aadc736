// Command-line front end: reproducible, JSON-emitting subcommands over the
// library. Exit codes: 0 success, 1 verification failure, 2 usage error.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mubkit/bellproto.hpp"
#include "mubkit/hadamard.hpp"
#include "mubkit/json_io.hpp"
#include "mubkit/meanking.hpp"
#include "mubkit/numth.hpp"
#include "mubkit/phasespace.hpp"
#include "mubkit/search.hpp"

using namespace mubkit;

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("MUBKIT_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

void emit(const json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(path);
        out << j.dump(2) << "\n";
    }
}

std::shared_ptr<const GfSpec> make_field(int p, int m, const std::vector<int>& mu) {
    if (mu.empty()) return std::make_shared<GfSpec>(p, m);
    return std::make_shared<GfSpec>(p, m, &mu);
}

// N = p^m or a usage error
void factor_prime_power(long long N, int& p, int& m) {
    long long q;
    int a;
    if (!prime_power(N, q, a)) throw CLI::ValidationError("--n", "N must be a prime power");
    p = static_cast<int>(q);
    m = a;
}

HMat build_family(const std::string& family, double a, double b, int n, int p, int r,
                  double x1, double x2, double x3, double z1arg, int signs) {
    if (family == "fourier") return fourier(n);
    if (family == "galois_fourier") {
        int pp, mm;
        factor_prime_power(n, pp, mm);
        return galois_fourier(GfSpec(pp, mm));
    }
    if (family == "F4") return f4_family(a);
    if (family == "F6") return f6_family(a, b);
    if (family == "F6T") return f6_transposed(a, b);
    if (family == "dita") return dita_family(a);
    if (family == "bjorck_c6") return bjorck_c6();
    if (family == "tao_s6") return tao_s6();
    if (family == "standard_prime") return standard_prime_h(p, r);
    if (family == "karlsson") return karlsson(x1, x2, x3, std::polar(1.0, z1arg), signs);
    throw CLI::ValidationError("--family", "unknown family " + family);
}

int selftest_field(int p, int m) {
    GfSpec f(p, m);
    auto rep = f.verify_axioms();
    std::cout << "field axioms: " << (rep.ok ? "PASS" : "FAIL " + rep.detail) << "\n";
    return rep.ok ? 0 : 1;
}

int selftest_mub(int p, int m) {
    MubSet mub = build_mub(std::make_shared<GfSpec>(p, m));
    std::string w;
    bool ok = mub.alpha.check_boundary() && mub.alpha.check_group_law() && mub_verify_exact(mub, &w);
    std::cout << "mub invariants: " << (ok ? "PASS" : "FAIL " + w) << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mubkit: Galois fields, mutually unbiased bases, Hadamard matrices, and friends"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads (modules are currently single-threaded)");

    // shared options
    int p = 2, m = 1;
    long long nflag = 0;
    std::vector<int> mu;
    std::uint64_t seed = default_seed();
    std::string out;
    bool selftest = false;

    auto add_field_opts = [&](CLI::App* cmd, bool withSeed = false) {
        cmd->add_option("--p", p, "prime");
        cmd->add_option("--m", m, "extension degree");
        cmd->add_option("--mu", mu, "defining coefficients override");
        cmd->add_option("--out", out, "output file (default stdout)");
        cmd->add_flag("--selftest", selftest, "run the module invariant suite");
        if (withSeed) cmd->add_option("--seed", seed, "RNG seed (env MUBKIT_SEED overrides default)");
    };

    // ---- field ----------------------------------------------------------
    auto* cField = app.add_subcommand("field", "construct and inspect GF(p^m)");
    bool fieldVerify = false;
    add_field_opts(cField);
    cField->add_flag("--verify", fieldVerify, "exhaustively verify the field axioms");
    cField->callback([&]() {
        if (selftest) std::exit(selftest_field(p, m));
        auto f = make_field(p, m, mu);
        json j;
        j["p"] = f->p();
        j["m"] = f->m();
        j["N"] = f->N();
        j["mu"] = f->mu();
        j["multMatrices"] = f->mult_matrices();
        j["dualGens"] = f->dual_gens();
        if (fieldVerify) {
            auto rep = f->verify_axioms();
            j["axioms"] = rep.ok ? "PASS" : "FAIL";
            if (!rep.ok) j["violation"] = rep.detail;
            emit(j, out);
            std::exit(rep.ok ? 0 : 1);
        }
        emit(j, out);
    });

    // ---- mub / export ---------------------------------------------------
    auto* cMub = app.add_subcommand("mub", "construct the maximal set of N+1 MUB");
    bool doExport = false, symmetric = true;
    int basisIdx = -1;
    add_field_opts(cMub);
    cMub->add_flag("--export", doExport, "emit all bases as exact JSON matrices");
    cMub->add_flag("!--no-symmetric", symmetric, "use a non-symmetric (twisted) phase table");
    cMub->add_option("--basis", basisIdx, "emit a single basis (0..N)");
    cMub->callback([&]() {
        if (selftest) std::exit(selftest_mub(p, m));
        auto f = make_field(p, m, mu);
        MubSet mub = symmetric ? build_mub(f, true) : [&]() {
            std::vector<GfEl> tw(static_cast<size_t>(f->N()), 0);
            for (GfEl i = 1; i < f->N(); ++i) tw[static_cast<size_t>(i)] = i;
            return build_mub(f, AlphaTable(f, false, &tw));
        }();
        json j;
        j["N"] = mub.N();
        j["symmetricPhases"] = symmetric;
        if (basisIdx >= 0) {
            j["basis"] = basisIdx;
            j["matrix"] = matrix_to_json(mub.bases[static_cast<size_t>(basisIdx)]);
        } else if (doExport) {
            json bases = json::array();
            for (const auto& b2 : mub.bases) bases.push_back(matrix_to_json(b2));
            j["bases"] = bases;
            // the bases rescaled by sqrt(N): root-of-unity Hadamard matrices
            Cyclo rootN = Cyclo::scaled(Rational(1), f->N());
            json hadamards = json::array();
            for (GfEl i = 0; i < f->N(); ++i)
                hadamards.push_back(matrix_to_json(rootN * mub.bases[static_cast<size_t>(i)]));
            j["hadamards"] = hadamards;
            json alphas = json::array();
            for (GfEl i = 0; i < f->N(); ++i) {
                CMatrix d = CMatrix::zeros_exact(mub.N(), mub.N());
                for (GfEl l = 0; l < f->N(); ++l)
                    d.ex(static_cast<int>(l), static_cast<int>(l)) = mub.alpha.at(i, l);
                alphas.push_back(matrix_to_json(d));
            }
            j["alphaDiagonals"] = alphas;
        } else {
            std::string w;
            j["pairwiseUnbiasedExact"] = mub_verify_exact(mub, &w);
        }
        emit(j, out);
    });

    // ---- verify ----------------------------------------------------------
    auto* cVerify = app.add_subcommand("verify", "exact pairwise-MU verification");
    add_field_opts(cVerify);
    cVerify->callback([&]() {
        if (selftest) std::exit(selftest_mub(p, m));
        auto f = make_field(p, m, mu);
        MubSet mub = build_mub(f);
        std::string w;
        bool ok = mub_verify_exact(mub, &w);
        std::cout << "all N+1 bases pairwise MU: " << (ok ? "PASS" : "FAIL at " + w) << "\n";
        std::exit(ok ? 0 : 1);
    });

    // ---- bell / teleport / clone / swap ----------------------------------
    auto* cBell = app.add_subcommand("bell", "generalized Bell states and dense coding");
    long long bm = 0, bn = 0;
    add_field_opts(cBell, true);
    cBell->add_option("--bm", bm, "message index m");
    cBell->add_option("--bn", bn, "message index n");
    cBell->callback([&]() {
        if (selftest) {
            GfSpec f2(p, m);
            bool ok = true;
            for (GfEl mm = 0; mm < f2.N() && ok; ++mm)
                for (GfEl nn = 0; nn < f2.N() && ok; ++nn) {
                    auto d = dense_coding_sim(f2, mm, nn);
                    ok = d.m == mm && d.n == nn && std::abs(d.probability - 1) < 1e-12;
                }
            std::cout << "bell invariants: " << (ok ? "PASS" : "FAIL") << "\n";
            std::exit(ok ? 0 : 1);
        }
        auto f = make_field(p, m, mu);
        auto dec = dense_coding_sim(*f, bm, bn);
        json j;
        j["sent"] = {bm, bn};
        j["decoded"] = {dec.m, dec.n};
        j["probability"] = dec.probability;
        j["tolerance"] = 1e-12;
        StateVec b = bell_state(*f, bm, bn);
        json amps = json::array();
        for (const auto& x : b) amps.push_back({x.real(), x.imag()});
        j["state"] = amps;
        emit(j, out);
        std::exit(dec.m == bm && dec.n == bn ? 0 : 1);
    });

    auto* cTele = app.add_subcommand("teleport", "teleport a random state, report all branches");
    add_field_opts(cTele, true);
    cTele->callback([&]() {
        if (selftest) {
            GfSpec f2(p, m);
            std::mt19937_64 rng2(seed);
            std::normal_distribution<double> g2(0, 1);
            StateVec ps(static_cast<size_t>(f2.N()));
            for (auto& x : ps) x = cdouble(g2(rng2), g2(rng2));
            double s2 = std::sqrt(norm2(ps));
            for (auto& x : ps) x /= s2;
            bool ok = true;
            for (const auto& br : teleport_sim(f2, ps))
                ok = ok && std::abs(br.fidelity - 1) < 1e-9;
            std::cout << "teleport invariants: " << (ok ? "PASS" : "FAIL") << "\n";
            std::exit(ok ? 0 : 1);
        }
        auto f = make_field(p, m, mu);
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> g(0, 1);
        StateVec psi(static_cast<size_t>(f->N()));
        for (auto& x : psi) x = cdouble(g(rng), g(rng));
        double s = std::sqrt(norm2(psi));
        for (auto& x : psi) x /= s;
        auto branches = teleport_sim(*f, psi);
        double worstP = 0, worstF = 0;
        json arr = json::array();
        for (const auto& br : branches) {
            arr.push_back({{"m", br.m}, {"n", br.n}, {"p", br.probability}, {"fidelity", br.fidelity}});
            worstP = std::max(worstP, std::abs(br.probability - 1.0 / (f->N() * f->N())));
            worstF = std::max(worstF, std::abs(br.fidelity - 1.0));
        }
        json j;
        j["seed"] = seed;
        j["branches"] = arr;
        j["maxProbDev"] = worstP;
        j["maxFidelityDev"] = worstF;
        j["tolerance"] = 1e-9;
        emit(j, out);
        std::exit(worstP < 1e-9 && worstF < 1e-9 ? 0 : 1);
    });

    auto* cClone = app.add_subcommand("clone", "Cerf-ansatz cloning with a random amplitude grid");
    add_field_opts(cClone, true);
    cClone->callback([&]() {
        if (selftest) {
            GfSpec f2(p, m);
            int N2 = static_cast<int>(f2.N());
            StateVec ps(static_cast<size_t>(N2), cdouble(0, 0));
            ps[0] = 1.0;
            std::vector<std::vector<cdouble>> aa(static_cast<size_t>(N2), std::vector<cdouble>(static_cast<size_t>(N2), cdouble(0, 0)));
            aa[0][0] = 1.0;
            auto rr = cerf_clone(f2, aa, ps);
            bool ok = rr.closed_form_residual1 < 1e-9 && rr.closed_form_residual3 < 1e-9;
            std::cout << "clone invariants: " << (ok ? "PASS" : "FAIL") << "\n";
            std::exit(ok ? 0 : 1);
        }
        auto f = make_field(p, m, mu);
        int N = static_cast<int>(f->N());
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> g(0, 1);
        StateVec psi(static_cast<size_t>(N));
        for (auto& x : psi) x = cdouble(g(rng), g(rng));
        double s = std::sqrt(norm2(psi));
        for (auto& x : psi) x /= s;
        std::vector<std::vector<cdouble>> a(static_cast<size_t>(N), std::vector<cdouble>(static_cast<size_t>(N)));
        double tot = 0;
        for (auto& row : a)
            for (auto& x : row) {
                x = cdouble(g(rng), g(rng));
                tot += std::norm(x);
            }
        for (auto& row : a)
            for (auto& x : row) x /= std::sqrt(tot);
        auto res = cerf_clone(*f, a, psi);
        json j;
        j["seed"] = seed;
        j["closedFormResidual1"] = res.closed_form_residual1;
        j["closedFormResidual3"] = res.closed_form_residual3;
        j["tolerance"] = 1e-9;
        j["rho1"] = matrix_to_json(res.rho1);
        j["rho2"] = matrix_to_json(res.rho2);
        j["rho3"] = matrix_to_json(res.rho3);
        emit(j, out);
        std::exit(res.closed_form_residual1 < 1e-9 && res.closed_form_residual3 < 1e-9 ? 0 : 1);
    });

    auto* cSwap = app.add_subcommand("swap", "entanglement swapping");
    add_field_opts(cSwap, true);
    cSwap->add_option("--bm", bm, "initial Bell index m");
    cSwap->add_option("--bn", bn, "initial Bell index n");
    cSwap->callback([&]() {
        if (selftest) {
            GfSpec f2(p, m);
            bool ok = true;
            for (const auto& br : swap_sim(f2, 0, 0)) ok = ok && std::abs(br.fidelity - 1) < 1e-9;
            std::cout << "swap invariants: " << (ok ? "PASS" : "FAIL") << "\n";
            std::exit(ok ? 0 : 1);
        }
        auto f = make_field(p, m, mu);
        auto branches = swap_sim(*f, bm, bn);
        double worstP = 0, worstF = 0;
        json arr = json::array();
        for (const auto& br : branches) {
            arr.push_back({{"m", br.m}, {"n", br.n}, {"p", br.probability}, {"fidelity", br.fidelity}});
            worstP = std::max(worstP, std::abs(br.probability - 1.0 / (f->N() * f->N())));
            worstF = std::max(worstF, std::abs(br.fidelity - 1.0));
        }
        json j;
        j["branches"] = arr;
        j["maxProbDev"] = worstP;
        j["maxFidelityDev"] = worstF;
        j["tolerance"] = 1e-9;
        emit(j, out);
        std::exit(worstP < 1e-9 && worstF < 1e-9 ? 0 : 1);
    });

    // ---- meanking ---------------------------------------------------------
    auto* cKing = app.add_subcommand("meanking", "Mean King protocol and affine-plane tools");
    long long kingN = 2;
    bool grids = false;
    long long trials = 0;
    cKing->add_option("--n", kingN, "dimension (prime power)")->required();
    cKing->add_flag("--grids", grids, "print the inference grids");
    cKing->add_option("--trials", trials, "Monte Carlo detector trials per preparation");
    cKing->add_option("--seed", seed, "RNG seed");
    cKing->add_option("--out", out, "output file");
    cKing->add_flag("--selftest", selftest, "run the module invariant suite");
    cKing->callback([&]() {
        int pp, mm;
        factor_prime_power(kingN, pp, mm);
        auto f = make_field(pp, mm, {});
        if (selftest) {
            auto plane = affine_plane(*f);
            MubSet mub = build_mub(f);
            auto st = mk_protocol_sim(mub);
            bool ok = plane.axioms_ok && st.success_rate == 1.0;
            std::cout << "meanking invariants: " << (ok ? "PASS" : "FAIL") << "\n";
            std::exit(ok ? 0 : 1);
        }
        MubSet mub = build_mub(f);
        auto st = mk_protocol_sim(mub, trials, seed);
        json j;
        j["N"] = kingN;
        j["cases"] = st.cases;
        j["successRate"] = st.success_rate;
        j["maxDetectorProbDev"] = st.max_prob_dev;
        j["tolerance"] = 1e-12;
        if (trials > 0) {
            j["mcTrials"] = st.mc_trials;
            j["mcWorstSigma"] = st.mc_worst_sigma;
        }
        auto gr = mk_grids(*f);
        if (grids) {
            // columns m left-to-right, rows n bottom-to-top
            for (size_t i = 0; i < gr.size(); ++i) {
                std::cout << "i = " << i << (i == gr.size() - 1 ? " (computational)" : "") << "\n";
                for (int n = static_cast<int>(kingN) - 1; n >= 0; --n) {
                    for (int mcol = 0; mcol < static_cast<int>(kingN); ++mcol)
                        std::cout << gr[i][static_cast<size_t>(mcol)][static_cast<size_t>(n)] << " ";
                    std::cout << "\n";
                }
                std::cout << "\n";
            }
        }
        json jg = json::array();
        for (const auto& grid : gr) jg.push_back(grid);
        j["grids"] = jg;
        emit(j, out);
        std::exit(st.success_rate == 1.0 ? 0 : 1);
    });

    // ---- wigner ------------------------------------------------------------
    auto* cWig = app.add_subcommand("wigner", "discrete Wigner basis and its criteria");
    std::vector<long long> btwist;
    add_field_opts(cWig);
    cWig->add_option("--btwist", btwist, "experimental seed twist b_1..b_{N-1} (b_0 = 0 implied)");
    std::vector<int> expectIK;
    cWig->add_option("--expect", expectIK, "emit the <e^i_k|W_{m,n}|e^i_k> grid for basis i, ket k");
    cWig->callback([&]() {
        if (selftest) {
            MubSet mub2 = build_mub(std::make_shared<GfSpec>(p, m));
            WignerBasis wb2 = wigner_basis(mub2);
            auto cr2 = wigner_criteria(mub2, wb2);
            bool ok = cr2.w1_hermitian_dev < 1e-10 && cr2.w3_ortho_dev < 1e-9 &&
                      cr2.w4_covariance_dev < 1e-10 && cr2.w5_marginal_dev < 1e-10;
            std::cout << "wigner invariants: " << (ok ? "PASS" : "FAIL") << "\n";
            std::exit(ok ? 0 : 1);
        }
        auto f = make_field(p, m, mu);
        MubSet mub = [&]() {
            if (btwist.empty()) return build_mub(f);
            std::vector<GfEl> tw(static_cast<size_t>(f->N()), 0);
            for (size_t i = 0; i < btwist.size() && i + 1 < static_cast<size_t>(f->N()); ++i)
                tw[i + 1] = btwist[i] % f->N();
            return build_mub(f, AlphaTable(f, false, &tw));
        }();
        WignerBasis wb = wigner_basis(mub);
        auto cr = wigner_criteria(mub, wb);
        json j;
        j["N"] = mub.N();
        j["symmetricPhases"] = mub.alpha.symmetric();
        j["tolerance"] = 1e-10;
        j["W1_hermitian_dev"] = cr.w1_hermitian_dev;
        j["W2_trace_dev"] = cr.w2_trace_dev;
        j["W3_orthogonality_dev"] = cr.w3_ortho_dev;
        j["W4_covariance_dev"] = cr.w4_covariance_dev;
        j["W5_marginal_dev"] = cr.w5_marginal_dev;
        j["W6_applicable"] = cr.w6_applicable;
        if (cr.w6_applicable) {
            j["W6_parity_dev"] = cr.w6_parity_dev;
            j["W6_factorization_dev"] = cr.w6_factor_dev;
        }
        j["pass_W1_W5"] = cr.w1_hermitian_dev < 1e-10 && cr.w2_trace_dev < 1e-10 &&
                          cr.w3_ortho_dev < 1e-9 && cr.w4_covariance_dev < 1e-10 &&
                          cr.w5_marginal_dev < 1e-10;
        if (expectIK.size() == 2) {
            CoeffGrid grid = mub_expectations(mub, wb, expectIK[0], expectIK[1]);
            json rows = json::array();
            for (int r = 0; r < grid.rows; ++r) {
                json row = json::array();
                for (int c = 0; c < grid.cols; ++c) row.push_back({grid.at(r, c).real(), grid.at(r, c).imag()});
                rows.push_back(row);
            }
            j["expectationGrid"] = {{"kind", grid.kind}, {"i", expectIK[0]}, {"k", expectIK[1]}, {"values", rows}};
        }
        emit(j, out);
        std::exit(j["pass_W1_W5"].get<bool>() ? 0 : 1);
    });

    // ---- tomo ---------------------------------------------------------------
    auto* cTomo = app.add_subcommand("tomo", "MUB tomography round-trip on random states");
    int tomoCount = 10;
    add_field_opts(cTomo, true);
    cTomo->add_option("--count", tomoCount, "number of random density matrices");
    cTomo->callback([&]() {
        if (selftest) {
            MubSet mub2 = build_mub(std::make_shared<GfSpec>(p, m));
            int N2 = mub2.N();
            CMatrix mixed = cdouble(1.0 / N2, 0) * CMatrix::identity(N2);
            CMatrix rec = tomography_reconstruct(mub2, tomography_probs(mub2, mixed));
            bool ok = rec.max_abs_diff(mixed) < 1e-10;
            std::cout << "tomo invariants: " << (ok ? "PASS" : "FAIL") << "\n";
            std::exit(ok ? 0 : 1);
        }
        auto f = make_field(p, m, mu);
        MubSet mub = build_mub(f);
        int N = mub.N();
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> g(0, 1);
        double worst = 0;
        for (int t = 0; t < tomoCount; ++t) {
            CMatrix a = CMatrix::zeros(N, N);
            for (int i = 0; i < N; ++i)
                for (int c = 0; c < N; ++c) a.fl(i, c) = cdouble(g(rng), g(rng));
            CMatrix rho = a * a.dagger();
            rho = (1.0 / rho.trace()) * rho;
            CMatrix rec = tomography_reconstruct(mub, tomography_probs(mub, rho));
            double fro = 0;
            for (int i = 0; i < N; ++i)
                for (int c = 0; c < N; ++c) fro += std::norm(rec.fl(i, c) - rho.fl(i, c));
            worst = std::max(worst, std::sqrt(fro));
        }
        json j;
        j["seed"] = seed;
        j["count"] = tomoCount;
        j["worstFrobeniusResidual"] = worst;
        j["tolerance"] = 1e-9;
        emit(j, out);
        std::exit(worst < 1e-9 ? 0 : 1);
    });

    // ---- hadamard -------------------------------------------------------------
    auto* cHad = app.add_subcommand("hadamard", "complex Hadamard families and invariants");
    std::string action = "list", family = "fourier", family2;
    double fa = 0, fb = 0, x1 = 0, x2 = 0, x3 = 1, z1arg = 0;
    int hn = 6, hp = 5, hr = 0, signs = 0;
    double fa2 = 0, fb2 = 0;
    int hn2 = 6;
    cHad->add_option("action", action, "list|build|check|equiv|defect|muhm");
    cHad->add_option("--family", family, "family name");
    cHad->add_option("--family2", family2, "second family (equiv)");
    cHad->add_option("--a", fa, "first parameter");
    cHad->add_option("--b", fb, "second parameter");
    cHad->add_option("--a2", fa2, "first parameter of the second matrix");
    cHad->add_option("--b2", fb2, "second parameter of the second matrix");
    cHad->add_option("--n", hn, "dimension for fourier/galois_fourier");
    cHad->add_option("--n2", hn2, "dimension of the second matrix");
    cHad->add_option("--p", hp, "prime for standard_prime / muhm");
    cHad->add_option("--r", hr, "index for standard_prime");
    cHad->add_option("--x1", x1, "karlsson sphere coordinate");
    cHad->add_option("--x2", x2, "karlsson sphere coordinate");
    cHad->add_option("--x3", x3, "karlsson sphere coordinate");
    cHad->add_option("--z1arg", z1arg, "karlsson z1 phase");
    cHad->add_option("--signs", signs, "karlsson sign branch bits");
    cHad->add_option("--out", out, "output file");
    std::string catalogDir;
    cHad->add_option("--catalog", catalogDir, "persist the matrix under <dir>/<family>_<params>.json");
    cHad->add_flag("--selftest", selftest, "run the module invariant suite");
    cHad->callback([&]() {
        if (selftest) {
            bool ok = fourier(6).is_hadamard() && tao_s6().is_hadamard() && defect(fourier(4)) == 1 &&
                      mu_pair(standard_prime_h(5, 0), standard_prime_h(5, 1));
            std::cout << "hadamard invariants: " << (ok ? "PASS" : "FAIL") << "\n";
            std::exit(ok ? 0 : 1);
        }
        json j;
        if (action == "list") {
            j["families"] = {"fourier", "galois_fourier", "F4", "F6", "F6T", "dita",
                             "bjorck_c6", "tao_s6", "standard_prime", "karlsson"};
            emit(j, out);
            return;
        }
        if (action == "muhm") {
            auto rep = standard_muhm(hp);
            j["N"] = hp;
            j["maximal"] = rep.maximal;
            j["failing_rs"] = rep.failing_rs;
            j["tolerance"] = 1e-10;
            emit(j, out);
            std::exit(0);
        }
        HMat h = build_family(family, fa, fb, hn, hp, hr, x1, x2, x3, z1arg, signs);
        if (action == "build") {
            j["family"] = h.family;
            j["params"] = h.params;
            j["hadamardDeviation"] = h.hadamard_dev();
            j["tolerance"] = 1e-10;
            j["matrix"] = matrix_to_json(h.m);
            j["dephased"] = matrix_to_json(dephase(h).m);
            if (!catalogDir.empty()) {
                std::string key = h.family;
                for (const auto& [k, v] : h.params) {
                    std::ostringstream val;
                    val << v;
                    key += "_" + k + "=" + val.str();
                }
                emit(j, catalogDir + "/" + key + ".json");
            }
            emit(j, out);
            std::exit(h.is_hadamard() ? 0 : 1);
        }
        if (action == "check") {
            j["family"] = h.family;
            j["hadamardDeviation"] = h.hadamard_dev();
            j["tolerance"] = 1e-10;
            emit(j, out);
            std::exit(h.is_hadamard() ? 0 : 1);
        }
        if (action == "defect") {
            j["family"] = h.family;
            j["defect"] = defect(h);
            emit(j, out);
            std::exit(0);
        }
        if (action == "equiv") {
            HMat h2 = build_family(family2.empty() ? family : family2, fa2, fb2, hn2, hp, hr, x1,
                                   x2, x3, z1arg, signs);
            auto cert = equivalent(h, h2);
            j["verdict"] = cert.verdict;
            if (!cert.invariant_note.empty()) j["note"] = cert.invariant_note;
            if (cert.verdict == "equivalent") {
                j["rowPerm"] = cert.row_perm;
                j["colPerm"] = cert.col_perm;
            }
            emit(j, out);
            std::exit(0);
        }
        throw CLI::ValidationError("action", "unknown action " + action);
    });

    // ---- search ------------------------------------------------------------------
    auto* cSearch = app.add_subcommand("search", "unbiased-vector census and MU constellations");
    std::string what = "unbiased";
    long long restarts = 200000;
    int satWindow = 500;
    std::vector<int> shape;
    double fa3 = 0, fb3 = 0;
    std::string sfamily = "F6";
    int sn = 6;
    cSearch->add_option("what", what, "unbiased|constellation");
    cSearch->add_option("--family", sfamily, "anchor family (unbiased)");
    cSearch->add_option("--a", fa3, "family parameter");
    cSearch->add_option("--b", fb3, "family parameter");
    cSearch->add_option("--n", sn, "dimension");
    cSearch->add_option("--restarts", restarts, "restart budget");
    cSearch->add_option("--seed", seed, "RNG seed");
    cSearch->add_option("--saturation", satWindow, "restarts without a new vector before stopping");
    cSearch->add_option("--shape", shape, "constellation shape, e.g. 5 5 5 5");
    cSearch->add_option("--out", out, "output file");
    cSearch->add_flag("--selftest", selftest, "run the module invariant suite");
    cSearch->callback([&]() {
        if (selftest) {
            auto c1 = unbiased_vector_search(fourier(3), 3000, 1e-12, 1e-6, 42, 200);
            auto c2 = unbiased_vector_search(fourier(3), 3000, 1e-12, 1e-6, 42, 200);
            bool ok = c1.Nv == 6 && c2.Nv == 6 && c1.Nt == 2;
            std::cout << "search invariants: " << (ok ? "PASS" : "FAIL") << "\n";
            std::exit(ok ? 0 : 1);
        }
        json j;
        if (what == "unbiased") {
            HMat anchor = build_family(sfamily, fa3, fb3, sn, 5, 0, 0, 0, 1, 0, 0);
            auto cat = unbiased_vector_search(anchor, restarts, 1e-12, 1e-6, seed, satWindow);
            j["anchor"] = anchor.family;
            j["params"] = anchor.params;
            j["seed"] = seed;
            j["Nv"] = cat.Nv;
            j["Nt"] = cat.Nt;
            j["saturated"] = cat.saturated;
            j["restartsUsed"] = cat.restarts_used;
            j["worstResidual"] = cat.worst_residual;
            j["acceptTolerance"] = 1e-12;
            if (cat.Nt >= 2) {
                auto rep = extendability_probe(cat);
                j["maxD2Raw"] = rep.max_d2_raw;
                j["maxD2Normalized"] = rep.max_d2_normalized;
            }
            json vecs = json::array();
            for (const auto& v : cat.vectors) {
                json vv = json::array();
                for (const auto& x : v) vv.push_back({x.real(), x.imag()});
                vecs.push_back(vv);
            }
            j["vectors"] = vecs;
            j["bases"] = cat.bases;
            emit(j, out);
            std::exit(cat.saturated ? 0 : 1);
        }
        if (what == "constellation") {
            if (shape.empty()) throw CLI::ValidationError("--shape", "constellation needs a shape");
            auto res = constellation_search(shape, sn, static_cast<int>(restarts), seed);
            j["shape"] = shape;
            j["N"] = sn;
            j["bestPenalty"] = res.best_penalty;
            j["success"] = res.success;
            j["successThreshold"] = 1e-12;
            j["restartsUsed"] = res.restarts_used;
            emit(j, out);
            std::exit(0);
        }
        throw CLI::ValidationError("what", "unknown search " + what);
    });

    // ---- gnum -------------------------------------------------------------------
    auto* cGnum = app.add_subcommand("gnum", "the prime-distinguishing function g(N)");
    long long gmax = 50;
    bool csv = false;
    cGnum->add_option("--max", gmax, "largest N");
    cGnum->add_flag("--csv", csv, "emit N, g(N)/(N-1) as CSV (plot parity)");
    cGnum->add_option("--out", out, "output file");
    cGnum->add_flag("--selftest", selftest, "run the module invariant suite");
    cGnum->callback([&]() {
        if (selftest) {
            bool ok = is_prime_via_g(97) && !is_prime_via_g(91) &&
                      h_value(6) == h_value(2) * h_value(3);
            std::cout << "gnum invariants: " << (ok ? "PASS" : "FAIL") << "\n";
            std::exit(ok ? 0 : 1);
        }
        if (csv) {
            std::string buf = "N,g_over_Nminus1\n";
            for (long long N = 2; N <= gmax; ++N)
                buf += std::to_string(N) + "," + std::to_string(g_exact(N).to_double() / (N - 1)) + "\n";
            if (out.empty() || out == "-")
                std::cout << buf;
            else
                std::ofstream(out) << buf;
            return;
        }
        json arr = json::array();
        for (long long N = 2; N <= gmax; ++N) {
            RadicalValue g = g_exact(N);
            arr.push_back({{"N", N}, {"g", g.str()}, {"value", g.to_double()}, {"prime", g.is_zero()}});
        }
        json j;
        j["values"] = arr;
        emit(j, out);
    });

    // ---- export -------------------------------------------------------------------
    auto* cExport = app.add_subcommand("export", "export a constructed object as JSON");
    std::string whatExp = "mub";
    add_field_opts(cExport);
    cExport->add_option("--what", whatExp, "mub|field|galois_fourier");
    cExport->callback([&]() {
        if (selftest) std::exit(selftest_field(p, m));
        auto f = make_field(p, m, mu);
        json j;
        if (whatExp == "field") {
            j["p"] = f->p();
            j["m"] = f->m();
            j["mu"] = f->mu();
            j["multMatrices"] = f->mult_matrices();
        } else if (whatExp == "galois_fourier") {
            j["matrix"] = matrix_to_json(galois_fourier(*f).m);
        } else {
            MubSet mub = build_mub(f);
            json bases = json::array();
            for (const auto& b2 : mub.bases) bases.push_back(matrix_to_json(b2));
            j["bases"] = bases;
        }
        emit(j, out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() != 0) {
            std::cerr << "usage error: " << e.what() << " (try --help)\n";
            return 2;
        }
        return 0; // --help and friends
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
