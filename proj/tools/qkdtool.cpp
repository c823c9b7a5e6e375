// Command-line front end: threshold tables, distillability map sweeps,
// algebraic verification suites, protocol simulation, and the separable
// state family diagnostics.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "qkd/bell.hpp"
#include "qkd/criteria.hpp"
#include "qkd/disturbance.hpp"
#include "qkd/galois.hpp"
#include "qkd/maps.hpp"
#include "qkd/pauli.hpp"
#include "qkd/qkdsim.hpp"
#include "qkd/random_state.hpp"

namespace {

using namespace qkd;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int cmdThreshold(const std::vector<int>& ds, const std::string& csvPath) {
    for (int d : ds) {
        if (!isPrimePower(d)) {
            std::cerr << "error: d=" << d << " is not a prime power\n";
            return 1;
        }
    }
    std::printf("%4s %20s %20s\n", "d", "D_th", "D_th_CM");
    for (int d : ds)
        std::printf("%4d %20.15f %20.15f\n", d, thresholdDisturbance(d),
                    cloningBound(d));
    if (!csvPath.empty()) {
        std::ofstream out(csvPath, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << csvPath << "\n";
            return 1;
        }
        out << "d,D_th,D_th_CM\n";
        for (int d : ds)
            out << d << "," << fmt(thresholdDisturbance(d)) << ","
                << fmt(cloningBound(d)) << "\n";
    }
    return 0;
}

int cmdMap(int d, int res, double deltaRange, const std::string& csvPath,
           const std::string& pgmPath) {
    GridSpec grid = defaultGrid(d, res);
    if (deltaRange > 0.0) {
        grid.deltaMin = -deltaRange;
        grid.deltaMax = deltaRange;
    }
    std::printf("map: d=%d grid %dx%d D in [%g,%g] delta in [%g,%g]\n", d,
                grid.nD, grid.nDelta, grid.dMin, grid.dMax, grid.deltaMin,
                grid.deltaMax);
    MapGrid result = sweep(grid);
    if (!csvPath.empty()) {
        std::ofstream out(csvPath, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << csvPath << "\n";
            return 1;
        }
        writeCsv(result, out);
    }
    if (!pgmPath.empty()) {
        std::ofstream out(pgmPath, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << pgmPath << "\n";
            return 1;
        }
        writePgm(result, out);
    }
    double empirical = empiricalThreshold(result);
    double exact = thresholdDisturbance(d);
    std::printf("empirical_threshold=%s\n", fmt(empirical).c_str());
    std::printf("exact_threshold=%s\n", fmt(exact).c_str());
    std::printf("deviation=%s\n", fmt(std::abs(empirical - exact)).c_str());
    return 0;
}

struct CheckReporter {
    double tol;
    int failures = 0;

    void check(int d, const std::string& name, double residual) {
        bool ok = residual <= tol;
        if (!ok) ++failures;
        std::printf("d=%d %-28s residual=%.3e %s\n", d, name.c_str(), residual,
                    ok ? "pass" : "FAIL");
    }
    void checkFlag(int d, const std::string& name, bool ok) {
        if (!ok) ++failures;
        std::printf("d=%d %-28s %s\n", d, name.c_str(), ok ? "pass" : "FAIL");
    }
};

int cmdVerify(const std::vector<int>& ds, double tol) {
    CheckReporter rep{tol};
    for (int d : ds) {
        const FieldSpec& f = FieldSpec::of(d);
        ComplexMatrix h = fourier(f);

        rep.check(d, "fourier_unitary",
                  (h * h.dagger() - ComplexMatrix::identity(d)).frobeniusNorm());
        rep.check(d, "fourier_symmetric", (h - h.transpose()).frobeniusNorm());

        double comm = 0.0, swap = 0.0, orth = 0.0;
        for (int m = 0; m < d; ++m)
            for (int n = 0; n < d; ++n) {
                // Z^n X^m = w^{tr(mn)} X^m Z^n with X^m = E_{m,0}, Z^n = E_{0,n}.
                ComplexMatrix xm = pauli(f, {f, m}, {f, 0});
                ComplexMatrix zn = pauli(f, {f, 0}, {f, n});
                Complex phase = commutationPhase(f, {f, m}, {f, n});
                comm = std::max(comm, (zn * xm - phase * (xm * zn)).frobeniusNorm());
                swap = std::max(swap, errorSwapResidual(f, {f, m}, {f, n}));
                for (int mm = 0; mm < d; ++mm)
                    for (int nn = 0; nn < d; ++nn) {
                        Complex ip = (pauli(f, {f, m}, {f, n}).dagger() *
                                      pauli(f, {f, mm}, {f, nn}))
                                         .trace();
                        Complex expect = (m == mm && n == nn) ? Complex(d) : 0.0;
                        orth = std::max(orth, std::abs(ip - expect));
                    }
            }
        rep.check(d, "commutation_eq", comm);
        rep.check(d, "error_swap_eq", swap);
        rep.check(d, "error_group_orthogonal", orth);

        ComplexMatrix bell = bellBasis(f);
        rep.check(d, "bell_orthonormal",
                  (bell.dagger() * bell - ComplexMatrix::identity(d * d))
                      .frobeniusNorm());
        rep.check(d, "projector_eq",
                  (errorProjector(f) - errorProjectorBell(f)).frobeniusNorm());

        SymmetryClasses classes = symmetryClasses(f);
        bool evenChar = f.p() == 2;
        bool countsOk =
            evenChar ? (classes.countOfSize(1) == 2 && classes.countOfSize(2) == 1 &&
                        classes.countOfSize(4) == (d * d - 4) / 4)
                     : (classes.countOfSize(1) == 1 && classes.countOfSize(2) == 0 &&
                        classes.countOfSize(4) == (d * d - 1) / 4);
        rep.checkFlag(d, "symmetry_class_counts", countsOk);

        if (d <= 4) {
            std::mt19937_64 rng(0x5eed0000u + d);
            double off = 0.0, orbitRes = 0.0, dres = 0.0, idem = 0.0;
            for (int i = 0; i < 10; ++i) {
                ComplexMatrix rho = randomDensityMatrix(d * d, rng);
                ComplexMatrix t = twirl(f, rho);
                ComplexMatrix diag = bell.dagger() * t * bell;
                for (int a = 0; a < d * d; ++a)
                    for (int b = 0; b < d * d; ++b)
                        if (a != b) off = std::max(off, std::abs(diag(a, b)));
                orbitRes = std::max(orbitRes,
                                    orbitSymmetryResidual(bellSpectrumOf(f, t)));
                dres = std::max(dres, twirlInvarianceResidual(f, rho));
                idem = std::max(idem, (twirl(f, t) - t).frobeniusNorm());
            }
            rep.check(d, "twirl_bell_diagonal", off);
            rep.check(d, "twirl_orbit_symmetry", orbitRes);
            rep.check(d, "twirl_preserves_D", dres);
            rep.check(d, "twirl_idempotent", idem);
        }

        if (d == 3) {
            // Closed-form qutrit partial-transpose eigenvalues vs numerics.
            std::mt19937_64 rng(0xabc3);
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            double nuRes = 0.0;
            for (int i = 0; i < 200; ++i) {
                double a = unit(rng), b = unit(rng), c = unit(rng);
                double s = a + 4.0 * b + 4.0 * c;
                double u = a / s, xx = b / s, yy = c / s;
                BellSpectrum sp = isotropicBellSpectrum(f, {u, xx, yy});
                auto ev = partialTransposeSpectrum(bellDiagonal(sp), 3);
                double nu1 = (-u + 2 * xx + 2 * yy) / 3.0;
                double nu2 = (u + xx + yy - std::sqrt(3.0) * (xx - yy)) / 3.0;
                for (double nu : {nu1, nu2}) {
                    double best = 1e300;
                    for (double e : ev) best = std::min(best, std::abs(e - nu));
                    nuRes = std::max(nuRes, best);
                }
            }
            rep.check(d, "qutrit_pt_closed_form", nuRes);
        }
    }
    std::printf("%s\n", rep.failures == 0 ? "all checks passed" : "CHECKS FAILED");
    return rep.failures == 0 ? 0 : 1;
}

PauliChannel parseChannel(const FieldSpec& f, const std::string& spec) {
    if (spec == "noiseless") return PauliChannel::noiseless(f);
    if (spec.rfind("isotropic:", 0) == 0)
        return PauliChannel::isotropic(f, std::stod(spec.substr(10)));
    if (spec.rfind("bell:", 0) == 0) {
        std::ifstream in(spec.substr(5));
        if (!in) throw std::invalid_argument("cannot open channel file");
        // d rows of d comma-separated probabilities, row index m, column n.
        std::vector<double> probs;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            size_t pos = 0;
            while (pos <= line.size()) {
                size_t comma = line.find(',', pos);
                std::string tok = line.substr(
                    pos, comma == std::string::npos ? std::string::npos : comma - pos);
                probs.push_back(std::stod(tok));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }
        return {f, std::move(probs)};
    }
    throw std::invalid_argument("unknown channel spec: " + spec);
}

int cmdSimulate(int d, const std::string& channelSpec, long n, long nCheck,
                double abortThreshold, std::uint64_t seed,
                const std::string& mode) {
    const FieldSpec& f = FieldSpec::of(d);
    PauliChannel channel = parseChannel(f, channelSpec);
    std::printf("simulate: d=%d channel=%s n=%ld seed=%llu mode=%s\n", d,
                channelSpec.c_str(), n, static_cast<unsigned long long>(seed),
                mode.c_str());
    if (mode == "pm") {
        std::cout << summary(runPrepareMeasure(f, channel, n, seed));
    } else {
        if (nCheck <= 0) nCheck = n / 2;
        std::cout << summary(
            runEntanglementBased(f, channel, n, nCheck, abortThreshold, seed));
    }
    return 0;
}

int cmdFamily(int d, double from, double to, int steps, const std::string& csvPath,
              bool strict) {
    const FieldSpec& f = FieldSpec::of(d);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!csvPath.empty()) {
        file.open(csvPath, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot write " << csvPath << "\n";
            return 1;
        }
        out = &file;
    }
    *out << "d,D,trace,min_eig,max_lambda,disturbance,ppt_min\n";
    int bad = 0;
    for (int i = 0; i < steps; ++i) {
        double D = steps == 1 ? from : from + (to - from) * i / (steps - 1);
        try {
            SeparableFamilyPoint p = separableFamily(f, D);
            double minEig = p.state.hermitianEigenvalues().front();
            double maxLam = 0.0;
            for (double l : p.spectrum.values()) maxLam = std::max(maxLam, l);
            double dist = disturbanceOfSpectrum(p.spectrum).D;
            double pptMin =
                partialTransposeSpectrum(p.state, d).front();
            bool ok = minEig >= -1e-9 && maxLam <= 1.0 / d + 1e-9 &&
                      std::abs(dist - D) <= 1e-9 && pptMin >= -1e-10;
            if (!ok) ++bad;
            *out << d << "," << fmt(D) << "," << fmt(p.state.trace().real()) << ","
                 << fmt(minEig) << "," << fmt(maxLam) << "," << fmt(dist) << ","
                 << fmt(pptMin) << "\n";
        } catch (const std::exception& e) {
            ++bad;
            std::cerr << "D=" << D << " rejected: " << e.what() << "\n";
        }
    }
    if (bad > 0) {
        std::cerr << bad << " rows failed family invariants\n";
        if (strict) return 1;
    }
    return bad > 0 && strict ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-bases qudit QKD security analysis toolbox"};
    app.require_subcommand(1);

    std::vector<int> ds;
    std::string csvPath, pgmPath, channelSpec = "noiseless", mode = "eb";
    int d = 3, res = 512, steps = 100;
    double tol = 1e-10, from = 0.0, to = 0.0, deltaRange = 0.0;
    double abortThreshold = -1.0;
    long n = 100000, nCheck = 0;
    std::uint64_t seed = 1;
    bool strict = false;

    auto* th = app.add_subcommand("threshold", "print D_th and the cloning bound");
    th->add_option("d", ds, "qudit dimensions (prime powers)")->required();
    th->add_option("--csv", csvPath, "write the two threshold curves as CSV");

    auto* mp = app.add_subcommand("map", "distillability map sweep (CSV/PGM)");
    mp->add_option("--d", d, "qudit dimension")->required();
    mp->add_option("--res", res, "grid resolution per axis");
    mp->add_option("--delta-range", deltaRange, "override |x-y| half-range");
    mp->add_option("--out", csvPath, "CSV output path");
    mp->add_option("--pgm", pgmPath, "PGM image output path");

    auto* vf = app.add_subcommand("verify", "run the algebraic invariant suite");
    vf->add_option("d", ds, "qudit dimensions")->required();
    vf->add_option("--tol", tol, "residual tolerance");

    auto* sim = app.add_subcommand("simulate", "Monte-Carlo protocol run");
    sim->add_option("--d", d, "qudit dimension")->required();
    sim->add_option("--channel", channelSpec,
                    "noiseless | isotropic:D | bell:file.csv");
    sim->add_option("--n", n, "pairs (eb) or transmissions (pm)");
    sim->add_option("--ncheck", nCheck, "check pairs (default n/2)");
    sim->add_option("--abort-threshold", abortThreshold,
                    "abort threshold (default (d-1)/2d)");
    sim->add_option("--seed", seed, "RNG seed");
    sim->add_option("--mode", mode, "eb | pm");

    auto* fam = app.add_subcommand("family", "separable family diagnostics");
    fam->add_option("--d", d, "qudit dimension")->required();
    fam->add_option("--from", from, "first D value")->required();
    fam->add_option("--to", to, "last D value")->required();
    fam->add_option("--steps", steps, "number of D values");
    fam->add_option("--out", csvPath, "CSV output path (default stdout)");
    fam->add_flag("--strict", strict, "nonzero exit on any failed row");

    CLI11_PARSE(app, argc, argv);

    try {
        if (th->parsed()) return cmdThreshold(ds, csvPath);
        if (mp->parsed()) return cmdMap(d, res, deltaRange, csvPath, pgmPath);
        if (vf->parsed()) return cmdVerify(ds, tol);
        if (sim->parsed())
            return cmdSimulate(d, channelSpec, n, nCheck, abortThreshold, seed, mode);
        if (fam->parsed()) return cmdFamily(d, from, to, steps, csvPath, strict);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
