#include "qkd/qkdsim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "qkd/disturbance.hpp"
#include "qkd/maps.hpp"

namespace qkd {

PauliChannel::PauliChannel(const FieldSpec& s, std::vector<double> p)
    : spec(&s), probs(std::move(p)) {
    if (static_cast<int>(probs.size()) != s.d() * s.d())
        throw std::invalid_argument("PauliChannel: expected d*d probabilities");
    double sum = 0.0;
    for (double v : probs) {
        if (v < -1e-12) throw std::invalid_argument("PauliChannel: negative probability");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("PauliChannel: probabilities must sum to 1");
}

PauliChannel PauliChannel::noiseless(const FieldSpec& s) {
    std::vector<double> p(s.d() * s.d(), 0.0);
    p[0] = 1.0;
    return {s, std::move(p)};
}

PauliChannel PauliChannel::isotropic(const FieldSpec& s, double D,
                                     double deltaValue) {
    auto iso = solveIsotropic(s.d(), D, deltaValue);
    if (!iso)
        throw std::invalid_argument("PauliChannel::isotropic: infeasible (D, delta)");
    return {s, isotropicBellSpectrum(s, *iso).values()};
}

double PauliChannel::analyticDisturbance() const {
    return disturbanceOfSpectrum(spectrum()).D;
}

PauliIndex sampleErrorIndex(const PauliChannel& channel, std::mt19937_64& rng) {
    const FieldSpec& spec = *channel.spec;
    const int d = spec.d();
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double u = unit(rng);
    double acc = 0.0;
    for (int i = 0; i < d * d; ++i) {
        acc += channel.probs[i];
        if (u < acc) return {FieldElement(spec, i / d), FieldElement(spec, i % d)};
    }
    return {FieldElement(spec, d - 1), FieldElement(spec, d - 1)};
}

ProtocolRun runEntanglementBased(const FieldSpec& spec,
                                 const PauliChannel& channel, long nPairs,
                                 long nCheck, double abortThreshold,
                                 std::uint64_t seed) {
    if (!spec.sameField(*channel.spec))
        throw std::invalid_argument("runEntanglementBased: channel field mismatch");
    if (nCheck > nPairs || nPairs < 1 || nCheck < 1)
        throw std::invalid_argument("runEntanglementBased: need 1 <= nCheck <= nPairs");
    if (abortThreshold < 0.0)
        abortThreshold = (spec.d() - 1.0) / (2.0 * spec.d());

    std::mt19937_64 rng(seed);
    const int d = spec.d();

    std::vector<PauliIndex> errors;
    errors.reserve(nPairs);
    for (long i = 0; i < nPairs; ++i) errors.push_back(sampleErrorIndex(channel, rng));

    // Random permutation of the pairs; the first nCheck become check pairs.
    std::vector<long> order(nPairs);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    long errorCount = 0;
    for (long i = 0; i < nCheck; ++i) {
        const PauliIndex& e = errors[order[i]];
        int b = static_cast<int>(rng() & 1u);  // H-masking bit
        bool err = (b == 0) ? !e.m.isZero() : !e.n.isZero();
        if (err) ++errorCount;
    }

    ProtocolRun run;
    run.d = d;
    run.seed = seed;
    run.nPairs = nPairs;
    run.nCheck = nCheck;
    run.estimatedD = static_cast<double>(errorCount) / nCheck;
    run.analyticD = channel.analyticDisturbance();
    run.abortThreshold = abortThreshold;
    run.aborted = run.estimatedD >= abortThreshold;

    // Remaining pairs are measured in the computational basis as raw key.
    std::uniform_int_distribution<int> dit(0, d - 1);
    for (long i = nCheck; i < nPairs; ++i) {
        const PauliIndex& e = errors[order[i]];
        int a = dit(rng);
        run.siftedKeyA.push_back(a);
        run.siftedKeyB.push_back(spec.add(a, e.m.index()));
    }
    return run;
}

PrepareMeasureRun runPrepareMeasure(const FieldSpec& spec,
                                    const PauliChannel& channel, long nSent,
                                    std::uint64_t seed) {
    if (!spec.sameField(*channel.spec))
        throw std::invalid_argument("runPrepareMeasure: channel field mismatch");
    if (nSent < 1) throw std::invalid_argument("runPrepareMeasure: nSent >= 1");

    std::mt19937_64 rng(seed);
    const int d = spec.d();
    std::uniform_int_distribution<int> dit(0, d - 1);

    long nSifted = 0, mismatches = 0;
    for (long i = 0; i < nSent; ++i) {
        int basisA = static_cast<int>(rng() & 1u);
        int k = dit(rng);
        PauliIndex e = sampleErrorIndex(channel, rng);
        int basisB = static_cast<int>(rng() & 1u);
        if (basisA != basisB) continue;
        ++nSifted;
        // In the computational branch a shift error flips the dit; in the
        // Fourier branch the roles of m and n swap (H^dag E_mn H ~ E_nm^*).
        int outcome = (basisA == 0) ? spec.add(k, e.m.index())
                                    : spec.add(k, e.n.index());
        if (outcome != k) ++mismatches;
    }

    PrepareMeasureRun run;
    run.d = d;
    run.seed = seed;
    run.nSent = nSent;
    run.nSifted = nSifted;
    run.siftFraction = static_cast<double>(nSifted) / nSent;
    run.estimatedD = nSifted > 0 ? static_cast<double>(mismatches) / nSifted : 0.0;
    run.analyticD = channel.analyticDisturbance();
    return run;
}

std::string summary(const ProtocolRun& run) {
    char buf[256];
    std::string out;
    out += "d=" + std::to_string(run.d) + "\n";
    out += "seed=" + std::to_string(run.seed) + "\n";
    out += "n_pairs=" + std::to_string(run.nPairs) + "\n";
    out += "n_check=" + std::to_string(run.nCheck) + "\n";
    std::snprintf(buf, sizeof(buf), "estimated_D=%.17g\nanalytic_D=%.17g\n",
                  run.estimatedD, run.analyticD);
    out += buf;
    out += std::string("aborted=") + (run.aborted ? "true" : "false") + "\n";
    return out;
}

std::string summary(const PrepareMeasureRun& run) {
    char buf[256];
    std::string out;
    out += "d=" + std::to_string(run.d) + "\n";
    out += "seed=" + std::to_string(run.seed) + "\n";
    out += "n_pairs=" + std::to_string(run.nSent) + "\n";
    out += "n_check=" + std::to_string(run.nSifted) + "\n";
    std::snprintf(buf, sizeof(buf),
                  "estimated_D=%.17g\nanalytic_D=%.17g\nsift_fraction=%.17g\n",
                  run.estimatedD, run.analyticD, run.siftFraction);
    out += buf;
    return out;
}

}  // namespace qkd
