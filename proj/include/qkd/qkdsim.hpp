#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qkd/bell.hpp"
#include "qkd/pauli.hpp"

namespace qkd {

/// An i.i.d. Pauli channel: error index (m,n) is drawn with probability
/// p_mn per transmitted qudit (collective attack model). Applied to
/// |Psi_00> it yields the Bell spectrum lambda_mn = p_mn.
struct PauliChannel {
    const FieldSpec* spec;
    std::vector<double> probs;  // d*d, row-major (m,n), sum 1

    PauliChannel(const FieldSpec& s, std::vector<double> p);

    static PauliChannel noiseless(const FieldSpec& s);
    /// Isotropic channel with delta = x - y = deltaValue and analytic
    /// disturbance D. Throws if (D, delta) is infeasible.
    static PauliChannel isotropic(const FieldSpec& s, double D,
                                  double deltaValue = 0.0);

    BellSpectrum spectrum() const { return {*spec, probs}; }
    double analyticDisturbance() const;
};

/// Inverse-CDF draw over the canonical (m,n) order; deterministic per seed.
PauliIndex sampleErrorIndex(const PauliChannel& channel, std::mt19937_64& rng);

/// All randomness in a run comes from one mt19937_64 stream seeded with the
/// run seed; the sampling order defines the stream.
struct ProtocolRun {
    int d;
    std::uint64_t seed;
    long nPairs;   // 2N
    long nCheck;   // N_c
    double estimatedD;
    double analyticD;
    double abortThreshold;
    bool aborted;
    std::vector<int> siftedKeyA, siftedKeyB;  // dit sequences, length nPairs-nCheck
};

/// Entanglement-based protocol: per pair an error index is sampled, check
/// pairs get a random H-masking bit b, and an error is recorded iff
/// (b=0 and m!=0) or (b=1 and n!=0). abortThreshold < 0 selects the default
/// (d-1)/2d.
ProtocolRun runEntanglementBased(const FieldSpec& spec,
                                 const PauliChannel& channel, long nPairs,
                                 long nCheck, double abortThreshold,
                                 std::uint64_t seed);

struct PrepareMeasureRun {
    int d;
    std::uint64_t seed;
    long nSent;
    long nSifted;
    double siftFraction;
    double estimatedD;
    double analyticD;
};

/// Prepare-and-measure protocol: Alice sends random basis states, the
/// channel applies a sampled E_mn, Bob measures in a random basis; rounds
/// with matching bases are sifted and their mismatch fraction estimates D.
PrepareMeasureRun runPrepareMeasure(const FieldSpec& spec,
                                    const PauliChannel& channel, long nSent,
                                    std::uint64_t seed);

/// Line-oriented key=value run summaries.
std::string summary(const ProtocolRun& run);
std::string summary(const PrepareMeasureRun& run);

}  // namespace qkd
