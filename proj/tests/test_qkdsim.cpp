#include <doctest.h>

#include <cmath>
#include <random>

#include "qkd/bell.hpp"
#include "qkd/qkdsim.hpp"

using namespace qkd;

TEST_CASE("channel construction and validation") {
    const FieldSpec& f = FieldSpec::of(3);
    auto clean = PauliChannel::noiseless(f);
    CHECK(clean.probs[0] == 1.0);
    CHECK(clean.analyticDisturbance() == 0.0);

    CHECK_THROWS_AS(PauliChannel(f, {1.0, 0.0}), std::invalid_argument);
    std::vector<double> bad(9, 0.2);  // sums to 1.8
    CHECK_THROWS_AS(PauliChannel(f, bad), std::invalid_argument);
    std::vector<double> neg(9, 0.0);
    neg[0] = 1.0 + 1e-3;
    neg[1] = -1e-3;  // sums to 1 but has a negative entry
    CHECK_THROWS_AS(PauliChannel(f, neg), std::invalid_argument);

    auto iso = PauliChannel::isotropic(f, 0.2, 0.05);
    CHECK(std::abs(iso.analyticDisturbance() - 0.2) < 1e-12);
    CHECK_THROWS_AS(PauliChannel::isotropic(f, 0.1, 0.2), std::invalid_argument);
}

TEST_CASE("error sampling follows the channel distribution") {
    const FieldSpec& f = FieldSpec::of(2);
    // Deterministic channel.
    PauliChannel sure(f, {0.0, 0.0, 1.0, 0.0});
    std::mt19937_64 rng(1);
    for (int i = 0; i < 100; ++i) {
        auto e = sampleErrorIndex(sure, rng);
        CHECK(e.m.index() == 1);
        CHECK(e.n.index() == 0);
    }
    // Uniform channel: chi-square over 4 cells, 1e6 draws.
    PauliChannel flat(f, std::vector<double>(4, 0.25));
    std::mt19937_64 rng2(2);
    long counts[4] = {0, 0, 0, 0};
    const long n = 1000000;
    for (long i = 0; i < n; ++i) {
        auto e = sampleErrorIndex(flat, rng2);
        ++counts[e.m.index() * 2 + e.n.index()];
    }
    double chi2 = 0;
    for (long c : counts) {
        double diff = c - n / 4.0;
        chi2 += diff * diff / (n / 4.0);
    }
    CHECK(chi2 < 30.0);  // 3 dof; far beyond any sane quantile if broken

    // Same seed, same stream.
    std::mt19937_64 a(42), b(42);
    for (int i = 0; i < 50; ++i) {
        auto ea = sampleErrorIndex(flat, a);
        auto eb = sampleErrorIndex(flat, b);
        CHECK(ea.m.index() == eb.m.index());
        CHECK(ea.n.index() == eb.n.index());
    }
}

TEST_CASE("channel spectrum equals its Bell-state action") {
    // Applying the channel to one half of |Psi_00> yields the Bell-diagonal
    // state with lambda_mn = p_mn.
    const FieldSpec& f = FieldSpec::of(3);
    std::vector<double> p(9);
    double s = 0;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (auto& v : p) {
        v = uni(rng);
        s += v;
    }
    for (auto& v : p) v /= s;
    PauliChannel ch(f, p);

    auto psi = bellVector(f, FieldElement(f, 0), FieldElement(f, 0));
    auto rho0 = psi * psi.dagger();
    ComplexMatrix out(9, 9);
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n) {
            auto E = kron(ComplexMatrix::identity(3),
                          pauli(f, FieldElement(f, m), FieldElement(f, n)));
            out += Complex(p[m * 3 + n], 0) * (E * rho0 * E.dagger());
        }
    auto lambda = bellSpectrumOf(f, out);
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n)
            CHECK(std::abs(lambda.at(m, n) - ch.spectrum().at(m, n)) < 1e-12);
}

TEST_CASE("entanglement-based run on the noiseless channel") {
    const FieldSpec& f = FieldSpec::of(3);
    auto run = runEntanglementBased(f, PauliChannel::noiseless(f), 2000, 1000,
                                    -1.0, 99);
    CHECK(run.estimatedD == 0.0);
    CHECK_FALSE(run.aborted);
    CHECK(run.abortThreshold == doctest::Approx(1.0 / 3).epsilon(1e-12));
    REQUIRE(run.siftedKeyA.size() == 1000);
    REQUIRE(run.siftedKeyB.size() == 1000);
    CHECK(run.siftedKeyA == run.siftedKeyB);  // no shift errors, keys agree
}

TEST_CASE("entanglement-based estimator tracks the analytic disturbance") {
    for (int d : {2, 3}) {
        const FieldSpec& f = FieldSpec::of(d);
        for (double D : {0.05, 0.2}) {
            auto ch = PauliChannel::isotropic(f, D);
            long nCheck = 100000;
            auto run = runEntanglementBased(f, ch, 2 * nCheck, nCheck, -1.0,
                                            0x9000u + d);
            double sigma = std::sqrt(D * (1 - D) / nCheck);
            CHECK(std::abs(run.estimatedD - D) < 4 * sigma);
            CHECK(run.analyticD == doctest::Approx(D).epsilon(1e-12));
            CHECK_FALSE(run.aborted);  // both D values sit below (d-1)/2d
        }
    }
}

TEST_CASE("runs above the threshold abort") {
    const FieldSpec& f = FieldSpec::of(3);
    auto ch = PauliChannel::isotropic(f, 0.4);  // above 1/3
    auto run = runEntanglementBased(f, ch, 40000, 20000, -1.0, 5);
    CHECK(run.aborted);
    // A custom, laxer threshold admits the same channel.
    auto lax = runEntanglementBased(f, ch, 40000, 20000, 0.45, 5);
    CHECK_FALSE(lax.aborted);
    CHECK(lax.estimatedD == run.estimatedD);  // same seed, same stream
}

TEST_CASE("identical seeds reproduce runs exactly") {
    const FieldSpec& f = FieldSpec::of(2);
    auto ch = PauliChannel::isotropic(f, 0.1);
    auto r1 = runEntanglementBased(f, ch, 5000, 2500, -1.0, 777);
    auto r2 = runEntanglementBased(f, ch, 5000, 2500, -1.0, 777);
    CHECK(r1.estimatedD == r2.estimatedD);
    CHECK(r1.siftedKeyA == r2.siftedKeyA);
    CHECK(r1.siftedKeyB == r2.siftedKeyB);
    auto r3 = runEntanglementBased(f, ch, 5000, 2500, -1.0, 778);
    CHECK(r1.siftedKeyA != r3.siftedKeyA);
}

TEST_CASE("raw key error rate matches the channel shift weight") {
    const FieldSpec& f = FieldSpec::of(3);
    auto ch = PauliChannel::isotropic(f, 0.2, 0.05);
    // Shift-error probability: sum over m != 0 of p_mn.
    double shiftProb = 0;
    auto sp = ch.spectrum();
    for (int m = 1; m < 3; ++m)
        for (int n = 0; n < 3; ++n) shiftProb += sp.at(m, n);
    long nKey = 200000;
    auto run = runEntanglementBased(f, ch, nKey + 1000, 1000, 1.0, 31337);
    long mismatches = 0;
    for (size_t i = 0; i < run.siftedKeyA.size(); ++i)
        if (run.siftedKeyA[i] != run.siftedKeyB[i]) ++mismatches;
    double rate = static_cast<double>(mismatches) / run.siftedKeyA.size();
    double sigma = std::sqrt(shiftProb * (1 - shiftProb) / nKey);
    CHECK(std::abs(rate - shiftProb) < 4 * sigma);
}

TEST_CASE("sifted key dits are uniform") {
    const FieldSpec& f = FieldSpec::of(3);
    auto run = runEntanglementBased(f, PauliChannel::noiseless(f), 300001, 1,
                                    -1.0, 4242);
    long counts[3] = {0, 0, 0};
    for (int a : run.siftedKeyA) ++counts[a];
    double n = static_cast<double>(run.siftedKeyA.size());
    double chi2 = 0;
    for (long c : counts) {
        double diff = c - n / 3;
        chi2 += diff * diff / (n / 3);
    }
    CHECK(chi2 < 30.0);
}

TEST_CASE("prepare-and-measure agrees with the entanglement-based picture") {
    for (int d : {2, 3}) {
        const FieldSpec& f = FieldSpec::of(d);
        auto clean = runPrepareMeasure(f, PauliChannel::noiseless(f), 100000,
                                       11);
        CHECK(clean.estimatedD == 0.0);
        double sigmaSift = std::sqrt(0.25 / clean.nSent);
        CHECK(std::abs(clean.siftFraction - 0.5) < 4 * sigmaSift);

        for (double D : {0.2, 0.4}) {
            auto ch = PauliChannel::isotropic(f, D);
            long nSent = 200000;
            auto run = runPrepareMeasure(f, ch, nSent, 0xbeef0 + d);
            // Roughly nSent/2 sifted rounds.
            double sigma = std::sqrt(D * (1 - D) / run.nSifted);
            CHECK(std::abs(run.estimatedD - D) < 4 * sigma);
            CHECK(std::abs(run.siftFraction - 0.5) <
                  4 * std::sqrt(0.25 / nSent));
        }
    }
}

TEST_CASE("Fourier-branch sampling rule matches the state-vector amplitudes") {
    // When both sides measure in the Fourier basis, an error E_mn moves
    // Alice's outcome k to Bob's outcome k + n: check the exact Born
    // probabilities, exhaustively over (m, n, k), for d = 2, 3.
    for (int d : {2, 3}) {
        const FieldSpec& f = FieldSpec::of(d);
        auto H = fourier(f);
        for (int m = 0; m < d; ++m)
            for (int n = 0; n < d; ++n) {
                auto E = pauli(f, FieldElement(f, m), FieldElement(f, n));
                for (int k = 0; k < d; ++k) {
                    // |k~> = H|k>; Bob's state H^dag E |k~>.
                    ComplexMatrix kt(d, 1);
                    for (int i = 0; i < d; ++i) kt(i, 0) = H(i, k);
                    auto received = H.dagger() * (E * kt);
                    for (int out = 0; out < d; ++out) {
                        double p = std::norm(received(out, 0));
                        double expected = (out == f.add(k, n)) ? 1.0 : 0.0;
                        CHECK(std::abs(p - expected) < 1e-12);
                    }
                }
            }
    }
}

TEST_CASE("run summaries are line-oriented key=value text") {
    const FieldSpec& f = FieldSpec::of(2);
    auto run = runEntanglementBased(f, PauliChannel::noiseless(f), 200, 100,
                                    -1.0, 3);
    auto text = summary(run);
    CHECK(text.find("d=2\n") != std::string::npos);
    CHECK(text.find("seed=3\n") != std::string::npos);
    CHECK(text.find("n_pairs=200\n") != std::string::npos);
    CHECK(text.find("n_check=100\n") != std::string::npos);
    CHECK(text.find("estimated_D=0\n") != std::string::npos);
    CHECK(text.find("aborted=false\n") != std::string::npos);

    auto pm = runPrepareMeasure(f, PauliChannel::noiseless(f), 1000, 3);
    auto pmText = summary(pm);
    CHECK(pmText.find("sift_fraction=") != std::string::npos);
    CHECK(pmText.find("estimated_D=0\n") != std::string::npos);
}

TEST_CASE("invalid run parameters are rejected") {
    const FieldSpec& f = FieldSpec::of(2);
    auto ch = PauliChannel::noiseless(f);
    CHECK_THROWS_AS(runEntanglementBased(f, ch, 100, 200, -1.0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(runEntanglementBased(f, ch, 0, 0, -1.0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(runPrepareMeasure(f, ch, 0, 1), std::invalid_argument);
    const FieldSpec& f3 = FieldSpec::of(3);
    CHECK_THROWS_AS(runEntanglementBased(f3, ch, 100, 50, -1.0, 1),
                    std::invalid_argument);
}
