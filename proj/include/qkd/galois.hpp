#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

namespace qkd {

/// True if d = p^r for a prime p and r >= 1.
bool isPrimePower(int d);

/// Exact arithmetic in GF(p^r) with a fixed monic irreducible modulus.
///
/// Elements are identified by their canonical index in [0, d): the base-p
/// evaluation of the coefficient vector of their polynomial representative.
/// All operation tables are precomputed at construction; lookups are O(1).
class FieldSpec {
public:
    /// Construct GF(p^r) from an explicit modulus, given as the coefficient
    /// vector (lowest degree first, length r+1) of a monic polynomial over
    /// GF(p). Throws std::invalid_argument if p is not prime, the modulus is
    /// not monic of degree r, or it is reducible over GF(p).
    FieldSpec(int p, int r, std::vector<int> modulus);

    /// Shared instance for a shipped order d in {2,3,4,5,7,8,9}, using the
    /// fixed moduli x (r=1), x^2+x+1 (d=4), x^3+x+1 (d=8), x^2+1 (d=9).
    static const FieldSpec& of(int d);

    int p() const { return p_; }
    int r() const { return r_; }
    int d() const { return d_; }
    const std::vector<int>& modulus() const { return modulus_; }

    // Index-level arithmetic. All inputs/outputs are canonical indices.
    int add(int a, int b) const { return addTable_[a * d_ + b]; }
    int sub(int a, int b) const { return addTable_[a * d_ + negTable_[b]]; }
    int mul(int a, int b) const { return mulTable_[a * d_ + b]; }
    int neg(int a) const { return negTable_[a]; }
    int inv(int a) const;
    /// Absolute trace tr(a) = sum_j a^(p^j), as an integer in [0, p).
    int trace(int a) const { return traceTable_[a]; }

    /// Coefficient vector (length r, entries in [0,p)) of the element with
    /// the given canonical index.
    std::vector<int> coeffs(int a) const;

    bool sameField(const FieldSpec& other) const;

private:
    int p_, r_, d_;
    std::vector<int> modulus_;
    std::vector<int> addTable_, mulTable_, negTable_, invTable_, traceTable_;

    void buildTables();
};

/// An element of GF(p^r), tied to its FieldSpec. Immutable value type.
class FieldElement {
public:
    FieldElement(const FieldSpec& spec, int index);

    const FieldSpec& spec() const { return *spec_; }
    int index() const { return index_; }
    std::vector<int> coeffs() const { return spec_->coeffs(index_); }
    bool isZero() const { return index_ == 0; }

    FieldElement inverse() const;
    int trace() const { return spec_->trace(index_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b);

private:
    const FieldSpec* spec_;
    int index_;
};

/// All d field elements in canonical index order; elements(spec)[0] is zero.
std::vector<FieldElement> elements(const FieldSpec& spec);

}  // namespace qkd
