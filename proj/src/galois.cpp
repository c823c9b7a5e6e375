#include "qkd/galois.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace qkd {

namespace {

bool isPrime(int n) {
    if (n < 2) return false;
    for (int q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

int modp(int a, int p) {
    int m = a % p;
    return m < 0 ? m + p : m;
}

// Polynomials over GF(p): coefficient vectors, lowest degree first.
using Poly = std::vector<int>;

int degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Poly polyMul(const Poly& a, const Poly& b, int p) {
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = modp(c[i + j] + a[i] * b[j], p);
    return c;
}

// Remainder of a modulo a monic divisor.
Poly polyMod(Poly a, const Poly& div, int p) {
    int dDiv = degree(div);
    for (int i = degree(a); i >= dDiv; --i) {
        int q = a[i];
        if (q == 0) continue;
        for (int j = 0; j <= dDiv; ++j)
            a[i - dDiv + j] = modp(a[i - dDiv + j] - q * div[j], p);
    }
    a.resize(std::max(dDiv, 1));
    return a;
}

// Exhaustive trial division by every monic polynomial of degree 1..deg/2.
bool isIrreducible(const Poly& f, int p) {
    int deg = degree(f);
    if (deg < 1) return false;
    if (deg == 1) return true;
    for (int k = 1; 2 * k <= deg; ++k) {
        // Enumerate monic degree-k candidates by their lower coefficients.
        int count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        for (int idx = 0; idx < count; ++idx) {
            Poly g(k + 1, 0);
            int t = idx;
            for (int i = 0; i < k; ++i) {
                g[i] = t % p;
                t /= p;
            }
            g[k] = 1;
            if (degree(polyMod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

}  // namespace

bool isPrimePower(int d) {
    if (d < 2) return false;
    int p = 2;
    while (d % p != 0) ++p;
    while (d % p == 0) d /= p;
    return d == 1;
}

FieldSpec::FieldSpec(int p, int r, std::vector<int> modulus)
    : p_(p), r_(r), modulus_(std::move(modulus)) {
    if (!isPrime(p_)) throw std::invalid_argument("FieldSpec: p must be prime");
    if (r_ < 1) throw std::invalid_argument("FieldSpec: r must be >= 1");
    if (static_cast<int>(modulus_.size()) != r_ + 1)
        throw std::invalid_argument("FieldSpec: modulus must have length r+1");
    for (int& c : modulus_) c = modp(c, p_);
    if (modulus_[r_] != 1)
        throw std::invalid_argument("FieldSpec: modulus must be monic of degree r");
    if (!isIrreducible(modulus_, p_))
        throw std::invalid_argument("FieldSpec: modulus is reducible over GF(p)");
    d_ = 1;
    for (int i = 0; i < r_; ++i) d_ *= p_;
    buildTables();
}

std::vector<int> FieldSpec::coeffs(int a) const {
    if (a < 0 || a >= d_) throw std::out_of_range("FieldSpec: index out of range");
    std::vector<int> c(r_, 0);
    for (int i = 0; i < r_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

void FieldSpec::buildTables() {
    auto toIndex = [this](const Poly& poly) {
        int idx = 0, w = 1;
        for (int i = 0; i < r_; ++i) {
            idx += (i < static_cast<int>(poly.size()) ? poly[i] : 0) * w;
            w *= p_;
        }
        return idx;
    };

    addTable_.assign(d_ * d_, 0);
    mulTable_.assign(d_ * d_, 0);
    negTable_.assign(d_, 0);
    for (int a = 0; a < d_; ++a) {
        Poly pa = coeffs(a);
        Poly na(r_, 0);
        for (int i = 0; i < r_; ++i) na[i] = modp(-pa[i], p_);
        negTable_[a] = toIndex(na);
        for (int b = 0; b < d_; ++b) {
            Poly pb = coeffs(b);
            Poly s(r_, 0);
            for (int i = 0; i < r_; ++i) s[i] = modp(pa[i] + pb[i], p_);
            addTable_[a * d_ + b] = toIndex(s);
            mulTable_[a * d_ + b] = toIndex(polyMod(polyMul(pa, pb, p_), modulus_, p_));
        }
    }

    invTable_.assign(d_, -1);
    for (int a = 1; a < d_; ++a)
        for (int b = 1; b < d_; ++b)
            if (mulTable_[a * d_ + b] == 1) {
                invTable_[a] = b;
                break;
            }

    // tr(a) = sum_{j<r} a^(p^j), evaluated in the field; the result lies in
    // the prime subfield and is returned as its integer label.
    traceTable_.assign(d_, 0);
    for (int a = 0; a < d_; ++a) {
        int acc = 0;
        int pw = a;
        for (int j = 0; j < r_; ++j) {
            acc = addTable_[acc * d_ + pw];
            int next = pw;
            for (int e = 1; e < p_; ++e) next = mulTable_[next * d_ + pw];
            pw = next;  // pw^p
        }
        if (acc >= p_)
            throw std::logic_error("FieldSpec: trace escaped the prime subfield");
        traceTable_[a] = acc;
    }
}

int FieldSpec::inv(int a) const {
    if (a == 0) throw std::domain_error("FieldSpec: zero has no inverse");
    return invTable_[a];
}

bool FieldSpec::sameField(const FieldSpec& other) const {
    return this == &other ||
           (p_ == other.p_ && r_ == other.r_ && modulus_ == other.modulus_);
}

const FieldSpec& FieldSpec::of(int d) {
    static std::map<int, std::unique_ptr<FieldSpec>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return *it->second;

    std::unique_ptr<FieldSpec> spec;
    switch (d) {
        case 2: spec = std::make_unique<FieldSpec>(2, 1, Poly{0, 1}); break;
        case 3: spec = std::make_unique<FieldSpec>(3, 1, Poly{0, 1}); break;
        case 4: spec = std::make_unique<FieldSpec>(2, 2, Poly{1, 1, 1}); break;
        case 5: spec = std::make_unique<FieldSpec>(5, 1, Poly{0, 1}); break;
        case 7: spec = std::make_unique<FieldSpec>(7, 1, Poly{0, 1}); break;
        case 8: spec = std::make_unique<FieldSpec>(2, 3, Poly{1, 1, 0, 1}); break;
        case 9: spec = std::make_unique<FieldSpec>(3, 2, Poly{1, 0, 1}); break;
        default:
            throw std::invalid_argument("FieldSpec::of: no shipped modulus for d=" +
                                        std::to_string(d));
    }
    auto [pos, _] = cache.emplace(d, std::move(spec));
    return *pos->second;
}

FieldElement::FieldElement(const FieldSpec& spec, int index)
    : spec_(&spec), index_(index) {
    if (index < 0 || index >= spec.d())
        throw std::out_of_range("FieldElement: index out of range");
}

namespace {
void requireSameSpec(const FieldElement& a, const FieldElement& b) {
    if (!a.spec().sameField(b.spec()))
        throw std::invalid_argument("FieldElement: mismatched FieldSpec");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    requireSameSpec(a, b);
    return {a.spec(), a.spec().add(a.index(), b.index())};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    requireSameSpec(a, b);
    return {a.spec(), a.spec().sub(a.index(), b.index())};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    requireSameSpec(a, b);
    return {a.spec(), a.spec().mul(a.index(), b.index())};
}

FieldElement FieldElement::operator-() const {
    return {*spec_, spec_->neg(index_)};
}

FieldElement FieldElement::inverse() const {
    return {*spec_, spec_->inv(index_)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.spec().sameField(b.spec()) && a.index() == b.index();
}

bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

std::vector<FieldElement> elements(const FieldSpec& spec) {
    std::vector<FieldElement> out;
    out.reserve(spec.d());
    for (int i = 0; i < spec.d(); ++i) out.emplace_back(spec, i);
    return out;
}

}  // namespace qkd
