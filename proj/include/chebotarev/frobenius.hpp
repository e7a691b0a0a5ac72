// Least Frobenius prime verifier: exact integer polynomial discriminants,
// factorization mod p, the residue-field Frobenius test
// g(x) = x^p (mod p, h(x)), the least-prime sieve with the three exponent
// shapes A, B, C, and the quadratic-field corpus.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chebotarev::frobenius {

using Int = mpz_class;

// Integer polynomials as ascending coefficient vectors.
using ZPoly = std::vector<Int>;

inline int z_deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

inline void z_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

inline ZPoly z_derivative(const ZPoly& f) {
    ZPoly out;
    for (size_t i = 1; i < f.size(); ++i) out.push_back(Int(i) * f[i]);
    return out;
}

// Remainder of a mod m for monic integer m (remainder stays integral).
inline ZPoly z_rem_monic(ZPoly a, const ZPoly& m) {
    z_trim(a);
    const int dm = z_deg(m);
    while (z_deg(a) >= dm) {
        const Int q = a.back();
        const int shift = z_deg(a) - dm;
        for (int i = 0; i <= dm; ++i) a[i + shift] -= q * m[i];
        z_trim(a);
    }
    return a;
}

namespace detail {

// Pseudo-remainder: lc(b)^{deg a - deg b + 1} a mod b.
inline ZPoly prem(ZPoly a, const ZPoly& b) {
    const int db = z_deg(b);
    const Int lb = b.back();
    int da = z_deg(a);
    Int scale = 1;
    for (int i = 0; i < da - db + 1; ++i) scale *= lb;
    for (Int& c : a) c *= scale;
    while (z_deg(a) >= db) {
        Int q;
        mpz_divexact(q.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
        const int shift = z_deg(a) - db;
        for (int i = 0; i <= db; ++i) a[i + shift] -= q * b[i];
        z_trim(a);
    }
    return a;
}

}  // namespace detail

// Resultant via the subresultant pseudo-remainder sequence (exact big-int
// divisions throughout).
inline Int resultant(ZPoly a, ZPoly b) {
    z_trim(a);
    z_trim(b);
    if (a.empty() || b.empty()) return 0;
    Int sign = 1;
    if (z_deg(a) < z_deg(b)) {
        if ((z_deg(a) & 1) && (z_deg(b) & 1)) sign = -1;
        a.swap(b);
    }
    Int g = 1, h = 1;
    while (z_deg(b) > 0) {
        const int d = z_deg(a) - z_deg(b);
        if ((z_deg(a) & 1) && (z_deg(b) & 1)) sign = -sign;
        ZPoly r = detail::prem(a, b);
        a = b;
        Int denom = g;
        for (int i = 0; i < d; ++i) denom *= h;
        b.clear();
        for (const Int& c : r) {
            Int q;
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), denom.get_mpz_t());
            b.push_back(q);
        }
        z_trim(b);
        if (b.empty()) return 0;
        g = a.back();
        // h = g^d h^{1-d}
        Int num = 1;
        for (int i = 0; i < d; ++i) num *= g;
        if (d == 0) {
            // h unchanged
        } else {
            Int den = 1;
            for (int i = 0; i < d - 1; ++i) den *= h;
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
    // deg b == 0: res = sign * lc(b)^{deg a} / h^{deg a - 1}
    Int num = 1;
    for (int i = 0; i < z_deg(a); ++i) num *= b.back();
    Int den = 1;
    for (int i = 0; i < z_deg(a) - 1; ++i) den *= h;
    Int res;
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return sign * res;
}

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f), for monic f just the signed
// resultant.
inline Int poly_disc(const ZPoly& f) {
    ZPoly g = f;
    z_trim(g);
    if (z_deg(g) < 1) throw std::domain_error("poly_disc: degree must be >= 1");
    if (g.back() != 1) throw std::domain_error("poly_disc: f must be monic");
    const int n = z_deg(g);
    Int r = resultant(g, z_derivative(g));
    return ((n * (n - 1) / 2) % 2 == 0) ? r : -r;
}

// --- Arithmetic in F_p[x], p < 2^62, coefficients in [0, p). ---

using MPoly = std::vector<uint64_t>;

namespace modp {

inline uint64_t mul(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline uint64_t inv(uint64_t a, uint64_t p) { return powmod(a % p, p - 2, p); }

inline void trim(MPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int deg(const MPoly& f) { return static_cast<int>(f.size()) - 1; }

inline MPoly mul(const MPoly& a, const MPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    MPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + mul(a[i], b[j], p)) % p;
        }
    }
    trim(out);
    return out;
}

inline MPoly rem(MPoly a, const MPoly& m, uint64_t p) {
    trim(a);
    const int dm = deg(m);
    if (dm < 0) throw std::domain_error("modp::rem: zero modulus");
    const uint64_t li = inv(m.back(), p);
    while (deg(a) >= dm) {
        const uint64_t q = mul(a.back(), li, p);
        const int shift = deg(a) - dm;
        for (int i = 0; i <= dm; ++i) {
            a[i + shift] = (a[i + shift] + p - mul(q, m[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

inline MPoly monic(MPoly f, uint64_t p) {
    trim(f);
    if (f.empty() || f.back() == 1) return f;
    const uint64_t li = inv(f.back(), p);
    for (uint64_t& c : f) c = mul(c, li, p);
    return f;
}

inline MPoly gcd(MPoly a, MPoly b, uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        MPoly r = rem(a, b, p);
        a.swap(b);
        b.swap(r);
    }
    return monic(std::move(a), p);
}

inline MPoly sub(MPoly a, const MPoly& b, uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

inline MPoly divexact(const MPoly& a, const MPoly& b, uint64_t p) {
    MPoly q, r = a;
    trim(r);
    const int db = deg(b);
    const uint64_t li = inv(b.back(), p);
    if (deg(r) >= db) q.assign(deg(r) - db + 1, 0);
    while (deg(r) >= db) {
        const uint64_t c = mul(r.back(), li, p);
        const int shift = deg(r) - db;
        q[shift] = c;
        for (int i = 0; i <= db; ++i) {
            r[i + shift] = (r[i + shift] + p - mul(c, b[i], p)) % p;
        }
        trim(r);
    }
    if (!r.empty()) throw std::logic_error("modp::divexact: nonzero remainder");
    trim(q);
    return q;
}

inline MPoly derivative(const MPoly& f, uint64_t p) {
    MPoly out;
    for (size_t i = 1; i < f.size(); ++i) out.push_back(mul(f[i], i % p, p));
    trim(out);
    return out;
}

// base^e mod (m, p), e a big integer.
inline MPoly powmod(MPoly base, const Int& e, const MPoly& m, uint64_t p) {
    MPoly result{1};
    base = rem(std::move(base), m, p);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base, p), m, p);
        base = rem(mul(base, base, p), m, p);
    }
    return result;
}

}  // namespace modp

inline MPoly reduce_mod_p(const ZPoly& f, uint64_t p) {
    MPoly out;
    for (const Int& c : f) {
        Int r = c % Int(static_cast<unsigned long>(p));
        if (r < 0) r += Int(static_cast<unsigned long>(p));
        out.push_back(r.get_ui());
    }
    modp::trim(out);
    return out;
}

namespace detail {

// Equal-degree splitting (Cantor-Zassenhaus; trace map for p = 2).  `f` is a
// monic squarefree product of irreducibles of degree d.
inline void edf(const MPoly& f, int d, uint64_t p, std::mt19937_64& rng,
                std::vector<MPoly>& out) {
    if (modp::deg(f) == d) {
        out.push_back(f);
        return;
    }
    const Int pz(static_cast<unsigned long>(p));
    Int exponent;
    if (p != 2) {
        Int pd = 1;
        for (int i = 0; i < d; ++i) pd *= pz;
        exponent = (pd - 1) / 2;
    }
    for (;;) {
        MPoly r(modp::deg(f), 0);
        for (uint64_t& c : r) c = rng() % p;
        modp::trim(r);
        if (r.empty()) continue;
        MPoly t;
        if (p == 2) {
            // trace map sum_{i<d} r^{2^i}
            MPoly acc = modp::rem(r, f, p);
            t = acc;
            for (int i = 1; i < d; ++i) {
                acc = modp::rem(modp::mul(acc, acc, p), f, p);
                t = modp::sub(std::move(t), acc, p);  // subtraction = addition mod 2
            }
        } else {
            t = modp::powmod(r, exponent, f, p);
            if (t.empty()) continue;
            t[0] = (t[0] + p - 1) % p;
            modp::trim(t);
        }
        MPoly g = modp::gcd(t, f, p);
        if (modp::deg(g) > 0 && modp::deg(g) < modp::deg(f)) {
            edf(g, d, p, rng, out);
            edf(modp::divexact(f, g, p), d, p, rng, out);
            return;
        }
    }
}

// Distinct-degree factorization of a monic squarefree f.
inline void ddf(MPoly f, uint64_t p, std::mt19937_64& rng,
                std::vector<MPoly>& out) {
    const Int pz(static_cast<unsigned long>(p));
    MPoly h{0, 1};  // x
    h = modp::rem(std::move(h), f, p);
    for (int d = 1; 2 * d <= modp::deg(f); ++d) {
        h = modp::powmod(h, pz, f, p);  // x^{p^d} mod f
        MPoly hx = modp::sub(h, MPoly{0, 1}, p);
        MPoly g = modp::gcd(hx, f, p);
        if (modp::deg(g) > 0) {
            edf(g, d, p, rng, out);
            f = modp::divexact(f, g, p);
            h = modp::rem(std::move(h), f, p);
        }
    }
    if (modp::deg(f) > 0) out.push_back(f);
}

inline void squarefree_factor(MPoly f, int mult, uint64_t p,
                              std::mt19937_64& rng,
                              std::map<MPoly, int>& factors) {
    modp::trim(f);
    f = modp::monic(std::move(f), p);
    if (modp::deg(f) <= 0) return;
    MPoly fp = modp::derivative(f, p);
    if (fp.empty()) {
        // f = u(x^p); the p-th root keeps coefficients (c^{1/p} = c in F_p).
        MPoly root;
        for (size_t i = 0; i < f.size(); i += p) root.push_back(f[i]);
        squarefree_factor(std::move(root), mult * static_cast<int>(p), p, rng,
                          factors);
        return;
    }
    MPoly d = modp::gcd(f, fp, p);
    MPoly w = modp::divexact(f, d, p);
    int i = 1;
    while (modp::deg(w) > 0) {
        MPoly y = modp::gcd(w, d, p);
        MPoly fac = modp::divexact(w, y, p);
        if (modp::deg(fac) > 0) {
            std::vector<MPoly> irr;
            ddf(fac, p, rng, irr);
            for (auto& q : irr) factors[q] += mult * i;
        }
        d = modp::divexact(d, y, p);
        w = std::move(y);
        ++i;
    }
    if (modp::deg(d) > 0) squarefree_factor(std::move(d), mult, p, rng, factors);
}

}  // namespace detail

// Complete factorization of f over F_p as (monic irreducible, multiplicity)
// pairs, deterministically ordered by (degree, coefficients); the fixed seed
// makes the equal-degree splitting reproducible.
inline std::vector<std::pair<MPoly, int>> factor_mod_p(
    const ZPoly& f, uint64_t p, uint64_t seed = 0x9e3779b97f4a7c15ULL) {
    if (p < 2) throw std::domain_error("factor_mod_p: p must be prime");
    std::mt19937_64 rng(seed);
    std::map<MPoly, int> factors;
    detail::squarefree_factor(reduce_mod_p(f, p), 1, p, rng, factors);
    std::vector<std::pair<MPoly, int>> out(factors.begin(), factors.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (modp::deg(a.first) != modp::deg(b.first)) {
            return modp::deg(a.first) < modp::deg(b.first);
        }
        return a.first < b.first;
    });
    return out;
}

// An automorphism given as a rational-coefficient polynomial G(x)/den.
struct Automorphism {
    ZPoly numerator;
    Int denominator = 1;  // > 0
};

struct FieldSpec {
    int degree = 2;
    Int discriminant;  // field discriminant d_L (signed), |d_L| >= 3
    ZPoly f;           // monic integer minimal polynomial, deg = degree
    std::vector<Automorphism> automorphisms;

    // Checks the structural invariants: monic f of the right degree,
    // |disc| >= 3, and f | f(g) for each automorphism g.
    void validate() const {
        ZPoly g = f;
        z_trim(g);
        if (degree < 2 || z_deg(g) != degree || g.back() != 1) {
            throw std::domain_error("FieldSpec: f must be monic of the stated degree");
        }
        if (abs(discriminant) < 3) {
            throw std::domain_error("FieldSpec: |discriminant| must be >= 3");
        }
        for (const auto& sigma : automorphisms) {
            if (sigma.denominator <= 0) {
                throw std::domain_error("FieldSpec: denominator must be positive");
            }
            // den^n f(G/den) = sum_i c_i G^i den^{n-i}, reduced mod monic f,
            // must vanish.
            const Int& den = sigma.denominator;
            ZPoly r{g.back()};  // Horner from the top coefficient
            for (int i = degree - 1; i >= 0; --i) {
                r = z_mul(r, sigma.numerator);
                Int scale = 1;
                for (int k = 0; k < degree - i; ++k) scale *= den;
                if (r.empty()) r.push_back(Int(0));
                r[0] += g[i] * scale;
                r = z_rem_monic(std::move(r), g);
            }
            z_trim(r);
            if (!r.empty()) {
                throw std::domain_error(
                    "FieldSpec: automorphism does not permute the roots");
            }
        }
    }
};

// Signal for primes where the Z[x]/(f) model cannot decide the Frobenius.
struct IndeterminatePrime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// True iff some irreducible factor h of f mod p has g(x) = x^p (mod p, h) --
// i.e. sigma fixes a prime above p and acts as the p-power map on its
// residue field.
inline bool frobenius_matches(const FieldSpec& field, size_t sigma_index,
                              uint64_t p) {
    if (sigma_index >= field.automorphisms.size()) {
        throw std::domain_error("frobenius_matches: automorphism index out of range");
    }
    const auto& sigma = field.automorphisms[sigma_index];
    const Int pz(static_cast<unsigned long>(p));
    if (poly_disc(field.f) % pz == 0 || sigma.denominator % pz == 0) {
        throw IndeterminatePrime("indeterminate at p = " + std::to_string(p));
    }
    MPoly g = reduce_mod_p(sigma.numerator, p);
    Int dmod = sigma.denominator % pz;
    const uint64_t dinv = modp::inv(dmod.get_ui(), p);
    for (uint64_t& c : g) c = modp::mul(c, dinv, p);
    for (const auto& [h, mult] : factor_mod_p(field.f, p)) {
        const MPoly xp = modp::powmod(MPoly{0, 1}, pz, h, p);
        if (modp::rem(g, h, p) == xp) return true;
    }
    return false;
}

// The three worst-case exponent shapes for a matching prime p and field
// discriminant d_L: A with p <= d_L^A, B with p <= B (log d_L)^2, and C with
// p <= C (3 e^gamma / pi)^2 (log d_L)^2 (log(2 log log d_L))^2 /
// (log log d_L)^2.
struct ExponentShapes {
    double A, B, C;
};

inline ExponentShapes exponent_shapes(uint64_t p, const Int& discriminant) {
    constexpr double euler_gamma = 0.5772156649;
    const double dl = std::abs(mpz_get_d(discriminant.get_mpz_t()));
    const double L = std::log(dl);
    const double ll = std::log(L);
    const double pref = std::pow(3.0 * std::exp(euler_gamma) / std::numbers::pi, 2);
    const double pd = static_cast<double>(p);
    return {std::log(pd) / L, pd / (L * L),
            pd * ll * ll / (pref * L * L * std::pow(std::log(2.0 * ll), 2))};
}

struct FrobeniusResult {
    bool found = false;
    uint64_t p = 0;
    std::vector<int> factor_degrees;  // cycle type of f mod p
    ExponentShapes exponents{};
    std::vector<uint64_t> skipped;  // primes dividing disc(f) * D, inconclusive
    uint64_t ceiling = 0;           // set when the search was truncated
};

// Smallest prime p coprime to disc(f) * D whose Frobenius matches the given
// automorphism.  Every smaller prime is either recorded as skipped or has
// frobenius_matches false by construction of the sieve.
inline FrobeniusResult least_frobenius_prime(const FieldSpec& field,
                                             size_t sigma_index,
                                             uint64_t ceiling = 100000000ULL) {
    const Int bad = poly_disc(field.f) *
                    field.automorphisms.at(sigma_index).denominator;
    FrobeniusResult out;
    Int p = 1;
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p > Int(static_cast<unsigned long>(ceiling))) {
            out.ceiling = ceiling;
            return out;  // bounded failure
        }
        const uint64_t pu = p.get_ui();
        if (bad % p == 0) {
            out.skipped.push_back(pu);
            continue;
        }
        if (frobenius_matches(field, sigma_index, pu)) {
            out.found = true;
            out.p = pu;
            for (const auto& [h, mult] : factor_mod_p(field.f, pu)) {
                for (int i = 0; i < mult; ++i) {
                    out.factor_degrees.push_back(modp::deg(h));
                }
            }
            std::sort(out.factor_degrees.begin(), out.factor_degrees.end());
            out.exponents = exponent_shapes(pu, field.discriminant);
            return out;
        }
    }
}

namespace detail {

inline bool squarefree(long m) {
    m = std::abs(m);
    for (long q = 2; q * q <= m; ++q) {
        if (m % (q * q) == 0) return false;
    }
    return true;
}

inline bool fundamental_discriminant(long d) {
    if (d == 1 || d == 0) return false;
    long r = ((d % 4) + 4) % 4;
    if (r == 1) return squarefree(d);
    if (r == 0) {
        const long m = d / 4;
        const long mr = ((m % 4) + 4) % 4;
        return (mr == 2 || mr == 3) && squarefree(m);
    }
    return false;
}

}  // namespace detail

// All quadratic fields with |fundamental discriminant| <= height, with
// minimal polynomial x^2 - x + (1-d)/4 for d = 1 (mod 4) and x^2 - d
// otherwise, and both automorphisms attached (r -> 1 - r resp. r -> -r).
inline std::vector<FieldSpec> quadratic_corpus(long height) {
    if (height < 3) throw std::domain_error("quadratic_corpus: height must be >= 3");
    std::vector<FieldSpec> out;
    for (long ad = 3; ad <= height; ++ad) {
        for (long d : {-ad, ad}) {
            if (!detail::fundamental_discriminant(d)) continue;
            FieldSpec field;
            field.degree = 2;
            field.discriminant = d;
            if (((d % 4) + 4) % 4 == 1) {
                field.f = {Int((1 - d) / 4), Int(-1), Int(1)};
                field.automorphisms = {{{Int(0), Int(1)}, 1},
                                       {{Int(1), Int(-1)}, 1}};
            } else {
                field.f = {Int(-d), Int(0), Int(1)};
                field.automorphisms = {{{Int(0), Int(1)}, 1},
                                       {{Int(0), Int(-1)}, 1}};
            }
            field.validate();
            out.push_back(std::move(field));
        }
    }
    std::sort(out.begin(), out.end(), [](const FieldSpec& a, const FieldSpec& b) {
        return a.discriminant < b.discriminant;
    });
    return out;
}

// Worst-case exponents per degree over a corpus, with the realizing
// (field, automorphism, prime) of each shape.
struct WorstCase {
    double value = -1.0;
    Int discriminant;
    size_t sigma_index = 0;
    uint64_t p = 0;
};

struct CorpusRow {
    int degree = 0;
    WorstCase A, B, C;
    size_t fields = 0;
};

struct CorpusFailure {
    Int discriminant;
    size_t sigma_index;
    uint64_t ceiling;
};

struct CorpusReport {
    std::vector<CorpusRow> rows;  // ordered by degree
    std::vector<CorpusFailure> failures;
};

inline CorpusReport corpus_scan(const std::vector<FieldSpec>& corpus,
                                uint64_t ceiling = 100000000ULL) {
    std::map<int, CorpusRow> rows;
    CorpusReport report;
    for (const auto& field : corpus) {
        CorpusRow& row = rows[field.degree];
        row.degree = field.degree;
        row.fields += 1;
        for (size_t s = 0; s < field.automorphisms.size(); ++s) {
            const FrobeniusResult r = least_frobenius_prime(field, s, ceiling);
            if (!r.found) {
                report.failures.push_back({field.discriminant, s, ceiling});
                continue;
            }
            auto consider = [&](WorstCase& w, double v) {
                if (v > w.value) w = {v, field.discriminant, s, r.p};
            };
            consider(row.A, r.exponents.A);
            consider(row.B, r.exponents.B);
            consider(row.C, r.exponents.C);
        }
    }
    for (auto& [deg, row] : rows) report.rows.push_back(row);
    return report;
}

namespace detail {

inline Int parse_int(const std::string& s, int line) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw std::runtime_error("corpus line " + std::to_string(line) +
                                 ": bad integer '" + s + "'");
    }
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

}  // namespace detail

// One field per line: `degree : discriminant : c0,c1,...,1 : g1 ; g2 ; ...`
// with rational coefficients as `num/den`; '#' starts a comment.  Each g is
// rescaled onto the common denominator D = lcm of all denominators.
inline std::vector<FieldSpec> parse_corpus(std::istream& in) {
    std::vector<FieldSpec> out;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = detail::strip(raw);
        if (line.empty()) continue;
        const auto fields = detail::split(line, ':');
        if (fields.size() != 4) {
            throw std::runtime_error("corpus line " + std::to_string(lineno) +
                                     ": expected 4 ':'-separated fields");
        }
        FieldSpec fs;
        fs.degree = static_cast<int>(
            detail::parse_int(detail::strip(fields[0]), lineno).get_si());
        fs.discriminant = detail::parse_int(detail::strip(fields[1]), lineno);
        for (const auto& c : detail::split(fields[2], ',')) {
            fs.f.push_back(detail::parse_int(detail::strip(c), lineno));
        }
        // First pass: collect rational coefficients and the common denominator.
        std::vector<std::vector<std::pair<Int, Int>>> gs;
        Int common = 1;
        for (const auto& gspec : detail::split(fields[3], ';')) {
            std::vector<std::pair<Int, Int>> coeffs;
            for (const auto& c : detail::split(gspec, ',')) {
                const std::string t = detail::strip(c);
                const size_t slash = t.find('/');
                Int num = detail::parse_int(
                    slash == std::string::npos ? t : t.substr(0, slash), lineno);
                Int den = slash == std::string::npos
                              ? Int(1)
                              : detail::parse_int(t.substr(slash + 1), lineno);
                if (den <= 0) {
                    throw std::runtime_error("corpus line " +
                                             std::to_string(lineno) +
                                             ": denominator must be positive");
                }
                coeffs.emplace_back(num, den);
                common = lcm(common, den);
            }
            gs.push_back(std::move(coeffs));
        }
        for (const auto& coeffs : gs) {
            Automorphism sigma;
            sigma.denominator = common;
            for (const auto& [num, den] : coeffs) {
                sigma.numerator.push_back(num * (common / den));
            }
            fs.automorphisms.push_back(std::move(sigma));
        }
        try {
            fs.validate();
        } catch (const std::domain_error& e) {
            throw std::runtime_error("corpus line " + std::to_string(lineno) +
                                     ": " + e.what());
        }
        out.push_back(std::move(fs));
    }
    return out;
}

}  // namespace chebotarev::frobenius
