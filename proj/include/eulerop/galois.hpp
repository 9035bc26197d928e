#pragma once

// Factorization patterns of the threshold polynomial modulo primes.
//
// h_{n-1} is normalized to the monic g_{n-1}, scaled to an integer monic
// polynomial, and reduced mod p. Distinct-degree factorization gives the
// degree multiset of the irreducible factors, i.e. the cycle type of the
// Frobenius element whenever the reduction is square-free.

#include "hurwitz.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace eulerop {

/// m^deg · g(X/m) for the monic rational g; leading coefficient 1.
struct IntegerMonicPoly {
    std::vector<Integer> coeffs;  // ascending degree
    Integer scale;                // m

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// g_{n-1} = (-1)^{floor(n/2)} (2n²)^{-n} h_{n-1}.
inline QPolynomial g_normalize(const QPolynomial& h, int n) {
    require_order(n);
    if (h.degree() != n - 1) throw math_error("g_normalize: h must have degree n-1");
    Rational factor = make_rational(Integer(1), pow(Integer(2L * n * n), static_cast<unsigned long>(n)));
    if ((n / 2) % 2 == 1) factor = -factor;
    QPolynomial g = h * factor;
    if (!g.is_monic()) throw invariant_violation("normalized threshold polynomial is not monic");
    return g;
}

/// m = least common denominator of the coefficients of g; the scaled
/// polynomial m^d g(X/m) then has integer coefficients g_j m^{d-j}.
inline IntegerMonicPoly clear_denominators(const QPolynomial& g) {
    if (!g.is_monic()) throw math_error("clear_denominators: polynomial must be monic");
    Integer m = 1;
    for (const auto& a : g.coefficients()) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), a.get_den_mpz_t());
    const auto d = static_cast<unsigned long>(g.degree());
    IntegerMonicPoly out;
    out.scale = m;
    for (unsigned long j = 0; j <= d; ++j) {
        Rational v = g.coefficients()[j] * Rational(pow(m, d - j));
        if (v.get_den() != 1) throw invariant_violation("denominator clearing left a fraction");
        out.coeffs.push_back(v.get_num());
    }
    return out;
}

/// Smallest m with m^d g(X/m) ∈ ℤ[X]: for each prime p dividing a
/// denominator, v_p(m) = max_j ceil(v_p(den_j) / (d - j)). Divides the least
/// common denominator used by clear_denominators.
inline Integer minimal_clearing_scale(const QPolynomial& g) {
    if (!g.is_monic()) throw math_error("minimal_clearing_scale: polynomial must be monic");
    const int d = g.degree();
    Integer lcd = 1;
    for (const auto& a : g.coefficients()) mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), a.get_den_mpz_t());
    Integer m = 1;
    Integer rest = lcd;
    auto handle_prime = [&](const Integer& p) {
        unsigned long e = 0;
        for (int j = 0; j < d; ++j) {
            Integer den = g.coeff(j).get_den();
            unsigned long v = 0;
            while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
                den /= p;
                ++v;
            }
            const auto span = static_cast<unsigned long>(d - j);
            e = std::max(e, (v + span - 1) / span);
        }
        m *= pow(p, e);
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) rest /= p;
    };
    for (Integer p = 2; p * p <= rest; ++p)
        if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) handle_prime(p);
    if (rest > 1) handle_prime(rest);
    return m;
}

inline IntegerMonicPoly threshold_integer_poly(int n) {
    if (n < 2) throw std::invalid_argument("threshold polynomial needs n >= 2");
    return clear_denominators(g_normalize(build_hurwitz(n).hPoly, n));
}

namespace modp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // ascending, trimmed: empty is zero

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
inline u64 add(u64 a, u64 b, u64 p) { return a + b >= p ? a + b - p : a + b; }
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 power(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}
inline u64 inverse(u64 a, u64 p) { return power(a, p - 2, p); }

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
inline long degree(const Poly& f) { return static_cast<long>(f.size()) - 1; }

inline Poly make_monic(Poly f, u64 p) {
    trim(f);
    if (f.empty()) return f;
    u64 inv = inverse(f.back(), p);
    for (auto& a : f) a = mul(a, inv, p);
    return f;
}

/// Remainder of a modulo the nonzero b.
inline Poly rem(Poly a, const Poly& b, u64 p) {
    trim(a);
    const long db = degree(b);
    if (degree(a) < db) return a;
    const u64 inv = inverse(b.back(), p);
    for (long k = degree(a); k >= db; --k) {
        u64 q = mul(a[static_cast<std::size_t>(k)], inv, p);
        if (q == 0) continue;
        for (long j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(k - db + j);
            a[idx] = sub(a[idx], mul(q, b[static_cast<std::size_t>(j)], p), p);
        }
    }
    a.resize(static_cast<std::size_t>(db));
    trim(a);
    return a;
}

inline Poly quotient(Poly a, const Poly& b, u64 p) {
    trim(a);
    const long db = degree(b);
    if (degree(a) < db) return {};
    Poly q(static_cast<std::size_t>(degree(a) - db + 1));
    const u64 inv = inverse(b.back(), p);
    for (long k = degree(a); k >= db; --k) {
        u64 c = mul(a[static_cast<std::size_t>(k)], inv, p);
        q[static_cast<std::size_t>(k - db)] = c;
        if (c == 0) continue;
        for (long j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(k - db + j);
            a[idx] = sub(a[idx], mul(c, b[static_cast<std::size_t>(j)], p), p);
        }
    }
    trim(q);
    return q;
}

inline Poly mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j], p), p);
    trim(r);
    return r;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) { return rem(mul(a, b, p), f, p); }

inline Poly powmod(Poly base, u64 e, const Poly& f, u64 p) {
    Poly r{1 % p};
    trim(r);
    base = rem(std::move(base), f, p);
    while (e) {
        if (e & 1) r = mulmod(r, base, f, p);
        e >>= 1;
        if (e) base = mulmod(base, base, f, p);
    }
    return r;
}

inline Poly gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a), p);
}

inline Poly derivative(const Poly& f, u64 p) {
    if (f.size() < 2) return {};
    Poly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = mul(f[i], static_cast<u64>(i) % p, p);
    trim(d);
    return d;
}

inline Poly sub(Poly a, const Poly& b, u64 p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i], p);
    trim(a);
    return a;
}

}  // namespace modp

/// Residues of an integer monic polynomial modulo a prime p.
struct ModPPoly {
    std::uint64_t p = 0;
    modp::Poly coeffs;  // ascending; leading residue 1
};

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d : {2ULL, 3ULL, 5ULL})
        if (p % d == 0) return p == d;
    // deterministic Miller–Rabin for 64-bit inputs
    std::uint64_t d = p - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (a % p == 0) continue;
        std::uint64_t x = modp::power(a, d, p);
        if (x == 1 || x == p - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = modp::mul(x, x, p);
            if (x == p - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline ModPPoly reduce(const IntegerMonicPoly& f, std::uint64_t p) {
    ModPPoly out{p, {}};
    out.coeffs.reserve(f.coeffs.size());
    for (const auto& a : f.coeffs) {
        auto r = static_cast<std::uint64_t>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(p)));
        out.coeffs.push_back(r);
    }
    modp::trim(out.coeffs);
    return out;
}

struct NotSquareFree {};

namespace detail {

/// Distinct-degree factorization of a square-free monic f. When `accept` is
/// given it is consulted after each degree with the degrees found so far and
/// the degree of the unfactored rest; returning false aborts early.
template <class Accept>
std::optional<std::vector<int>> distinct_degree(modp::Poly f, std::uint64_t p, Accept accept) {
    std::vector<int> degrees;
    const modp::Poly x{0, 1};
    modp::Poly h = modp::rem(x, f, p);
    for (int k = 1; 2 * k <= modp::degree(f); ++k) {
        h = modp::powmod(h, p, f, p);
        modp::Poly g = modp::gcd(f, modp::sub(h, x, p), p);
        if (modp::degree(g) > 0) {
            for (long i = 0; i < modp::degree(g) / k; ++i) degrees.push_back(k);
            f = modp::quotient(f, g, p);
            h = modp::rem(h, f, p);
        }
        if (!accept(degrees, k, modp::degree(f))) return std::nullopt;
    }
    if (modp::degree(f) > 0) degrees.push_back(static_cast<int>(modp::degree(f)));
    std::sort(degrees.rbegin(), degrees.rend());
    return degrees;
}

inline bool square_free(const modp::Poly& f, std::uint64_t p) {
    modp::Poly d = modp::derivative(f, p);
    if (d.empty()) return false;
    return modp::degree(modp::gcd(f, d, p)) == 0;
}

}  // namespace detail

/// Product of all irreducible factors of one degree.
struct DegreeProduct {
    int degree = 0;
    modp::Poly product;  // monic
};

/// Distinct-degree factorization of a square-free monic reduction; the
/// products multiply back to f mod p.
inline std::vector<DegreeProduct> distinct_degree_factorization(const ModPPoly& f) {
    const std::uint64_t p = f.p;
    if (!detail::square_free(f.coeffs, p)) throw math_error("distinct_degree_factorization needs a square-free input");
    std::vector<DegreeProduct> out;
    modp::Poly rest = modp::make_monic(f.coeffs, p);
    const modp::Poly x{0, 1};
    modp::Poly h = modp::rem(x, rest, p);
    for (int k = 1; 2 * k <= modp::degree(rest); ++k) {
        h = modp::powmod(h, p, rest, p);
        modp::Poly g = modp::gcd(rest, modp::sub(h, x, p), p);
        if (modp::degree(g) > 0) {
            rest = modp::quotient(rest, g, p);
            h = modp::rem(h, rest, p);
            out.push_back({k, std::move(g)});
        }
    }
    if (modp::degree(rest) > 0) out.push_back({static_cast<int>(modp::degree(rest)), rest});
    return out;
}

/// Degrees of the irreducible factors of f mod p, largest first, or
/// NotSquareFree when gcd(f, f') is nonconstant mod p.
inline std::variant<std::vector<int>, NotSquareFree> factor_degrees_mod_p(const IntegerMonicPoly& f, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("factor_degrees_mod_p: " + std::to_string(p) + " is not prime");
    ModPPoly r = reduce(f, p);
    if (!detail::square_free(r.coeffs, p)) return NotSquareFree{};
    return *detail::distinct_degree(r.coeffs, p, [](const std::vector<int>&, int, long) { return true; });
}

enum class CycleTarget { full_cycle, n_minus_2_cycle, transposition };

inline std::string to_string(CycleTarget t) {
    switch (t) {
        case CycleTarget::full_cycle: return "full-cycle";
        case CycleTarget::n_minus_2_cycle: return "(n-2)-cycle";
        case CycleTarget::transposition: return "transposition";
    }
    return "unknown";
}

/// Degree multiset (largest first) that witnesses the target cycle type for a
/// polynomial of degree d = n-1: {d}, {d-1, 1} or {2, 1, ..., 1}.
inline std::vector<int> target_pattern(CycleTarget t, int d) {
    switch (t) {
        case CycleTarget::full_cycle: return {d};
        case CycleTarget::n_minus_2_cycle: return d >= 2 ? std::vector<int>{d - 1, 1} : std::vector<int>{};
        case CycleTarget::transposition: {
            std::vector<int> v(static_cast<std::size_t>(std::max(d - 1, 0)), 1);
            if (d >= 2) v[0] = 2;
            return d >= 2 ? v : std::vector<int>{};
        }
    }
    return {};
}

struct CycleTypeEvidence {
    CycleTarget target = CycleTarget::full_cycle;
    std::optional<std::uint64_t> prime;  // nullopt: nothing found up to pMax
    std::vector<int> degrees;
};

/// Primes in increasing order from a segmented sieve.
class PrimeStream {
   public:
    explicit PrimeStream(std::uint64_t limit) : limit_(limit) {}

    std::optional<std::uint64_t> next() {
        while (pos_ >= segment_.size()) {
            if (low_ > limit_) return std::nullopt;
            fill();
        }
        return segment_[pos_++];
    }

   private:
    void fill() {
        const std::uint64_t span = 1 << 18;
        std::uint64_t high = std::min(limit_ + 1, low_ + span);
        std::uint64_t root = 1;
        while ((root + 1) * (root + 1) < high) ++root;
        extend_base(root);
        std::vector<char> composite(high - low_, 0);
        for (std::uint64_t q : base_) {
            if (q * q >= high) break;
            std::uint64_t start = std::max(q * q, (low_ + q - 1) / q * q);
            for (std::uint64_t m = start; m < high; m += q) composite[m - low_] = 1;
        }
        segment_.clear();
        pos_ = 0;
        for (std::uint64_t v = std::max<std::uint64_t>(low_, 2); v < high; ++v)
            if (!composite[v - low_]) segment_.push_back(v);
        low_ = high;
    }

    void extend_base(std::uint64_t root) {
        std::uint64_t from = base_.empty() ? 2 : base_.back() + 1;
        for (std::uint64_t v = from; v <= root; ++v)
            if (is_prime(v)) base_.push_back(v);
    }

    std::uint64_t limit_;
    std::uint64_t low_ = 2;
    std::vector<std::uint64_t> base_;
    std::vector<std::uint64_t> segment_;
    std::size_t pos_ = 0;
};

inline constexpr std::uint64_t kDefaultPrimeLimit = 100'000'000;

/// Smallest prime p ≤ pMax for which f mod p is square-free with the factor
/// degree pattern of the target cycle type.
inline CycleTypeEvidence find_cycle_type_prime(const IntegerMonicPoly& f, CycleTarget target,
                                               std::uint64_t pMax = kDefaultPrimeLimit) {
    const int d = f.degree();
    const std::vector<int> want = target_pattern(target, d);
    CycleTypeEvidence ev{target, std::nullopt, {}};
    if (want.empty()) return ev;
    const int want_linear = static_cast<int>(std::count(want.begin(), want.end(), 1));

    // Abort distinct-degree factorization as soon as the pattern is ruled out.
    auto accept = [&](const std::vector<int>& found, int k, long) {
        if (k == 1) {
            int linear = static_cast<int>(found.size());
            if (linear != want_linear) return false;
        }
        for (int deg : found)
            if (std::find(want.begin(), want.end(), deg) == want.end()) return false;
        return true;
    };

    PrimeStream primes(pMax);
    while (auto p = primes.next()) {
        ModPPoly r = reduce(f, *p);
        if (modp::degree(r.coeffs) != d) continue;
        if (!detail::square_free(r.coeffs, *p)) continue;
        auto degrees = detail::distinct_degree(r.coeffs, *p, accept);
        if (degrees && *degrees == want) {
            ev.prime = *p;
            ev.degrees = *degrees;
            return ev;
        }
    }
    return ev;
}

/// Smallest prime with irreducible reduction; by Gauss' lemma a witness that
/// f is irreducible over ℚ.
inline std::optional<std::uint64_t> irreducibility_witness(const IntegerMonicPoly& f,
                                                          std::uint64_t pMax = kDefaultPrimeLimit) {
    return find_cycle_type_prime(f, CycleTarget::full_cycle, pMax).prime;
}

struct CyclePrimeRow {
    int n = 0;
    std::optional<std::uint64_t> full_cycle;
    std::optional<std::uint64_t> n_minus_2_cycle;
    std::optional<std::uint64_t> transposition;
};

inline CyclePrimeRow cycle_prime_row(int n, std::uint64_t pMax = kDefaultPrimeLimit) {
    IntegerMonicPoly f = threshold_integer_poly(n);
    return {n, find_cycle_type_prime(f, CycleTarget::full_cycle, pMax).prime,
            find_cycle_type_prime(f, CycleTarget::n_minus_2_cycle, pMax).prime,
            find_cycle_type_prime(f, CycleTarget::transposition, pMax).prime};
}

}  // namespace eulerop
