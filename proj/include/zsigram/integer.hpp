#ifndef ZSIGRAM_INTEGER_HPP
#define ZSIGRAM_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zsigram {

using Int = mpz_class;
using Rat = mpq_class;

// Sentinel for v_p(0).
inline constexpr long kValInfinity = std::numeric_limits<long>::max();

inline bool is_zero(const Int& n) { return mpz_sgn(n.get_mpz_t()) == 0; }
inline bool is_zero(const Rat& q) { return mpq_sgn(q.get_mpq_t()) == 0; }

// Exact exponent of p in n.  n = 0 gives kValInfinity.
inline long int_valuation(const Int& n, const Int& p) {
    if (is_zero(n)) return kValInfinity;
    Int rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

inline long rat_valuation(const Rat& q, const Int& p) {
    if (is_zero(q)) return kValInfinity;
    return int_valuation(q.get_num(), p) - int_valuation(q.get_den(), p);
}

// ---------------------------------------------------------------------------
// Primality.  Deterministic below 2^64 (Miller-Rabin with the first twelve
// prime bases, valid far beyond that range), BPSW-style battery above with
// the result downgraded to "probable".
// ---------------------------------------------------------------------------

struct PrimalityResult {
    bool prime = false;
    bool proven = false;
};

namespace detail {

inline bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned long s) {
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness
}

}  // namespace detail

inline PrimalityResult is_prime(const Int& n_in) {
    Int n = abs(n_in);
    if (n < 2) return {false, true};
    static const unsigned long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long p : small) {
        if (n == p) return {true, true};
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return {false, true};
    }
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    bool fits64 = mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
    if (fits64) {
        for (unsigned long a : small)
            if (detail::miller_rabin_witness(n, Int(a), d, s)) return {false, true};
        return {true, true};
    }
    int r = mpz_probab_prime_p(n.get_mpz_t(), 40);
    if (r == 0) return {false, true};
    return {true, r == 2};
}

// ---------------------------------------------------------------------------
// Budgeted factorization: trial division then Pollard-Brent rho.
// ---------------------------------------------------------------------------

struct FactorBudget {
    unsigned long trial_limit = 100000;     // trial division bound
    unsigned long rho_iterations = 500000;  // total modular steps across rho attempts
};

struct IntFactor {
    Int prime;
    unsigned exponent = 0;
    bool proven = true;  // primality certainty of this factor
};

struct IntFactorization {
    std::vector<IntFactor> factors;  // sorted ascending
    Int cofactor = 1;                // unfactored remainder (composite or unproven)
    bool complete() const { return cofactor == 1; }
    Int reassemble() const {
        Int v = cofactor;
        for (const auto& f : factors) {
            Int pe;
            mpz_pow_ui(pe.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
            v *= pe;
        }
        return v;
    }
};

namespace detail {

// Brent's cycle variant with batched gcds; deterministic (fixed x0, increasing c).
// Returns a nontrivial factor, or 0 when the budget runs out.
inline Int pollard_brent(const Int& n, unsigned long& budget) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1; budget > 0; ++c) {
        Int y = 2, g = 1, q = 1, x, ys;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (g == 1 && budget > 0) {
            x = y;
            for (unsigned long i = 0; i < r && budget > 0; ++i) {
                y = (y * y + c) % n;
                --budget;
            }
            unsigned long k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim && budget > 0; ++i) {
                    y = (y * y + c) % n;
                    q = (q * abs(x - y)) % n;
                    --budget;
                }
                g = gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // back-track: redo the last batch one gcd at a time
            g = 1;
            for (unsigned long i = 0; i < 4 * batch && g == 1; ++i) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != 1 && g != n) return g;
        // g == n: cycle degenerated, retry with next c
    }
    return 0;
}

}  // namespace detail

inline IntFactorization int_factor(const Int& n_in, const FactorBudget& budget = {}) {
    if (is_zero(n_in)) throw std::invalid_argument("int_factor: n must be nonzero");
    Int n = abs(n_in);
    IntFactorization out;
    if (n == 1) return out;

    auto push = [&](const Int& p, unsigned e, bool proven) {
        for (auto& f : out.factors)
            if (f.prime == p) {
                f.exponent += e;
                return;
            }
        out.factors.push_back({p, e, proven});
    };

    // trial division
    auto strip = [&](unsigned long p) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            Int rest;
            unsigned e = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), Int(p).get_mpz_t());
            n = rest;
            push(Int(p), e, true);
        }
    };
    strip(2);
    strip(3);
    for (unsigned long p = 5, step = 2; p <= budget.trial_limit && n > 1; p += step, step = 6 - step) {
        Int psq = Int(p) * p;
        if (psq > n) break;
        strip(p);
    }
    if (n > 1) {
        Int tl2 = Int(budget.trial_limit) * budget.trial_limit;
        if (n <= tl2) {  // remaining part below trial-limit squared is prime
            push(n, 1, true);
            n = 1;
        }
    }

    // rho on the remaining composite part
    unsigned long iters = budget.rho_iterations;
    std::vector<Int> stack;
    if (n > 1) stack.push_back(n);
    Int leftover = 1;
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        PrimalityResult pr = is_prime(m);
        if (pr.prime) {
            push(m, 1, pr.proven);
            continue;
        }
        Int f = detail::pollard_brent(m, iters);
        if (is_zero(f)) {
            leftover *= m;  // budget exhausted
            continue;
        }
        stack.push_back(f);
        stack.push_back(m / f);
    }
    out.cofactor = leftover;
    std::sort(out.factors.begin(), out.factors.end(),
              [](const IntFactor& a, const IntFactor& b) { return a.prime < b.prime; });
    return out;
}

// Exponent-1 primes of n found within budget (helper for witness searches).
inline std::vector<Int> exponent_one_primes(const IntFactorization& fz) {
    std::vector<Int> out;
    for (const auto& f : fz.factors)
        if (f.exponent == 1) out.push_back(f.prime);
    return out;
}

}  // namespace zsigram

#endif
