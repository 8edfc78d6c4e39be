#ifndef ZSIGRAM_MODULAR_HPP
#define ZSIGRAM_MODULAR_HPP

#include <stdexcept>

#include "zsigram/polynomial.hpp"

namespace zsigram {

// ---------------------------------------------------------------------------
// Residue-field contexts.  Polynomials over the residue field are carried as
// Polynomial<Elem> with canonically reduced coefficients; the modulus travels
// in the context argument.
// ---------------------------------------------------------------------------

// F_p, p prime; elements are canonical residues in [0, p).
struct FpContext {
    Int p;
    using Elem = Int;
    Elem reduce(const Int& a) const {
        Int r = a % p;
        if (r < 0) r += p;
        return r;
    }
    Elem inv(const Int& a) const {
        Int r;
        if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()))
            throw std::domain_error("FpContext: not invertible");
        return r;
    }
    Elem mul(const Int& a, const Int& b) const { return (a * b) % p; }
    bool is_zero(const Int& a) const { return zsigram::is_zero(a); }
};

// Q[t]/(pi), pi monic irreducible; elements are polynomials in t of degree < deg pi.
struct QtResidueContext {
    PolyQ pi;
    using Elem = PolyQ;
    Elem reduce(const PolyQ& a) const { return poly_rem(a, pi); }
    Elem inv(const PolyQ& a) const {
        auto [d, u, v] = poly_extended_gcd(a, pi);
        if (d.degree() != 0) throw std::domain_error("QtResidueContext: not invertible");
        return reduce(u * PolyQ(Rat(1) / d.coeff(0)));
    }
    Elem mul(const PolyQ& a, const PolyQ& b) const { return reduce(a * b); }
    bool is_zero(const PolyQ& a) const { return a.is_zero(); }
};

template <class Ctx>
Polynomial<typename Ctx::Elem> reduce_poly(const Polynomial<typename Ctx::Elem>& f, const Ctx& ctx) {
    std::vector<typename Ctx::Elem> v(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) v[i] = ctx.reduce(f.coeff(i));
    return Polynomial<typename Ctx::Elem>(std::move(v));
}

template <class Ctx>
Polynomial<typename Ctx::Elem> monic_mod(const Polynomial<typename Ctx::Elem>& f, const Ctx& ctx) {
    if (f.is_zero()) return f;
    auto inv = ctx.inv(f.leading());
    std::vector<typename Ctx::Elem> v(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) v[i] = ctx.mul(f.coeff(i), inv);
    return Polynomial<typename Ctx::Elem>(std::move(v));
}

template <class Ctx>
std::pair<Polynomial<typename Ctx::Elem>, Polynomial<typename Ctx::Elem>> divrem_mod(
    const Polynomial<typename Ctx::Elem>& f, const Polynomial<typename Ctx::Elem>& g, const Ctx& ctx) {
    using P = Polynomial<typename Ctx::Elem>;
    if (g.is_zero()) throw std::invalid_argument("divrem_mod: zero divisor");
    P q, r = f;
    auto lg_inv = ctx.inv(g.leading());
    while (!r.is_zero() && r.degree() >= g.degree()) {
        auto c = ctx.mul(r.leading(), lg_inv);
        P t = P::monomial(r.degree() - g.degree(), c);
        q += t;
        r = reduce_poly(r - t * g, ctx);
    }
    return {q, r};
}

template <class Ctx>
Polynomial<typename Ctx::Elem> gcd_mod(Polynomial<typename Ctx::Elem> a,
                                       Polynomial<typename Ctx::Elem> b, const Ctx& ctx) {
    a = reduce_poly(a, ctx);
    b = reduce_poly(b, ctx);
    while (!b.is_zero()) {
        auto r = divrem_mod(a, b, ctx).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic_mod(a, ctx);
}

template <class Ctx>
Polynomial<typename Ctx::Elem> derivative_mod(const Polynomial<typename Ctx::Elem>& f, const Ctx& ctx) {
    return reduce_poly(derivative(f), ctx);
}

// f nonzero mod the place; true iff the reduction is squarefree.
template <class Ctx>
bool is_squarefree_mod(const Polynomial<typename Ctx::Elem>& f, const Ctx& ctx) {
    auto fr = reduce_poly(f, ctx);
    if (fr.is_zero()) throw std::invalid_argument("is_squarefree_mod: zero reduction");
    if (fr.degree() == 0) return true;
    auto g = gcd_mod(fr, derivative_mod(fr, ctx), ctx);
    return g.degree() == 0;
}

// base^e mod (f, ctx)
template <class Ctx>
Polynomial<typename Ctx::Elem> powmod_poly(Polynomial<typename Ctx::Elem> base, Int e,
                                           const Polynomial<typename Ctx::Elem>& f, const Ctx& ctx) {
    using P = Polynomial<typename Ctx::Elem>;
    P r(typename Ctx::Elem(1));
    base = divrem_mod(base, f, ctx).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = divrem_mod(reduce_poly(r * base, ctx), f, ctx).second;
        base = divrem_mod(reduce_poly(base * base, ctx), f, ctx).second;
        e >>= 1;
    }
    return r;
}

// Irreducibility of f over F_p (p prime, p not dividing lc f):
// x^(p^n) = x mod f and gcd(x^(p^(n/l)) - x, f) = 1 for every prime l | n.
inline bool is_irreducible_mod_p(const PolyZ& f, const Int& p) {
    FpContext ctx{p};
    auto fr = monic_mod(reduce_poly(f, ctx), ctx);
    int n = fr.degree();
    if (n != f.degree() || n < 1) return false;
    if (n == 1) return true;
    if (!is_squarefree_mod(fr, ctx)) return false;
    auto x = PolyZ::variable();
    Int pn;
    mpz_pow_ui(pn.get_mpz_t(), p.get_mpz_t(), n);
    if (!(divrem_mod(powmod_poly(x, pn, fr, ctx) - x, fr, ctx).second.is_zero())) return false;
    for (int l = 2; l <= n; ++l) {
        if (n % l != 0 || !is_prime(Int(l)).prime) continue;
        Int pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), n / l);
        auto g = gcd_mod(powmod_poly(x, pk, fr, ctx) - x, fr, ctx);
        if (g.degree() != 0) return false;
    }
    return true;
}

}  // namespace zsigram

#endif
