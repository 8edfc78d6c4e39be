#ifndef ZSIGRAM_POLYNOMIAL_HPP
#define ZSIGRAM_POLYNOMIAL_HPP

#include <algorithm>
#include <cassert>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zsigram/integer.hpp"

namespace zsigram {

// Coefficient rings that are fields (division always available).
template <class R>
inline constexpr bool is_field_v = false;
template <>
inline constexpr bool is_field_v<Rat> = true;

// ---------------------------------------------------------------------------
// Dense univariate polynomial, index = degree of term.  Zero polynomial has
// an empty coefficient vector and degree -1.
// ---------------------------------------------------------------------------
template <class R>
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(long v) {
        if (v != 0) c_.push_back(R(v));
    }
    Polynomial(const R& v) {
        if (!(v == R(0))) c_.push_back(v);
    }
    explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(int k, const R& c = R(1)) {
        if (c == R(0)) return {};
        std::vector<R> v(k + 1, R(0));
        v[k] = c;
        return Polynomial(std::move(v));
    }
    static Polynomial variable() { return monomial(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const R& coeff(int i) const {
        static const R zero{};
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[i];
    }
    const R& leading() const {
        assert(!c_.empty());
        return c_.back();
    }
    const R& constant_term() const { return coeff(0); }
    const std::vector<R>& coeffs() const { return c_; }

    void set_coeff(int i, const R& v) {
        if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, R(0));
        c_[i] = v;
        trim();
    }

    // Horner evaluation; S must be constructible from R.
    template <class S>
    S operator()(const S& x) const {
        S acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + S(*it);
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> v(a.c_.size() + b.c_.size() - 1, R(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(Polynomial a, const R& s) {
        if (s == R(0)) return {};
        for (auto& v : a.c_) v = v * s;
        a.trim();
        return a;
    }
    friend Polynomial operator*(const R& s, Polynomial a) { return std::move(a) * s; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  private:
    std::vector<R> c_;
    void trim() {
        while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
    }
};

using PolyZ = Polynomial<Int>;   // Z[x]
using PolyQ = Polynomial<Rat>;   // Q[x], also Q[t]

inline PolyQ poly_gcd(const PolyQ& f, const PolyQ& g);  // primitive-PRS route, defined below

template <class R>
Polynomial<R> derivative(const Polynomial<R>& f) {
    if (f.degree() <= 0) return {};
    std::vector<R> v(f.degree());
    for (int i = 1; i <= f.degree(); ++i) v[i - 1] = f.coeff(i) * R(i);
    return Polynomial<R>(std::move(v));
}

template <class R>
Polynomial<R> poly_pow(const Polynomial<R>& f, unsigned e) {
    Polynomial<R> r(1), b = f;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

// f(x + a)
template <class R>
Polynomial<R> taylor_shift(const Polynomial<R>& f, const R& a) {
    Polynomial<R> r, xa = Polynomial<R>::variable() + Polynomial<R>(a);
    for (int i = f.degree(); i >= 0; --i) r = r * xa + Polynomial<R>(f.coeff(i));
    return r;
}

// ---------------------------------------------------------------------------
// Field coefficient operations.
// ---------------------------------------------------------------------------

template <class R>
std::pair<Polynomial<R>, Polynomial<R>> poly_divrem(const Polynomial<R>& f, const Polynomial<R>& g) {
    static_assert(is_field_v<R>);
    if (g.is_zero()) throw std::invalid_argument("poly_divrem: division by zero polynomial");
    Polynomial<R> q, r = f;
    const R& lg = g.leading();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        int k = r.degree() - g.degree();
        R c = r.leading() / lg;
        Polynomial<R> t = Polynomial<R>::monomial(k, c);
        q += t;
        r -= t * g;
    }
    return {q, r};
}

template <class R>
Polynomial<R> poly_div(const Polynomial<R>& f, const Polynomial<R>& g) {
    return poly_divrem(f, g).first;
}
template <class R>
Polynomial<R> poly_rem(const Polynomial<R>& f, const Polynomial<R>& g) {
    return poly_divrem(f, g).second;
}

template <class R>
bool poly_divides(const Polynomial<R>& g, const Polynomial<R>& f) {
    if (g.is_zero()) return f.is_zero();
    return poly_rem(f, g).is_zero();
}

template <class R>
Polynomial<R> monic(const Polynomial<R>& f) {
    static_assert(is_field_v<R>);
    if (f.is_zero()) return f;
    R inv = R(1) / f.leading();
    return f * inv;
}

// Monic gcd over a field; gcd(f, 0) = monic(f).
template <class R>
Polynomial<R> poly_gcd(const Polynomial<R>& f, const Polynomial<R>& g) {
    static_assert(is_field_v<R>);
    Polynomial<R> a = f, b = g;
    while (!b.is_zero()) {
        Polynomial<R> r = poly_rem(a, b);
        a = std::move(b);
        b = monic(r);  // renormalize to tame coefficient growth
    }
    return monic(a);
}

// Extended gcd: returns (d, u, v) with d = u f + v g, d monic.
template <class R>
std::tuple<Polynomial<R>, Polynomial<R>, Polynomial<R>> poly_extended_gcd(const Polynomial<R>& f,
                                                                          const Polynomial<R>& g) {
    static_assert(is_field_v<R>);
    Polynomial<R> r0 = f, r1 = g, u0(1), u1, v0, v1(1);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial<R> u2 = u0 - q * u1, v2 = v0 - q * v1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    R inv = R(1) / r0.leading();
    return {r0 * inv, u0 * inv, v0 * inv};
}

template <class R>
Polynomial<R> poly_lcm(const Polynomial<R>& f, const Polynomial<R>& g) {
    if (f.is_zero() || g.is_zero()) return {};
    return monic(poly_div(f * g, poly_gcd(f, g)));
}

// ---------------------------------------------------------------------------
// Squarefree decomposition (Yun), characteristic 0.  Returns monic squarefree
// parts with strictly increasing multiplicities; the leading coefficient is
// dropped.
// ---------------------------------------------------------------------------
template <class R>
std::vector<std::pair<Polynomial<R>, int>> squarefree_decomposition(const Polynomial<R>& f) {
    static_assert(is_field_v<R>);
    if (f.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<Polynomial<R>, int>> out;
    Polynomial<R> fm = monic(f);
    if (fm.degree() == 0) return out;
    Polynomial<R> fp = derivative(fm);
    Polynomial<R> a = poly_gcd(fm, fp);
    Polynomial<R> b = poly_div(fm, a);
    Polynomial<R> c = poly_div(fp, a);
    Polynomial<R> d = c - derivative(b);
    int i = 1;
    while (b.degree() > 0) {
        Polynomial<R> g = poly_gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = poly_div(b, g);
        c = poly_div(d, g);
        d = c - derivative(b);
        ++i;
    }
    return out;
}

// Product of the distinct monic irreducible factors.
template <class R>
Polynomial<R> squarefree_part(const Polynomial<R>& f) {
    Polynomial<R> r(1);
    for (const auto& [g, m] : squarefree_decomposition(f)) r = r * g;
    return r;
}

// ---------------------------------------------------------------------------
// Integral-domain helpers for Z and Q[t] coefficients (content, primitive
// part, exact division).
// ---------------------------------------------------------------------------

inline Int ring_gcd(const Int& a, const Int& b) { return gcd(a, b); }
inline PolyQ ring_gcd(const PolyQ& a, const PolyQ& b) { return poly_gcd(a, b); }

inline Int ring_divexact(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline PolyQ ring_divexact(const PolyQ& a, const PolyQ& b) {
    auto [q, r] = poly_divrem(a, b);
    assert(r.is_zero());
    return q;
}
inline Rat ring_divexact(const Rat& a, const Rat& b) { return a / b; }

template <class R>
Polynomial<R> poly_divexact(const Polynomial<R>& f, const R& c) {
    std::vector<R> v(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) v[i] = ring_divexact(f.coeff(i), c);
    return Polynomial<R>(std::move(v));
}

// content: nonnegative integer gcd of the coefficients (Z), or the monic
// polynomial gcd (Q[t] coefficients); 0 for the zero polynomial.
inline Int content(const PolyZ& f) {
    Int c = 0;
    for (int i = 0; i <= f.degree(); ++i) c = gcd(c, f.coeff(i));
    return c;
}
inline PolyQ content(const Polynomial<PolyQ>& f) {
    PolyQ c;
    for (int i = 0; i <= f.degree(); ++i) c = poly_gcd(c, f.coeff(i));
    return c;
}

template <class R>
Polynomial<R> primitive_part(const Polynomial<R>& f) {
    if (f.is_zero()) return f;
    return poly_divexact(f, content(f));
}

// Exact polynomial division over an integral domain (asserts divisibility).
template <class R>
Polynomial<R> poly_exact_div(const Polynomial<R>& f, const Polynomial<R>& g) {
    if (g.is_zero()) throw std::invalid_argument("poly_exact_div: zero divisor");
    Polynomial<R> q, r = f;
    while (!r.is_zero()) {
        int k = r.degree() - g.degree();
        assert(k >= 0);
        R c = ring_divexact(r.leading(), g.leading());
        Polynomial<R> t = Polynomial<R>::monomial(k, c);
        q += t;
        r -= t * g;
    }
    return q;
}

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + r.
template <class R>
Polynomial<R> pseudo_rem(const Polynomial<R>& f, const Polynomial<R>& g) {
    assert(!g.is_zero());
    Polynomial<R> r = f;
    const R& lg = g.leading();
    int e = f.degree() - g.degree() + 1;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        Polynomial<R> t = Polynomial<R>::monomial(r.degree() - g.degree(), r.leading());
        r = r * lg - t * g;
        --e;
    }
    R q(1);
    for (int i = 0; i < e; ++i) q = q * lg;
    return r * q;
}

namespace detail {
template <class R>
R ring_pow(const R& b, unsigned e) {
    R r(1);
    for (unsigned i = 0; i < e; ++i) r = r * b;
    return r;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Resultants.
//
// Convention: Res(f, g) = lc(f)^{deg g} * prod_{f(r)=0} g(r), so that
// Res(x-2, x-3) = -1 and disc(x^2+bx+c) = b^2-4c.
//
// resultant(): fraction-free subresultant PRS (Cohen, Alg. 3.3.7); the
// Sylvester/Bareiss determinant below serves as an independent check.
// ---------------------------------------------------------------------------
template <class R>
R resultant(const Polynomial<R>& f, const Polynomial<R>& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    if (f.degree() == 0) return detail::ring_pow(f.leading(), g.degree());
    if (g.degree() == 0) return detail::ring_pow(g.leading(), f.degree());

    Polynomial<R> A = f, B = g;
    int sign = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
        std::swap(A, B);
    }
    R g1(1), h(1);
    while (true) {
        int dA = A.degree(), dB = B.degree();
        int delta = dA - dB;
        if ((dA & 1) && (dB & 1)) sign = -sign;
        Polynomial<R> Rm = pseudo_rem(A, B);
        if (Rm.is_zero()) return R(0);  // positive-degree common factor
        A = B;
        R divisor = g1 * detail::ring_pow(h, delta);
        B = poly_divexact(Rm, divisor);
        g1 = A.leading();
        if (delta >= 1) {
            // h = g1^delta / h^(delta-1), exact in the domain
            R num = detail::ring_pow(g1, delta);
            h = (delta == 1) ? num : ring_divexact(num, detail::ring_pow(h, delta - 1));
        }
        if (B.degree() == 0) break;
    }
    // B is a nonzero constant; Res = sign * B^{deg A} / h^{deg A - 1}
    int dA = A.degree();
    R num = detail::ring_pow(B.leading(), dA);
    R res = (dA >= 1) ? ring_divexact(num, detail::ring_pow(h, dA - 1)) : num;
    return sign < 0 ? -res : res;
}

// Fraction-free Bareiss determinant; entries consumed.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return R(1);
    R prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == R(0)) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!(m[i][k] == R(0))) {
                    piv = i;
                    break;
                }
            if (piv < 0) return R(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                R t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = ring_divexact(t, prev);
            }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Sylvester-matrix resultant (independent of the PRS path).
template <class R>
R sylvester_resultant(const Polynomial<R>& f, const Polynomial<R>& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    int m = f.degree(), n = g.degree();
    if (m == 0) return detail::ring_pow(f.leading(), n);
    if (n == 0) return detail::ring_pow(g.leading(), m);
    std::vector<std::vector<R>> s(m + n, std::vector<R>(m + n, R(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = g.coeff(n - j);
    return bareiss_determinant(std::move(s));
}

// Resultant of the degree-d homogeneous pair determined by (p, q); p and q are
// padded with zero coefficients up to degree d before building the Sylvester
// matrix, so degree drops at x = infinity are accounted for.
template <class R>
R form_resultant(const Polynomial<R>& p, const Polynomial<R>& q, int d) {
    assert(p.degree() <= d && q.degree() <= d && d >= 1);
    std::vector<std::vector<R>> s(2 * d, std::vector<R>(2 * d, R(0)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j <= d; ++j) s[i][i + j] = p.coeff(d - j);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j <= d; ++j) s[d + i][i + j] = q.coeff(d - j);
    return bareiss_determinant(std::move(s));
}

// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f)
template <class R>
R discriminant(const Polynomial<R>& f) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("discriminant: constant polynomial");
    R res = resultant(f, derivative(f));
    R q = ring_divexact(res, f.leading());
    return ((static_cast<long>(d) * (d - 1) / 2) % 2) ? -q : q;
}

// ---------------------------------------------------------------------------
// Denominator clearing Q[x] -> Z[x]: returns primitive F and s in Q with
// f = s * F.
// ---------------------------------------------------------------------------
inline std::pair<PolyZ, Rat> clear_denominators(const PolyQ& f) {
    if (f.is_zero()) return {PolyZ{}, Rat(1)};
    Int l = 1;
    for (int i = 0; i <= f.degree(); ++i) l = lcm(l, f.coeff(i).get_den());
    std::vector<Int> v(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        Rat c = f.coeff(i) * l;
        v[i] = c.get_num();
    }
    PolyZ F{std::move(v)};
    Int ct = content(F);
    F = poly_divexact(F, ct);
    Rat s(ct, l);
    s.canonicalize();
    return {F, s};
}

inline PolyQ to_rational(const PolyZ& f) {
    std::vector<Rat> v(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) v[i] = Rat(f.coeff(i));
    return PolyQ(std::move(v));
}

// Resultant over Q via the primitive integer route.
inline Rat resultant_q(const PolyQ& f, const PolyQ& g) {
    auto [F, sf] = clear_denominators(f);
    auto [G, sg] = clear_denominators(g);
    Rat r(resultant(F, G));
    Rat scale(1);
    for (int i = 0; i < g.degree(); ++i) scale *= sf;
    for (int i = 0; i < f.degree(); ++i) scale *= sg;
    return r * scale;
}

inline Rat discriminant_q(const PolyQ& f) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("discriminant: constant polynomial");
    Rat res = resultant_q(f, derivative(f));
    Rat q = res / f.leading();
    return ((static_cast<long>(d) * (d - 1) / 2) % 2) ? -q : q;
}

// gcd over Q via primitive PRS on the integer forms (controls blowup).
inline PolyQ poly_gcd(const PolyQ& f, const PolyQ& g) {
    if (f.is_zero()) return g.is_zero() ? PolyQ{} : monic(g);
    if (g.is_zero()) return monic(f);
    auto [A0, sa] = clear_denominators(f);
    auto [B0, sb] = clear_denominators(g);
    PolyZ A = A0, B = B0;
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
        PolyZ r = primitive_part(pseudo_rem(A, B));
        A = std::move(B);
        B = std::move(r);
    }
    return monic(to_rational(A));
}

// Exact square root of a monic even-degree polynomial, if it exists.
template <class R>
std::optional<Polynomial<R>> poly_sqrt_monic(const Polynomial<R>& m) {
    static_assert(is_field_v<R>);
    int dm = m.degree();
    if (dm < 0 || (dm & 1) || !(m.leading() == R(1))) return std::nullopt;
    int k = dm / 2;
    std::vector<R> s(k + 1, R(0));
    s[k] = R(1);
    for (int i = k - 1; i >= 0; --i) {
        R acc = m.coeff(k + i);
        // sum over a+b = k+i with i < a,b < k, counting ordered pairs
        R cross{};
        for (int a = i + 1; a <= k - 1; ++a) {
            int b = k + i - a;
            if (b <= i || b >= k) continue;
            cross = cross + s[a] * s[b];
        }
        s[i] = (acc - cross) / (R(1) + R(1));
    }
    Polynomial<R> root{std::move(s)};
    if (root * root == m) return root;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rational roots of an integer polynomial by divisor enumeration on the
// primitive form; completeness depends on the factoring budget.
// ---------------------------------------------------------------------------

struct RationalRoots {
    std::vector<std::pair<Rat, int>> roots;  // (root, multiplicity)
    PolyZ residual;                          // primitive cofactor without rational roots
    bool complete = true;                    // false when divisor enumeration was cut short
};

// All positive divisors when the factorization is complete and the count is
// manageable; nullopt otherwise.
inline std::optional<std::vector<Int>> all_divisors(const IntFactorization& fz, size_t cap = 1 << 16) {
    if (!fz.complete()) return std::nullopt;
    std::vector<Int> divs{1};
    for (const auto& f : fz.factors) {
        size_t base = divs.size();
        if (base * (f.exponent + 1) > cap) return std::nullopt;
        Int pe = 1;
        for (unsigned e = 1; e <= f.exponent; ++e) {
            pe *= f.prime;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
        }
    }
    return divs;
}

inline RationalRoots rational_roots(const PolyZ& f_in, const FactorBudget& budget = {}) {
    if (f_in.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    RationalRoots out;
    PolyZ f = primitive_part(f_in);
    // strip powers of x
    int e0 = 0;
    while (f.coeff(0) == 0 && f.degree() > 0) {
        std::vector<Int> v(f.degree());
        for (int i = 1; i <= f.degree(); ++i) v[i - 1] = f.coeff(i);
        f = PolyZ(std::move(v));
        ++e0;
    }
    if (e0 > 0) out.roots.emplace_back(Rat(0), e0);
    if (f.degree() == 0) {
        out.residual = PolyZ(1);
        return out;
    }

    auto dnum = all_divisors(int_factor(abs(f.constant_term()), budget));
    auto dden = all_divisors(int_factor(abs(f.leading()), budget));
    out.complete = dnum.has_value() && dden.has_value();

    std::vector<Rat> candidates;
    if (dnum && dden) {
        for (const Int& a : *dnum)
            for (const Int& b : *dden) {
                Rat r(a, b);
                r.canonicalize();
                candidates.push_back(r);
                candidates.push_back(-r);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }

    PolyQ g = to_rational(f);
    for (const Rat& r : candidates) {
        if (g.degree() == 0) break;
        int mult = 0;
        while (g.degree() > 0) {
            PolyQ lin{std::vector<Rat>{-r, Rat(1)}};
            auto [q, rem] = poly_divrem(g, lin);
            if (!rem.is_zero()) break;
            g = q;
            ++mult;
        }
        if (mult > 0) out.roots.emplace_back(r, mult);
    }
    out.residual = clear_denominators(g).first;
    if (out.residual.leading() < 0) out.residual = -out.residual;
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// ---------------------------------------------------------------------------
// Printing.
// ---------------------------------------------------------------------------

inline std::string coeff_to_string(const Int& c) { return c.get_str(); }
inline std::string coeff_to_string(const Rat& c) { return c.get_str(); }

template <class R>
std::string poly_to_string(const Polynomial<R>& f, const std::string& var = "x") {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const R& c = f.coeff(i);
        if (c == R(0)) continue;
        std::string cs = coeff_to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) cs = cs.substr(1);
        bool needs_coeff = (i == 0) || cs != "1";
        bool composite = cs.find_first_of("+-/ ") != std::string::npos;
        if (needs_coeff) {
            if (composite && i > 0)
                os << "(" << cs << ")";
            else
                os << cs;
        }
        if (i > 0) {
            if (needs_coeff) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

template <class R>
std::string coeff_to_string(const Polynomial<R>& c) {
    std::string s = poly_to_string(c, "t");
    return s;
}

}  // namespace zsigram

#endif
