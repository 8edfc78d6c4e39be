#ifndef ZSIGRAM_QT_HPP
#define ZSIGRAM_QT_HPP

#include <string>
#include <utility>

#include "zsigram/polynomial.hpp"

namespace zsigram {

// ---------------------------------------------------------------------------
// Element of Q(t): reduced fraction of polynomials in t, denominator monic,
// zero stored as 0/1.
// ---------------------------------------------------------------------------
class Qt {
  public:
    Qt() : den_(1) {}
    Qt(long v) : num_(v), den_(1) {}
    Qt(const Rat& v) : num_(v), den_(1) {}
    Qt(const PolyQ& p) : num_(p), den_(1) {}
    Qt(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::invalid_argument("Qt: zero denominator");
        normalize();
    }

    static Qt t() { return Qt(PolyQ::variable()); }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    friend Qt operator+(const Qt& a, const Qt& b) {
        return Qt(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Qt operator-(const Qt& a, const Qt& b) {
        return Qt(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    Qt operator-() const {
        Qt r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend Qt operator*(const Qt& a, const Qt& b) { return Qt(a.num_ * b.num_, a.den_ * b.den_); }
    friend Qt operator/(const Qt& a, const Qt& b) {
        if (b.is_zero()) throw std::domain_error("Qt: division by zero");
        return Qt(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const Qt& a, const Qt& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Qt& a, const Qt& b) { return !(a == b); }

  private:
    PolyQ num_, den_;
    void normalize() {
        if (num_.is_zero()) {
            den_ = PolyQ(1);
            return;
        }
        PolyQ g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_div(num_, g);
            den_ = poly_div(den_, g);
        }
        Rat lc = den_.leading();
        if (!(lc == Rat(1))) {
            Rat inv = Rat(1) / lc;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
};

template <>
inline constexpr bool is_field_v<Qt> = true;

inline std::string qt_to_string(const Qt& z) {
    std::string n = poly_to_string(z.num(), "t");
    if (z.den() == PolyQ(1)) return n;
    std::string d = poly_to_string(z.den(), "t");
    return "(" + n + ")/(" + d + ")";
}

// Multiplicity of the monic polynomial g in f (g nonconstant, f nonzero).
inline int poly_multiplicity(const PolyQ& f, const PolyQ& g) {
    int m = 0;
    PolyQ h = f;
    while (true) {
        auto [q, r] = poly_divrem(h, g);
        if (!r.is_zero()) return m;
        h = q;
        ++m;
        if (h.is_zero()) return m;  // unreachable for f != 0
    }
}

// ---------------------------------------------------------------------------
// Strict weak orderings used for deterministic sorting/printing.
// ---------------------------------------------------------------------------
inline bool elem_less(const Rat& a, const Rat& b) { return a < b; }

inline bool poly_less(const PolyQ& a, const PolyQ& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}
inline bool poly_less(const PolyZ& a, const PolyZ& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

inline bool elem_less(const Qt& a, const Qt& b) {
    if (a.den() != b.den()) return poly_less(a.den(), b.den());
    return poly_less(a.num(), b.num());
}

inline std::string elem_to_string(const Rat& z) { return z.get_str(); }
inline std::string elem_to_string(const Qt& z) { return qt_to_string(z); }

}  // namespace zsigram

#endif
