// Truncated power series in one and two variables over GradedPoly or QuadElem.
#pragma once

#include "fglwb/graded.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

namespace fglwb {

/// c_0 + c_1 x + ... + c_K x^K, exact modulo x^(K+1).
template <class T>
class Series1 {
public:
    Series1() : c_(1) {}
    explicit Series1(int order) : c_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw DomainError("negative truncation order");
    }
    Series1(int order, std::vector<T> coeffs) : Series1(order) {
        for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = std::move(coeffs[k]);
    }

    /// The series x.
    static Series1 variable(int order) {
        Series1 s(order);
        if (order >= 1) s.c_[1] = T(1);
        return s;
    }
    static Series1 constant(int order, const T& v) {
        Series1 s(order);
        s.c_[0] = v;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const T& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    T& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
    /// Coefficient, zero beyond the truncation order.
    T coeff(int k) const { return k >= 0 && k <= order() ? c_[static_cast<std::size_t>(k)] : T(0); }
    const std::vector<T>& coeffs() const { return c_; }

    Series1 truncated(int order) const {
        Series1 out(order);
        for (int k = 0; k <= std::min(order, this->order()); ++k) out[k] = (*this)[k];
        return out;
    }

    Series1& operator+=(const Series1& o) {
        if (o.order() < order()) *this = truncated(o.order());
        for (int k = 0; k <= order(); ++k) c_[k] += o[k];
        return *this;
    }
    Series1& operator-=(const Series1& o) {
        if (o.order() < order()) *this = truncated(o.order());
        for (int k = 0; k <= order(); ++k) c_[k] -= o[k];
        return *this;
    }
    Series1& operator*=(const Rat& r) {
        for (auto& v : c_) v *= r;
        return *this;
    }
    Series1 operator-() const {
        Series1 out(*this);
        for (auto& v : out.c_) v = -v;
        return out;
    }
    friend Series1 operator+(Series1 a, const Series1& b) { return a += b; }
    friend Series1 operator-(Series1 a, const Series1& b) { return a -= b; }
    friend Series1 operator*(Series1 a, const Rat& r) { return a *= r; }

    friend Series1 operator*(const Series1& a, const Series1& b) {
        int K = std::min(a.order(), b.order());
        Series1 out(K);
        for (int i = 0; i <= K; ++i) {
            if (is_zero_elem(a[i])) continue;
            for (int j = 0; i + j <= K; ++j) {
                if (is_zero_elem(b[j])) continue;
                out[i + j] += a[i] * b[j];
            }
        }
        return out;
    }
    /// Multiply every coefficient by a ring element.
    Series1 scaled(const T& v) const {
        Series1 out(order());
        for (int k = 0; k <= order(); ++k)
            if (!is_zero_elem(c_[k])) out[k] = v * c_[k];
        return out;
    }

    bool operator==(const Series1& o) const { return c_ == o.c_; }
    /// Index of the first nonzero coefficient, or -1.
    int first_nonzero() const {
        for (int k = 0; k <= order(); ++k)
            if (!is_zero_elem(c_[k])) return k;
        return -1;
    }

private:
    std::vector<T> c_;
};

using PolySeries = Series1<GradedPoly>;
using QuadSeries = Series1<QuadElem>;

template <class T>
Series1<T> series_mul(const Series1<T>& a, const Series1<T>& b) {
    return a * b;
}

/// a(b(x)); b must have zero constant term.
template <class T>
Series1<T> series_compose(const Series1<T>& a, const Series1<T>& b) {
    if (!is_zero_elem(b[0])) throw DomainError("series_compose: inner series has nonzero constant term");
    int K = std::min(a.order(), b.order());
    // Horner: a_K, then r*b + a_k. Truncation at K keeps it exact.
    Series1<T> r = Series1<T>::constant(K, a.coeff(K));
    for (int k = K - 1; k >= 0; --k) {
        r = r * b.truncated(K);
        r[0] += a[k];
    }
    return r;
}

/// 1/s; the constant term must be a nonzero rational.
template <class T>
Series1<T> series_reciprocal(const Series1<T>& s) {
    auto c0 = scalar_value(s[0]);
    if (!c0 || *c0 == 0) throw DomainError("series_reciprocal: constant term is not a unit");
    Rat inv = 1 / *c0;
    Series1<T> r(s.order());
    r[0] = T(inv);
    for (int n = 1; n <= s.order(); ++n) {
        T acc(0);
        for (int k = 1; k <= n; ++k)
            if (!is_zero_elem(s[k])) acc += s[k] * r[n - k];
        r[n] = acc * (-inv);
    }
    return r;
}

/// Compositional inverse of s = u x + ...; u must be a nonzero rational.
/// Lagrange inversion: [x^n] g = (1/n) [x^(n-1)] (x/s)^n.
template <class T>
Series1<T> series_revert(const Series1<T>& s) {
    int K = s.order();
    if (K < 1 || !is_zero_elem(s[0])) throw DomainError("series_revert: needs s(0) = 0");
    auto u = scalar_value(s[1]);
    if (!u || *u == 0) throw DomainError("series_revert: linear coefficient is not a unit");
    // s/x, truncated to order K-1.
    Series1<T> quot(K - 1);
    for (int k = 0; k <= K - 1; ++k) quot[k] = s[k + 1];
    Series1<T> h = series_reciprocal(quot);
    Series1<T> g(K);
    Series1<T> hp = h;
    for (int n = 1; n <= K; ++n) {
        if (n > 1) hp = hp * h;
        g[n] = hp[n - 1] * Rat(1, n);
    }
    return g;
}

/// s^e for s with constant term 1 (Miller's recurrence).
template <class T>
Series1<T> series_binomial_pow(const Series1<T>& s, const Rat& e) {
    auto c0 = scalar_value(s[0]);
    if (!c0 || *c0 != 1) throw DomainError("series_binomial_pow: constant term must be 1");
    int K = s.order();
    Series1<T> y(K);
    y[0] = T(1);
    for (int n = 1; n <= K; ++n) {
        T acc(0);
        for (int k = 1; k <= n; ++k) {
            if (is_zero_elem(s[k])) continue;
            Rat w = (e + 1) * k - n;
            if (w == 0) continue;
            acc += (s[k] * y[n - k]) * w;
        }
        y[n] = acc * Rat(1, n);
    }
    return y;
}

template <class T>
Series1<T> series_derive(const Series1<T>& s) {
    int K = std::max(s.order() - 1, 0);
    Series1<T> out(K);
    for (int k = 1; k <= s.order(); ++k) out[k - 1] = s[k] * Rat(k);
    return out;
}

template <class T>
Series1<T> series_integrate(const Series1<T>& s) {
    Series1<T> out(s.order() + 1);
    for (int k = 0; k <= s.order(); ++k) out[k + 1] = s[k] * Rat(1, k + 1);
    return out;
}

/// Apply a coefficient map to every coefficient.
template <class U, class T, class Fn>
Series1<U> series_map(const Series1<T>& s, Fn&& fn) {
    Series1<U> out(s.order());
    for (int k = 0; k <= s.order(); ++k) out[k] = fn(s[k]);
    return out;
}

/// Log-type homogeneity: c_0 = 0 and weight(c_k) = k - 1.
inline bool is_log_homogeneous(const PolySeries& s) {
    if (!s[0].is_zero()) return false;
    for (int k = 1; k <= s.order(); ++k)
        if (!s[k].is_zero() && s[k].weight() != k - 1) return false;
    return true;
}

/// Omega-type homogeneity: c_0 = 1 and weight(c_k) = k.
inline bool is_omega_homogeneous(const PolySeries& s) {
    if (s[0] != GradedPoly(1)) return false;
    for (int k = 1; k <= s.order(); ++k)
        if (!s[k].is_zero() && s[k].weight() != k) return false;
    return true;
}

/// sum c_ij x^i y^j over i + j <= D.
template <class T>
class Series2 {
public:
    Series2() : Series2(0) {}
    explicit Series2(int degree) : D_(degree) {
        if (degree < 0) throw DomainError("negative truncation degree");
        c_.resize(static_cast<std::size_t>((degree + 1) * (degree + 2) / 2));
    }

    int degree() const { return D_; }
    const T& operator()(int i, int j) const { return c_[index(i, j)]; }
    T& operator()(int i, int j) { return c_[index(i, j)]; }
    T coeff(int i, int j) const {
        if (i < 0 || j < 0 || i + j > D_) return T(0);
        return c_[index(i, j)];
    }

    /// s(x) placed in the x (which = 0) or y (which = 1) slot.
    static Series2 from_univariate(const Series1<T>& s, int which, int degree) {
        Series2 out(degree);
        for (int k = 0; k <= std::min(degree, s.order()); ++k) {
            if (which == 0) out(k, 0) = s[k];
            else out(0, k) = s[k];
        }
        return out;
    }

    Series2& operator+=(const Series2& o) {
        assert(o.D_ >= D_);
        for (int i = 0; i <= D_; ++i)
            for (int j = 0; i + j <= D_; ++j) (*this)(i, j) += o(i, j);
        return *this;
    }
    Series2& operator-=(const Series2& o) {
        assert(o.D_ >= D_);
        for (int i = 0; i <= D_; ++i)
            for (int j = 0; i + j <= D_; ++j) (*this)(i, j) -= o(i, j);
        return *this;
    }
    friend Series2 operator+(Series2 a, const Series2& b) { return a += b; }
    friend Series2 operator-(Series2 a, const Series2& b) { return a -= b; }

    friend Series2 operator*(const Series2& a, const Series2& b) {
        int D = std::min(a.D_, b.D_);
        Series2 out(D);
        for (int i1 = 0; i1 <= D; ++i1)
            for (int j1 = 0; i1 + j1 <= D; ++j1) {
                const T& x = a(i1, j1);
                if (is_zero_elem(x)) continue;
                for (int i2 = 0; i1 + j1 + i2 <= D; ++i2)
                    for (int j2 = 0; i1 + j1 + i2 + j2 <= D; ++j2) {
                        const T& y = b(i2, j2);
                        if (is_zero_elem(y)) continue;
                        out(i1 + i2, j1 + j2) += x * y;
                    }
            }
        return out;
    }

    Series2 transposed() const {
        Series2 out(D_);
        for (int i = 0; i <= D_; ++i)
            for (int j = 0; i + j <= D_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    bool operator==(const Series2& o) const { return D_ == o.D_ && c_ == o.c_; }

private:
    std::size_t index(int i, int j) const {
        assert(i >= 0 && j >= 0 && i + j <= D_);
        int d = i + j;
        return static_cast<std::size_t>(d * (d + 1) / 2 + j);
    }

    int D_;
    std::vector<T> c_;
};

using PolySeries2 = Series2<GradedPoly>;
using QuadSeries2 = Series2<QuadElem>;

/// g(S(x, y)); S must have zero constant term.
template <class T>
Series2<T> compose_outer(const Series1<T>& g, const Series2<T>& S) {
    if (!is_zero_elem(S(0, 0))) throw DomainError("compose_outer: inner series has nonzero constant term");
    int D = std::min(S.degree(), g.order());
    Series2<T> out(D);
    Series2<T> power(D);
    power(0, 0) = T(1);
    for (int k = 0; k <= D; ++k) {
        if (k > 0) power = power * S;
        if (is_zero_elem(g[k])) continue;
        for (int i = 0; i <= D; ++i)
            for (int j = 0; i + j <= D; ++j)
                if (!is_zero_elem(power(i, j))) out(i, j) += g[k] * power(i, j);
    }
    return out;
}

/// F(a(x), b(y)) by two univariate substitutions. a and b need zero constant term.
template <class T>
Series2<T> compose_inner(const Series2<T>& F, const Series1<T>& a, const Series1<T>& b) {
    if (!is_zero_elem(a[0]) || !is_zero_elem(b[0]))
        throw DomainError("compose_inner: substituted series need zero constant term");
    int D = std::min({F.degree(), a.order(), b.order()});
    auto powers = [D](const Series1<T>& s) {
        std::vector<Series1<T>> p;
        p.push_back(Series1<T>::constant(D, T(1)));
        Series1<T> st = s.truncated(D);
        for (int k = 1; k <= D; ++k) p.push_back(p.back() * st);
        return p;
    };
    auto pa = powers(a);
    auto pb = powers(b);
    // Step 1: x -> a(x). G(x, y) = sum_ij F_ij a(x)^i y^j.
    Series2<T> G(D);
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j) {
            const T& f = F(i, j);
            if (is_zero_elem(f)) continue;
            for (int p = i; p + j <= D; ++p)
                if (!is_zero_elem(pa[i][p])) G(p, j) += f * pa[i][p];
        }
    // Step 2: y -> b(y).
    Series2<T> H(D);
    for (int p = 0; p <= D; ++p)
        for (int j = 0; p + j <= D; ++j) {
            const T& g = G(p, j);
            if (is_zero_elem(g)) continue;
            for (int q = j; p + q <= D; ++q)
                if (!is_zero_elem(pb[j][q])) H(p, q) += g * pb[j][q];
        }
    return H;
}

}  // namespace fglwb
