// Sparse polynomials over Q in weighted generators CP_n and q_i, and the
// rank-2 extension MU[t]/(t^2 - r1 t - r0).
#pragma once

#include "fglwb/exact.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fglwb {

enum class GenKind : std::uint8_t { CP = 0, Q = 1 };

struct Generator {
    GenKind kind = GenKind::CP;
    int index = 1;

    static Generator cp(int n);
    static Generator q(int i);

    int weight() const { return index; }
    std::string name() const;

    auto operator<=>(const Generator&) const = default;
};

struct GenPower {
    Generator gen;
    int exp = 1;
    bool operator==(const GenPower&) const = default;
};

/// Product of generator powers, generators strictly increasing.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(Generator g, int exp = 1);
    /// Sorts and merges; drops zero exponents.
    static Monomial from_factors(std::vector<GenPower> factors);

    const std::vector<GenPower>& factors() const { return factors_; }
    int weight() const { return weight_; }
    bool is_one() const { return factors_.empty(); }
    int exponent_of(Generator g) const;
    std::string str() const;  // "CP1^2*CP3", "1" for the unit

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

private:
    std::vector<GenPower> factors_;
    int weight_ = 0;
};

/// Canonical order: by weight, then exponents of earlier generators larger first
/// (CP1^3 < CP1*CP2 < CP3).
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class GradedPoly {
public:
    using Terms = std::map<Monomial, Rat, MonomialLess>;

    GradedPoly() = default;
    GradedPoly(const Rat& c);  // NOLINT: scalars embed implicitly
    GradedPoly(int c) : GradedPoly(Rat(c)) {}  // NOLINT
    GradedPoly(Generator g) : GradedPoly(Monomial(g)) {}  // NOLINT
    explicit GradedPoly(const Monomial& m, const Rat& c = 1);

    static GradedPoly cp(int n) { return GradedPoly(Generator::cp(n)); }
    static GradedPoly q(int i) { return GradedPoly(Generator::q(i)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rat coeff_of(const Monomial& m) const;
    /// Value if the polynomial is a constant.
    std::optional<Rat> scalar() const;

    bool is_homogeneous() const;
    /// Common weight of all terms; nullopt for zero or mixed weights.
    std::optional<int> weight() const;
    int max_weight() const;  // -1 for zero
    std::vector<Generator> generators() const;

    void add_term(const Monomial& m, const Rat& c);

    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);
    GradedPoly& operator*=(const Rat& c);
    GradedPoly operator-() const;

    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
    friend GradedPoly operator*(GradedPoly a, const Rat& c) { return a *= c; }
    friend GradedPoly operator*(const Rat& c, GradedPoly a) { return a *= c; }
    bool operator==(const GradedPoly& o) const { return terms_ == o.terms_; }

    /// Drops every term of weight above cap.
    GradedPoly truncated(int cap) const;
    GradedPoly pow(int e) const;

    /// "num/den*CP1^a*CP2^b + ..." ordered canonically; "0" for zero.
    std::string canonical() const;
    /// Human form: "CP1^2 - CP2", "-3/2*CP3 + 4*CP1*CP2".
    std::string pretty() const;

private:
    Terms terms_;
};

/// Product with every term of weight above cap discarded.
GradedPoly mul_truncated(const GradedPoly& a, const GradedPoly& b, int cap);

using GeneratorImages = std::map<Generator, GradedPoly>;

/// Ring map defined by generator images. Images must be homogeneous of their
/// generator's weight (zero allowed). Terms above weight_cap are dropped.
GradedPoly substitute(const GradedPoly& p, const GeneratorImages& images, int weight_cap);

/// Parameters of tau^2 = r1*tau + r0.
struct QuadParams {
    GradedPoly r1;
    GradedPoly r0;
    bool operator==(const QuadParams&) const = default;
};

/// even + tau*odd. Elements built without parameters are pure scalars of
/// MU and combine with anything; products of two tau-carrying elements
/// need matching parameters.
class QuadElem {
public:
    QuadElem() = default;
    QuadElem(const GradedPoly& even) : even_(even) {}  // NOLINT
    QuadElem(const Rat& c) : even_(c) {}  // NOLINT
    QuadElem(int c) : even_(c) {}  // NOLINT
    QuadElem(GradedPoly even, GradedPoly odd, std::shared_ptr<const QuadParams> params);

    static QuadElem tau(std::shared_ptr<const QuadParams> params);

    const GradedPoly& even() const { return even_; }
    const GradedPoly& odd() const { return odd_; }
    const std::shared_ptr<const QuadParams>& params() const { return params_; }

    bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }
    std::optional<Rat> scalar() const;
    /// Homogeneous with weight(odd) = weight(even) - 1 (tau has weight 1).
    bool is_homogeneous_of(int w) const;

    QuadElem& operator+=(const QuadElem& o);
    QuadElem& operator-=(const QuadElem& o);
    QuadElem& operator*=(const Rat& c);
    QuadElem operator-() const;

    friend QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
    friend QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
    friend QuadElem operator*(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator*(QuadElem a, const Rat& c) { return a *= c; }
    friend QuadElem operator*(const Rat& c, QuadElem a) { return a *= c; }
    bool operator==(const QuadElem& o) const { return even_ == o.even_ && odd_ == o.odd_; }

    std::string pretty() const;

private:
    static std::shared_ptr<const QuadParams> merge(const QuadElem& a, const QuadElem& b);

    GradedPoly even_;
    GradedPoly odd_;
    std::shared_ptr<const QuadParams> params_;
};

QuadElem quad_mul(const QuadElem& a, const QuadElem& b);

inline std::optional<Rat> scalar_value(const GradedPoly& p) { return p.scalar(); }
inline std::optional<Rat> scalar_value(const QuadElem& q) { return q.scalar(); }
inline std::optional<Rat> scalar_value(const Rat& r) { return r; }
inline bool is_zero_elem(const GradedPoly& p) { return p.is_zero(); }
inline bool is_zero_elem(const QuadElem& q) { return q.is_zero(); }
inline bool is_zero_elem(const Rat& r) { return r == 0; }

}  // namespace fglwb
