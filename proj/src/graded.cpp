#include "fglwb/graded.hpp"

#include <algorithm>
#include <set>

namespace fglwb {

Generator Generator::cp(int n) {
    if (n < 1) throw DomainError("CP generator index must be >= 1");
    return {GenKind::CP, n};
}

Generator Generator::q(int i) {
    if (i < 1 || i > 4) throw DomainError("q generator index must be in 1..4");
    return {GenKind::Q, i};
}

std::string Generator::name() const {
    return (kind == GenKind::CP ? "CP" : "q") + std::to_string(index);
}

Monomial::Monomial(Generator g, int exp) {
    if (exp < 0) throw DomainError("negative exponent");
    if (exp > 0) {
        factors_.push_back({g, exp});
        weight_ = g.weight() * exp;
    }
}

Monomial Monomial::from_factors(std::vector<GenPower> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const GenPower& a, const GenPower& b) { return a.gen < b.gen; });
    Monomial m;
    for (const auto& f : factors) {
        if (f.exp < 0) throw DomainError("negative exponent");
        if (f.exp == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().gen == f.gen)
            m.factors_.back().exp += f.exp;
        else
            m.factors_.push_back(f);
        m.weight_ += f.gen.weight() * f.exp;
    }
    return m;
}

int Monomial::exponent_of(Generator g) const {
    for (const auto& f : factors_)
        if (f.gen == g) return f.exp;
    return 0;
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty()) out += '*';
        out += f.gen.name();
        if (f.exp != 1) out += '^' + std::to_string(f.exp);
    }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->gen < j->gen) {
            out.factors_.push_back(*i++);
        } else if (j->gen < i->gen) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.push_back({i->gen, i->exp + j->exp});
            ++i;
            ++j;
        }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    out.weight_ = a.weight_ + b.weight_;
    return out;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t n = std::min(fa.size(), fb.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (fa[k].gen != fb[k].gen) return fa[k].gen < fb[k].gen;
        if (fa[k].exp != fb[k].exp) return fa[k].exp > fb[k].exp;
    }
    return fa.size() < fb.size();
}

GradedPoly::GradedPoly(const Rat& c) {
    if (c != 0) terms_.emplace(Monomial(), c);
}

GradedPoly::GradedPoly(const Monomial& m, const Rat& c) {
    if (c != 0) terms_.emplace(m, c);
}

Rat GradedPoly::coeff_of(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<Rat> GradedPoly::scalar() const {
    if (terms_.empty()) return Rat(0);
    if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
    return std::nullopt;
}

bool GradedPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.weight() == terms_.rbegin()->first.weight();
}

std::optional<int> GradedPoly::weight() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.begin()->first.weight();
}

int GradedPoly::max_weight() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.weight();
}

std::vector<Generator> GradedPoly::generators() const {
    std::set<Generator> gens;
    for (const auto& [m, c] : terms_)
        for (const auto& f : m.factors()) gens.insert(f.gen);
    return {gens.begin(), gens.end()};
}

void GradedPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

GradedPoly& GradedPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly out = *this;
    for (auto& [m, v] : out.terms_) v = -v;
    return out;
}

GradedPoly mul_truncated(const GradedPoly& a, const GradedPoly& b, int cap) {
    GradedPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    Rat prod;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (ma.weight() + mb.weight() > cap) break;  // b sorted by weight
            prod = ca * cb;
            out.add_term(ma * mb, prod);
        }
    }
    return out;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    GradedPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    // Scalar factors are common in series code; skip the monomial merge.
    if (auto s = a.scalar()) return b * *s;
    if (auto s = b.scalar()) return a * *s;
    Rat prod;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            prod = ca * cb;
            out.add_term(ma * mb, prod);
        }
    }
    return out;
}

GradedPoly GradedPoly::truncated(int cap) const {
    GradedPoly out;
    for (const auto& [m, c] : terms_) {
        if (m.weight() > cap) break;
        out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
}

GradedPoly GradedPoly::pow(int e) const {
    if (e < 0) throw DomainError("negative power of a polynomial");
    GradedPoly result(1), base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

std::string GradedPoly::canonical() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += rat_to_string(c);
        if (!m.is_one()) out += "*" + m.str();
    }
    return out;
}

std::string GradedPoly::pretty() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            out += rat_to_short_string(mag);
        } else {
            if (mag != 1) out += rat_to_short_string(mag) + "*";
            out += m.str();
        }
    }
    return out;
}

GradedPoly substitute(const GradedPoly& p, const GeneratorImages& images, int weight_cap) {
    for (const auto& [g, img] : images) {
        if (!img.is_zero() && img.weight() != g.weight())
            throw DomainError("image of " + g.name() + " is not homogeneous of weight " +
                              std::to_string(g.weight()));
    }
    // Powers of each image, built lazily.
    std::map<Generator, std::vector<GradedPoly>> powers;
    auto power_of = [&](Generator g, int e) -> const GradedPoly& {
        auto it = images.find(g);
        if (it == images.end()) throw DomainError("no image for generator " + g.name());
        auto& cache = powers[g];
        if (cache.empty()) cache.push_back(GradedPoly(1));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(mul_truncated(cache.back(), it->second, weight_cap));
        return cache[e];
    };

    GradedPoly out;
    for (const auto& [m, c] : p.terms()) {
        if (m.weight() > weight_cap) break;
        GradedPoly term(c);
        for (const auto& f : m.factors()) {
            term = mul_truncated(term, power_of(f.gen, f.exp), weight_cap);
            if (term.is_zero()) break;
        }
        out += term;
    }
    return out;
}

QuadElem::QuadElem(GradedPoly even, GradedPoly odd, std::shared_ptr<const QuadParams> params)
    : even_(std::move(even)), odd_(std::move(odd)), params_(std::move(params)) {
    if (!odd_.is_zero() && !params_) throw DomainError("tau component without ring parameters");
}

QuadElem QuadElem::tau(std::shared_ptr<const QuadParams> params) {
    return QuadElem(GradedPoly(), GradedPoly(1), std::move(params));
}

std::optional<Rat> QuadElem::scalar() const {
    if (!odd_.is_zero()) return std::nullopt;
    return even_.scalar();
}

bool QuadElem::is_homogeneous_of(int w) const {
    if (!even_.is_zero() && even_.weight() != w) return false;
    if (!odd_.is_zero() && odd_.weight() != w - 1) return false;
    return true;
}

std::shared_ptr<const QuadParams> QuadElem::merge(const QuadElem& a, const QuadElem& b) {
    if (!a.params_) return b.params_;
    if (!b.params_) return a.params_;
    if (a.params_ != b.params_ && !(*a.params_ == *b.params_))
        throw DomainError("quadratic extension parameter mismatch");
    return a.params_;
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
    params_ = merge(*this, o);
    even_ += o.even_;
    odd_ += o.odd_;
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
    params_ = merge(*this, o);
    even_ -= o.even_;
    odd_ -= o.odd_;
    return *this;
}

QuadElem& QuadElem::operator*=(const Rat& c) {
    even_ *= c;
    odd_ *= c;
    return *this;
}

QuadElem QuadElem::operator-() const {
    QuadElem out = *this;
    out.even_ = -even_;
    out.odd_ = -odd_;
    return out;
}

QuadElem operator*(const QuadElem& a, const QuadElem& b) {
    auto params = QuadElem::merge(a, b);
    QuadElem out;
    out.params_ = params;
    out.even_ = a.even_ * b.even_;
    out.odd_ = a.even_ * b.odd_ + a.odd_ * b.even_;
    if (!a.odd_.is_zero() && !b.odd_.is_zero()) {
        GradedPoly oo = a.odd_ * b.odd_;
        out.even_ += params->r0 * oo;
        out.odd_ += params->r1 * oo;
    }
    return out;
}

QuadElem quad_mul(const QuadElem& a, const QuadElem& b) {
    if (a.params() && b.params() && a.params() != b.params() && !(*a.params() == *b.params()))
        throw DomainError("quad_mul: parameter mismatch");
    return a * b;
}

std::string QuadElem::pretty() const {
    if (odd_.is_zero()) return even_.pretty();
    return "(" + even_.pretty() + ") + t*(" + odd_.pretty() + ")";
}

}  // namespace fglwb
