#include "fglwb/suw.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace fglwb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw DomainError("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(int part) const {
    return std::find(parts_.begin(), parts_.end(), part) != parts_.end();
}

std::string Partition::str() const {
    std::string out;
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) out += "c" + std::to_string(*it);
    return out.empty() ? "1" : out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, n);
    return out;
}

namespace {

/// Dimensions n_1..n_r of the factors of a product of projective spaces.
std::vector<int> factor_dims(const Monomial& m) {
    std::vector<int> dims;
    for (const auto& f : m.factors()) {
        if (f.gen.kind != GenKind::CP) throw DomainError("Chern numbers are defined on CP classes only");
        for (int e = 0; e < f.exp; ++e) dims.push_back(f.gen.index);
    }
    return dims;
}

/// Dense polynomials in x_1..x_r with x_j^(n_j + 1) = 0.
class TruncatedRing {
public:
    explicit TruncatedRing(std::vector<int> dims) : dims_(std::move(dims)) {
        size_ = 1;
        for (int d : dims_) {
            strides_.push_back(size_);
            size_ *= static_cast<std::size_t>(d + 1);
        }
        exps_.resize(size_);
        degree_.resize(size_);
        for (std::size_t idx = 0; idx < size_; ++idx) {
            std::size_t rest = idx;
            exps_[idx].resize(dims_.size());
            for (std::size_t j = 0; j < dims_.size(); ++j) {
                exps_[idx][j] = static_cast<int>(rest % static_cast<std::size_t>(dims_[j] + 1));
                rest /= static_cast<std::size_t>(dims_[j] + 1);
                degree_[idx] += exps_[idx][j];
            }
        }
    }

    std::size_t size() const { return size_; }
    std::size_t top() const { return size_ - 1; }
    const std::vector<int>& dims() const { return dims_; }

    /// Degree-k part of prod_j (1 + x_j)^(n_j + 1), as (index, value) pairs.
    std::vector<std::pair<std::size_t, BigInt>> chern_class(int k) const {
        std::vector<std::pair<std::size_t, BigInt>> out;
        for (std::size_t idx = 0; idx < size_; ++idx) {
            if (degree_[idx] != k) continue;
            BigInt v = 1;
            for (std::size_t j = 0; j < dims_.size(); ++j) v *= binomial(dims_[j] + 1, exps_[idx][j]);
            out.emplace_back(idx, v);
        }
        return out;
    }

    /// acc * c, dropping products that leave the box.
    std::vector<BigInt> multiply(const std::vector<BigInt>& acc,
                                 const std::vector<std::pair<std::size_t, BigInt>>& c) const {
        std::vector<BigInt> out(size_);
        for (std::size_t a = 0; a < size_; ++a) {
            if (acc[a] == 0) continue;
            for (const auto& [b, v] : c) {
                bool inside = true;
                for (std::size_t j = 0; j < dims_.size(); ++j)
                    if (exps_[a][j] + exps_[b][j] > dims_[j]) {
                        inside = false;
                        break;
                    }
                if (inside) out[a + b] += acc[a] * v;  // mixed radix: no carries inside the box
            }
        }
        return out;
    }

    std::size_t monomial_index(std::size_t j, int e) const { return strides_[j] * static_cast<std::size_t>(e); }

private:
    std::vector<int> dims_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 1;
    std::vector<std::vector<int>> exps_;
    std::vector<int> degree_;
};

BigInt monomial_chern_number(const Monomial& m, const Partition& w) {
    static std::mutex mu;
    static std::map<std::pair<std::string, std::vector<int>>, BigInt> cache;
    auto key = std::make_pair(m.str(), w.parts());
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    TruncatedRing ring(factor_dims(m));
    std::vector<BigInt> acc(ring.size());
    acc[0] = 1;
    for (int part : w.parts()) acc = ring.multiply(acc, ring.chern_class(part));
    BigInt value = acc[ring.top()];
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, value);
    return value;
}

int homogeneous_weight(const GradedPoly& M) {
    if (M.is_zero()) return 0;
    auto w = M.weight();
    if (!w) throw DomainError("class is not homogeneous");
    return *w;
}

}  // namespace

Rat chern_number(const GradedPoly& M, const Partition& w) {
    if (M.is_zero()) return 0;
    if (homogeneous_weight(M) != w.total())
        throw DomainError("chern_number: partition of " + std::to_string(w.total()) + " on a class of weight " +
                          std::to_string(homogeneous_weight(M)));
    Rat total = 0;
    for (const auto& [m, c] : M.terms()) total += c * Rat(monomial_chern_number(m, w));
    return total;
}

Rat s_number_manifold(const GradedPoly& M) {
    int n = homogeneous_weight(M);
    Rat total = 0;
    for (const auto& [m, c] : M.terms()) {
        TruncatedRing ring(factor_dims(m));
        // sum over Chern roots: (n_j + 1) copies of x_j each contribute x_j^n.
        std::vector<BigInt> p(ring.size());
        for (std::size_t j = 0; j < ring.dims().size(); ++j)
            if (n <= ring.dims()[j]) p[ring.monomial_index(j, n)] += ring.dims()[j] + 1;
        total += c * Rat(p[ring.top()]);
    }
    return total;
}

Report su_check(const GradedPoly& M, int partition_cap) {
    int n = homogeneous_weight(M);
    if (n > partition_cap)
        throw DomainError("su_check: weight " + std::to_string(n) + " exceeds the partition cap " +
                          std::to_string(partition_cap));
    Report rep;
    rep.title = "Chern numbers with a c1 factor of " + M.pretty();
    for (const auto& w : partitions_of(n)) {
        if (!w.contains(1)) continue;
        Rat v = chern_number(M, w);
        rep.add(w.str(), v == 0, rat_to_short_string(v));
    }
    return rep;
}

GradedPoly reference_two_alpha22() {
    auto cp = GradedPoly::cp;
    return cp(3) * Rat(-3) + cp(1) * cp(2) * Rat(8) + cp(1).pow(3) * Rat(-5);
}

GradedPoly reference_alpha23() {
    auto cp = GradedPoly::cp;
    return cp(1).pow(4) * Rat(2) - cp(1).pow(2) * cp(2) * Rat(7) + cp(2).pow(2) * Rat(3) +
           cp(1) * cp(3) * Rat(4) - cp(4) * Rat(2);
}

GradedPoly reference_x4() {
    GradedPoly x3 = reference_two_alpha22() * Rat(-1, 2);
    return -reference_alpha23() - x3 * GradedPoly::cp(1) * Rat(3, 2);
}

SUGenerators build_x234(const FGLTable& F) {
    if (F.N < 4) throw DomainError("build_x234: law must reach weight 4");
    if (F.a(2, 2) * Rat(2) != reference_two_alpha22())
        throw ConsistencyError("alpha22 disagrees with -3CP3 + 8CP1CP2 - 5CP1^3 over 2");
    SUGenerators g;
    auto cp = GradedPoly::cp;
    g.x2 = cp(2) - cp(1).pow(2) * Rat(9, 8);
    g.x3 = -F.a(2, 2);
    g.x4 = -F.a(2, 3) - g.x3 * cp(1) * Rat(1, 2);
    if (g.x4 != reference_x4()) throw ConsistencyError("x4 disagrees with the reference generator");
    return g;
}

std::shared_ptr<const QuadParams> gamma_ring(const FGLTable& F) {
    return std::make_shared<const QuadParams>(QuadParams{F.a(1, 1), F.a(1, 2) * Rat(2)});
}

QuadSeries gamma_series(const FGLTable& F, std::shared_ptr<const QuadParams> ring) {
    int K = F.N + 1;
    PolySeries ubar = formal_inverse(F);
    PolySeries u = PolySeries::variable(K);
    PolySeries even = u;
    PolySeries ubar_pow = ubar;
    for (int i = 2; i <= K; ++i) {
        ubar_pow = ubar_pow * ubar;
        if (F.alpha.coeff(i, 1).is_zero()) continue;
        even += (u * ubar_pow).scaled(F.a(i, 1));
    }
    PolySeries odd = u * ubar;
    QuadSeries gamma(K);
    for (int k = 0; k <= K; ++k) gamma[k] = QuadElem(even[k], odd[k], ring);
    return gamma;
}

WCoefficient WTable::w(int i, int j) const {
    const QuadElem& c = law(i, j);
    return {i, j, c.even(), c.odd()};
}

WTable w_coefficients(const FGLTable& F) {
    WTable W;
    W.N = F.N;
    W.ring = gamma_ring(F);
    W.gamma = gamma_series(F, W.ring);
    int D = F.N + 1;
    QuadSeries2 Fq(D);
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j) Fq(i, j) = QuadElem(F.alpha(i, j));
    QuadSeries ginv = series_revert(W.gamma);
    W.law = compose_outer(W.gamma, compose_inner(Fq, ginv, ginv));
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j) {
            if (i + j == 0) continue;
            if (!W.law(i, j).is_homogeneous_of(i + j - 1))
                throw ConsistencyError("W-coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") is not homogeneous");
        }
    return W;
}

WPair star_product(const WPair& a, const WPair& b, const QuadParams& ring) {
    auto params = std::make_shared<const QuadParams>(ring);
    QuadElem p = QuadElem(a.cls, a.bnd, params) * QuadElem(b.cls, b.bnd, params);
    return {p.even(), p.odd()};
}

std::vector<SUGeneratorRow> build_bk_xk(const FGLTable& F, const WTable& W, int partition_cap) {
    std::vector<SUGeneratorRow> rows;
    PairingTable none;
    for (int k = 2; k <= std::min(F.N, W.N); ++k) {
        GeneratorCombo e = build_combo(k, ComboKind::E, F, none);
        SUGeneratorRow row;
        row.k = k;
        for (int i = 1; i <= k; ++i) {
            const BigInt& l = e.lambda[static_cast<std::size_t>(i - 1)];
            if (l == 0) continue;
            WCoefficient w = W.w(i, k + 1 - i);
            row.b.cls += w.cls * Rat(l);
            row.b.bnd += w.bnd * Rat(l);
        }
        row.x = row.b.cls * Rat(2) - GradedPoly::cp(1) * row.b.bnd;
        row.s_b = s_number(row.b.cls, k);
        row.s_x = s_number(row.x, k);
        if (row.s_x != 0) row.novikov = novikov_admissible(k, row.s_x);
        if (k <= partition_cap) {
            row.su_checked = true;
            row.su_pass = su_check(row.x, partition_cap).passed();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

bool is_power_of_two(long k) { return k > 0 && (k & (k - 1)) == 0; }

}  // namespace

std::vector<SNumberLedgerRow> snumber_ledger_rows(int K) {
    if (K < 3) throw DomainError("snumber_ledger: K must be >= 3");
    std::vector<SNumberLedgerRow> rows;
    for (int k = 3; k <= K; ++k) {
        SNumberLedgerRow row;
        row.k = k;
        long q = prime_power_base(k + 1);
        row.exceptional = is_power_of_two(k) && q > 2;
        if (row.exceptional) {
            row.divisor = (k == 8) ? BigInt(4) : BigInt(-k);
            row.expected_ratio = Rat(row.divisor);
        } else {
            row.divisor = d_gcd(k - 1);
            long p = prime_power_base(k);
            row.expected_ratio = p ? Rat(p) : Rat(1);
        }
        int sign = (k % 2 == 0) ? 1 : -1;
        row.s_wk = Rat(1 + sign * (k + 1)) - Rat(row.divisor);
        Rat s_a1k = -Rat(k + 1);
        row.gcd_w = 0;
        for (int i = 1; i <= k; ++i) {
            Rat B(binomial(k + 1, i));
            Rat s_alpha = -B;
            Rat s_w;
            if (i == 1)
                s_w = s_a1k + Rat(k + 1) * (Rat(sign) * s_a1k + row.s_wk);
            else
                s_w = s_alpha + Rat(sign) * B * s_a1k + B * row.s_wk;
            row.s_alpha.push_back(s_alpha);
            row.s_w.push_back(s_w);
            row.ratio.push_back(s_w / s_alpha);
            row.gcd_w = gcd(row.gcd_w, s_w.get_num());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Report snumber_ledger_report(int K) {
    Report rep;
    rep.title = "s-number ledger for w_ij, 3 <= k <= " + std::to_string(K);
    for (const auto& row : snumber_ledger_rows(K)) {
        std::string tag = "k=" + std::to_string(row.k);
        std::string bad;
        for (std::size_t i = 0; i < row.ratio.size() && bad.empty(); ++i)
            if (row.ratio[i] != row.expected_ratio)
                bad = "i=" + std::to_string(i + 1) + " ratio " + rat_to_short_string(row.ratio[i]);
        std::ostringstream detail;
        detail << "ratio " << rat_to_short_string(row.expected_ratio) << (row.exceptional ? " (replaced divisor)" : "");
        rep.add(tag + " ratio", bad.empty(), bad.empty() ? detail.str() : bad);

        BigInt dd = d_gcd(row.k) * d_gcd(row.k - 1);
        rep.add(tag + " gcd_i s(w_ij) = d(k)d(k-1) up to 2^a", is_dyadic_unit(make_rat(row.gcd_w, dd)),
                "gcd " + row.gcd_w.get_str() + ", d(k)d(k-1) " + dd.get_str());
        rep.add(tag + " d(k-1)d(k) | s_k(w_k)", row.s_wk.get_den() == 1 && row.s_wk.get_num() % dd == 0,
                "s_k(w_k) = " + rat_to_short_string(row.s_wk));
    }
    return rep;
}

}  // namespace fglwb
