#include "fglwb/workbench.hpp"

#include "fglwb/expr.hpp"

#include <algorithm>

namespace fglwb {

namespace {

std::string pair_key(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

std::pair<int, int> split_pair_key(const std::string& key) {
    std::size_t comma = key.find(',');
    if (comma == std::string::npos) throw CacheError("cache: bad key '" + key + "'");
    try {
        return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
    } catch (const std::exception&) {
        throw CacheError("cache: bad key '" + key + "'");
    }
}

// Largest i + j kept at weight bound N, or the largest n for a map table.
int key_bound(const std::string& name, int N) {
    if (name == "pairing") return N + 2;
    if (name == "alpha" || name == "w.cls" || name == "w.bnd") return N + 1;
    if (name == "map.buchstaber" || name == "map.abelian") return N;
    throw CacheError("cache: unknown table " + name);
}

bool is_map_table(const std::string& name) { return name.rfind("map.", 0) == 0; }

GradedPoly parse_value(const std::string& text, const std::string& table) {
    try {
        return parse_class(text);
    } catch (const ParseError& e) {
        throw CacheError("cache: unreadable entry in " + table + ": " + e.what());
    }
}

CacheTable triangle(const std::string& name, int bound, const auto& get) {
    CacheTable t;
    t.name = name;
    for (int s = 0; s <= bound; ++s)
        for (int i = 0; i <= s; ++i) t.rows.emplace_back(pair_key(i, s - i), get(i, s - i).canonical());
    return t;
}

CacheTable map_table(const std::string& name, const ClassifyingMap& map) {
    CacheTable t;
    t.name = name;
    for (int n = 1; n <= map.N; ++n) t.rows.emplace_back(std::to_string(n), map.images.at(Generator::cp(n)).canonical());
    return t;
}

// Values indexed by (i, j), i + j <= bound, all present.
template <class Set>
void fill_triangle(const CacheFile& file, const std::string& name, int bound, Set set) {
    const CacheTable* t = file.find(name);
    if (!t) throw CacheError("cache: missing table " + name);
    int seen = 0;
    for (const auto& [k, v] : t->rows) {
        auto [i, j] = split_pair_key(k);
        if (i < 0 || j < 0 || i + j > bound) continue;
        set(i, j, parse_value(v, name));
        ++seen;
    }
    if (seen != (bound + 1) * (bound + 2) / 2) throw CacheError("cache: table " + name + " is incomplete");
}

ClassifyingMap load_map(const CacheFile& file, const std::string& table, const std::string& name, int N, int kept) {
    const CacheTable* t = file.find(table);
    if (!t) throw CacheError("cache: missing table " + table);
    ClassifyingMap map;
    map.name = name;
    map.N = N;
    for (const auto& [k, v] : t->rows) {
        int n = 0;
        try {
            n = std::stoi(k);
        } catch (const std::exception&) {
            throw CacheError("cache: bad key '" + k + "'");
        }
        if (n >= 1 && n <= N) map.images[Generator::cp(n)] = parse_value(v, table);
    }
    if (static_cast<int>(map.images.size()) != N) throw CacheError("cache: table " + table + " is incomplete");
    for (int n = 1; n <= kept; ++n) map.target_gens.push_back(Generator::cp(n));
    return map;
}

}  // namespace

CacheTable restrict_table(const CacheTable& table, int N) {
    int bound = key_bound(table.name, N);
    CacheTable out;
    out.name = table.name;
    for (const auto& row : table.rows) {
        if (is_map_table(table.name)) {
            int n = 0;
            try {
                n = std::stoi(row.first);
            } catch (const std::exception&) {
                throw CacheError("cache: bad key '" + row.first + "'");
            }
            if (n <= bound) out.rows.push_back(row);
        } else {
            auto [i, j] = split_pair_key(row.first);
            if (i + j <= bound) out.rows.push_back(row);
        }
    }
    return out;
}

Workbench::Workbench(int N) : N_(N) {
    if (N < 5) throw DomainError("weight bound must be >= 5");
}

const FGLTable& Workbench::fgl() {
    if (!fgl_) fgl_ = universal_fgl(N_);
    return *fgl_;
}

const PairingTable& Workbench::pairing() {
    if (!pairing_) pairing_ = pairing_series(fgl());
    return *pairing_;
}

const WTable& Workbench::w() {
    if (!w_) w_ = w_coefficients(fgl());
    return *w_;
}

const ClassifyingMap& Workbench::buchstaber() {
    if (!buchstaber_) buchstaber_ = buchstaber_map(fgl(), pairing());
    return *buchstaber_;
}

const ClassifyingMap& Workbench::abelian() {
    if (!abelian_) abelian_ = abelian_map(fgl());
    return *abelian_;
}

bool Workbench::has(const std::string& name) const {
    if (name == "alpha") return fgl_.has_value();
    if (name == "pairing") return pairing_.has_value();
    if (name == "w.cls" || name == "w.bnd") return w_.has_value();
    if (name == "map.buchstaber") return buchstaber_.has_value();
    if (name == "map.abelian") return abelian_.has_value();
    return false;
}

CacheTable Workbench::table_of(const std::string& name) const {
    int bound = key_bound(name, N_);
    if (name == "alpha") return triangle(name, bound, [&](int i, int j) { return fgl_->alpha(i, j); });
    if (name == "pairing") return triangle(name, bound, [&](int i, int j) { return pairing_->A(i, j); });
    if (name == "w.cls") return triangle(name, bound, [&](int i, int j) { return w_->law(i, j).even(); });
    if (name == "w.bnd") return triangle(name, bound, [&](int i, int j) { return w_->law(i, j).odd(); });
    if (name == "map.buchstaber") return map_table(name, *buchstaber_);
    return map_table(name, *abelian_);
}

CacheTable Workbench::table(const std::string& name) {
    if (name == "alpha") fgl();
    else if (name == "pairing") pairing();
    else if (name == "w.cls" || name == "w.bnd") w();
    else if (name == "map.buchstaber") buchstaber();
    else if (name == "map.abelian") abelian();
    else throw CacheError("unknown table " + name);
    return table_of(name);
}

CacheFile Workbench::to_cache() const {
    CacheFile file;
    file.N = N_;
    for (const auto& name : kCacheTableNames)
        if (has(name)) file.put(table_of(name));
    return file;
}

void Workbench::adopt(const CacheFile& file) {
    if (file.N < N_)
        throw CacheError("cache built at N=" + std::to_string(file.N) + " cannot serve N=" + std::to_string(N_));
    if (!file.find("alpha")) return;

    FGLTable F;
    F.N = N_;
    F.alpha = PolySeries2(N_ + 1);
    fill_triangle(file, "alpha", N_ + 1, [&](int i, int j, GradedPoly v) { F.alpha(i, j) = std::move(v); });
    F.log = mishchenko_log(N_);
    try {
        F.omega = invariant_differential(F);
    } catch (const ConsistencyError& e) {
        throw CacheError(std::string("cache: alpha table is inconsistent: ") + e.what());
    }
    fgl_ = std::move(F);

    if (file.find("pairing")) {
        PairingTable A;
        A.N = N_;
        A.A = PolySeries2(N_ + 2);
        fill_triangle(file, "pairing", N_ + 2, [&](int i, int j, GradedPoly v) { A.A(i, j) = std::move(v); });
        pairing_ = std::move(A);
    }
    if (file.find("w.cls") && file.find("w.bnd")) {
        WTable W;
        W.N = N_;
        W.ring = gamma_ring(*fgl_);
        W.gamma = gamma_series(*fgl_, W.ring);
        int D = N_ + 1;
        std::vector<std::vector<GradedPoly>> cls(D + 1, std::vector<GradedPoly>(D + 1)), bnd = cls;
        fill_triangle(file, "w.cls", D, [&](int i, int j, GradedPoly v) { cls[i][j] = std::move(v); });
        fill_triangle(file, "w.bnd", D, [&](int i, int j, GradedPoly v) { bnd[i][j] = std::move(v); });
        W.law = QuadSeries2(D);
        for (int i = 0; i <= D; ++i)
            for (int j = 0; i + j <= D; ++j) W.law(i, j) = QuadElem(cls[i][j], bnd[i][j], W.ring);
        w_ = std::move(W);
    }
    if (file.find("map.buchstaber")) buchstaber_ = load_map(file, "map.buchstaber", "buchstaber", N_, 4);
    if (file.find("map.abelian")) abelian_ = load_map(file, "map.abelian", "abelian", N_, 2);
}

Workbench open_workbench(int N, const CacheOptions& opts, std::vector<std::string>& warnings) {
    Workbench wb(N);
    if (!opts.enabled || !std::filesystem::exists(opts.file())) return wb;
    try {
        CacheFile file = load_cache(opts.file());
        if (file.N >= N) wb.adopt(file);
    } catch (const CacheError& e) {
        warnings.push_back(std::string("ignoring cache: ") + e.what());
        wb = Workbench(N);
    }
    return wb;
}

void save_workbench(const Workbench& wb, const CacheOptions& opts) {
    if (!opts.enabled) return;
    CacheFile fresh = wb.to_cache();
    if (fresh.tables.empty()) return;
    std::optional<CacheFile> existing;
    if (std::filesystem::exists(opts.file())) {
        try {
            existing = load_cache(opts.file());
        } catch (const CacheError&) {
            existing.reset();
        }
    }
    CacheFile out = fresh;
    if (existing) {
        if (existing->N > fresh.N) return;
        if (existing->N == fresh.N) {
            out = *existing;
            bool added = false;
            for (const auto& t : fresh.tables)
                if (!out.find(t.name)) {
                    out.put(t);
                    added = true;
                }
            if (!added) return;
        }
    }
    store_cache(out, opts.file());
}

}  // namespace fglwb
