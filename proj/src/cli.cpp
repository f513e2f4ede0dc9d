#include "fglwb/cli.hpp"

#include "fglwb/expr.hpp"
#include "fglwb/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <variant>

namespace fglwb {

namespace {

enum class Format { Table, Csv, Jsonl };

using Cell = std::variant<long, std::string>;

struct Output {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

std::string cell_text(const Cell& c) {
    if (const long* v = std::get_if<long>(&c)) return std::to_string(*v);
    return std::get<std::string>(c);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void emit(const Output& o, Format fmt, std::ostream& out) {
    switch (fmt) {
    case Format::Csv: {
        for (std::size_t c = 0; c < o.columns.size(); ++c) out << (c ? "," : "") << csv_field(o.columns[c]);
        out << "\n";
        for (const auto& row : o.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(cell_text(row[c]));
            out << "\n";
        }
        break;
    }
    case Format::Jsonl:
        for (const auto& row : o.rows) {
            nlohmann::ordered_json j;
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (const long* v = std::get_if<long>(&row[c])) j[o.columns[c]] = *v;
                else j[o.columns[c]] = std::get<std::string>(row[c]);
            }
            out << j.dump() << "\n";
        }
        break;
    case Format::Table: {
        std::vector<std::size_t> width(o.columns.size());
        for (std::size_t c = 0; c < o.columns.size(); ++c) width[c] = o.columns[c].size();
        for (const auto& row : o.rows)
            for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], cell_text(row[c]).size());
        auto line = [&](const std::vector<std::string>& cells) {
            std::string s;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c) s += "  ";
                s += cells[c];
                if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size(), ' ');
            }
            out << s << "\n";
        };
        line(o.columns);
        std::vector<std::string> rule;
        for (std::size_t c = 0; c < o.columns.size(); ++c) rule.push_back(std::string(width[c], '-'));
        line(rule);
        for (const auto& row : o.rows) {
            std::vector<std::string> cells;
            for (const auto& c : row) cells.push_back(cell_text(c));
            line(cells);
        }
        break;
    }
    }
}

struct Settings {
    int max_degree = 12;
    Format format = Format::Table;
    std::string eval;
    bool no_cache = false;
};

class Session {
public:
    Session(const Settings& s, std::ostream& out, std::ostream& err) : s_(s), out_(out), err_(err) {
        cache_.enabled = !s.no_cache;
        cache_.dir = default_cache_dir();
    }

    std::string poly(const GradedPoly& p) const { return s_.format == Format::Table ? p.pretty() : p.canonical(); }

    Workbench& workbench() {
        if (!wb_) {
            std::vector<std::string> warnings;
            wb_ = std::make_unique<Workbench>(open_workbench(s_.max_degree, cache_, warnings));
            for (const auto& w : warnings) err_ << "warning: " << w << "\n";
        }
        return *wb_;
    }

    void save() {
        if (!wb_) return;
        try {
            save_workbench(*wb_, cache_);
        } catch (const CacheError& e) {
            cache_write_failed(e);
        }
    }

    // Output already emitted stays valid; the exit code reports the I/O failure.
    void cache_write_failed(const CacheError& e) {
        err_ << "error: cache not written: " << e.what() << "\n";
        io_failed_ = true;
    }
    bool io_failed() const { return io_failed_; }

    void emit(const Output& o) { fglwb::emit(o, s_.format, out_); }

    const Settings& settings() const { return s_; }
    const CacheOptions& cache() const { return cache_; }
    std::ostream& err() { return err_; }

private:
    bool io_failed_ = false;
    Settings s_;
    std::ostream& out_;
    std::ostream& err_;
    CacheOptions cache_;
    std::unique_ptr<Workbench> wb_;
};

GradedPoly eval_argument(const std::string& text, int N) {
    GradedPoly p = parse_class(text);
    if (p.max_weight() > N)
        throw DomainError("expression has weight " + std::to_string(p.max_weight()) + " above --max-degree " +
                          std::to_string(N));
    return p;
}

int cmd_coefficients(Session& ss, bool pairing) {
    Workbench& wb = ss.workbench();
    int N = wb.N();
    Output o;
    o.columns = {"i", "j", "weight", "value"};
    int bound = pairing ? N + 2 : N + 1;
    for (int s = 2; s <= bound; ++s)
        for (int i = 1; 2 * i <= s; ++i) {
            int j = s - i;
            const GradedPoly& v = pairing ? wb.pairing().a(i, j) : wb.fgl().a(i, j);
            o.add({long(i), long(j), long(pairing ? s - 2 : s - 1), ss.poly(v)});
        }
    ss.save();
    ss.emit(o);
    return kExitOk;
}

int cmd_combinat(Session& ss, int upto) {
    if (upto < 1) throw DomainError("--upto must be >= 1");
    Output o;
    o.columns = {"m", "d", "closed_form", "D", "D_over_d", "d2", "d_m_times_d_m_minus_1"};
    for (long m = 1; m <= upto; ++m) {
        BigInt d = d_gcd(m);
        std::string D = "-", ratio = "-", d2 = "-", dd = "-";
        if (m >= 5) {
            BigInt Dm = D_gcd(m);
            D = Dm.get_str();
            ratio = rat_to_string(make_rat(Dm, d));
        }
        if (m >= 3) {
            d2 = d2_gcd(m).get_str();
            dd = BigInt(d * d_gcd(m - 1)).get_str();
        }
        o.add({m, d.get_str(), d_closed_form(m).get_str(), D, ratio, d2, dd});
    }
    ss.emit(o);
    Report r = verify_gcd_laws(std::max(upto, 5));
    return r.passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_genus(Session& ss, const std::string& which) {
    int N = ss.settings().max_degree;
    ClassifyingMap map;
    if (which == "kh") {
        map = kh_solve(N).phi;
    } else if (which == "schreieder") {
        map = schreieder_genus(N);
    } else {
        Workbench& wb = ss.workbench();
        map = which == "buchstaber" ? wb.buchstaber() : wb.abelian();
        ss.save();
    }
    Output o;
    if (!ss.settings().eval.empty()) {
        GradedPoly cls = eval_argument(ss.settings().eval, N);
        o.columns = {"genus", "class", "image"};
        o.add({which, ss.poly(cls), ss.poly(genus_eval(map, cls))});
    } else {
        o.columns = {"n", "image"};
        for (int n = 1; n <= N; ++n) o.add({long(n), ss.poly(map.images.at(Generator::cp(n)))});
    }
    ss.emit(o);
    return kExitOk;
}

std::string novikov_text(int k, const Rat& s) {
    if (s == 0) return "zero";
    return novikov_admissible(k, s).admissible ? "yes" : "no";
}

int cmd_su_generators(Session& ss) {
    Workbench& wb = ss.workbench();
    SUGenerators g = build_x234(wb.fgl());
    std::vector<SUGeneratorRow> rows = build_bk_xk(wb.fgl(), wb.w());
    ss.save();
    Output o;
    o.columns = {"name", "k", "class", "s", "novikov", "su_check"};
    const std::vector<std::pair<int, const GradedPoly*>> fixed{{2, &g.x2}, {3, &g.x3}, {4, &g.x4}};
    for (auto [k, x] : fixed) {
        Rat s = s_number_manifold(*x);
        o.add({"x" + std::to_string(k), long(k), ss.poly(*x), rat_to_string(s), novikov_text(k, s),
               su_check(*x).passed() ? "pass" : "fail"});
    }
    for (const auto& r : rows)
        o.add({"x_row" + std::to_string(r.k), long(r.k), ss.poly(r.x), rat_to_string(r.s_x), novikov_text(r.k, r.s_x),
               r.su_checked ? (r.su_pass ? "pass" : "fail") : "skipped"});
    ss.emit(o);
    return kExitOk;
}

int cmd_su_check(Session& ss, const std::string& text) {
    GradedPoly M = parse_class(text);
    Report r = su_check(M);
    Output o;
    o.columns = {"partition", "value", "status"};
    for (const auto& c : r.checks) o.add({c.name, c.detail, c.pass ? "PASS" : "FAIL"});
    ss.emit(o);
    return r.passed() ? kExitOk : kExitVerifyFailed;
}

std::vector<int> parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size() || v < 1) throw std::invalid_argument(item);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw DomainError("bad partition part '" + item + "'");
        }
    }
    if (parts.empty()) throw DomainError("empty partition");
    return parts;
}

int cmd_chern(Session& ss, const std::string& manifold, const std::string& partition) {
    GradedPoly M = parse_class(manifold);
    Output o;
    o.columns = {"partition", "value"};
    if (!partition.empty()) {
        Partition w(parse_partition(partition));
        o.add({w.str(), rat_to_string(chern_number(M, w))});
    } else {
        if (M.is_zero()) throw DomainError("the zero class has no weight");
        auto n = M.weight();
        if (!n) throw DomainError("class is not homogeneous");
        for (const auto& w : partitions_of(*n)) o.add({w.str(), rat_to_string(chern_number(M, w))});
    }
    ss.emit(o);
    return kExitOk;
}

int cmd_verify(Session& ss, const std::string& suite_name) {
    auto suite = suite_from_name(suite_name);
    if (!suite) throw DomainError("unknown suite '" + suite_name + "'");
    Workbench wb(ss.settings().max_degree);
    std::vector<Report> reports = run_verify(*suite, wb);

    bool cache_ok = true;
    bool cache_present = ss.cache().enabled && std::filesystem::exists(ss.cache().file());
    if (cache_present) {
        Report cr;
        try {
            cr = cache_agreement(load_cache(ss.cache().file()), wb);
        } catch (const CacheError& e) {
            cr.title = "cache agreement";
            cr.add("cache file readable", false, e.what());
        }
        cache_ok = cr.passed();
        reports.push_back(cr);
    }
    if (ss.cache().enabled && (!cache_present || cache_ok)) {
        try {
            save_workbench(wb, ss.cache());
        } catch (const CacheError& e) {
            ss.cache_write_failed(e);
        }
    }

    Output o;
    o.columns = {"report", "check", "status", "detail"};
    bool all = true;
    for (const auto& r : reports) {
        for (const auto& c : r.checks) {
            all = all && c.pass;
            o.add({r.title, c.name, c.pass ? "PASS" : "FAIL", c.detail});
        }
        for (const auto& n : r.notes) o.add({r.title, "", "NOTE", n});
    }
    ss.emit(o);
    long total = 0, failed = 0;
    for (const auto& r : reports)
        for (const auto& c : r.checks) {
            ++total;
            failed += c.pass ? 0 : 1;
        }
    ss.err() << (all ? "verify: all " : "verify: FAILED ") << (total - failed) << "/" << total << " checks passed\n";
    return all ? kExitOk : kExitVerifyFailed;
}

int cmd_cache_info(Session& ss) {
    const auto path = ss.cache().file();
    Output o;
    o.columns = {"key", "value"};
    o.add({"path", path.string()});
    if (!std::filesystem::exists(path)) {
        o.add({"status", "absent"});
        ss.emit(o);
        return kExitOk;
    }
    o.add({"bytes", long(std::filesystem::file_size(path))});
    try {
        CacheFile f = load_cache(path);
        o.add({"status", "valid"});
        o.add({"version", long(f.version)});
        o.add({"N", long(f.N)});
        for (const auto& t : f.tables) o.add({"table " + t.name, long(t.rows.size())});
    } catch (const CacheError& e) {
        o.add({"status", std::string("invalid: ") + e.what()});
        ss.emit(o);
        return kExitIo;
    }
    ss.emit(o);
    return kExitOk;
}

int cmd_cache_clear(Session& ss) {
    std::error_code ec;
    bool removed = std::filesystem::remove(ss.cache().file(), ec);
    if (ec) throw CacheError("cannot remove " + ss.cache().file().string() + ": " + ec.message());
    ss.err() << (removed ? "removed " : "nothing to remove at ") << ss.cache().file().string() << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Formal group laws, genera and SU-bordism workbench", "fglwb"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings settings;
    std::string format_name = "table";
    app.add_option("--max-degree", settings.max_degree, "Weight bound N")->check(CLI::Range(5, 30));
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"table", "csv", "jsonl"}));
    app.add_option("--eval", settings.eval, "Class expression to evaluate");
    app.add_flag("--no-cache", settings.no_cache, "Recompute and do not touch the cache");

    auto* alpha = app.add_subcommand("alpha", "Coefficients alpha(i,j) of the universal law");
    auto* pairing = app.add_subcommand("pairing", "Coefficients A(i,j) of F(x,y)(x w(y) - y w(x))");
    int upto = kCombinatBound;
    auto* combinat = app.add_subcommand("combinat", "gcd functions d, D, d2");
    combinat->add_option("--upto", upto, "Largest m");

    std::string genus_name;
    auto* genus = app.add_subcommand("genus", "Genus images of CP_n, or of --eval");
    genus->add_option("which", genus_name, "kh | schreieder | buchstaber | abelian")
        ->required()
        ->check(CLI::IsMember({"kh", "schreieder", "buchstaber", "abelian"}));

    auto* su = app.add_subcommand("su", "SU generators and checks");
    su->require_subcommand(1);
    auto* su_gen = su->add_subcommand("generators", "x2, x3, x4 and x_k");
    std::string su_expr;
    auto* su_chk = su->add_subcommand("check", "Chern numbers with a c1 factor must vanish");
    su_chk->add_option("expr", su_expr, "Class expression")->required();

    std::string manifold, partition;
    auto* chern = app.add_subcommand("chern", "Chern numbers of a class");
    chern->add_option("--manifold", manifold, "Class expression")->required();
    chern->add_option("--partition", partition, "Comma-separated parts, e.g. 1,2");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("suite", suite, "combinat | fgl | genera | su | all")
        ->check(CLI::IsMember({"combinat", "fgl", "genera", "su", "all"}));

    auto* cache = app.add_subcommand("cache", "Inspect or clear the table cache");
    cache->require_subcommand(1);
    auto* cache_info = cache->add_subcommand("info", "Show cache location and contents");
    auto* cache_clear = cache->add_subcommand("clear", "Delete the cache file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    settings.format = format_name == "csv" ? Format::Csv : format_name == "jsonl" ? Format::Jsonl : Format::Table;

    Session ss(settings, out, err);
    auto finish = [&](int code) { return code == kExitOk && ss.io_failed() ? kExitIo : code; };
    try {
        if (*alpha) return finish(cmd_coefficients(ss, false));
        if (*pairing) return finish(cmd_coefficients(ss, true));
        if (*combinat) return finish(cmd_combinat(ss, upto));
        if (*genus) return finish(cmd_genus(ss, genus_name));
        if (*su_gen) return finish(cmd_su_generators(ss));
        if (*su_chk) return finish(cmd_su_check(ss, su_expr));
        if (*chern) return finish(cmd_chern(ss, manifold, partition));
        if (*verify) return finish(cmd_verify(ss, suite));
        if (*cache_info) return cmd_cache_info(ss);
        if (*cache_clear) return cmd_cache_clear(ss);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CacheError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
    err << "error: no command\n";
    return kExitUsage;
}

}  // namespace fglwb
