#include "fglwb/cache.hpp"

#include <zlib.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace fglwb {

namespace {

constexpr const char* kMagic = "fglwb-cache";

unsigned long checksum(const std::string& body) {
    return crc32(crc32(0L, Z_NULL, 0), reinterpret_cast<const Bytef*>(body.data()),
                 static_cast<uInt>(body.size()));
}

void check_field(const std::string& s, const char* what) {
    if (s.find_first_of("\t\n\r") != std::string::npos)
        throw CacheError(std::string("cache ") + what + " contains a tab or newline");
}

std::vector<std::string> split_lines(const std::string& bytes) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < bytes.size()) {
        std::size_t nl = bytes.find('\n', start);
        if (nl == std::string::npos) throw CacheError("cache is truncated (no final newline)");
        lines.push_back(bytes.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw CacheError("cache: bad " + what + " '" + s + "'");
    }
}

}  // namespace

const CacheTable* CacheFile::find(const std::string& name) const {
    for (const auto& t : tables)
        if (t.name == name) return &t;
    return nullptr;
}

void CacheFile::put(CacheTable table) {
    auto it = std::find_if(tables.begin(), tables.end(), [&](const CacheTable& t) { return t.name == table.name; });
    if (it != tables.end()) {
        *it = std::move(table);
        return;
    }
    tables.push_back(std::move(table));
    std::sort(tables.begin(), tables.end(), [](const CacheTable& a, const CacheTable& b) { return a.name < b.name; });
}

std::string serialize_cache(const CacheFile& file) {
    std::ostringstream body;
    body << kMagic << "\n";
    body << "version " << file.version << "\n";
    body << "N " << file.N << "\n";
    for (const auto& t : file.tables) {
        check_field(t.name, "table name");
        if (t.name.find(' ') != std::string::npos) throw CacheError("cache table name contains a space");
        body << "table " << t.name << " " << t.rows.size() << "\n";
        for (const auto& [k, v] : t.rows) {
            check_field(k, "key");
            check_field(v, "value");
            body << k << "\t" << v << "\n";
        }
    }
    body << "end\n";
    std::string text = body.str();
    std::ostringstream trailer;
    trailer << "crc32 " << std::hex << std::setw(8) << std::setfill('0') << checksum(text) << "\n";
    return text + trailer.str();
}

CacheFile parse_cache(const std::string& bytes) {
    std::vector<std::string> lines = split_lines(bytes);
    if (lines.empty() || lines[0] != kMagic) throw CacheError("not a cache file");
    if (lines.size() < 2 || lines[1].rfind("version ", 0) != 0) throw CacheError("cache: missing version");
    CacheFile file;
    file.version = parse_int(lines[1].substr(8), "version");
    if (file.version != kCacheFormatVersion)
        throw CacheError("cache format version " + std::to_string(file.version) + " is not supported (expected " +
                         std::to_string(kCacheFormatVersion) + ")");
    if (lines.size() < 3 || lines[2].rfind("N ", 0) != 0) throw CacheError("cache: missing N");
    file.N = parse_int(lines[2].substr(2), "N");

    std::size_t i = 3;
    std::size_t body_end = 0;  // byte offset just past "end\n"
    std::size_t offset = lines[0].size() + lines[1].size() + lines[2].size() + 3;
    auto next = [&]() -> const std::string& {
        if (i >= lines.size()) throw CacheError("cache is truncated");
        offset += lines[i].size() + 1;
        return lines[i++];
    };
    while (true) {
        const std::string& line = next();
        if (line == "end") {
            body_end = offset;
            break;
        }
        std::istringstream head(line);
        std::string kw, name, count_text;
        head >> kw >> name >> count_text;
        if (kw != "table" || name.empty() || count_text.empty()) throw CacheError("cache: bad table header '" + line + "'");
        int count = parse_int(count_text, "row count");
        if (count < 0) throw CacheError("cache: negative row count");
        CacheTable t;
        t.name = name;
        for (int r = 0; r < count; ++r) {
            const std::string& row = next();
            std::size_t tab = row.find('\t');
            if (tab == std::string::npos || row.find('\t', tab + 1) != std::string::npos)
                throw CacheError("cache: malformed row in table " + name);
            t.rows.emplace_back(row.substr(0, tab), row.substr(tab + 1));
        }
        if (file.find(name)) throw CacheError("cache: duplicate table " + name);
        file.tables.push_back(std::move(t));
    }
    const std::string& trailer = next();
    if (trailer.rfind("crc32 ", 0) != 0) throw CacheError("cache: missing checksum");
    if (i != lines.size()) throw CacheError("cache: trailing data after checksum");
    std::ostringstream want;
    want << std::hex << std::setw(8) << std::setfill('0') << checksum(bytes.substr(0, body_end));
    if (trailer.substr(6) != want.str()) throw CacheError("cache: checksum mismatch");
    if (!std::is_sorted(file.tables.begin(), file.tables.end(),
                        [](const CacheTable& a, const CacheTable& b) { return a.name < b.name; }))
        throw CacheError("cache: tables out of order");
    return file;
}

void store_cache(const CacheFile& file, const std::filesystem::path& path) {
    static std::atomic<unsigned> counter{0};
    std::string bytes = serialize_cache(file);
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw CacheError("cannot create cache directory " + path.parent_path().string() + ": " + ec.message());
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CacheError("cannot write " + tmp.string());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) {
            std::filesystem::remove(tmp, ec);
            throw CacheError("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw CacheError("cannot rename cache into place at " + path.string());
    }
}

CacheFile load_cache(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_cache(buf.str());
}

std::filesystem::path default_cache_dir() {
    if (const char* d = std::getenv("FGLWB_CACHE_DIR"); d && *d) return d;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "fglwb";
    if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "fglwb";
    return ".fglwb-cache";
}

}  // namespace fglwb
