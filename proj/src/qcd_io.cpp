#include "qcover/qcd_io.hpp"

#include <fstream>
#include <sstream>

namespace qcover {

namespace {

std::string kv(const std::string& token, const std::string& key, int line) {
    if (token.rfind(key + "=", 0) != 0)
        throw QcdParseError(line, "expected " + key + "=..., got '" + token + "'");
    return token.substr(key.size() + 1);
}

int kv_int(const std::string& token, const std::string& key, int line) {
    std::string v = kv(token, key, line);
    try {
        size_t pos = 0;
        int out = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        throw QcdParseError(line, "bad integer for " + key + ": '" + v + "'");
    }
}

uint32_t parse_row(const std::string& s, int n, int line) {
    try {
        return parse_row_hex(s, n);
    } catch (const std::exception& e) {
        throw QcdParseError(line, e.what());
    }
}

}  // namespace

void qcd_write(std::ostream& os, const CoveringDesign& d) {
    os << "QCD1 q=2 n=" << d.n << " k=" << d.k << " r=" << d.r << " count=" << d.size()
       << " prov=" << (d.provenance.empty() ? "unknown" : d.provenance) << "\n";
    for (const auto& a : d.annotations) {
        os << "ann " << a.label << "=";
        for (size_t i = 0; i < a.u.rows.size(); ++i)
            os << (i ? "," : "") << row_to_hex(a.u.rows[i], a.u.n);
        os << ":" << a.count << "\n";
    }
    for (const auto& b : d.blocks) {
        for (size_t i = 0; i < b.rows.size(); ++i)
            os << (i ? " " : "") << row_to_hex(b.rows[i], d.n);
        os << "\n";
    }
}

void qcd_write_file(const std::string& path, const CoveringDesign& d) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    qcd_write(os, d);
    if (!os) throw std::runtime_error("write to " + path + " failed");
}

CoveringDesign qcd_read(std::istream& is) {
    std::string line;
    int lineno = 0;
    if (!std::getline(is, line)) throw QcdParseError(1, "empty input");
    ++lineno;
    std::istringstream hs(line);
    std::string magic, tok;
    hs >> magic;
    if (magic != "QCD1") throw QcdParseError(lineno, "bad magic, expected QCD1");
    CoveringDesign d;
    hs >> tok;
    if (kv_int(tok, "q", lineno) != 2) throw QcdParseError(lineno, "only q=2 is supported");
    hs >> tok;
    d.n = kv_int(tok, "n", lineno);
    hs >> tok;
    d.k = kv_int(tok, "k", lineno);
    hs >> tok;
    d.r = kv_int(tok, "r", lineno);
    hs >> tok;
    long long count = kv_int(tok, "count", lineno);
    hs >> tok;
    d.provenance = kv(tok, "prov", lineno);
    if (d.n < 1 || d.n > 32 || d.k < 0 || d.k > d.n || d.r < 0 || d.r > d.k || count < 0)
        throw QcdParseError(lineno, "inconsistent header parameters");

    bool in_header_tail = true;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (in_header_tail && line.rfind("ann ", 0) == 0) {
            std::string body = line.substr(4);
            size_t eq = body.find('=');
            size_t colon = body.rfind(':');
            if (eq == std::string::npos || colon == std::string::npos || colon < eq)
                throw QcdParseError(lineno, "malformed annotation line");
            Annotation a;
            a.label = body.substr(0, eq);
            std::istringstream rs(body.substr(eq + 1, colon - eq - 1));
            std::vector<uint32_t> rows;
            std::string cell;
            while (std::getline(rs, cell, ','))
                if (!cell.empty()) rows.push_back(parse_row(cell, d.n, lineno));
            a.u = Subspace(d.n, rows);
            if (a.u.rows != rows)
                throw QcdParseError(lineno, "annotation rows are not in reduced echelon form");
            try {
                a.count = std::stol(body.substr(colon + 1));
            } catch (const std::exception&) {
                throw QcdParseError(lineno, "bad annotation count");
            }
            d.annotations.push_back(std::move(a));
            continue;
        }
        in_header_tail = false;
        std::istringstream bs(line);
        std::vector<uint32_t> rows;
        std::string cell;
        while (bs >> cell) rows.push_back(parse_row(cell, d.n, lineno));
        if (static_cast<int>(rows.size()) != d.k)
            throw QcdParseError(lineno, "block has " + std::to_string(rows.size()) +
                                            " rows, expected " + std::to_string(d.k));
        Subspace b(d.n, rows);
        if (b.rows != rows)
            throw QcdParseError(lineno, "block rows are not a reduced echelon basis of a " +
                                            std::to_string(d.k) + "-space");
        if (!d.blocks.empty()) {
            if (d.blocks.back() == b) throw QcdParseError(lineno, "duplicate block");
            if (b < d.blocks.back()) throw QcdParseError(lineno, "blocks out of order");
        }
        d.blocks.push_back(std::move(b));
    }
    if (static_cast<long long>(d.size()) != count)
        throw QcdParseError(lineno, "header count=" + std::to_string(count) + " but read " +
                                        std::to_string(d.size()) + " blocks");
    return d;
}

CoveringDesign qcd_read_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return qcd_read(is);
}

}  // namespace qcover
