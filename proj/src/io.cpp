#include "flexcolor/io.hpp"

#include <fstream>
#include <sstream>

#include "flexcolor/errors.hpp"

namespace flexcolor {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what);
}

// Tokenized non-empty lines with 1-based source line numbers; '#' comments and
// blank lines dropped.
std::vector<std::pair<int, std::vector<std::string>>> tokenize(const std::string& text) {
    std::vector<std::pair<int, std::vector<std::string>>> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) out.push_back({no, std::move(toks)});
    }
    return out;
}

int parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) fail(line, "bad integer '" + tok + "'");
        return v;
    } catch (const Error&) {
        throw;
    } catch (...) {
        fail(line, "bad integer '" + tok + "'");
    }
}

Rational parse_weight(const std::string& tok, int line) {
    auto slash = tok.find('/');
    if (slash != std::string::npos) {
        long long p = 0, q = 0;
        try {
            p = std::stoll(tok.substr(0, slash));
            q = std::stoll(tok.substr(slash + 1));
        } catch (...) {
            fail(line, "bad rational '" + tok + "'");
        }
        if (q == 0) fail(line, "zero denominator in '" + tok + "'");
        return Rational(p, q);
    }
    auto dot = tok.find('.');
    if (dot == std::string::npos) return Rational(parse_int(tok, line));
    std::string digits = tok.substr(0, dot) + tok.substr(dot + 1);
    long long q = 1;
    for (std::size_t i = dot + 1; i < tok.size(); ++i) q *= 10;
    try {
        return Rational(std::stoll(digits), q);
    } catch (...) {
        fail(line, "bad decimal '" + tok + "'");
    }
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::parse_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PlanarGraph parse_graph(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw Error(ErrorCode::parse_error, "empty graph file");
    auto& [hline, head] = lines.front();
    if (head.size() != 2 || head[0] != "planar") fail(hline, "expected 'planar <n>'");
    int n = parse_int(head[1], hline);
    if (n < 0) fail(hline, "negative vertex count");

    std::vector<std::vector<int>> rot(n);
    std::vector<bool> seen(n, false);
    std::vector<int> outer;
    bool has_outer = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto& [no, toks] = lines[i];
        if (toks[0] == "v") {
            if (toks.size() < 3 || toks[2] != ":") fail(no, "expected 'v <id> : <nbrs>'");
            int id = parse_int(toks[1], no);
            if (id < 0 || id >= n) fail(no, "vertex id out of range");
            if (seen[id]) fail(no, "duplicate vertex line for " + std::to_string(id));
            seen[id] = true;
            for (std::size_t j = 3; j < toks.size(); ++j)
                rot[id].push_back(parse_int(toks[j], no));
        } else if (toks[0] == "outer") {
            if (toks.size() < 2 || toks[1] != ":") fail(no, "expected 'outer : <cycle>'");
            if (has_outer) fail(no, "duplicate outer line");
            has_outer = true;
            for (std::size_t j = 2; j < toks.size(); ++j)
                outer.push_back(parse_int(toks[j], no));
        } else {
            fail(no, "unknown directive '" + toks[0] + "'");
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v])
            throw Error(ErrorCode::parse_error, "missing vertex line for " + std::to_string(v));

    PlanarGraph g = PlanarGraph::build_from_rotation(rot);
    if (has_outer) {
        auto fid = g.find_face_of_cycle(outer);
        if (!fid) throw Error(ErrorCode::parse_error, "outer cycle does not bound a face");
        g = g.with_outer_face(*fid);
    }
    return g;
}

PlanarGraph parse_graph_file(const std::string& path) {
    return parse_graph(read_text_file(path));
}

std::string format_graph(const PlanarGraph& g) {
    std::ostringstream out;
    out << "planar " << g.vertex_count() << "\n";
    for (int v : g.vertices()) {
        out << "v " << v << " :";
        for (int w : g.neighbors(v)) out << " " << w;
        out << "\n";
    }
    if (g.outer_face()) {
        const Face& f = g.outer();
        if (f.is_cycle()) {
            out << "outer :";
            for (int v : f.walk) out << " " << v;
            out << "\n";
        }
    }
    return out.str();
}

ListAssignment parse_lists(const std::string& text) {
    ListAssignment L;
    for (auto& [no, toks] : tokenize(text)) {
        if (toks[0] != "L" || toks.size() < 3 || toks[2] != ":")
            fail(no, "expected 'L <vertex> : <colors>'");
        int v = parse_int(toks[1], no);
        if (L.has(v)) fail(no, "duplicate list for vertex " + std::to_string(v));
        std::vector<int> colors;
        for (std::size_t j = 3; j < toks.size(); ++j) colors.push_back(parse_int(toks[j], no));
        L.set(v, colors);
    }
    return L;
}

ListAssignment parse_lists_file(const std::string& path) {
    return parse_lists(read_text_file(path));
}

std::string format_lists(const ListAssignment& L) {
    std::ostringstream out;
    for (const auto& [v, colors] : L.lists) {
        out << "L " << v << " :";
        for (int c : colors) out << " " << c;
        out << "\n";
    }
    return out.str();
}

Request parse_request(const std::string& text) {
    Request r;
    for (auto& [no, toks] : tokenize(text)) {
        if (toks[0] != "r" || toks.size() != 3) fail(no, "expected 'r <vertex> <color>'");
        r.entries.push_back({parse_int(toks[1], no), parse_int(toks[2], no)});
    }
    return r;
}

Request parse_request_file(const std::string& path) {
    return parse_request(read_text_file(path));
}

std::string format_request(const Request& r) {
    std::ostringstream out;
    for (auto& [v, c] : r.entries) out << "r " << v << " " << c << "\n";
    return out.str();
}

WeightedRequest parse_weighted_request(const std::string& text) {
    WeightedRequest r;
    for (auto& [no, toks] : tokenize(text)) {
        if (toks[0] != "w" || toks.size() != 4)
            fail(no, "expected 'w <vertex> <color> <weight>'");
        r.entries.push_back(
            {parse_int(toks[1], no), parse_int(toks[2], no), parse_weight(toks[3], no)});
    }
    return r;
}

WeightedRequest parse_weighted_request_file(const std::string& path) {
    return parse_weighted_request(read_text_file(path));
}

std::string format_weighted_request(const WeightedRequest& r) {
    std::ostringstream out;
    for (auto& e : r.entries)
        out << "w " << e.vertex << " " << e.color << " " << e.weight.str() << "\n";
    return out.str();
}

}  // namespace flexcolor
