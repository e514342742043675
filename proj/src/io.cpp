#include "rp4/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace rp4 {

namespace {

SimplicialComplex parse_bracket(std::istream& in) {
    std::string text, line;
    while (std::getline(in, line)) text += line;
    std::vector<Simplex> facets;
    std::size_t i = 0;
    auto skip = [&] { while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])))) ++i; };
    auto expect = [&](char ch) {
        skip();
        if (i >= text.size() || text[i] != ch)
            throw ParseError(std::string("bracket format: expected '") + ch + "'");
        ++i;
    };
    expect('[');
    skip();
    while (i < text.size() && text[i] != ']') {
        expect('[');
        std::vector<VertexId> verts;
        while (true) {
            skip();
            if (i >= text.size()) throw ParseError("bracket format: unterminated facet");
            if (text[i] == ']') { ++i; break; }
            if (text[i] == ',') { ++i; continue; }
            std::size_t end = 0;
            int v;
            try {
                v = std::stoi(text.substr(i), &end);
            } catch (const std::exception&) {
                throw ParseError("bracket format: bad integer");
            }
            if (v <= 0) throw ParseError("bracket format: ids must be positive");
            verts.push_back(v);
            i += end;
        }
        try {
            facets.push_back(Simplex(std::move(verts)));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        skip();
        if (i < text.size() && text[i] == ',') { ++i; skip(); }
    }
    expect(']');
    if (facets.empty()) throw ParseError("bracket format: no facets");
    try {
        return SimplicialComplex::from_facets(std::move(facets));
    } catch (const ComplexError& e) {
        throw ParseError(e.what());
    }
}

SimplicialComplex parse_fl(std::istream& in, std::string header) {
    int d = -2;
    long long n = -1, fcount = -1;
    {
        std::istringstream hs(header);
        std::string tok;
        while (hs >> tok) {
            if (tok.rfind("d=", 0) == 0) d = std::stoi(tok.substr(2));
            else if (tok.rfind("n=", 0) == 0) n = std::stoll(tok.substr(2));
            else if (tok.rfind("f=", 0) == 0) fcount = std::stoll(tok.substr(2));
            else throw ParseError("fl format: bad header token '" + tok + "'");
        }
    }
    if (d < 0 || n < 1 || fcount < 1)
        throw ParseError("fl format: header must give d=, n=, f=");

    std::vector<Simplex> facets;
    std::map<VertexId, std::string> labels;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ls(line.substr(1));
            std::string kw;
            ls >> kw;
            if (kw == "label") {
                int v;
                std::string lab;
                if (ls >> v >> lab) labels[v] = lab;
                else throw ParseError("fl format: bad label line");
            }
            continue;  // other comments ignored
        }
        std::istringstream ls(line);
        std::vector<VertexId> verts;
        long long v;
        while (ls >> v) {
            if (v <= 0) throw ParseError("fl format: ids must be positive");
            verts.push_back(static_cast<VertexId>(v));
        }
        if (!ls.eof()) throw ParseError("fl format: bad facet line: " + line);
        if (verts.empty()) continue;
        try {
            facets.push_back(Simplex(std::move(verts)));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    SimplicialComplex c;
    try {
        c = SimplicialComplex::from_facets(std::move(facets), std::move(labels));
    } catch (const ComplexError& e) {
        throw ParseError(e.what());
    }
    if (c.dim() != d)
        throw ParseError("fl format: header d=" + std::to_string(d) +
                         " but facets have dimension " + std::to_string(c.dim()));
    if (c.vertex_count() != n)
        throw ParseError("fl format: header n=" + std::to_string(n) + " but " +
                         std::to_string(c.vertex_count()) + " vertices appear");
    if (c.facet_count() != fcount)
        throw ParseError("fl format: header f=" + std::to_string(fcount) + " but " +
                         std::to_string(c.facet_count()) + " facets appear");
    return c;
}

}  // namespace

SimplicialComplex read_complex(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '[') {
            // put the line back in front of the rest of the stream
            std::string rest((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            std::istringstream all(line.substr(i) + "\n" + rest);
            return parse_bracket(all);
        }
        return parse_fl(in, line.substr(i));
    }
    throw ParseError("empty input");
}

SimplicialComplex read_complex_file(const std::string& path) {
    if (path == "-") return read_complex(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_complex(in);
}

void write_fl(std::ostream& out, const SimplicialComplex& c) {
    out << "d=" << c.dim() << " n=" << c.vertex_count()
        << " f=" << c.facet_count() << "\n";
    for (const Simplex& f : c.facets()) {
        bool first = true;
        for (VertexId v : f) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << "\n";
    }
    for (const auto& [v, lab] : c.labels())
        out << "# label " << v << " " << lab << "\n";
}

void write_bracket(std::ostream& out, const SimplicialComplex& c) {
    out << '[';
    bool first_f = true;
    for (const Simplex& f : c.facets()) {
        if (!first_f) out << ',';
        out << '[';
        bool first_v = true;
        for (VertexId v : f) {
            if (!first_v) out << ',';
            out << v;
            first_v = false;
        }
        out << ']';
        first_f = false;
    }
    out << "]\n";
}

void write_complex_file(const std::string& path, const SimplicialComplex& c,
                        bool bracket) {
    if (path == "-") {
        bracket ? write_bracket(std::cout, c) : write_fl(std::cout, c);
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    bracket ? write_bracket(out, c) : write_fl(out, c);
}

}  // namespace rp4
