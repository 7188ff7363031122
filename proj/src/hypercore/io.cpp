#include "hypertheta/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "hypertheta/error.hpp"

namespace hypertheta {

namespace {

struct Token {
    std::string_view text;
    int column;  // 1-based
};

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next non-comment, non-blank line split on single spaces; false at EOF.
    bool next(std::vector<Token>& tokens) {
        while (std::getline(in_, line_)) {
            ++line_no_;
            if (!line_.empty() && line_.back() == '\r') line_.pop_back();
            if (line_.empty() || line_.front() == '#') continue;
            tokens.clear();
            std::string_view rest(line_);
            int col = 1;
            for (;;) {
                auto sp = rest.find(' ');
                std::string_view tok = rest.substr(0, sp);
                if (tok.empty()) throw FormatError("expected a token, found a space or end of line", line_no_, col);
                tokens.push_back({tok, col});
                if (sp == std::string_view::npos) break;
                col += static_cast<int>(sp) + 1;
                rest.remove_prefix(sp + 1);
            }
            return true;
        }
        return false;
    }

    int line() const { return line_no_; }

    long integer(const Token& t) const {
        long v = 0;
        bool neg = false;
        std::size_t i = 0;
        if (!t.text.empty() && t.text[0] == '-') {
            neg = true;
            i = 1;
        }
        if (i == t.text.size()) throw FormatError("expected an integer", line_no_, t.column);
        for (; i < t.text.size(); ++i) {
            char c = t.text[i];
            if (c < '0' || c > '9')
                throw FormatError("expected an integer, found '" + std::string(t.text) + "'", line_no_, t.column);
            v = v * 10 + (c - '0');
            if (v > 1'000'000'000L) throw FormatError("integer too large", line_no_, t.column);
        }
        return neg ? -v : v;
    }

    Rational rational(const Token& t) const {
        try {
            return parse_rational(t.text);
        } catch (const InputError& e) {
            throw FormatError(e.what(), line_no_, t.column);
        }
    }

private:
    std::istream& in_;
    std::string line_;
    int line_no_ = 0;
};

struct Header {
    int r, n, m;
};

Header read_header(LineReader& reader) {
    std::vector<Token> tok;
    if (!reader.next(tok)) throw FormatError("missing header line 'r n m'", reader.line() + 1, 1);
    if (tok.size() != 3) throw FormatError("header must have exactly 3 fields 'r n m'", reader.line(), 1);
    long r = reader.integer(tok[0]), n = reader.integer(tok[1]), m = reader.integer(tok[2]);
    if (r < 1) throw FormatError("uniformity must be at least 1", reader.line(), tok[0].column);
    if (n < 0) throw FormatError("vertex count must be nonnegative", reader.line(), tok[1].column);
    if (m < 0) throw FormatError("edge count must be nonnegative", reader.line(), tok[2].column);
    return {static_cast<int>(r), static_cast<int>(n), static_cast<int>(m)};
}

Edge read_edge(LineReader& reader, const std::vector<Token>& tok, const Header& h) {
    Edge e;
    for (int i = 0; i < h.r; ++i) {
        const Token& t = tok[static_cast<std::size_t>(i)];
        long v = reader.integer(t);
        if (v < 0 || v >= h.n)
            throw FormatError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(h.n) + ")",
                              reader.line(), t.column);
        if (!e.empty() && v <= e.back())
            throw FormatError("edge vertices must be strictly increasing", reader.line(), t.column);
        e.push_back(static_cast<Vertex>(v));
    }
    return e;
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return in;
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
    LineReader reader(in);
    Header h = read_header(reader);
    std::vector<Edge> edges;
    std::vector<Token> tok;
    for (int k = 0; k < h.m; ++k) {
        if (!reader.next(tok)) throw FormatError("expected " + std::to_string(h.m) + " edge lines", reader.line() + 1, 1);
        if (static_cast<int>(tok.size()) != h.r)
            throw FormatError("edge line must have exactly " + std::to_string(h.r) + " vertices", reader.line(), 1);
        edges.push_back(read_edge(reader, tok, h));
    }
    if (reader.next(tok)) throw FormatError("unexpected content after the last edge", reader.line(), 1);
    return Hypergraph(h.r, h.n, std::move(edges));
}

Hypergraph read_hypergraph_file(const std::string& path) {
    auto in = open(path);
    return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << h.uniformity() << ' ' << h.order() << ' ' << h.edge_count() << '\n';
    for (const Edge& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

std::vector<Rational> read_weights_exact(std::istream& in, int n) {
    LineReader reader(in);
    std::vector<Rational> w;
    std::vector<Token> tok;
    while (reader.next(tok)) {
        if (tok.size() != 1) throw FormatError("weight line must hold a single number", reader.line(), tok[1].column);
        if (static_cast<int>(w.size()) == n) throw FormatError("more than " + std::to_string(n) + " weights", reader.line(), 1);
        w.push_back(reader.rational(tok[0]));
    }
    if (static_cast<int>(w.size()) != n)
        throw FormatError("expected " + std::to_string(n) + " weights, found " + std::to_string(w.size()),
                          reader.line() + 1, 1);
    return w;
}

std::vector<Rational> read_weights_file_exact(const std::string& path, int n) {
    auto in = open(path);
    return read_weights_exact(in, n);
}

WeightVector read_weights_file(const std::string& path, int n) {
    WeightVector out;
    for (const Rational& q : read_weights_file_exact(path, n)) out.push_back(to_double(q));
    return out;
}

WeightedEdgeList read_weighted_edges(std::istream& in) {
    LineReader reader(in);
    Header h = read_header(reader);
    WeightedEdgeList out{h.r, h.n, {}, {}};
    std::vector<Token> tok;
    for (int k = 0; k < h.m; ++k) {
        if (!reader.next(tok)) throw FormatError("expected " + std::to_string(h.m) + " edge lines", reader.line() + 1, 1);
        if (static_cast<int>(tok.size()) != h.r + 1)
            throw FormatError("weighted edge line must have " + std::to_string(h.r) + " vertices and a weight",
                              reader.line(), 1);
        out.edges.push_back(read_edge(reader, tok, h));
        Rational wt = reader.rational(tok.back());
        if (sgn(wt) < 0) throw FormatError("edge weight must be nonnegative", reader.line(), tok.back().column);
        out.weights.push_back(wt);
    }
    if (reader.next(tok)) throw FormatError("unexpected content after the last edge", reader.line(), 1);
    return out;
}

WeightedEdgeList read_weighted_edges_file(const std::string& path) {
    auto in = open(path);
    return read_weighted_edges(in);
}

}  // namespace hypertheta
