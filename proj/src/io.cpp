#include "minorpack/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace minorpack {

namespace {

struct Builder {
    std::map<std::string, int> ids;
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    int declared = 0;

    int vertex(const std::string& name) {
        auto it = ids.find(name);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(names.size());
        ids.emplace(name, id);
        names.push_back(name);
        return id;
    }

    Graph finish() const {
        int n = std::max(declared, static_cast<int>(names.size()));
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        if (!names.empty()) {
            std::vector<std::string> labels(n);
            for (size_t i = 0; i < names.size(); ++i) labels[i] = names[i];
            g.set_labels(std::move(labels));
        }
        return g;
    }
};

Graph parse_edge_list(const std::string& text) {
    Builder b;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        std::string body = (hash == std::string::npos) ? line : line.substr(0, hash);
        if (hash != std::string::npos) {
            std::istringstream pragma(line.substr(hash + 1));
            std::string word;
            long n;
            if (pragma >> word >> n && word == "vertices" && n >= 0)
                b.declared = std::max<long>(b.declared, n);
        }
        std::istringstream ls(body);
        std::string u, v, extra;
        if (!(ls >> u)) continue;  // blank
        if (!(ls >> v)) throw ParseError(lineno, "expected two vertex tokens");
        if (ls >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
        int a = b.vertex(u), c = b.vertex(v);
        if (a == c) throw ParseError(lineno, "loop edge '" + u + " " + v + "'");
        b.edges.emplace_back(a, c);
    }
    return b.finish();
}

struct DotLexer {
    const std::string& text;
    size_t pos = 0;
    int line = 1;

    explicit DotLexer(const std::string& t) : text(t) {}

    std::string next() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '\n') { ++line; ++pos; continue; }
            if (std::isspace(static_cast<unsigned char>(c))) { ++pos; continue; }
            if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
                continue;
            }
            break;
        }
        if (pos >= text.size()) return "";
        char c = text[pos];
        if (c == '{' || c == '}' || c == ';') { ++pos; return std::string(1, c); }
        if (c == '-' && pos + 1 < text.size() && text[pos + 1] == '-') {
            pos += 2;
            return "--";
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            return text.substr(start, pos - start);
        }
        throw ParseError(line, std::string("unexpected character '") + c + "'");
    }
};

Graph parse_dot(const std::string& text) {
    DotLexer lex(text);
    Builder b;
    std::string tok = lex.next();
    if (tok != "graph") throw ParseError(lex.line, "expected 'graph'");
    tok = lex.next();
    if (tok != "{") {
        // optional graph name
        tok = lex.next();
        if (tok != "{") throw ParseError(lex.line, "expected '{'");
    }
    for (;;) {
        tok = lex.next();
        if (tok == "}") break;
        if (tok.empty()) throw ParseError(lex.line, "unexpected end of input");
        if (tok == ";") continue;
        std::string u = tok;
        tok = lex.next();
        if (tok == ";") {  // bare vertex
            b.vertex(u);
            continue;
        }
        if (tok != "--") throw ParseError(lex.line, "expected '--' or ';'");
        std::string v = lex.next();
        if (v.empty() || v == ";" || v == "--" || v == "{" || v == "}")
            throw ParseError(lex.line, "expected identifier after '--'");
        int a = b.vertex(u), c = b.vertex(v);
        if (a == c) throw ParseError(lex.line, "loop edge '" + u + " -- " + v + "'");
        b.edges.emplace_back(a, c);
        tok = lex.next();
        if (tok != ";") throw ParseError(lex.line, "expected ';'");
    }
    if (!lex.next().empty()) throw ParseError(lex.line, "trailing tokens after '}'");
    return b.finish();
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_dot(text);
}

std::string format_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    if (format == GraphFormat::EdgeList) {
        out << "# vertices " << g.vertex_count() << "\n";
        for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    } else {
        out << "graph {\n";
        std::vector<char> touched(g.vertex_count(), 0);
        for (auto [u, v] : g.edges()) {
            out << "  " << u << " -- " << v << ";\n";
            touched[u] = touched[v] = 1;
        }
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!touched[v]) out << "  " << v << ";\n";
        out << "}\n";
    }
    return out.str();
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    auto first = text.find_first_not_of(" \t\r\n");
    bool dot = first != std::string::npos && text.compare(first, 5, "graph") == 0;
    return parse_graph(text, dot ? GraphFormat::Dot : GraphFormat::EdgeList);
}

void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    out << format_graph(g);
}

}  // namespace minorpack
