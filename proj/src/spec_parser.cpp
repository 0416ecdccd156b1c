#include "corona/spec_parser.hpp"

#include <cctype>
#include <optional>

#include "corona/errors.hpp"

namespace corona {

namespace {

struct IntRange {
    int lo = 0, hi = 0;
};

// Parse tree with ranges still unexpanded.
struct RangedSpec {
    GraphSpec::Kind kind = GraphSpec::Kind::Null;
    IntRange a{}, b{};
    std::vector<RangedSpec> children;
    std::vector<std::pair<int, int>> explicit_edges;
};

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool try_consume(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c, const char* expected_set) {
        if (!try_consume(c))
            throw ParseError(pos, "parse error at position " + std::to_string(pos) + ": expected " +
                                      expected_set);
    }
    std::string identifier() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
            ++pos;
        std::string word = text.substr(start, pos - start);
        for (char& c : word) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return word;
    }
    int integer() {
        skip_space();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError(pos, "parse error at position " + std::to_string(pos) +
                                      ": expected an integer");
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000)
                throw ParseError(pos, "parse error at position " + std::to_string(pos) +
                                          ": integer too large");
            ++pos;
        }
        return static_cast<int>(value);
    }
};

struct Parser {
    Lexer lex;
    bool allow_ranges;

    IntRange range_value() {
        int lo = lex.integer();
        if (lex.peek() == '.' && lex.pos + 1 < lex.text.size() && lex.text[lex.pos + 1] == '.') {
            if (!allow_ranges)
                throw ParseError(lex.pos, "parse error at position " + std::to_string(lex.pos) +
                                              ": ranges are not allowed here");
            lex.pos += 2;
            int hi = lex.integer();
            if (hi < lo)
                throw ParseError(lex.pos, "parse error at position " + std::to_string(lex.pos) +
                                              ": empty range");
            return {lo, hi};
        }
        return {lo, lo};
    }

    RangedSpec spec() {
        const std::size_t word_pos = lex.pos;
        const std::string word = lex.identifier();
        RangedSpec node;
        if (word == "path") node.kind = GraphSpec::Kind::Path;
        else if (word == "cycle") node.kind = GraphSpec::Kind::Cycle;
        else if (word == "complete") node.kind = GraphSpec::Kind::Complete;
        else if (word == "star") node.kind = GraphSpec::Kind::Star;
        else if (word == "kbip") node.kind = GraphSpec::Kind::CompleteBipartite;
        else if (word == "null") node.kind = GraphSpec::Kind::Null;
        else if (word == "union") node.kind = GraphSpec::Kind::Union;
        else if (word == "corona") node.kind = GraphSpec::Kind::Corona;
        else if (word == "bristle") node.kind = GraphSpec::Kind::Bristle;
        else if (word == "graph") node.kind = GraphSpec::Kind::Explicit;
        else
            throw ParseError(word_pos,
                             "parse error at position " + std::to_string(word_pos) +
                                 ": expected one of path, cycle, complete, star, kbip, null, "
                                 "union, corona, bristle, graph");

        lex.expect('(', "'('");
        switch (node.kind) {
            case GraphSpec::Kind::Path:
            case GraphSpec::Kind::Cycle:
            case GraphSpec::Kind::Complete:
            case GraphSpec::Kind::Star:
            case GraphSpec::Kind::Null:
                node.a = range_value();
                break;
            case GraphSpec::Kind::CompleteBipartite:
                node.a = range_value();
                lex.expect(',', "','");
                node.b = range_value();
                break;
            case GraphSpec::Kind::Union:
                if (lex.peek() != ')') {
                    node.children.push_back(spec());
                    while (lex.try_consume(',')) node.children.push_back(spec());
                }
                break;
            case GraphSpec::Kind::Corona:
                node.children.push_back(spec());
                lex.expect(',', "','");
                node.children.push_back(spec());
                break;
            case GraphSpec::Kind::Bristle:
                node.children.push_back(spec());
                lex.expect(',', "','");
                node.a = range_value();
                break;
            case GraphSpec::Kind::Explicit: {
                node.a = range_value();
                if (node.a.lo != node.a.hi)
                    throw ParseError(lex.pos, "parse error at position " + std::to_string(lex.pos) +
                                                  ": explicit graphs take a single vertex count");
                if (lex.try_consume(';') && lex.peek() != ')') {
                    do {
                        int u = lex.integer();
                        lex.expect('-', "'-'");
                        int v = lex.integer();
                        // DSL endpoints are 1-based.
                        node.explicit_edges.emplace_back(u - 1, v - 1);
                    } while (lex.try_consume(','));
                }
                break;
            }
        }
        lex.expect(')', "')'");
        return node;
    }
};

void expand(const RangedSpec& node, std::vector<GraphSpec>& out);

void cross_children(const RangedSpec& node, std::size_t index, std::vector<GraphSpec>& picked,
                    std::vector<GraphSpec>& out) {
    if (index == node.children.size()) {
        GraphSpec spec;
        spec.kind = node.kind;
        spec.children = picked;
        if (node.kind == GraphSpec::Kind::Bristle) {
            for (int t = node.a.lo; t <= node.a.hi; ++t) {
                GraphSpec with_t = spec;
                with_t.a = t;
                out.push_back(std::move(with_t));
            }
        } else {
            out.push_back(std::move(spec));
        }
        return;
    }
    std::vector<GraphSpec> options;
    expand(node.children[index], options);
    for (const auto& option : options) {
        picked.push_back(option);
        cross_children(node, index + 1, picked, out);
        picked.pop_back();
    }
}

void expand(const RangedSpec& node, std::vector<GraphSpec>& out) {
    switch (node.kind) {
        case GraphSpec::Kind::Path:
        case GraphSpec::Kind::Cycle:
        case GraphSpec::Kind::Complete:
        case GraphSpec::Kind::Star:
        case GraphSpec::Kind::Null:
            for (int a = node.a.lo; a <= node.a.hi; ++a) {
                GraphSpec spec;
                spec.kind = node.kind;
                spec.a = a;
                out.push_back(std::move(spec));
            }
            return;
        case GraphSpec::Kind::CompleteBipartite:
            for (int a = node.a.lo; a <= node.a.hi; ++a)
                for (int b = node.b.lo; b <= node.b.hi; ++b) {
                    GraphSpec spec;
                    spec.kind = node.kind;
                    spec.a = a;
                    spec.b = b;
                    out.push_back(std::move(spec));
                }
            return;
        case GraphSpec::Kind::Union:
        case GraphSpec::Kind::Corona:
        case GraphSpec::Kind::Bristle: {
            std::vector<GraphSpec> picked;
            cross_children(node, 0, picked, out);
            return;
        }
        case GraphSpec::Kind::Explicit: {
            GraphSpec spec;
            spec.kind = node.kind;
            spec.a = node.a.lo;
            spec.explicit_edges = node.explicit_edges;
            out.push_back(std::move(spec));
            return;
        }
    }
}

}  // namespace

GraphSpec parse_spec(const std::string& text) {
    Parser parser{Lexer{text}, /*allow_ranges=*/false};
    RangedSpec node = parser.spec();
    if (!parser.lex.at_end())
        throw ParseError(parser.lex.pos, "parse error at position " +
                                             std::to_string(parser.lex.pos) +
                                             ": expected end of input");
    std::vector<GraphSpec> out;
    expand(node, out);
    return out.front();
}

std::vector<GraphSpec> parse_compare_instances(const std::string& text) {
    Parser parser{Lexer{text}, /*allow_ranges=*/true};
    RangedSpec spine = parser.spec();

    std::vector<GraphSpec> spines;
    expand(spine, spines);

    parser.lex.skip_space();
    if (parser.lex.at_end()) return spines;

    const std::size_t word_pos = parser.lex.pos;
    if (parser.lex.identifier() != "x")
        throw ParseError(word_pos, "parse error at position " + std::to_string(word_pos) +
                                       ": expected 'x' or end of input");
    parser.lex.expect('{', "'{'");
    std::vector<RangedSpec> h_templates;
    h_templates.push_back(parser.spec());
    while (parser.lex.try_consume(',')) h_templates.push_back(parser.spec());
    parser.lex.expect('}', "'}'");
    if (!parser.lex.at_end())
        throw ParseError(parser.lex.pos, "parse error at position " +
                                             std::to_string(parser.lex.pos) +
                                             ": expected end of input");

    std::vector<GraphSpec> instances;
    for (const auto& x : spines)
        for (const auto& h_template : h_templates) {
            std::vector<GraphSpec> hs;
            expand(h_template, hs);
            for (const auto& h : hs) instances.push_back(GraphSpec::corona_of(x, h));
        }
    return instances;
}

}  // namespace corona
