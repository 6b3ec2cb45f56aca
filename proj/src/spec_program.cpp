#include "qdcs/spec_program.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace qdcs {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class SpecScanner {
public:
    explicit SpecScanner(std::string_view text) : text_(text) {}

    void skip() {
        for (;;) {
            while (!at_raw_end() && std::isspace(static_cast<unsigned char>(cur()))) advance();
            if (!at_raw_end() && cur() == '/' && i_ + 1 < text_.size() && text_[i_ + 1] == '/') {
                while (!at_raw_end() && cur() != '\n') advance();
                continue;
            }
            return;
        }
    }

    bool at_end() {
        skip();
        return at_raw_end();
    }

    int line() const { return line_; }
    int col() const { return col_; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("line " + std::to_string(line_) + ", column " + std::to_string(col_) + ": " + msg);
    }

    char peek() {
        skip();
        if (at_raw_end()) fail("unexpected end of file");
        return cur();
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "', found '" + cur() + "'");
        advance();
    }

    std::string word() {
        if (!ident_start(peek())) fail("expected an identifier");
        std::string w;
        while (!at_raw_end() && ident_char(cur())) {
            w += cur();
            advance();
        }
        return w;
    }

    // A graph node id: any run without whitespace, ';', ',', '(' or ')'.
    std::string node_id() {
        peek();
        std::string w;
        while (!at_raw_end() && !std::isspace(static_cast<unsigned char>(cur())) && cur() != ';' &&
               cur() != ',' && cur() != '(' && cur() != ')') {
            w += cur();
            advance();
        }
        if (w.empty()) fail("expected a node id");
        return w;
    }

    std::string quoted() {
        expect('"');
        std::string s;
        while (!at_raw_end() && cur() != '"') {
            s += cur();
            advance();
        }
        if (at_raw_end()) fail("unterminated string");
        advance();  // closing quote
        return s;
    }

    Rgb color() {
        if (peek() != '#') fail("expected a #rrggbb color");
        std::string lit;
        lit += cur();
        advance();
        for (int k = 0; k < 6; ++k) {
            if (at_raw_end() || !std::isxdigit(static_cast<unsigned char>(cur())))
                fail("expected a #rrggbb color");
            lit += cur();
            advance();
        }
        return parse_color(lit);
    }

    int integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        long v = 0;
        while (!at_raw_end() && std::isdigit(static_cast<unsigned char>(cur()))) {
            v = v * 10 + (cur() - '0');
            if (v > 1'000'000'000) fail("number out of range");
            advance();
        }
        return static_cast<int>(v);
    }

    // Raw text up to (not including) the next ';' at this level.
    std::string until_semicolon() {
        skip();
        std::string s;
        while (!at_raw_end() && cur() != ';') {
            s += cur();
            advance();
        }
        if (at_raw_end()) fail("missing ';'");
        return s;
    }

private:
    bool at_raw_end() const { return i_ >= text_.size(); }
    char cur() const { return text_[i_]; }
    void advance() {
        if (text_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    std::string_view text_;
    size_t i_ = 0;
    int line_ = 1, col_ = 1;
};

bool mentions_atom(const SurfacePtr& t, const std::string& name) {
    if (!t) return false;
    if (t->op == SurfaceOp::Atom && t->atom == name) return true;
    return mentions_atom(t->lhs, name) || mentions_atom(t->rhs, name);
}

[[noreturn]] void rethrow_in(const char* what, int line, const Error& e) {
    throw Error(std::string(what) + " at line " + std::to_string(line) + ": " + e.what());
}

}  // namespace

SpecProgram parse_spec_program(std::string_view text) {
    SpecProgram prog;
    SpecScanner sc(text);
    while (!sc.at_end()) {
        int stmt_line = sc.line();
        std::string kw = sc.word();
        if (kw == "let") {
            std::string name = sc.word();
            if (prog.macros.count(name))
                throw Error("line " + std::to_string(stmt_line) + ": duplicate macro '" + name + "'");
            sc.expect('=');
            std::string body = sc.until_semicolon();
            sc.expect(';');
            SurfacePtr term;
            try {
                term = parse_surface(body, &prog.macros);
            } catch (const Error& e) {
                rethrow_in(("in let " + name).c_str(), stmt_line, e);
            }
            if (mentions_atom(term, name))
                throw Error("line " + std::to_string(stmt_line) + ": macro '" + name +
                            "' refers to itself");
            prog.macros.emplace(std::move(name), std::move(term));
        } else if (kw == "prop") {
            std::string name = sc.word();
            for (const auto& [n, c] : prog.palette)
                if (n == name)
                    throw Error("line " + std::to_string(stmt_line) + ": duplicate prop '" + name + "'");
            sc.expect('=');
            Rgb c = sc.color();
            sc.expect(';');
            prog.palette.emplace_back(std::move(name), c);
        } else if (kw == "paint") {
            std::string src = sc.quoted();
            Rgb c = sc.color();
            sc.expect(';');
            IndividualFormula f{};
            try {
                f = parse_individual(prog.arena, src, &prog.macros);
            } catch (const Error& e) {
                rethrow_in("in paint formula", stmt_line, e);
            }
            for (const auto& p : prog.paints)
                if (p.color == c)
                    throw Error("line " + std::to_string(stmt_line) + ": paint color " + color_name(c) +
                                " already used; painted colors must be distinct");
            prog.paints.push_back({f, c, std::move(src)});
        } else if (kw == "ask") {
            std::string src = sc.quoted();
            AskCommand ask;
            try {
                ask.formula = parse_collective(prog.arena, src, &prog.macros);
            } catch (const Error& e) {
                rethrow_in("in ask formula", stmt_line, e);
            }
            ask.source = std::move(src);
            if (sc.peek() != ';') {
                std::string at = sc.word();
                if (at != "at")
                    throw Error("line " + std::to_string(stmt_line) + ": expected 'at' or ';' after ask");
                ask.has_at = true;
                if (sc.peek() == '(') {
                    for (;;) {
                        sc.expect('(');
                        int x = sc.integer();
                        sc.expect(',');
                        int y = sc.integer();
                        sc.expect(')');
                        ask.at_coords.emplace_back(x, y);
                        if (sc.peek() == ',') {
                            sc.expect(',');
                            continue;
                        }
                        break;
                    }
                } else {
                    while (sc.peek() != ';') ask.at_ids.push_back(sc.node_id());
                }
            }
            sc.expect(';');
            prog.asks.push_back(std::move(ask));
        } else {
            throw Error("line " + std::to_string(stmt_line) + ": unknown statement '" + kw +
                        "' (expected let, prop, paint, or ask)");
        }
    }
    return prog;
}

SpecProgram load_spec_program(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open spec '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_program(buf.str());
}

}  // namespace qdcs
