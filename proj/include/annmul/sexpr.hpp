#pragma once

/**
 * @file sexpr.hpp
 * @brief S-expression reader and printer for the construction DSL.
 *
 * Lists use (), [] or {}. Commas count as whitespace and ';' starts a line comment.
 * Atoms are maximal runs of other characters, so "x^2+x" and "2*y" are single atoms.
 */

#include <string>
#include <string_view>
#include <vector>

#include "annmul/error.hpp"

namespace annmul::sexpr {

struct Position {
    std::size_t line = 1;
    std::size_t column = 1;
};

struct Node {
    bool is_list = false;
    /// '(' , '[' or '{' for lists.
    char open = '(';
    std::string atom;
    std::vector<Node> children;
    Position pos;

    bool is_atom() const { return !is_list; }
    /// Head atom of a list, or empty.
    std::string head() const {
        if (!is_list || children.empty() || !children.front().is_atom()) return {};
        return children.front().atom;
    }
    std::string where() const { return std::to_string(pos.line) + ":" + std::to_string(pos.column); }

    friend bool operator==(const Node& a, const Node& b) {
        return a.is_list == b.is_list && a.open == b.open && a.atom == b.atom && a.children == b.children;
    }
};

inline Node make_atom(std::string s) {
    Node n;
    n.atom = std::move(s);
    return n;
}

inline Node make_list(std::vector<Node> children, char open = '(') {
    Node n;
    n.is_list = true;
    n.open = open;
    n.children = std::move(children);
    return n;
}

inline char closing(char open) { return open == '(' ? ')' : open == '[' ? ']' : '}'; }

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    std::vector<Node> read_all() {
        std::vector<Node> out;
        skip();
        while (i_ < text_.size()) {
            out.push_back(read());
            skip();
        }
        return out;
    }

private:
    static bool is_delim(char c) {
        return c == '(' || c == ')' || c == '[' || c == ']' || c == '{' || c == '}' || c == ',' || c == ';' ||
               c == ' ' || c == '\t' || c == '\n' || c == '\r';
    }

    [[noreturn]] void fail(const std::string& msg, Position p) const {
        throw Error(ErrorCode::SyntaxError,
                    std::to_string(p.line) + ":" + std::to_string(p.column) + ": " + msg);
    }

    void advance() {
        if (text_[i_] == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else if ((static_cast<unsigned char>(text_[i_]) & 0xC0) != 0x80) {
            ++pos_.column;
        }
        ++i_;
    }

    void skip() {
        while (i_ < text_.size()) {
            const char c = text_[i_];
            if (c == ';') {
                while (i_ < text_.size() && text_[i_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
                advance();
            } else {
                break;
            }
        }
    }

    Node read() {
        const Position start = pos_;
        const char c = text_[i_];
        if (c == ')' || c == ']' || c == '}') fail(std::string("unexpected '") + c + "', expected an atom or '('", start);
        if (c == '(' || c == '[' || c == '{') {
            Node n;
            n.is_list = true;
            n.open = c;
            n.pos = start;
            advance();
            skip();
            while (true) {
                if (i_ >= text_.size())
                    fail(std::string("unterminated list, expected '") + closing(c) + "'", start);
                const char d = text_[i_];
                if (d == ')' || d == ']' || d == '}') {
                    if (d != closing(c)) fail(std::string("mismatched '") + d + "', expected '" + closing(c) + "'", pos_);
                    advance();
                    return n;
                }
                n.children.push_back(read());
                skip();
            }
        }
        Node n;
        n.pos = start;
        while (i_ < text_.size() && !is_delim(text_[i_])) {
            n.atom += text_[i_];
            advance();
        }
        return n;
    }

    std::string_view text_;
    std::size_t i_ = 0;
    Position pos_;
};

inline std::vector<Node> parse(std::string_view text) { return Reader(text).read_all(); }

/// Parses exactly one form.
inline Node parse_one(std::string_view text) {
    auto forms = parse(text);
    if (forms.size() != 1)
        throw Error(ErrorCode::SyntaxError, "expected one form, found " + std::to_string(forms.size()));
    return std::move(forms.front());
}

inline std::string print(const Node& n) {
    if (n.is_atom()) return n.atom;
    std::string s(1, n.open);
    for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) s += ' ';
        s += print(n.children[i]);
    }
    return s + closing(n.open);
}

} // namespace annmul::sexpr
