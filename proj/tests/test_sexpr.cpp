#include <gtest/gtest.h>

#include "annmul/sexpr.hpp"

using namespace annmul;
using namespace annmul::sexpr;

namespace {

std::string syntax_message(std::string_view text) {
    try {
        parse(text);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
        return e.what();
    }
    ADD_FAILURE() << "no error for " << text;
    return {};
}

} // namespace

TEST(Sexpr, AtomsAndLists) {
    const auto forms = parse("(Z 12) foo (a [b c] {d})");
    ASSERT_EQ(forms.size(), 3u);
    EXPECT_EQ(forms[0].head(), "Z");
    EXPECT_TRUE(forms[1].is_atom());
    EXPECT_EQ(forms[2].children[1].open, '[');
    EXPECT_EQ(forms[2].children[2].open, '{');
}

TEST(Sexpr, CommasAndComments) {
    const auto a = parse_one("(polyquot (Z 2) [x,y] {x^2, x*y, y^2}) ; trailing\n");
    const auto b = parse_one("; lead\n(polyquot (Z 2) [x y] {x^2 x*y y^2})");
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.children[3].children.size(), 3u);
}

TEST(Sexpr, Positions) {
    const auto forms = parse("(a\n  (b c))");
    EXPECT_EQ(forms[0].children[1].pos.line, 2u);
    EXPECT_EQ(forms[0].children[1].pos.column, 3u);
}

TEST(Sexpr, RoundTrip) {
    for (const char* t : {"(Z 12)", "(dsum (cyclic (Z 8) (ideal 2)) (cyclic (Z 8) (ideal 4)))", "(mult (Z 12) {4})",
                          "(a [b c] {})"}) {
        const auto n = parse_one(t);
        EXPECT_EQ(print(n), t);
        EXPECT_EQ(parse_one(print(n)), n);
    }
}

TEST(Sexpr, Errors) {
    EXPECT_NE(syntax_message("(a (b c)").find("unterminated"), std::string::npos);
    EXPECT_NE(syntax_message("(a b]").find("1:5"), std::string::npos);
    EXPECT_NE(syntax_message("a)\n").find("1:2"), std::string::npos);
    EXPECT_NE(syntax_message("\n  )").find("2:3"), std::string::npos);
    EXPECT_THROW(parse_one("a b"), Error);
    EXPECT_THROW(parse_one(""), Error);
}

TEST(Sexpr, Empty) { EXPECT_TRUE(parse("  ; nothing\n").empty()); }
