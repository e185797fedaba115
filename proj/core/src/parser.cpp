#include "zgraded/parser.hpp"

#include <cctype>

#include "zgraded/errors.hpp"

namespace zgr {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    int line;

    explicit Lexer(const std::string& t, int l) : text(t), line(l) {}

    void skip_ws() {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    }

    int column() const { return static_cast<int>(pos) + 1; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line, column());
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }

    long integer() {
        skip_ws();
        bool neg = accept('-');
        skip_ws();
        if (pos >= text.size() ||
            !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an integer");
        long v = 0;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000) fail("integer literal too large");
            ++pos;
        }
        return neg ? -v : v;
    }
};

struct Parser {
    Lexer lex;
    const ChartPtr& chart;

    Parser(const std::string& text, const ChartPtr& c, int line)
        : lex(text, line), chart(c) {}

    GradedSeries parse() {
        GradedSeries e = expr();
        if (!lex.eof()) lex.fail("unexpected trailing input");
        return e;
    }

    GradedSeries expr() {
        bool neg = lex.accept('-');
        GradedSeries acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (lex.accept('+'))
                acc = acc + term();
            else if (lex.accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    GradedSeries term() {
        GradedSeries acc = factor();
        while (true) {
            if (lex.accept('*')) {
                acc = acc * factor();
            } else if (lex.accept('/')) {
                GradedSeries d = factor();
                try {
                    acc = acc * d.invert();
                } catch (const AlgebraError& err) {
                    lex.fail(err.what());
                }
            } else {
                return acc;
            }
        }
    }

    GradedSeries factor() {
        GradedSeries b = base();
        if (lex.accept('^')) {
            long k = lex.integer();
            try {
                b = b.pow(static_cast<int>(k));
            } catch (const AlgebraError& err) {
                lex.fail(err.what());
            }
        }
        return b;
    }

    GradedSeries base() {
        char c = lex.peek();
        if (c == '(') {
            lex.expect('(');
            GradedSeries e = expr();
            lex.expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = lex.integer();
            return GradedSeries::constant(chart, Rational(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = lex.ident();
            if (name == "exp") {
                lex.expect('(');
                GradedSeries arg = expr();
                lex.expect(')');
                return exp_of(arg);
            }
            auto idx = chart->find(name);
            if (!idx) lex.fail("unknown identifier '" + name + "'");
            return GradedSeries::coordinate(chart, *idx);
        }
        lex.fail("expected a number, identifier or '('");
    }
};

} // namespace

GradedSeries parse_series(const ChartPtr& chart, const std::string& text,
                          int line) {
    Parser p(text, chart, line);
    return p.parse();
}

} // namespace zgr
