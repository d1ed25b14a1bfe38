#include "starq/expression.hpp"

#include <algorithm>
#include <cctype>

namespace starq {

namespace {

enum class Tok : uint8_t { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    SourcePos pos;
    Rational number;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_ws();
        SourcePos pos = pos_;
        if (at_end()) return {Tok::End, pos, {}, ""};
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(pos);
        if (std::isalpha(static_cast<unsigned char>(c))) return lex_ident(pos);
        advance();
        switch (c) {
            case '+': return {Tok::Plus, pos, {}, "+"};
            case '-': return {Tok::Minus, pos, {}, "-"};
            case '*': return {Tok::Star, pos, {}, "*"};
            case '^': return {Tok::Caret, pos, {}, "^"};
            case '(': return {Tok::LParen, pos, {}, "("};
            case ')': return {Tok::RParen, pos, {}, ")"};
            default:
                throw ParseError(pos, std::string("unexpected character '") + c + "'",
                                 "number, symbol, '+', '-', '*', '^', '(' or ')'");
        }
    }

private:
    bool at_end() const { return i_ >= src_.size(); }

    void advance() {
        if (src_[i_] == '\n') {
            ++pos_.line;
            pos_.col = 1;
        } else {
            ++pos_.col;
        }
        ++i_;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[i_]))) advance();
    }

    std::string take_digits() {
        std::string s;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
            s += src_[i_];
            advance();
        }
        return s;
    }

    Token lex_number(SourcePos pos) {
        std::string num = take_digits();
        std::string den;
        if (!at_end() && src_[i_] == '/') {
            advance();
            den = take_digits();
            if (den.empty())
                throw ParseError(pos_, "expected denominator digits after '/'", "digits");
        }
        Rational q(num.c_str());
        if (!den.empty()) {
            Rational d(den.c_str());
            if (d == 0) throw ParseError(pos, "zero denominator in rational literal", "nonzero digits");
            q /= d;
        }
        return {Tok::Number, pos, q, num + (den.empty() ? "" : "/" + den)};
    }

    Token lex_ident(SourcePos pos) {
        std::string s;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[i_])))) {
            s += src_[i_];
            advance();
        }
        return {Tok::Ident, pos, {}, s};
    }

    std::string_view src_;
    std::size_t i_ = 0;
    SourcePos pos_;
};

using ExprPtr = std::shared_ptr<const Expression>;

class Parser {
public:
    Parser(std::string_view src, unsigned dim) : lex_(src), dim_(dim) { bump(); }

    Expression run() {
        Expression e = expr();
        expect(Tok::End, "end of input");
        return e;
    }

private:
    void bump() { tok_ = lex_.next(); }

    void expect(Tok k, const std::string& what) {
        if (tok_.kind != k)
            throw ParseError(tok_.pos, "unexpected token '" + describe(tok_) + "'", what);
        bump();
    }

    static std::string describe(const Token& t) {
        return t.kind == Tok::End ? "end of input" : t.text;
    }

    Expression expr() {
        Expression lhs = term();
        while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
            bool minus = tok_.kind == Tok::Minus;
            SourcePos pos = tok_.pos;
            bump();
            Expression rhs = term();
            Expression e;
            e.kind = minus ? Expression::Kind::Sub : Expression::Kind::Add;
            e.pos = pos;
            e.lhs = std::make_shared<Expression>(std::move(lhs));
            e.rhs = std::make_shared<Expression>(std::move(rhs));
            lhs = std::move(e);
        }
        return lhs;
    }

    Expression term() {
        Expression lhs = factor();
        while (tok_.kind == Tok::Star) {
            SourcePos pos = tok_.pos;
            bump();
            Expression rhs = factor();
            Expression e;
            e.kind = Expression::Kind::Mul;
            e.pos = pos;
            e.lhs = std::make_shared<Expression>(std::move(lhs));
            e.rhs = std::make_shared<Expression>(std::move(rhs));
            lhs = std::move(e);
        }
        return lhs;
    }

    Expression factor() {
        if (tok_.kind == Tok::Minus) {
            SourcePos pos = tok_.pos;
            bump();
            Expression inner = factor();
            Expression e;
            e.kind = Expression::Kind::Neg;
            e.pos = pos;
            e.lhs = std::make_shared<Expression>(std::move(inner));
            return e;
        }
        return power();
    }

    Expression power() {
        Expression base = primary();
        if (tok_.kind != Tok::Caret) return base;
        SourcePos caret = tok_.pos;
        bump();
        bool neg = false;
        if (tok_.kind == Tok::Minus) {
            neg = true;
            bump();
        }
        if (tok_.kind != Tok::Number || tok_.number.get_den() != 1)
            throw ParseError(tok_.pos, "exponent must be an integer literal", "integer");
        long k = tok_.number.get_num().get_si();
        bump();
        int exponent = static_cast<int>(neg ? -k : k);

        if (exponent < 0 && !(base.kind == Expression::Kind::Parameter))
            throw ParseError(caret, "negative exponent on a non-parameter symbol",
                             "non-negative integer");
        if (base.kind == Expression::Kind::Variable && base.var.kind == VarKind::Psi &&
            exponent > 1)
            throw ParseError(caret, "odd variable squared: psi factors are nilpotent",
                             "exponent 0 or 1");

        Expression e;
        e.kind = Expression::Kind::Pow;
        e.pos = caret;
        e.lhs = std::make_shared<Expression>(std::move(base));
        e.exponent = exponent;
        return e;
    }

    Expression primary() {
        SourcePos pos = tok_.pos;
        if (tok_.kind == Tok::Number) {
            Expression e;
            e.kind = Expression::Kind::Number;
            e.pos = pos;
            e.number = tok_.number;
            bump();
            return e;
        }
        if (tok_.kind == Tok::LParen) {
            bump();
            Expression inner = expr();
            expect(Tok::RParen, "')'");
            return inner;
        }
        if (tok_.kind == Tok::Ident) return symbol(pos);
        throw ParseError(pos, "unexpected token '" + describe(tok_) + "'",
                         "number, symbol or '('");
    }

    Expression symbol(SourcePos pos) {
        const std::string s = tok_.text;
        bump();
        Expression e;
        e.pos = pos;
        if (s == "i") {
            e.kind = Expression::Kind::ImagUnit;
            return e;
        }
        if (s == "lambda" || s == "hbar") {
            e.kind = Expression::Kind::Parameter;
            e.param = (s == "lambda") ? ParamUse::Lambda : ParamUse::Hbar;
            return e;
        }
        std::size_t head = 0;
        VarKind kind;
        if (s.rfind("psi", 0) == 0) {
            kind = VarKind::Psi;
            head = 3;
        } else if (s[0] == 'x') {
            kind = VarKind::X;
            head = 1;
        } else if (s[0] == 'p') {
            kind = VarKind::P;
            head = 1;
        } else if (s[0] == 'y') {
            kind = VarKind::Y;
            head = 1;
        } else {
            throw ParseError(pos, "unknown symbol '" + s + "'",
                             "i, lambda, hbar, x<k>, p<k>, y<k> or psi<k>");
        }
        if (head >= s.size() ||
            !std::all_of(s.begin() + static_cast<long>(head), s.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError(pos, "unknown symbol '" + s + "'",
                             "i, lambda, hbar, x<k>, p<k>, y<k> or psi<k>");
        unsigned long index = std::stoul(s.substr(head));
        if (index == 0 || index > dim_)
            throw ParseError(pos, "variable index exceeds dimension " + std::to_string(dim_),
                             "index between 1 and " + std::to_string(dim_));
        e.kind = Expression::Kind::Variable;
        e.var = Var{kind, static_cast<unsigned>(index - 1)};
        return e;
    }

    Lexer lex_;
    Token tok_;
    unsigned dim_;
};

struct EvalState {
    ParamUse seen = ParamUse::None;

    void note(ParamUse p, SourcePos pos) {
        if (seen == ParamUse::None) {
            seen = p;
        } else if (seen != p) {
            throw ParseError(pos, "mixing lambda and hbar in one expression", "a single parameter");
        }
    }
};

WeylElement eval_node(const Expression& e, unsigned dim, EvalState& st) {
    switch (e.kind) {
        case Expression::Kind::Number:
            return WeylElement::constant(dim, Gaussian(e.number));
        case Expression::Kind::ImagUnit:
            return WeylElement::constant(dim, Gaussian::unit_i());
        case Expression::Kind::Parameter:
            st.note(e.param, e.pos);
            return WeylElement::parameter(dim, 1);
        case Expression::Kind::Variable:
            return WeylElement::variable(dim, e.var);
        case Expression::Kind::Add:
            return eval_node(*e.lhs, dim, st) + eval_node(*e.rhs, dim, st);
        case Expression::Kind::Sub:
            return eval_node(*e.lhs, dim, st) - eval_node(*e.rhs, dim, st);
        case Expression::Kind::Mul:
            return eval_node(*e.lhs, dim, st) * eval_node(*e.rhs, dim, st);
        case Expression::Kind::Neg:
            return -eval_node(*e.lhs, dim, st);
        case Expression::Kind::Pow: {
            if (e.lhs->kind == Expression::Kind::Parameter) {
                st.note(e.lhs->param, e.lhs->pos);
                return WeylElement::parameter(dim, e.exponent);
            }
            WeylElement base = eval_node(*e.lhs, dim, st);
            WeylElement acc = WeylElement::constant(dim, Gaussian(1));
            for (int k = 0; k < e.exponent; ++k) acc = acc * base;
            return acc;
        }
    }
    throw std::logic_error("eval_node: unreachable");
}

}  // namespace

Expression parse(std::string_view src, unsigned dim) { return Parser(src, dim).run(); }

EvalResult evaluate(const Expression& e, unsigned dim) {
    EvalState st;
    WeylElement el = eval_node(e, dim, st);
    return EvalResult{std::move(el), st.seen};
}

EvalResult parse_element(std::string_view src, unsigned dim) {
    Expression ast = parse(src, dim);
    return evaluate(ast, dim);
}

}  // namespace starq
