#pragma once

/*
 * Recursive-descent parser for the ideal-expression language.
 *
 *   expr    := sum
 *   sum     := product (('+' | '-') product)*
 *   product := unary (('*' | '/') unary)*
 *   unary   := '-' unary | power
 *   power   := primary ('^' ['-'] INT)?
 *   primary := INT | 'X' | 'T' | 'M' | 'R' | '(' expr ')'
 *            | 'sqrt' '(' ['-'] INT ')'
 *            | ('ideal' | 'dideal') '(' expr (',' expr)* ')'
 *            | 'star' '(' op ',' expr ')'
 *            | FUNC '(' expr ')'
 *   op      := NAME ['(' op (',' op)* ')']
 *
 * Every node carries a sort (element, ideal, label, info) checked while parsing.
 */

#include <algorithm>
#include <cctype>
#include <gmpxx.h>
#include <set>
#include <string>
#include <vector>

#include "starpull/error.hpp"

namespace starpull::cli {

enum class NodeKind { number, sqrt, var, neg, binary, call, atom, op };
enum class Sort { element, ideal, label, info, op };

struct Expr {
    NodeKind kind = NodeKind::number;
    Sort sort = Sort::element;
    std::size_t pos = 0;
    std::string name; // operator symbol, function, atom or op name
    mpz_class value;  // number literal, radicand, exponent
    std::vector<Expr> args;
    int height = 1;
};

inline const std::set<std::string>& unary_functions()
{
    static const std::set<std::string> f{"v",     "t",     "d",    "colon",     "inv",     "extT",
                                         "alpha", "beta",  "gamma", "principal", "hull", "classify"};
    return f;
}

inline Sort result_sort(const std::string& fn)
{
    if (fn == "gamma")
        return Sort::label;
    if (fn == "principal" || fn == "classify")
        return Sort::info;
    return Sort::ideal;
}

/// Arity of a star-operation name; -1 when the name is unknown.
inline int op_arity(const std::string& base)
{
    if (base == "d" || base == "v" || base == "t")
        return 0;
    if (base == "meet")
        return 2;
    if (base == "proj" || base == "lift" || base == "extT" || base == "restT" || base == "ovr" || base == "finite" ||
        base == "w")
        return 1;
    return -1;
}

/// Splits "v_R" into ("v", 'R'); the side is 0 when absent.
inline std::pair<std::string, char> split_side(const std::string& name)
{
    if (name.size() > 2 && name[name.size() - 2] == '_') {
        char s = name.back();
        if (s == 'D' || s == 'R' || s == 'T')
            return {name.substr(0, name.size() - 2), s};
    }
    return {name, 0};
}

inline std::string sort_name(Sort s)
{
    switch (s) {
    case Sort::element:
        return "element";
    case Sort::ideal:
        return "ideal";
    case Sort::label:
        return "class label";
    case Sort::info:
        return "report value";
    case Sort::op:
        return "star operation";
    }
    return "?";
}

class Parser
{
    enum class Tok { num, ident, sym, end };
    struct Token {
        Tok kind = Tok::end;
        std::string text;
        std::size_t pos = 0;
    };

    static constexpr int max_depth = 200;
    static constexpr long max_exponent = 256;
    static constexpr int max_height = 512;

    std::string src_;
    std::size_t at_ = 0;
    Token cur_;
    int depth_ = 0;

    [[noreturn]] void fail(std::size_t pos, const std::string& msg) const { throw parse_error(pos, msg); }

    void advance()
    {
        while (at_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[at_])))
            ++at_;
        cur_.pos = at_;
        if (at_ >= src_.size()) {
            cur_.kind = Tok::end;
            cur_.text.clear();
            return;
        }
        unsigned char c = static_cast<unsigned char>(src_[at_]);
        if (std::isdigit(c)) {
            std::size_t b = at_;
            while (at_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[at_])))
                ++at_;
            if (at_ - b > 4096)
                fail(b, "integer literal too long");
            cur_ = {Tok::num, src_.substr(b, at_ - b), b};
            return;
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t b = at_;
            while (at_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[at_])) || src_[at_] == '_'))
                ++at_;
            cur_ = {Tok::ident, src_.substr(b, at_ - b), b};
            return;
        }
        if (std::string("()+-*/^,").find(static_cast<char>(c)) != std::string::npos) {
            cur_ = {Tok::sym, std::string(1, static_cast<char>(c)), at_};
            ++at_;
            return;
        }
        fail(at_, "unexpected character");
    }

    bool is_sym(char c) const { return cur_.kind == Tok::sym && cur_.text[0] == c; }

    void expect(char c, const std::string& what)
    {
        if (!is_sym(c))
            fail(cur_.pos, "expected " + what);
        advance();
    }

    struct DepthGuard {
        Parser& p;
        explicit DepthGuard(Parser& q) : p(q)
        {
            if (++p.depth_ > max_depth)
                p.fail(p.cur_.pos, "nesting too deep");
        }
        ~DepthGuard() { --p.depth_; }
    };

    static Expr node(NodeKind k, Sort s, std::size_t pos, std::string name = {})
    {
        Expr e;
        e.kind = k;
        e.sort = s;
        e.pos = pos;
        e.name = std::move(name);
        return e;
    }

    Expr finish(Expr e) const
    {
        for (const auto& a : e.args)
            e.height = std::max(e.height, a.height + 1);
        if (e.height > max_height)
            fail(e.pos, "expression too deep");
        return e;
    }

    void need(const Expr& e, Sort s, const std::string& ctx) const
    {
        if (e.sort != s)
            fail(e.pos, ctx + " expects " + sort_name(s) + ", got " + sort_name(e.sort));
    }

    Expr binary(char op, std::size_t pos, Expr a, Expr b)
    {
        Sort s;
        if (a.sort == Sort::element && b.sort == Sort::element)
            s = Sort::element;
        else if (op == '+' && a.sort == Sort::ideal && b.sort == Sort::ideal)
            s = Sort::ideal;
        else if (op == '*' && (a.sort == Sort::ideal || a.sort == Sort::element) &&
                 (b.sort == Sort::ideal || b.sort == Sort::element))
            s = Sort::ideal;
        else
            fail(pos, std::string("operator '") + op + "' cannot combine " + sort_name(a.sort) + " and " +
                          sort_name(b.sort));
        Expr e = node(NodeKind::binary, s, pos, std::string(1, op));
        e.args.push_back(std::move(a));
        e.args.push_back(std::move(b));
        return finish(std::move(e));
    }

    Expr sum()
    {
        DepthGuard g(*this);
        Expr e = product();
        while (is_sym('+') || is_sym('-')) {
            char op = cur_.text[0];
            std::size_t p = cur_.pos;
            advance();
            e = binary(op, p, std::move(e), product());
        }
        return e;
    }

    Expr product()
    {
        Expr e = unary();
        while (is_sym('*') || is_sym('/')) {
            char op = cur_.text[0];
            std::size_t p = cur_.pos;
            advance();
            e = binary(op, p, std::move(e), unary());
        }
        return e;
    }

    Expr unary()
    {
        DepthGuard g(*this);
        if (is_sym('-')) {
            std::size_t p = cur_.pos;
            advance();
            Expr a = unary();
            need(a, Sort::element, "unary '-'");
            Expr e = node(NodeKind::neg, Sort::element, p);
            e.args.push_back(std::move(a));
            return finish(std::move(e));
        }
        return power();
    }

    mpz_class signed_int(const std::string& what)
    {
        bool neg = false;
        if (is_sym('-')) {
            neg = true;
            advance();
        }
        if (cur_.kind != Tok::num)
            fail(cur_.pos, "expected " + what);
        mpz_class v(cur_.text, 10);
        advance();
        return neg ? mpz_class(-v) : v;
    }

    Expr power()
    {
        Expr base = primary();
        if (!is_sym('^'))
            return base;
        std::size_t p = cur_.pos;
        advance();
        need(base, Sort::element, "'^'");
        std::size_t ep = cur_.pos;
        mpz_class n = signed_int("an integer exponent");
        if (abs(n) > max_exponent)
            fail(ep, "exponent out of range");
        Expr e = node(NodeKind::binary, Sort::element, p, "^");
        e.value = n;
        e.args.push_back(std::move(base));
        return finish(std::move(e));
    }

    Expr op_expr()
    {
        DepthGuard g(*this);
        if (cur_.kind != Tok::ident)
            fail(cur_.pos, "expected a star operation");
        Expr e = node(NodeKind::op, Sort::op, cur_.pos, cur_.text);
        auto [base, side] = split_side(cur_.text);
        int ar = op_arity(base);
        if (ar < 0 || (side && ar != 0))
            fail(cur_.pos, "unknown star operation '" + cur_.text + "'");
        advance();
        if (ar == 0)
            return e;
        expect('(', "'(' after " + base);
        for (int i = 0; i < ar; ++i) {
            if (i > 0)
                expect(',', "','");
            e.args.push_back(op_expr());
        }
        expect(')', "')'");
        return finish(std::move(e));
    }

    Expr primary()
    {
        DepthGuard g(*this);
        const std::size_t p = cur_.pos;
        if (cur_.kind == Tok::num) {
            Expr e = node(NodeKind::number, Sort::element, p);
            e.value = mpz_class(cur_.text, 10);
            advance();
            return e;
        }
        if (is_sym('(')) {
            advance();
            Expr e = sum();
            expect(')', "')'");
            return e;
        }
        if (cur_.kind != Tok::ident)
            fail(p, cur_.kind == Tok::end ? "unexpected end of input" : "unexpected '" + cur_.text + "'");
        const std::string id = cur_.text;
        advance();
        if (id == "X")
            return node(NodeKind::var, Sort::element, p, id);
        if (id == "T" || id == "M" || id == "R")
            return node(NodeKind::atom, Sort::ideal, p, id);
        if (id == "sqrt") {
            expect('(', "'(' after sqrt");
            Expr e = node(NodeKind::sqrt, Sort::element, p);
            e.value = signed_int("an integer radicand");
            if (abs(e.value) > mpz_class(1000000))
                fail(p, "radicand out of range");
            expect(')', "')'");
            return e;
        }
        if (id == "ideal" || id == "dideal") {
            expect('(', "'(' after " + id);
            Expr e = node(NodeKind::call, Sort::ideal, p, id);
            for (;;) {
                Expr a = sum();
                need(a, Sort::element, id);
                e.args.push_back(std::move(a));
                if (is_sym(','))
                    advance();
                else
                    break;
            }
            expect(')', "',' or ')'");
            return finish(std::move(e));
        }
        if (id == "star") {
            expect('(', "'(' after star");
            Expr e = node(NodeKind::call, Sort::ideal, p, id);
            e.args.push_back(op_expr());
            expect(',', "','");
            Expr a = sum();
            need(a, Sort::ideal, "star");
            e.args.push_back(std::move(a));
            expect(')', "')'");
            return finish(std::move(e));
        }
        if (unary_functions().count(id)) {
            expect('(', "'(' after " + id);
            Expr e = node(NodeKind::call, result_sort(id), p, id);
            Expr a = sum();
            need(a, Sort::ideal, id);
            e.args.push_back(std::move(a));
            if (is_sym(','))
                fail(cur_.pos, id + " takes one argument");
            expect(')', "')'");
            return finish(std::move(e));
        }
        fail(p, "unknown name '" + id + "'");
    }

  public:
    explicit Parser(std::string text) : src_(std::move(text)) { advance(); }

    Expr parse_expression()
    {
        if (cur_.kind == Tok::end)
            fail(cur_.pos, "empty expression");
        Expr e = sum();
        if (cur_.kind != Tok::end)
            fail(cur_.pos, "unexpected '" + cur_.text + "'");
        return e;
    }

    Expr parse_op()
    {
        Expr e = op_expr();
        if (cur_.kind != Tok::end)
            fail(cur_.pos, "unexpected '" + cur_.text + "'");
        return e;
    }
};

inline Expr parse_expression(const std::string& text) { return Parser(text).parse_expression(); }
inline Expr parse_star_op(const std::string& text) { return Parser(text).parse_op(); }

} // namespace starpull::cli
