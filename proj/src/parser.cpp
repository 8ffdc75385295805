#include "hanfkit/parser.hpp"

#include "hanfkit/errors.hpp"
#include "hanfkit/sphere.hpp"

#include <cctype>

namespace hanfkit {

namespace {

struct Token {
    enum Kind { LParen, RParen, Atom, End } kind;
    std::string text;
    int line = 1, col = 1;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == ';') {
            while (i < text.size() && text[i] != '\n') advance(text[i++]);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(c);
            ++i;
            continue;
        }
        if (c == '(' || c == ')') {
            out.push_back({c == '(' ? Token::LParen : Token::RParen, std::string(1, c), line, col});
            advance(c);
            ++i;
            continue;
        }
        int start_line = line, start_col = col;
        std::string atom;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != '(' && text[i] != ')' && text[i] != ';') {
            atom.push_back(text[i]);
            advance(text[i]);
            ++i;
        }
        out.push_back({Token::Atom, atom, start_line, start_col});
    }
    out.push_back({Token::End, "", line, col});
    return out;
}

bool valid_var(const std::string& s) {
    if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

bool integer_atom(const std::string& s) {
    std::size_t start = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start >= s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, const Signature& sig, const PredicateCollection& preds,
           CatalogStore* store)
        : tokens_(std::move(tokens)), sig_(sig), preds_(preds), store_(store) {}

    ExprPtr run() {
        ExprPtr e = parse_expression();
        expect_end();
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg, const Token& tok) {
        throw ParseError(msg, tok.line, tok.col);
    }

    void expect_end() {
        if (peek().kind != Token::End) fail("trailing input", peek());
    }

    Token expect_atom(const char* what) {
        if (peek().kind != Token::Atom) fail(std::string("expected ") + what, peek());
        return next();
    }

    void expect_rparen() {
        if (peek().kind != Token::RParen) fail("expected )", peek());
        next();
    }

    std::string parse_struct_var() {
        Token t = expect_atom("a structure variable");
        if (!valid_var(t.text)) fail("bad structure variable " + t.text, t);
        return t.text;
    }

    std::string parse_num_var() {
        Token t = expect_atom("a number variable");
        if (t.text.size() < 2 || t.text[0] != '%' || !valid_var(t.text.substr(1)))
            fail("bad number variable " + t.text, t);
        return t.text.substr(1);
    }

    // Either a formula or a counting term, decided by one token of lookahead.
    ExprPtr parse_expression() {
        if (peek().kind == Token::Atom) return parse_term();
        if (peek().kind != Token::LParen) fail("expected an expression", peek());
        const Token& head = tokens_[pos_ + 1];
        if (head.kind == Token::Atom &&
            (head.text == "#" || head.text == "+" || head.text == "*"))
            return parse_term();
        return parse_formula();
    }

    ExprPtr parse_formula() {
        if (peek().kind != Token::LParen) fail("expected a formula", peek());
        Token open = next();
        Token head = expect_atom("a formula head");
        ExprPtr result;
        if (head.text == "=") {
            std::string a = parse_struct_var(), b = parse_struct_var();
            result = make_equal(a, b);
        } else if (head.text == "not") {
            result = make_not(parse_formula());
        } else if (head.text == "or" || head.text == "and" || head.text == "implies") {
            ExprPtr a = parse_formula();
            ExprPtr b = parse_formula();
            result = head.text == "or"    ? make_or(a, b)
                     : head.text == "and" ? make_and(a, b)
                                          : make_implies(a, b);
        } else if (head.text == "ex" || head.text == "forall") {
            std::string v = parse_struct_var();
            ExprPtr f = parse_formula();
            result = head.text == "ex" ? make_exists(v, f) : make_forall(v, f);
        } else if (head.text == "exn" || head.text == "foralln") {
            std::string v = parse_num_var();
            ExprPtr f = parse_formula();
            result = head.text == "exn" ? make_exists_num(v, f) : make_forall_num(v, f);
        } else if (head.text == "pred") {
            Token name = expect_atom("a predicate name");
            auto pred = preds_.resolve(name.text);
            if (!pred) fail("unknown predicate " + name.text, name);
            std::vector<ExprPtr> terms;
            while (peek().kind != Token::RParen && peek().kind != Token::End)
                terms.push_back(parse_term());
            if (static_cast<int>(terms.size()) != pred->arity)
                fail("predicate " + name.text + " expects " + std::to_string(pred->arity) +
                         " arguments, got " + std::to_string(terms.size()),
                     name);
            result = make_pred(name.text, std::move(terms));
        } else if (head.text == "sphere") {
            Token id_tok = expect_atom("a type id");
            auto id = TypeId::parse(id_tok.text);
            if (!id) fail("bad type id " + id_tok.text, id_tok);
            if (!store_) fail("sphere atoms need a catalog in scope", id_tok);
            SphereTypePtr type;
            try {
                type = store_->resolve(*id, sig_);
            } catch (const ValidationError& err) {
                fail(err.what(), id_tok);
            }
            std::vector<std::string> vars;
            while (peek().kind != Token::RParen && peek().kind != Token::End)
                vars.push_back(parse_struct_var());
            if (static_cast<int>(vars.size()) != type->k())
                fail("type " + id_tok.text + " has " + std::to_string(type->k()) + " centres, got " +
                         std::to_string(vars.size()) + " variables",
                     id_tok);
            result = make_sphere_atom(*id, std::move(type), std::move(vars));
        } else {
            // relation atom
            auto arity = sig_.arity_of(head.text);
            if (!arity) fail("unknown relation " + head.text, head);
            std::vector<std::string> args;
            while (peek().kind != Token::RParen && peek().kind != Token::End)
                args.push_back(parse_struct_var());
            if (static_cast<int>(args.size()) != *arity)
                fail("relation " + head.text + " expects " + std::to_string(*arity) +
                         " arguments, got " + std::to_string(args.size()),
                     head);
            result = make_rel(head.text, std::move(args));
        }
        (void)open;
        expect_rparen();
        return result;
    }

    ExprPtr parse_term() {
        if (peek().kind == Token::Atom) {
            Token t = next();
            if (integer_atom(t.text)) return make_int(Int(t.text));
            if (t.text.size() > 1 && t.text[0] == '%' && valid_var(t.text.substr(1)))
                return make_num_var(t.text.substr(1));
            if (t.text.rfind("v:", 0) == 0) return make_num_var(t.text);  // arithmetic variables
            fail("expected a counting term, got " + t.text, t);
        }
        if (peek().kind != Token::LParen) fail("expected a counting term", peek());
        next();
        Token head = expect_atom("a term head");
        ExprPtr result;
        if (head.text == "#") {
            if (peek().kind != Token::LParen) fail("expected a variable tuple", peek());
            next();
            std::vector<std::string> binders;
            while (peek().kind != Token::RParen && peek().kind != Token::End)
                binders.push_back(parse_struct_var());
            expect_rparen();
            ExprPtr f = parse_formula();
            try {
                result = make_count(std::move(binders), f);
            } catch (const ValidationError& err) {
                fail(err.what(), head);
            }
        } else if (head.text == "+" || head.text == "*") {
            ExprPtr a = parse_term();
            ExprPtr b = parse_term();
            result = head.text == "+" ? make_add(a, b) : make_mul(a, b);
        } else {
            fail("expected a term head, got " + head.text, head);
        }
        expect_rparen();
        return result;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const Signature& sig_;
    const PredicateCollection& preds_;
    CatalogStore* store_;
};

} // namespace

ExprPtr parse(const std::string& text, const Signature& sig, const PredicateCollection& preds,
              CatalogStore* store) {
    Parser p(tokenize(text), sig, preds, store);
    return p.run();
}

} // namespace hanfkit
