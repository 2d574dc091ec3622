#include "keypoly/parser.hpp"

#include "keypoly/error.hpp"

#include <cctype>

namespace keypoly {

namespace {

class Parser {
public:
    Parser(const std::string& text, FieldPtr K, std::string var)
        : s_(text), K_(std::move(K)), var_(std::move(var)) {}

    Poly run() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorCode::ParseError, "column " + std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly constant(const Elem& c) const { return Poly::constant(c, var_); }

    Poly expr() {
        Poly acc = term();
        while (true) {
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else return acc;
        }
    }

    Poly term() {
        Poly acc = unary();
        while (true) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                size_t at = pos_;
                Poly d = unary();
                if (d.degree() != 0) {
                    pos_ = at;
                    fail(d.is_zero() ? "division by zero" : "division by a non-constant polynomial");
                }
                acc = acc * d.lc().inverse();
            } else {
                return acc;
            }
        }
    }

    Poly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Poly power() {
        Poly base = atom();
        if (!accept('^')) return base;
        bool neg = accept('-');
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        long n = std::stol(s_.substr(start, pos_ - start));
        if (!neg) return base.pow(static_cast<unsigned>(n));
        if (base.degree() != 0) fail("negative exponent on a non-constant");
        return constant(base.lc().pow(-n));
    }

    Poly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return constant(K_->from_integer(Integer(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            if (!var_.empty() && id == var_) return Poly::variable(K_, var_);
            for (const Field* f = K_.get(); f; f = f->base().get())
                if ((f->kind() == Field::Kind::RationalFunctions || f->kind() == Field::Kind::Algebraic) &&
                    f->var() == id)
                    return constant(K_->embed(f->generator()));
            pos_ = start;
            fail("unknown identifier '" + id + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    FieldPtr K_;
    std::string var_;
    size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const FieldPtr& K, const std::string& var) {
    return Parser(text, K, var).run();
}

Elem parse_elem(const std::string& text, const FieldPtr& K) {
    Poly p = Parser(text, K, "").run();
    return p.is_zero() ? K->zero() : p.coeff(0);
}

}  // namespace keypoly
