#ifndef KFV_EXPR_HPP
#define KFV_EXPR_HPP

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kfv/poly.hpp"

namespace kfv {

struct expr_error : std::runtime_error {
    expr_error(const std::string& what, size_t col)
        : std::runtime_error(what + " (column " + std::to_string(col + 1) + ")"), col(col) {}
    size_t col;
};

// Recursive-descent parser for the plain-text polynomial grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*          '/' needs a constant divisor
//   factor := atom ['^' ['-'] integer]
//   atom   := '(' expr ')' | integer | sqrt '(' ['-'] integer ')' | name
// Names are either let-bound polynomials from `env` or variables; at most two
// distinct variables may appear. Variable slot order follows first appearance.
class ExprParser {
  public:
    explicit ExprParser(std::string text, const std::map<std::string, Poly>* env = nullptr,
                        std::vector<std::string> forced_vars = {})
        : text_(std::move(text)), env_(env), vars_(std::move(forced_vars)) {}

    Poly parse() {
        scan_variables();
        pos_ = 0;
        Poly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    void scan_variables() {
        size_t i = 0;
        while (i < text_.size()) {
            if (std::isalpha(static_cast<unsigned char>(text_[i]))) {
                size_t j = i;
                while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) ++j;
                std::string name = text_.substr(i, j - i);
                if (name != "sqrt" && !(env_ && env_->count(name))) {
                    if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) vars_.push_back(name);
                }
                i = j;
            } else {
                ++i;
            }
        }
        if (vars_.size() > 2) fail("more than two variables: " + vars_[0] + "," + vars_[1] + "," + vars_[2]);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) const { throw expr_error(msg, pos_); }

    Int parse_int() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return Int(text_.substr(start, pos_ - start));
    }

    std::optional<std::string> parse_name() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) return std::nullopt;
        size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    Poly parse_expr() {
        bool neg = eat('-');
        Poly p = parse_term();
        if (neg) p = -p;
        for (;;) {
            if (eat('+')) {
                p += parse_term();
            } else if (eat('-')) {
                p -= parse_term();
            } else {
                return p;
            }
        }
    }

    Poly parse_term() {
        Poly p = parse_factor();
        for (;;) {
            if (eat('*')) {
                p *= parse_factor();
            } else if (eat('/')) {
                Poly d = parse_factor();
                if (!d.is_constant() || d.is_zero()) fail("divisor must be a nonzero constant");
                p = p * d.constant_value().inverse();
            } else {
                return p;
            }
        }
    }

    Poly parse_factor() {
        Poly base = parse_atom();
        if (eat('^')) {
            bool neg = eat('-');
            Int n = parse_int();
            if (!n.fits_slong_p()) fail("exponent out of range");
            long e = n.get_si();
            base = base.pow(neg ? -e : e);
        }
        return base;
    }

    Poly parse_atom() {
        if (eat('(')) {
            Poly p = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Poly p(Scalar(parse_int()));
            p.unify_vars(var_template());
            return p;
        }
        auto name = parse_name();
        if (!name) fail("expected a value");
        if (*name == "sqrt") {
            if (!eat('(')) fail("expected '(' after sqrt");
            bool neg = eat('-');
            Int n = parse_int();
            if (!eat(')')) fail("expected ')'");
            if (!n.fits_slong_p()) fail("discriminant out of range");
            Poly p(Scalar::sqrt_of(neg ? -n.get_si() : n.get_si()));
            p.unify_vars(var_template());
            return p;
        }
        if (env_) {
            auto it = env_->find(*name);
            if (it != env_->end()) return it->second;
        }
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == *name)
                return Poly::monomial(vars_, {i == 0 ? 1 : 0, i == 1 ? 1 : 0}, Scalar(1));
        fail("unknown name '" + *name + "'");
    }

    Poly var_template() const {
        Poly p;
        if (!vars_.empty()) p.unify_vars(Poly::monomial(vars_, {0, 0}, Scalar(1)));
        return p;
    }

    std::string text_;
    const std::map<std::string, Poly>* env_;
    std::vector<std::string> vars_;
    size_t pos_ = 0;
};

inline Poly parse_poly(const std::string& text, const std::map<std::string, Poly>* env = nullptr) {
    return ExprParser(text, env).parse();
}

// Parse with a fixed variable universe, so that e.g. "x1" alone still comes out
// as a bivariate polynomial in (x1, x2).
inline Poly parse_poly_in(const std::string& text, std::vector<std::string> vars,
                          const std::map<std::string, Poly>* env = nullptr) {
    return ExprParser(text, env, std::move(vars)).parse();
}

}  // namespace kfv

#endif
