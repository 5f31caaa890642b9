#ifndef KFV_POLY_HPP
#define KFV_POLY_HPP

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kfv/scalar.hpp"

namespace kfv {

struct poly_error : std::runtime_error {
    explicit poly_error(const std::string& what) : std::runtime_error(what) {}
};

// Sparse polynomial in one or two named variables over Q or a quadratic field.
// Exponents may be negative (Laurent terms), which arise from edge-coordinate
// substitutions; plain construction and parsing produce ordinary polynomials.
// Zero coefficients are never stored.
class Poly {
  public:
    using Exp = std::array<long, 2>;

    Poly() = default;
    explicit Poly(const Scalar& c) { add_term({0, 0}, c); }

    static Poly constant(const Scalar& c) { return Poly(c); }

    static Poly variable(const std::string& name) {
        Poly p;
        p.vars_ = {name};
        p.add_term({1, 0}, Scalar(1));
        return p;
    }

    static Poly monomial(const std::vector<std::string>& vars, Exp e, const Scalar& c) {
        Poly p;
        p.vars_ = vars;
        if (vars.size() > 2) throw poly_error("at most two variables");
        p.add_term(e, c);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exp, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
    }
    Scalar constant_value() const {
        if (terms_.empty()) return Scalar(0);
        if (!is_constant()) throw poly_error("not a constant");
        return terms_.begin()->second;
    }
    bool is_univariate() const { return vars_.size() == 1; }
    bool is_laurent() const {
        for (auto& [e, c] : terms_)
            if (e[0] < 0 || e[1] < 0) return true;
        return false;
    }

    size_t term_count() const { return terms_.size(); }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }

    long degree(int var = 0) const {
        if (terms_.empty()) throw poly_error("degree of the zero polynomial");
        long d = terms_.begin()->first[var];
        for (auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    long total_degree() const {
        if (terms_.empty()) throw poly_error("degree of the zero polynomial");
        long d = terms_.begin()->first[0] + terms_.begin()->first[1];
        for (auto& [e, c] : terms_) d = std::max(d, e[0] + e[1]);
        return d;
    }

    // Minimal exponent of the named variable over all terms: the order of
    // vanishing (negative for a pole) along the divisor that variable cuts out.
    long order_in(const std::string& var) const {
        if (terms_.empty()) throw poly_error("order of the zero polynomial");
        int idx = var_index(var);
        if (idx < 0) return 0;
        long m = terms_.begin()->first[idx];
        for (auto& [e, c] : terms_) m = std::min(m, e[idx]);
        return m;
    }

    Scalar coeff(Exp e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    Scalar leading_coeff() const {
        if (terms_.empty()) throw poly_error("leading coefficient of zero");
        if (!is_univariate() && !is_constant()) throw poly_error("leading coefficient needs a univariate polynomial");
        return terms_.rbegin()->second;
    }

    friend Poly operator-(const Poly& p) {
        Poly r = p;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& x, const Poly& y) {
        Poly r = x;
        r.unify_vars(y);
        for (auto& [e, c] : y.terms_) r.add_term(e, c);
        return r;
    }
    friend Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }

    friend Poly operator*(const Poly& x, const Poly& y) {
        Poly r;
        r.vars_ = x.vars_;
        r.unify_vars(y);
        for (auto& [e1, c1] : x.terms_)
            for (auto& [e2, c2] : y.terms_) r.add_term({e1[0] + e2[0], e1[1] + e2[1]}, c1 * c2);
        return r;
    }

    friend Poly operator*(const Poly& x, const Scalar& s) {
        Poly r;
        r.vars_ = x.vars_;
        for (auto& [e, c] : x.terms_) r.add_term(e, c * s);
        return r;
    }
    friend Poly operator*(const Scalar& s, const Poly& x) { return x * s; }

    Poly& operator+=(const Poly& y) { return *this = *this + y; }
    Poly& operator-=(const Poly& y) { return *this = *this - y; }
    Poly& operator*=(const Poly& y) { return *this = *this * y; }

    friend bool operator==(const Poly& x, const Poly& y) {
        if (x.terms_.size() != y.terms_.size()) return false;
        Poly d = x - y;  // unifies variables or throws
        return d.is_zero();
    }
    friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

    Poly pow(long n) const {
        if (n < 0) {
            if (terms_.size() != 1) throw poly_error("negative power of a non-monomial");
            Exp e = terms_.begin()->first;
            Poly r;
            r.vars_ = vars_;
            r.add_term({e[0] * n, e[1] * n}, power_scalar(terms_.begin()->second, -n).inverse());
            return r;
        }
        Poly r(Scalar(1));
        r.vars_ = vars_;
        Poly base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    Poly derivative(const std::string& var) const {
        int idx = var_index(var);
        Poly r;
        r.vars_ = vars_;
        if (idx < 0) return r;
        for (auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            Exp f = e;
            f[idx] -= 1;
            r.add_term(f, c * Scalar(Int(e[idx])));
        }
        return r;
    }

    // Monic associate; error for the zero polynomial.
    Poly monic() const {
        if (is_zero()) throw poly_error("monic of zero");
        return *this * leading_coeff().inverse();
    }

    std::string str() const;

    void add_term(Exp e, const Scalar& c) {
        if (c.is_zero()) return;
        if (vars_.size() < 2 && e[1] != 0) throw poly_error("exponent on a missing variable");
        if (vars_.empty() && e[0] != 0) throw poly_error("exponent on a missing variable");
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Adopt the wider variable list; divergent variable names are an error.
    void unify_vars(const Poly& other) {
        if (other.vars_.empty()) return;
        if (vars_.empty()) {
            vars_ = other.vars_;
            return;
        }
        if (vars_ == other.vars_) return;
        if (vars_.size() == 1 && other.vars_.size() == 2 && vars_[0] == other.vars_[0]) {
            vars_ = other.vars_;
            return;
        }
        if (other.vars_.size() == 1 && vars_.size() == 2 && other.vars_[0] == vars_[0]) return;
        throw poly_error("mixed variables: [" + join(vars_) + "] vs [" + join(other.vars_) + "]");
    }

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
        return s;
    }

    static Scalar power_scalar(const Scalar& s, long n) {
        Scalar r(1);
        for (long i = 0; i < n; ++i) r *= s;
        return r;
    }

    std::vector<std::string> vars_;
    std::map<Exp, Scalar> terms_;
};

inline std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // highest exponents first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string t;
        std::string cs = c.str();
        bool neg = false;
        if (!cs.empty() && cs[0] == '-' && c.is_rational()) {
            neg = true;
            cs = cs.substr(1);
        }
        std::string mono;
        for (size_t v = 0; v < vars_.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[v];
            if (e[v] != 1) mono += "^" + std::to_string(e[v]);
        }
        if (mono.empty()) {
            t = cs;
        } else if (cs == "1") {
            t = mono;
        } else {
            t = cs + "*" + mono;
        }
        if (first) {
            out += (neg ? "-" : "") + t;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + t;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Univariate division, gcd, squarefree structure
// ---------------------------------------------------------------------------

inline void require_univariate_pair(const Poly& a, const Poly& b) {
    if (a.vars().size() > 1 || b.vars().size() > 1) throw poly_error("expected univariate polynomials");
    if (!a.vars().empty() && !b.vars().empty() && a.vars() != b.vars())
        throw poly_error("mixed variables: " + a.vars()[0] + " vs " + b.vars()[0]);
    if (a.is_laurent() || b.is_laurent()) throw poly_error("expected non-Laurent polynomials");
}

// Euclidean division over the coefficient field; returns (quotient, remainder).
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_univariate_pair(a, b);
    if (b.is_zero()) throw poly_error("division by the zero polynomial");
    Poly q, r = a;
    q.unify_vars(a);
    q.unify_vars(b);
    r.unify_vars(b);
    long db = b.is_constant() ? 0 : b.degree();
    Scalar lb = b.is_constant() ? b.constant_value() : b.leading_coeff();
    while (!r.is_zero() && (r.is_constant() ? 0 : r.degree()) >= db) {
        long dr = r.is_constant() ? 0 : r.degree();
        Scalar c = r.coeff({dr, 0}) / lb;
        Poly t = Poly::monomial(r.vars().empty() ? b.vars() : r.vars(), {dr - db, 0}, c);
        q += t;
        r -= t * b;
        if (dr == 0) break;
    }
    return {q, r};
}

// Monic greatest common divisor; gcd(f, 0) is the monic associate of f.
inline Poly gcd_univariate(const Poly& a, const Poly& b) {
    require_univariate_pair(a, b);
    Poly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.monic();
}

// Squarefree structure: pairs (multiplicity, degree of the squarefree factor
// carrying that multiplicity), sorted by multiplicity. Over an algebraically
// closed field this is the partition of deg f by root multiplicities, which is
// all a ramification profile needs; no factorization into irreducibles happens.
inline std::vector<std::pair<long, long>> multiplicity_profile(const Poly& f) {
    if (f.is_zero()) throw poly_error("multiplicity profile of the zero polynomial");
    require_univariate_pair(f, f);
    std::vector<std::pair<long, long>> out;
    if (f.is_constant()) return out;
    const std::string var = f.vars()[0];
    // Yun's algorithm (characteristic zero).
    Poly fm = f.monic();
    Poly fp = fm.derivative(var);
    Poly g = gcd_univariate(fm, fp);
    Poly c = divmod(fm, g).first;
    Poly d = divmod(fp, g).first - c.derivative(var);
    long i = 1;
    while (!(c.is_constant())) {
        Poly p = gcd_univariate(c, d);
        if (!p.is_constant()) out.emplace_back(i, p.degree());
        c = divmod(c, p).first;
        d = divmod(d, p).first - c.derivative(var);
        ++i;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Bivariate operations
// ---------------------------------------------------------------------------

inline Poly jacobian(const Poly& f, const Poly& g) {
    if (f.vars().size() != 2 || g.vars().size() != 2) throw poly_error("jacobian needs bivariate polynomials");
    if (f.vars() != g.vars()) throw poly_error("jacobian needs matching variables");
    const std::string& x1 = f.vars()[0];
    const std::string& x2 = f.vars()[1];
    return f.derivative(x1) * g.derivative(x2) - f.derivative(x2) * g.derivative(x1);
}

// Substitute Laurent expressions for both variables of f. A negative exponent
// in f requires the corresponding value to be a single Laurent term.
inline Poly substitute(const Poly& f, const Poly& v0, const Poly& v1) {
    if (f.vars().size() != 2) throw poly_error("substitute needs a bivariate polynomial");
    std::map<long, Poly> pow0, pow1;
    Poly result;
    for (auto& [e, c] : f.terms()) {
        auto power = [](std::map<long, Poly>& cache, const Poly& base, long n) -> const Poly& {
            auto it = cache.find(n);
            if (it == cache.end()) {
                if (n < 0 && base.term_count() != 1)
                    throw poly_error("substitution not expressible in Laurent form");
                it = cache.emplace(n, base.pow(n)).first;
            }
            return it->second;
        };
        Poly term = power(pow0, v0, e[0]) * power(pow1, v1, e[1]) * c;
        result += term;
    }
    return result;
}

}  // namespace kfv

#endif
