#pragma once

#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace dhloc {

// Sparse multivariate polynomial with rational coefficients.
class Polynomial {
public:
    using Exponents = std::vector<int>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c) {
        Polynomial p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }
    static Polynomial monomial(const Exponents& e, const Rational& c) {
        Polynomial p(e.size());
        p.add_term(e, c);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0));
    }
    Rational constant_term() const {
        auto it = terms_.find(Exponents(nvars_, 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }
    // Coefficient of the largest monomial in lexicographic order.
    Rational leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }

    void add_term(const Exponents& e, const Rational& c) {
        if (e.size() != nvars_) throw Error(Errc::DimensionMismatch, "monomial arity");
        if (c == 0) return;
        auto& slot = terms_[e];
        slot += c;
        if (slot == 0) terms_.erase(e);
    }

    Polynomial& operator+=(const Polynomial& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        // A constant factor may carry a different arity (no Lebesgue directions).
        if (a.nvars_ != b.nvars_) {
            if (a.is_constant()) return b * a.constant_term();
            if (b.is_constant()) return a * b.constant_term();
            throw Error(Errc::DimensionMismatch, "product of polynomials in different variables");
        }
        Polynomial out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.nvars_);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Rational eval(const Vec& xi) const {
        if (xi.size() != nvars_) throw Error(Errc::DimensionMismatch, "polynomial evaluation arity");
        Rational s = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= xi[i];
            s += t;
        }
        return s;
    }

    Polynomial partial(std::size_t var) const {
        Polynomial out(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d = e;
            --d[var];
            out.add_term(d, c * e[var]);
        }
        return out;
    }

    // sum_j dir_j d/dxi_j
    Polynomial directional(const Vec& dir) const {
        Polynomial out(nvars_);
        for (std::size_t j = 0; j < nvars_; ++j)
            if (dir[j] != 0) out += partial(j) * dir[j];
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!out.empty()) out += (c < 0 ? " - " : " + ");
            else if (c < 0) out += "-";
            bool unit = abs(c) == 1;
            std::string mono;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "xi" + std::to_string(i + 1);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) out += dhloc::to_string(abs(c));
            else out += (unit ? "" : dhloc::to_string(abs(c)) + "*") + mono;
        }
        return out;
    }

private:
    void check(const Polynomial& o) const {
        if (o.nvars_ != nvars_) throw Error(Errc::DimensionMismatch, "polynomial arity");
    }

    std::size_t nvars_ = 0;
    std::map<Exponents, Rational> terms_;
};

} // namespace dhloc
