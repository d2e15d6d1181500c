#pragma once

#include <gmpxx.h>

#include <cctype>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace dhloc {

using Rational = mpq_class;

inline Rational frac(long num, long den = 1) {
    if (den == 0) throw Error(Errc::Parse, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "p/q" and finite decimals such as "-2.75" (parsed exactly).
inline Rational parse_rational(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw Error(Errc::Parse, "empty rational");
    auto bad = [&] { return Error(Errc::Parse, "malformed rational '" + std::string(text) + "'"); };
    auto digits = [](std::string_view d) {
        if (d.empty()) return false;
        for (char ch : d)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    std::string_view body(s);
    bool neg = false;
    if (body.front() == '+' || body.front() == '-') {
        neg = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational q;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!digits(num) || !digits(den)) throw bad();
        mpz_class n{std::string(num)}, d{std::string(den)};
        if (d == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
        q = Rational(n, d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto ip = body.substr(0, dot), fp = body.substr(dot + 1);
        if ((!ip.empty() && !digits(ip)) || (!fp.empty() && !digits(fp)) || (ip.empty() && fp.empty()))
            throw bad();
        mpz_class n{std::string(ip.empty() ? "0" : ip) + std::string(fp)};
        mpz_class d;
        mpz_ui_pow_ui(d.get_mpz_t(), 10, fp.size());
        q = Rational(n, d);
    } else {
        if (!digits(body)) throw bad();
        q = Rational(mpz_class{std::string(body)});
    }
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline int sign(const Rational& q) { return sgn(q); }

// Coordinates of a point or covector of t* (the two are identified throughout).
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t n) : c_(n) {}
    Vec(std::initializer_list<Rational> xs) : c_(xs) {}
    explicit Vec(std::vector<Rational> xs) : c_(std::move(xs)) {}

    std::size_t size() const { return c_.size(); }
    bool empty() const { return c_.empty(); }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    auto begin() { return c_.begin(); }
    auto end() { return c_.end(); }
    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    Vec& operator+=(const Vec& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Vec& operator*=(const Rational& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator-(Vec a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Vec operator*(const Rational& s, Vec a) { return a *= s; }
    friend Vec operator*(Vec a, const Rational& s) { return a *= s; }

    friend bool operator==(const Vec& a, const Vec& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
    friend bool operator<(const Vec& a, const Vec& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.c_[i] < b.c_[i]) return true;
            if (b.c_[i] < a.c_[i]) return false;
        }
        return false;
    }

private:
    void check(const Vec& o) const {
        if (o.size() != size()) throw Error(Errc::DimensionMismatch, "vector sizes differ");
    }

    std::vector<Rational> c_;
};

// "p/q,p/q"; surrounding parentheses are tolerated.
inline Vec parse_vec(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.front() == '(') s.erase(0, 1);
    if (!s.empty() && s.back() == ')') s.pop_back();
    std::vector<Rational> xs;
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        xs.push_back(parse_rational(std::string_view(s).substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return Vec(std::move(xs));
}

inline std::string to_string(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += to_string(v[i]);
    }
    return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Vec& v) { return os << to_string(v); }

inline Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "dot of unequal sizes");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::vector<double> to_doubles(const Vec& v) {
    std::vector<double> out;
    for (const auto& x : v) out.push_back(to_double(x));
    return out;
}

} // namespace dhloc
