#include "covol/intpoly.hpp"

#include "covol/errors.hpp"

#include <cctype>
#include <sstream>

namespace covol {

IntPoly poly_trim(IntPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_trim(r);
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_trim(r);
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return poly_trim(r);
}

IntPoly poly_neg(IntPoly a) {
    for (auto& c : a) c = -c;
    return a;
}

IntPoly poly_derivative(const IntPoly& p) {
    IntPoly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * (long)i);
    return poly_trim(r);
}

Int poly_content(const IntPoly& p) {
    Int g = 0;
    for (const auto& c : p) {
        Int a = abs(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    return g;
}

Int poly_eval(const IntPoly& p, const Int& x) {
    Int acc = 0;
    for (int i = (int)p.size() - 1; i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

Rat poly_eval(const IntPoly& p, const Rat& x) {
    Rat acc = 0;
    for (int i = (int)p.size() - 1; i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

RatInterval poly_eval(const IntPoly& p, const RatInterval& x) {
    RatInterval acc{Rat(0)};
    for (int i = (int)p.size() - 1; i >= 0; --i) acc = acc * x + RatInterval(Rat(p[i]));
    return acc;
}

IntPoly poly_mod_monic(IntPoly a, const IntPoly& f) {
    int m = degree(f);
    a = poly_trim(std::move(a));
    for (int d = (int)a.size() - 1; d >= m; --d) {
        Int c = a[d];
        if (c == 0) continue;
        a[d] = 0;
        for (int i = 0; i < m; ++i) a[d - m + i] -= c * f[i];
    }
    a.resize(m);
    return poly_trim(std::move(a));
}

IntPoly poly_mulmod_monic(const IntPoly& a, const IntPoly& b, const IntPoly& f) {
    return poly_mod_monic(poly_mul(a, b), f);
}

Rat resultant_rat(const RatPoly& a0, const RatPoly& b0) {
    RatPoly a = a0, b = b0;
    auto deg = [](const RatPoly& p) { return degree(p); };
    int da = deg(a), db = deg(b);
    if (da < 0 || db < 0) return 0;
    Rat acc = 1;
    while (true) {
        da = deg(a);
        db = deg(b);
        if (db == 0) return acc * rat_pow(b[0], da);
        // remainder r = a mod b over Q
        RatPoly r = a;
        Rat lcb = b[db];
        for (int d = deg(r); d >= db; d = deg(r)) {
            Rat c = r[d] / lcb;
            for (int i = 0; i <= db; ++i) r[d - db + i] -= c * b[i];
            r[d] = 0;
            while (!r.empty() && r.back() == 0) r.pop_back();
            if (r.empty()) break;
        }
        int dr = deg(r);
        if (dr < 0) return 0; // common factor
        if ((da % 2) && (db % 2)) acc = -acc;
        acc *= rat_pow(lcb, (unsigned long)(da - dr));
        a = b;
        b = r;
    }
}

Int resultant(const IntPoly& a, const IntPoly& b) {
    RatPoly ra(a.begin(), a.end()), rb(b.begin(), b.end());
    Rat r = resultant_rat(ra, rb);
    if (r.get_den() != 1) fail(Errc::PrecisionExceeded, "non-integral resultant of integer polys");
    return r.get_num();
}

Int poly_discriminant(const IntPoly& f) {
    int m = degree(f);
    if (m < 1) fail(Errc::UsageError, "discriminant needs degree >= 1");
    if (f[m] != 1) fail(Errc::NotMonic, "discriminant implemented for monic input");
    Int res = resultant(f, poly_derivative(f));
    bool neg = ((long)m * (m - 1) / 2) % 2 == 1;
    return neg ? Int(-res) : res;
}

bool poly_is_squarefree(const IntPoly& f) {
    RatPoly ra(f.begin(), f.end());
    RatPoly rb;
    IntPoly d = poly_derivative(f);
    rb.assign(d.begin(), d.end());
    return resultant_rat(ra, rb) != 0;
}

Int field_norm(const IntPoly& f, const IntPoly& g) {
    // N(g(theta)) = prod over roots of monic f = resultant(f, g)
    return resultant(f, g);
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    explicit Parser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    Int number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (start == i) fail(Errc::UsageError, "expected number in polynomial at '" + s.substr(start) + "'");
        return Int(s.substr(start, i - start));
    }
    // term := [coef][*][x[^exp]]
    void term(IntPoly& acc, int sign) {
        skip_ws();
        Int coef = 1;
        bool have_coef = false;
        if (i < s.size() && std::isdigit((unsigned char)s[i])) {
            coef = number();
            have_coef = true;
        }
        eat('*');
        skip_ws();
        unsigned long exp = 0;
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i;
            exp = 1;
            if (eat('^')) exp = number().get_ui();
        } else if (!have_coef) {
            fail(Errc::UsageError, "dangling operator in polynomial");
        }
        if (acc.size() < exp + 1) acc.resize(exp + 1, Int(0));
        acc[exp] += sign * coef;
    }
    IntPoly parse() {
        IntPoly acc;
        int sign = 1;
        if (eat('-')) sign = -1;
        else eat('+');
        term(acc, sign);
        while (true) {
            skip_ws();
            if (i >= s.size()) break;
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else fail(Errc::UsageError, "unexpected character '" + std::string(1, s[i]) + "' in polynomial");
            term(acc, sign);
        }
        return poly_trim(acc);
    }
};

} // namespace

IntPoly poly_parse(const std::string& s) {
    // also accept "[c0,c1,...]" coefficient lists
    Parser p(s);
    p.skip_ws();
    if (p.i < s.size() && s[p.i] == '[') {
        ++p.i;
        IntPoly acc;
        while (true) {
            p.skip_ws();
            int sign = p.eat('-') ? -1 : 1;
            acc.push_back(sign * p.number());
            if (p.eat(']')) break;
            if (!p.eat(',')) fail(Errc::UsageError, "bad coefficient list");
        }
        return poly_trim(acc);
    }
    return p.parse();
}

std::string poly_format(const IntPoly& p) {
    int d = degree(p);
    if (d < 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = d; i >= 0; --i) {
        if (p[i] == 0) continue;
        Int c = p[i];
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace covol
