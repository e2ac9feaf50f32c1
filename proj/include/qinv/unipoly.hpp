#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qinv/rational.hpp"

namespace qinv {

// Univariate polynomial over the rationals, coefficients stored low to high
// with no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rational& v) { return UniPoly(std::vector<Rational>{v}); }
    static UniPoly monomial(const Rational& v, int deg) {
        std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
        c.back() = v;
        return UniPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(int i) const {
        static const Rational zero{};
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(i)];
    }
    const Rational& lead() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < c_.size()) r[i] += c_[i];
            if (i < o.c_.size()) r[i] += o.c_[i];
        }
        return UniPoly(std::move(r));
    }
    UniPoly operator-(const UniPoly& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < c_.size()) r[i] += c_[i];
            if (i < o.c_.size()) r[i] -= o.c_[i];
        }
        return UniPoly(std::move(r));
    }
    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        std::vector<Rational> r(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        }
        return UniPoly(std::move(r));
    }
    UniPoly scaled(const Rational& v) const {
        if (v == 0) return UniPoly();
        std::vector<Rational> r = c_;
        for (auto& x : r) x *= v;
        return UniPoly(std::move(r));
    }

    // Field division: *this = q*d + r with deg r < deg d.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw PreconditionError("division by zero polynomial");
        std::vector<Rational> rem = c_;
        std::vector<Rational> quo;
        const int dd = d.degree();
        if (degree() >= dd) quo.assign(static_cast<std::size_t>(degree() - dd) + 1, Rational{});
        for (int k = degree() - dd; k >= 0; --k) {
            const Rational q = rem[static_cast<std::size_t>(k + dd)] / d.lead();
            if (q != 0) {
                quo[static_cast<std::size_t>(k)] = q;
                for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * d.coeff(j);
            }
        }
        UniPoly r(std::move(rem));
        return {UniPoly(std::move(quo)), std::move(r)};
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long long>(i));
        return UniPoly(std::move(r));
    }

    Rational eval(const Rational& x) const {
        Rational v;
        for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
        return v;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(Rational(1) / lead());
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rational& a = coeff(i);
            if (a == 0) continue;
            const bool neg = a < 0;
            const Rational mag = neg ? Rational(-a) : a;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            const bool unit = (mag == 1) && i > 0;
            if (!unit) out += format_rational(mag);
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---------------------------------------------------------------------------
// Factorization over Q. Squarefree decomposition is gcd-based (Yun); each
// squarefree part is factored over Z by reduction mod a small prime,
// Cantor-Zassenhaus, quadratic Hensel lifting past the Mignotte bound, and
// subset recombination.
// ---------------------------------------------------------------------------

namespace detail {

using IntPoly = std::vector<Integer>;  // low -> high, trailing zeros trimmed

inline void ip_trim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int ip_deg(const IntPoly& f) { return static_cast<int>(f.size()) - 1; }

inline IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    ip_trim(r);
    return r;
}

inline Integer ip_content(const IntPoly& f) {
    Integer g = 0;
    for (const auto& c : f) g = boost::multiprecision::gcd(g, c);
    return g;
}

// Exact division test over Z; returns true and fills q when d | f.
inline bool ip_divides(const IntPoly& f, const IntPoly& d, IntPoly& q) {
    if (d.empty()) return false;
    IntPoly rem = f;
    ip_trim(rem);
    q.assign(rem.size() >= d.size() ? rem.size() - d.size() + 1 : 0, Integer(0));
    while (ip_deg(rem) >= ip_deg(d)) {
        const Integer& lc = rem.back();
        if (lc % d.back() != 0) return false;
        const Integer c = lc / d.back();
        const int shift = ip_deg(rem) - ip_deg(d);
        q[static_cast<std::size_t>(shift)] = c;
        for (std::size_t j = 0; j < d.size(); ++j) rem[static_cast<std::size_t>(shift) + j] -= c * d[j];
        ip_trim(rem);
    }
    return rem.empty();
}

// --- arithmetic mod a word prime -------------------------------------------

using PolyP = std::vector<std::uint64_t>;

inline void pp_trim(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline PolyP pp_mul(const PolyP& a, const PolyP& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    pp_trim(r);
    return r;
}

inline std::uint64_t pp_powmod_u(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline std::uint64_t pp_inv(std::uint64_t a, std::uint64_t p) { return pp_powmod_u(a, p - 2, p); }

inline PolyP pp_mod(PolyP f, const PolyP& g, std::uint64_t p) {
    const std::uint64_t inv_lead = pp_inv(g.back(), p);
    while (f.size() >= g.size() && !f.empty()) {
        const std::uint64_t c = f.back() * inv_lead % p;
        const std::size_t shift = f.size() - g.size();
        for (std::size_t j = 0; j < g.size(); ++j) {
            f[shift + j] = (f[shift + j] + p - c * g[j] % p) % p;
        }
        pp_trim(f);
    }
    return f;
}

inline PolyP pp_divexact(PolyP f, const PolyP& g, std::uint64_t p) {
    const std::uint64_t inv_lead = pp_inv(g.back(), p);
    PolyP q(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, 0);
    while (f.size() >= g.size() && !f.empty()) {
        const std::uint64_t c = f.back() * inv_lead % p;
        const std::size_t shift = f.size() - g.size();
        q[shift] = c;
        for (std::size_t j = 0; j < g.size(); ++j) {
            f[shift + j] = (f[shift + j] + p - c * g[j] % p) % p;
        }
        pp_trim(f);
    }
    return q;
}

inline PolyP pp_gcd(PolyP a, PolyP b, std::uint64_t p) {
    while (!b.empty()) {
        PolyP r = pp_mod(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint64_t inv = pp_inv(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

inline PolyP pp_powmod(PolyP base, Integer e, const PolyP& f, std::uint64_t p) {
    PolyP r{1};
    base = pp_mod(std::move(base), f, p);
    while (e > 0) {
        if ((e & 1) != 0) r = pp_mod(pp_mul(r, base, p), f, p);
        base = pp_mod(pp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

inline PolyP pp_derivative(const PolyP& f, std::uint64_t p) {
    PolyP r;
    for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * (i % p) % p);
    pp_trim(r);
    return r;
}

// Cantor-Zassenhaus over F_p for a squarefree monic input.
inline void pp_equal_degree(const PolyP& f, int d, std::uint64_t p, Rng& rng, std::vector<PolyP>& out) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n == d) {
        out.push_back(f);
        return;
    }
    const Integer exponent = (boost::multiprecision::pow(Integer(p), static_cast<unsigned>(d)) - 1) / 2;
    for (;;) {
        PolyP a(static_cast<std::size_t>(n), 0);
        for (auto& c : a) c = rng.next() % p;
        pp_trim(a);
        if (a.size() <= 1) continue;
        PolyP b = pp_powmod(a, exponent, f, p);
        if (b.empty()) continue;
        b[0] = (b[0] + p - 1) % p;
        pp_trim(b);
        PolyP g = pp_gcd(b, f, p);
        if (g.size() > 1 && static_cast<int>(g.size()) - 1 < n) {
            pp_equal_degree(g, d, p, rng, out);
            pp_equal_degree(pp_divexact(f, g, p), d, p, rng, out);
            return;
        }
    }
}

inline std::vector<PolyP> pp_factor_squarefree(PolyP f, std::uint64_t p, Rng& rng) {
    std::vector<PolyP> out;
    const std::uint64_t inv = pp_inv(f.back(), p);
    for (auto& c : f) c = c * inv % p;
    PolyP x{0, 1};
    PolyP h = x;
    int d = 0;
    while (static_cast<int>(f.size()) - 1 >= 2 * (d + 1)) {
        ++d;
        h = pp_powmod(std::move(h), Integer(p), f, p);
        PolyP hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] + p - 1) % p;
        pp_trim(hx);
        PolyP g = pp_gcd(hx, f, p);
        if (g.size() > 1) {
            pp_equal_degree(g, d, p, rng, out);
            f = pp_divexact(f, g, p);
            h = pp_mod(std::move(h), f, p);
        }
    }
    if (f.size() > 1) out.push_back(f);
    return out;
}

// --- Hensel lifting ---------------------------------------------------------

inline Integer balanced(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

inline IntPoly ip_mod_balanced(IntPoly f, const Integer& m) {
    for (auto& c : f) c = balanced(c, m);
    ip_trim(f);
    return f;
}

// q, r with f = q*g + r mod m, g monic mod m.
inline void ip_divmod_monic_mod(const IntPoly& f, const IntPoly& g, const Integer& m, IntPoly& q, IntPoly& r) {
    r = ip_mod_balanced(f, m);
    q.assign(r.size() >= g.size() ? r.size() - g.size() + 1 : 0, Integer(0));
    while (ip_deg(r) >= ip_deg(g)) {
        const Integer c = balanced(r.back(), m);
        const int shift = ip_deg(r) - ip_deg(g);
        q[static_cast<std::size_t>(shift)] = c;
        for (std::size_t j = 0; j < g.size(); ++j) {
            r[static_cast<std::size_t>(shift) + j] = balanced(r[static_cast<std::size_t>(shift) + j] - c * g[j], m);
        }
        ip_trim(r);
    }
    ip_trim(q);
}

// One quadratic step: f = g*h mod m with s*g + t*h = 1 mod m, h monic.
// Produces the same data mod m^2 (h stays monic).
inline void hensel_step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t, const Integer& m) {
    const Integer m2 = m * m;
    IntPoly e = ip_mod_balanced(f, m2);
    IntPoly gh = ip_mul(g, h);
    for (std::size_t i = 0; i < gh.size(); ++i) {
        if (i >= e.size()) e.resize(i + 1, Integer(0));
        e[i] -= gh[i];
    }
    e = ip_mod_balanced(std::move(e), m2);

    IntPoly q, r;
    ip_divmod_monic_mod(ip_mul(s, e), h, m2, q, r);
    IntPoly g_new = g;
    {
        IntPoly te = ip_mul(t, e);
        IntPoly qg = ip_mul(q, g);
        const std::size_t n = std::max({g_new.size(), te.size(), qg.size()});
        g_new.resize(n, Integer(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (i < te.size()) g_new[i] += te[i];
            if (i < qg.size()) g_new[i] += qg[i];
        }
        g_new = ip_mod_balanced(std::move(g_new), m2);
    }
    IntPoly h_new = h;
    {
        const std::size_t n = std::max(h_new.size(), r.size());
        h_new.resize(n, Integer(0));
        for (std::size_t i = 0; i < r.size(); ++i) h_new[i] += r[i];
        h_new = ip_mod_balanced(std::move(h_new), m2);
    }

    // lift the Bezout pair
    IntPoly b = ip_mul(s, g_new);
    {
        IntPoly th = ip_mul(t, h_new);
        const std::size_t n = std::max(b.size(), th.size());
        b.resize(n, Integer(0));
        for (std::size_t i = 0; i < th.size(); ++i) b[i] += th[i];
        if (b.empty()) b.resize(1, Integer(0));
        b[0] -= 1;
        b = ip_mod_balanced(std::move(b), m2);
    }
    IntPoly c, d;
    ip_divmod_monic_mod(ip_mul(s, b), h_new, m2, c, d);
    IntPoly s_new(std::max(s.size(), d.size()), Integer(0));
    for (std::size_t i = 0; i < s.size(); ++i) s_new[i] += s[i];
    for (std::size_t i = 0; i < d.size(); ++i) s_new[i] -= d[i];
    s_new = ip_mod_balanced(std::move(s_new), m2);
    IntPoly t_new = t;
    {
        IntPoly tb = ip_mul(t, b);
        IntPoly cg = ip_mul(c, g_new);
        const std::size_t n = std::max({t_new.size(), tb.size(), cg.size()});
        t_new.resize(n, Integer(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (i < tb.size()) t_new[i] -= tb[i];
            if (i < cg.size()) t_new[i] -= cg[i];
        }
        t_new = ip_mod_balanced(std::move(t_new), m2);
    }

    g = std::move(g_new);
    h = std::move(h_new);
    s = std::move(s_new);
    t = std::move(t_new);
}

inline IntPoly ip_from_pp(const PolyP& f) {
    IntPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = Integer(f[i]);
    return r;
}

inline PolyP pp_from_ip(const IntPoly& f, std::uint64_t p) {
    PolyP r(f.size());
    const Integer pp(p);
    for (std::size_t i = 0; i < f.size(); ++i) {
        Integer c = f[i] % pp;
        if (c < 0) c += pp;
        r[i] = c.convert_to<std::uint64_t>();
    }
    pp_trim(r);
    return r;
}

// Bezout pair over F_p for coprime a, b (extended Euclid), returned as
// integer polynomials with coefficients in [0, p).
inline void pp_bezout(const PolyP& a, const PolyP& b, std::uint64_t p, PolyP& s, PolyP& t) {
    PolyP r0 = a, r1 = b;
    PolyP s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        PolyP q = pp_divexact(r0, r1, p);
        PolyP r2 = pp_mod(r0, r1, p);
        auto combine = [&](const PolyP& x0, const PolyP& x1) {
            PolyP qx = pp_mul(q, x1, p);
            PolyP res(std::max(x0.size(), qx.size()), 0);
            for (std::size_t i = 0; i < x0.size(); ++i) res[i] = x0[i];
            for (std::size_t i = 0; i < qx.size(); ++i) res[i] = (res[i] + p - qx[i]) % p;
            pp_trim(res);
            return res;
        };
        PolyP s2 = combine(s0, s1), t2 = combine(t0, t1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd (a nonzero constant since inputs are coprime)
    const std::uint64_t inv = pp_inv(r0[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    s = std::move(s0);
    t = std::move(t0);
}

// Lift the modular factor list (monic, pairwise coprime, lc(f)*prod = f mod p)
// to precision >= bound via a divide-and-conquer tree.
inline void hensel_tree(const IntPoly& f, const std::vector<PolyP>& factors, std::size_t lo, std::size_t hi,
                        std::uint64_t p, const Integer& bound, std::vector<IntPoly>& out) {
    if (hi - lo == 1) {
        // make monic mod the final modulus via the recorded precision chain:
        // the caller passes f already equal to (unit * factor) at full
        // precision; normalize by the leading coefficient inverse.
        out.push_back(f);
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    PolyP gp{1}, hp{1};
    for (std::size_t i = lo; i < mid; ++i) gp = pp_mul(gp, factors[i], p);
    for (std::size_t i = mid; i < hi; ++i) hp = pp_mul(hp, factors[i], p);
    // attach lc(f) to the left part
    {
        Integer lcm_ = f.back() % Integer(p);
        if (lcm_ < 0) lcm_ += Integer(p);
        const std::uint64_t lc = lcm_.convert_to<std::uint64_t>();
        for (auto& c : gp) c = c * lc % p;
    }
    PolyP sp, tp;
    pp_bezout(gp, hp, p, sp, tp);

    IntPoly g = ip_from_pp(gp), h = ip_from_pp(hp), s = ip_from_pp(sp), t = ip_from_pp(tp);
    g = ip_mod_balanced(std::move(g), Integer(p));
    h = ip_mod_balanced(std::move(h), Integer(p));
    s = ip_mod_balanced(std::move(s), Integer(p));
    t = ip_mod_balanced(std::move(t), Integer(p));
    Integer m(p);
    while (m < bound) {
        hensel_step(f, g, h, s, t, m);
        m *= m;
    }
    hensel_tree(g, factors, lo, mid, p, bound, out);
    hensel_tree(h, factors, mid, hi, p, bound, out);
}

// Mignotte-style bound: factors of f have coefficients below 2^deg * |f|_2.
inline Integer factor_coefficient_bound(const IntPoly& f) {
    Integer norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Integer root = boost::multiprecision::sqrt(norm2);
    while (root * root < norm2) ++root;
    Integer b = (root + 1) << static_cast<unsigned>(ip_deg(f) + 1);
    return b * boost::multiprecision::abs(f.back()) * 2 + 1;
}

inline constexpr std::uint64_t kFactorPrimes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL,
                                                  2147483579ULL, 2147483563ULL, 2147483549ULL};

// Factor a primitive squarefree integer polynomial of degree >= 1 into
// irreducible integer factors.
inline std::vector<IntPoly> factor_squarefree_int(const IntPoly& f) {
    if (ip_deg(f) == 1) return {f};
    Rng rng(0x5eedf00dULL + static_cast<std::uint64_t>(ip_deg(f)));

    // choose a prime keeping f squarefree with the same degree
    std::uint64_t p = 0;
    std::vector<PolyP> modular;
    for (std::uint64_t cand : kFactorPrimes) {
        if (f.back() % Integer(cand) == 0) continue;
        PolyP fp = pp_from_ip(f, cand);
        if (static_cast<int>(fp.size()) - 1 != ip_deg(f)) continue;
        PolyP g = pp_gcd(fp, pp_derivative(fp, cand), cand);
        if (g.size() != 1) continue;
        p = cand;
        modular = pp_factor_squarefree(std::move(fp), cand, rng);
        break;
    }
    if (p == 0) throw Error("no suitable prime for factorization");
    if (modular.size() == 1) return {f};

    std::sort(modular.begin(), modular.end());
    const Integer bound = factor_coefficient_bound(f);
    Integer modulus(p);
    while (modulus < bound) modulus *= modulus;

    std::vector<IntPoly> lifted;
    hensel_tree(ip_mod_balanced(f, modulus), modular, 0, modular.size(), p, bound, lifted);
    // normalize each lifted factor to monic mod modulus
    for (auto& g : lifted) {
        Integer lc = g.back() % modulus;
        if (lc < 0) lc += modulus;
        // inverse of lc mod modulus via extended gcd on integers
        Integer a = lc, b = modulus, x0 = 1, x1 = 0;
        while (b != 0) {
            Integer q = a / b;
            Integer tmp = a - q * b;
            a = b;
            b = tmp;
            tmp = x0 - q * x1;
            x0 = x1;
            x1 = tmp;
        }
        Integer inv = x0 % modulus;
        if (inv < 0) inv += modulus;
        for (auto& c : g) c = balanced(c * inv, modulus);
        ip_trim(g);
    }

    // subset recombination
    std::vector<IntPoly> result;
    IntPoly remaining = f;
    std::vector<int> alive(lifted.size(), 1);
    int alive_count = static_cast<int>(lifted.size());
    for (std::size_t take = 1; take <= lifted.size() && alive_count > 0; ++take) {
        if (static_cast<int>(take) > alive_count) break;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < lifted.size(); ++i) {
            if (alive[i]) idx.push_back(i);
        }
        std::vector<std::size_t> comb(take);
        for (std::size_t i = 0; i < take; ++i) comb[i] = i;
        bool restart = false;
        while (!restart) {
            IntPoly cand{remaining.back()};
            for (std::size_t i = 0; i < take; ++i) {
                cand = ip_mul(cand, lifted[idx[comb[i]]]);
                cand = ip_mod_balanced(std::move(cand), modulus);
            }
            const Integer cont = ip_content(cand);
            if (cont != 0) {
                for (auto& c : cand) c /= cont;
            }
            IntPoly q;
            if (!cand.empty() && ip_divides(remaining, cand, q)) {
                result.push_back(cand);
                remaining = q;
                for (std::size_t i = 0; i < take; ++i) {
                    alive[idx[comb[i]]] = 0;
                    --alive_count;
                }
                restart = true;
                break;
            }
            // next combination
            int pos = static_cast<int>(take) - 1;
            while (pos >= 0 && comb[static_cast<std::size_t>(pos)] ==
                                   idx.size() - take + static_cast<std::size_t>(pos)) {
                --pos;
            }
            if (pos < 0) break;
            ++comb[static_cast<std::size_t>(pos)];
            for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < take; ++i) comb[i] = comb[i - 1] + 1;
        }
        if (restart) take = 0;  // found a factor, restart with singletons
    }
    if (ip_deg(remaining) >= 1) result.push_back(remaining);
    return result;
}

}  // namespace detail

// Squarefree decomposition (Yun): returns pairs (g_i, i) with f = lead * prod g_i^i,
// each g_i monic squarefree, pairwise coprime.
inline std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
    std::vector<std::pair<UniPoly, int>> out;
    if (f.degree() <= 0) return out;
    UniPoly a = f.monic();
    UniPoly g = poly_gcd(a, a.derivative());
    UniPoly w = a.divmod(g).first;  // radical of a
    int mult = 1;
    while (w.degree() > 0) {
        UniPoly y = poly_gcd(w, g);
        UniPoly part = w.divmod(y).first;  // factors of multiplicity exactly `mult`
        if (part.degree() > 0) out.emplace_back(part.monic(), mult);
        g = g.divmod(y).first;
        w = std::move(y);
        ++mult;
    }
    return out;
}

// Irreducible factorization over Q: monic irreducible factors with multiplicities,
// sorted by (degree, coefficients). The leading coefficient is dropped.
inline std::vector<std::pair<UniPoly, int>> factor_rational(const UniPoly& f) {
    std::vector<std::pair<UniPoly, int>> out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        // to primitive integer polynomial
        Integer den_lcm = 1;
        for (const auto& c : part.coeffs()) {
            den_lcm = boost::multiprecision::lcm(den_lcm, denominator_of(c));
        }
        detail::IntPoly ip(part.coeffs().size());
        for (std::size_t i = 0; i < ip.size(); ++i) {
            ip[i] = numerator_of(part.coeffs()[i]) * (den_lcm / denominator_of(part.coeffs()[i]));
        }
        const Integer cont = detail::ip_content(ip);
        if (cont > 1) {
            for (auto& c : ip) c /= cont;
        }
        for (const auto& factor : detail::factor_squarefree_int(ip)) {
            std::vector<Rational> cs(factor.size());
            for (std::size_t i = 0; i < factor.size(); ++i) cs[i] = Rational(factor[i]);
            out.emplace_back(UniPoly(std::move(cs)).monic(), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = 0; i <= a.first.degree(); ++i) {
            if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
        }
        return a.second < b.second;
    });
    return out;
}

inline std::vector<Rational> rational_roots(const UniPoly& f) {
    std::vector<Rational> roots;
    for (const auto& [factor, mult] : factor_rational(f)) {
        (void)mult;
        if (factor.degree() == 1) roots.push_back(-factor.coeff(0));
    }
    return roots;
}

}  // namespace qinv
