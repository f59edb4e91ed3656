#include "bispec/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace bispec {

BiPoly::BiPoly(const Scalar& c) {
    if (!c.is_zero()) t_[Mono{0, 0}] = c;
}

BiPoly BiPoly::monomial(Mono m, const Scalar& c) {
    BiPoly p;
    if (!c.is_zero()) p.t_[m] = c;
    return p;
}

BiPoly BiPoly::var(Var v) {
    return monomial(v == Var::x ? Mono{1, 0} : Mono{0, 1}, Scalar::one());
}

bool BiPoly::is_constant() const {
    if (t_.empty()) return true;
    return t_.size() == 1 && t_.begin()->first == Mono{0, 0};
}

Scalar BiPoly::constant_value() const {
    auto it = t_.find(Mono{0, 0});
    return it == t_.end() ? Scalar::zero() : it->second;
}

int BiPoly::degree(Var v) const {
    int d = -1;
    for (const auto& [m, c] : t_)
        d = std::max(d, v == Var::x ? m.x : m.z);
    return d;
}

int BiPoly::total_degree() const {
    if (t_.empty()) return -1;
    auto m = t_.rbegin()->first;
    return m.x + m.z;
}

Scalar BiPoly::coeff(Mono m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Scalar::zero() : it->second;
}

void BiPoly::insert_(Mono m, const Scalar& c) {
    auto it = t_.find(m);
    if (it == t_.end()) {
        if (!c.is_zero()) t_[m] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [m, c] : t_) r.t_[m] = -c;
    return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [m, c] : o.t_) r.insert_(m, c);
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [m, c] : o.t_) r.insert_(m, -c);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [ma, ca] : t_)
        for (const auto& [mb, cb] : o.t_)
            r.insert_(Mono{ma.x + mb.x, ma.z + mb.z}, ca * cb);
    return r;
}

BiPoly BiPoly::operator*(const Scalar& s) const {
    if (s.is_zero()) return BiPoly();
    BiPoly r;
    for (const auto& [m, c] : t_) r.t_[m] = c * s;
    return r;
}

BiPoly BiPoly::pow(unsigned k) const {
    BiPoly r(Scalar::one());
    BiPoly base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

BiPoly BiPoly::derivative(Var v) const {
    BiPoly r;
    for (const auto& [m, c] : t_) {
        const int e = v == Var::x ? m.x : m.z;
        if (e == 0) continue;
        Mono mm = v == Var::x ? Mono{m.x - 1, m.z} : Mono{m.x, m.z - 1};
        r.insert_(mm, c * Scalar(e));
    }
    return r;
}

Mono BiPoly::leading_mono() const {
    if (t_.empty()) throw DomainError("zero polynomial has no leading term");
    return t_.rbegin()->first;
}

Scalar BiPoly::leading_coeff() const {
    if (t_.empty()) throw DomainError("zero polynomial has no leading term");
    return t_.rbegin()->second;
}

BiPoly BiPoly::normalized_monic() const {
    if (t_.empty()) return *this;
    return *this * leading_coeff().inverse();
}

Scalar BiPoly::eval_x(const Scalar& p) const {
    if (degree(Var::z) > 0)
        throw DomainError("eval_x requires a polynomial univariate in x");
    // Horner over the sparse support.
    Scalar acc = Scalar::zero();
    int last = -1;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const int e = it->first.x;
        if (last >= 0)
            for (int k = 0; k < last - e; ++k) acc *= p;
        acc += it->second;
        last = e;
    }
    if (last > 0)
        for (int k = 0; k < last; ++k) acc *= p;
    return acc;
}

BiPoly BiPoly::divide_exact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    if (b.terms().size() == 1) {
        const Mono mb = b.leading_mono();
        const Scalar inv = b.leading_coeff().inverse();
        BiPoly q;
        for (const auto& [m, c] : a.t_) {
            if (m.x < mb.x || m.z < mb.z)
                throw DomainError("inexact polynomial division");
            q.t_[Mono{m.x - mb.x, m.z - mb.z}] = c * inv;
        }
        return q;
    }
    BiPoly rem = a, q;
    const Mono lb = b.leading_mono();
    const Scalar lcb = b.leading_coeff();
    while (!rem.is_zero()) {
        const Mono la = rem.leading_mono();
        if (la.x < lb.x || la.z < lb.z)
            throw DomainError("inexact polynomial division");
        Mono mq{la.x - lb.x, la.z - lb.z};
        Scalar cq = rem.leading_coeff() / lcb;
        BiPoly t = monomial(mq, cq);
        q = q + t;
        rem = rem - t * b;
    }
    return q;
}

namespace {

// Dense univariate polynomial over Scalar (coefficients of z).
using ZPoly = std::vector<Scalar>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Scalar::zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Scalar::zero());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ztrim(r);
    return r;
}

void zdivmod(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r) {
    r = a;
    ztrim(r);
    q.assign(a.size(), Scalar::zero());
    ZPoly bb = b;
    ztrim(bb);
    if (bb.empty()) throw DomainError("division by zero polynomial");
    while (r.size() >= bb.size() && !r.empty()) {
        Scalar f = r.back() / bb.back();
        std::size_t shift = r.size() - bb.size();
        q[shift] += f;
        for (std::size_t i = 0; i < bb.size(); ++i) r[shift + i] -= f * bb[i];
        ztrim(r);
    }
    ztrim(q);
}

ZPoly zdivexact(const ZPoly& a, const ZPoly& b) {
    ZPoly q, r;
    zdivmod(a, b, q, r);
    if (!r.empty()) throw DomainError("inexact coefficient division in gcd");
    return q;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
    ztrim(a);
    ztrim(b);
    while (!b.empty()) {
        ZPoly q, r;
        zdivmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    Scalar inv = a.back().inverse();
    for (auto& c : a) c *= inv;
    return a;
}

// View of a bivariate polynomial as univariate in x over Scalar[z].
using XPoly = std::vector<ZPoly>;  // index = x-degree

XPoly to_xpoly(const BiPoly& p) {
    XPoly r(static_cast<std::size_t>(std::max(p.degree(Var::x), 0)) + 1);
    for (const auto& [m, c] : p.terms()) {
        auto& zp = r[m.x];
        if (static_cast<int>(zp.size()) <= m.z) zp.resize(m.z + 1, Scalar::zero());
        zp[m.z] = c;
    }
    while (r.size() > 1 && r.back().empty()) r.pop_back();
    for (auto& zp : r) ztrim(zp);
    return r;
}

BiPoly from_xpoly(const XPoly& p) {
    BiPoly r;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p[i].size(); ++j)
            if (!p[i][j].is_zero())
                r = r + BiPoly::monomial(Mono{static_cast<int>(i),
                                              static_cast<int>(j)}, p[i][j]);
    return r;
}

int xdeg(const XPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].empty()) return i;
    return -1;
}

bool xzero(const XPoly& p) { return xdeg(p) < 0; }

XPoly xscale(const XPoly& p, const ZPoly& f) {
    XPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = zmul(p[i], f);
    return r;
}

XPoly xdivcoeffs(const XPoly& p, const ZPoly& f) {
    XPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[i] = p[i].empty() ? ZPoly{} : zdivexact(p[i], f);
    return r;
}

ZPoly xcontent(const XPoly& p) {
    ZPoly g;
    for (const auto& zp : p)
        if (!zp.empty()) g = g.empty() ? zgcd(zp, {}) : zgcd(g, zp);
    return g;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, exact in Scalar[z][x].
XPoly xprem(XPoly a, const XPoly& b) {
    const int db = xdeg(b);
    const ZPoly& lcb = b[db];
    int da = xdeg(a);
    int steps = da - db + 1;
    while (da >= db && steps > 0) {
        // a = lcb*a - lc(a)*x^(da-db)*b
        ZPoly lca = a[da];
        XPoly next(std::max(a.size(), b.size() + static_cast<std::size_t>(da - db)));
        for (std::size_t i = 0; i < a.size(); ++i) next[i] = zmul(a[i], lcb);
        for (int i = 0; i <= db; ++i)
            next[i + da - db] = zsub(next[i + da - db], zmul(b[i], lca));
        a = std::move(next);
        --steps;
        da = xdeg(a);
    }
    // Account for skipped steps (degree dropped early): multiply the
    // remaining power of lcb so the subresultant divisions stay exact.
    for (; steps > 0; --steps) a = xscale(a, lcb);
    return a;
}

ZPoly zpow(const ZPoly& f, int k) {
    ZPoly r{Scalar::one()};
    for (int i = 0; i < k; ++i) r = zmul(r, f);
    return r;
}

}  // namespace

namespace {

Mono monomial_content(const BiPoly& p) {
    Mono m = p.leading_mono();
    for (const auto& [mm, c] : p.terms()) {
        m.x = std::min(m.x, mm.x);
        m.z = std::min(m.z, mm.z);
    }
    return m;
}

}  // namespace

BiPoly BiPoly::gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() && b.is_zero())
        throw DomainError("gcd(0, 0) is undefined");
    if (a.is_zero()) return b.normalized_monic();
    if (b.is_zero()) return a.normalized_monic();

    // Over a field, gcd with a monomial reads off the exponent minima.
    if (a.t_.size() == 1 || b.t_.size() == 1) {
        const BiPoly& mono = a.t_.size() == 1 ? a : b;
        const BiPoly& other = a.t_.size() == 1 ? b : a;
        Mono lo = monomial_content(other);
        Mono m = mono.leading_mono();
        return monomial(Mono{std::min(m.x, lo.x), std::min(m.z, lo.z)},
                        Scalar::one());
    }

    // Pull out monomial contents before the PRS; rational functions in
    // this domain are Laurent-like and this keeps the sweep small.
    const Mono ca_m = monomial_content(a), cb_m = monomial_content(b);
    const Mono shared{std::min(ca_m.x, cb_m.x), std::min(ca_m.z, cb_m.z)};
    if (ca_m.x > 0 || ca_m.z > 0 || cb_m.x > 0 || cb_m.z > 0) {
        BiPoly ra = divide_exact(a, monomial(ca_m, Scalar::one()));
        BiPoly rb = divide_exact(b, monomial(cb_m, Scalar::one()));
        return gcd(ra, rb) * monomial(shared, Scalar::one());
    }

    XPoly pa = to_xpoly(a), pb = to_xpoly(b);
    ZPoly ca = xcontent(pa), cb = xcontent(pb);
    XPoly ppa = xdivcoeffs(pa, ca), ppb = xdivcoeffs(pb, cb);
    ZPoly cg = zgcd(ca, cb);

    XPoly r0 = ppa, r1 = ppb;
    if (xdeg(r0) < xdeg(r1)) std::swap(r0, r1);
    ZPoly g{Scalar::one()}, h{Scalar::one()};
    while (!xzero(r1)) {
        const int delta = xdeg(r0) - xdeg(r1);
        XPoly rem = xprem(r0, r1);
        ZPoly glc = r1[xdeg(r1)];
        r0 = std::move(r1);
        if (xzero(rem)) {
            r1 = rem;
            break;
        }
        r1 = xdivcoeffs(rem, zmul(g, zpow(h, delta)));
        g = glc;
        if (delta > 0)
            h = delta == 1 ? g : zdivexact(zpow(g, delta), zpow(h, delta - 1));
    }
    // Primitive part of the last nonzero remainder; degree-0 remainders
    // mean the primitive parts are coprime in x.
    BiPoly result;
    if (xdeg(r0) == 0) {
        result = from_xpoly(XPoly{cg});
    } else {
        ZPoly cr = xcontent(r0);
        XPoly pp = xdivcoeffs(r0, cr);
        result = from_xpoly(xscale(pp, cg));
    }
    return result.normalized_monic();
}

BiPoly BiPoly::lcm(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly();
    return divide_exact(a * b, gcd(a, b)).normalized_monic();
}

std::size_t BiPoly::bitsize() const {
    std::size_t n = 0;
    for (const auto& [m, c] : t_) n += c.bitsize();
    return n;
}

std::string BiPoly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        bool composite = cs.find(' ') != std::string::npos;
        if (first) {
            if (neg && !composite) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            if (neg && !composite) {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        }
        first = false;
        const bool has_var = m.x > 0 || m.z > 0;
        if (!has_var) {
            os << (composite ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs != "1") {
            os << (composite ? "(" + cs + ")" : cs) << "*";
        }
        if (m.x > 0) {
            os << "x";
            if (m.x > 1) os << "^" << m.x;
            if (m.z > 0) os << "*";
        }
        if (m.z > 0) {
            os << "z";
            if (m.z > 1) os << "^" << m.z;
        }
    }
    return os.str();
}

}  // namespace bispec
