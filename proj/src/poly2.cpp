#include "tangokv/poly2.hpp"

#include <algorithm>

#include "tangokv/laurent.hpp"

namespace tangokv {

namespace {
long mod_pos(long long v, long p) {
    long long r = v % p;
    if (r < 0) r += p;
    return (long)r;
}
} // namespace

Poly2 Poly2::mono(long p, long coeff, int ex, int ey) {
    Poly2 r(p);
    r.set(ex, ey, coeff);
    return r;
}

void Poly2::set(int ex, int ey, long v) {
    v = mod_pos(v, p_);
    if (v == 0)
        t_.erase({ex, ey});
    else
        t_[{ex, ey}] = v;
}

bool Poly2::is_constant() const {
    for (auto& [k, v] : t_)
        if (k.first != 0 || k.second != 0) return false;
    return true;
}

int Poly2::deg_x() const {
    int d = t_.empty() ? -1 : 0;
    for (auto& [k, v] : t_) d = std::max(d, k.first);
    return d;
}

int Poly2::deg_y() const {
    int d = t_.empty() ? -1 : 0;
    for (auto& [k, v] : t_) d = std::max(d, k.second);
    return d;
}

int Poly2::total_degree() const {
    int d = t_.empty() ? -1 : 0;
    for (auto& [k, v] : t_) d = std::max(d, k.first + k.second);
    return d;
}

long Poly2::coeff(int ex, int ey) const {
    auto it = t_.find({ex, ey});
    return it == t_.end() ? 0 : it->second;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r = *this;
    for (auto& [k, v] : o.t_) r.set(k.first, k.second, r.coeff(k.first, k.second) + v);
    return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
    Poly2 r = *this;
    for (auto& [k, v] : o.t_) r.set(k.first, k.second, r.coeff(k.first, k.second) - v);
    return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 r(p_);
    for (auto& [ka, va] : t_)
        for (auto& [kb, vb] : o.t_) {
            int ex = ka.first + kb.first, ey = ka.second + kb.second;
            r.set(ex, ey, r.coeff(ex, ey) + va * vb);
        }
    return r;
}

Poly2 Poly2::operator*(long s) const {
    Poly2 r(p_);
    for (auto& [k, v] : t_) r.set(k.first, k.second, v * s);
    return r;
}

Poly2 Poly2::operator-() const { return *this * (p_ - 1); }

Poly2 Poly2::dx() const {
    Poly2 r(p_);
    for (auto& [k, v] : t_)
        if (k.first > 0) r.set(k.first - 1, k.second, v * (long)(k.first % p_));
    return r;
}

Poly2 Poly2::dy() const {
    Poly2 r(p_);
    for (auto& [k, v] : t_)
        if (k.second > 0) r.set(k.first, k.second - 1, v * (long)(k.second % p_));
    return r;
}

Poly2 Poly2::swap_xy() const {
    Poly2 r(p_);
    for (auto& [k, v] : t_) r.set(k.second, k.first, v);
    return r;
}

FE Poly2::eval(const FE& x, const FE& y) const {
    const Field* K = x.field();
    // powers cached up to degrees
    std::vector<FE> xp{K->one()}, yp{K->one()};
    for (int i = 1; i <= deg_x(); ++i) xp.push_back(xp.back() * x);
    for (int j = 1; j <= deg_y(); ++j) yp.push_back(yp.back() * y);
    FE acc = K->zero();
    for (auto& [k, v] : t_) acc += xp[k.first] * yp[k.second] * K->from_int(v);
    return acc;
}

Series Poly2::eval_series(const Series& x, const Series& y) const {
    const Field* K = x.field();
    long prec = std::min(x.prec_abs(), y.prec_abs());
    std::vector<Series> xp{Series::constant(K, K->one(), prec)};
    std::vector<Series> yp{Series::constant(K, K->one(), prec)};
    for (int i = 1; i <= deg_x(); ++i) xp.push_back(xp.back() * x);
    for (int j = 1; j <= deg_y(); ++j) yp.push_back(yp.back() * y);
    Series acc = Series::zero_to(K, prec);
    for (auto& [k, v] : t_)
        acc = acc + (xp[k.first] * yp[k.second]).scaled(K->from_int(v));
    return acc;
}

Poly Poly2::coeff_of_y(int j, const Field* K) const {
    std::vector<FE> c;
    for (auto& [k, v] : t_) {
        if (k.second != j) continue;
        if ((int)c.size() <= k.first) c.resize(k.first + 1, K->zero());
        c[k.first] = K->from_int(v);
    }
    return Poly(K, std::move(c));
}

Poly Poly2::at_x(const FE& x0) const {
    const Field* K = x0.field();
    std::vector<FE> c;
    std::vector<FE> xp{K->one()};
    for (int i = 1; i <= deg_x(); ++i) xp.push_back(xp.back() * x0);
    for (auto& [k, v] : t_) {
        if ((int)c.size() <= k.second) c.resize(k.second + 1, K->zero());
        c[k.second] += xp[k.first] * K->from_int(v);
    }
    return Poly(K, std::move(c));
}

Poly Poly2::univariate_x(const Field* K) const {
    if (deg_y() > 0) throw InternalError("univariate_x: polynomial involves y");
    return coeff_of_y(0, K);
}

Poly2 Poly2::rem_y(const Poly2& m) const {
    int dm = m.deg_y();
    if (dm < 0) throw InternalError("rem_y: zero modulus");
    // leading y-coefficient of m must be a nonzero constant
    Poly2 lead(p_);
    for (auto& [k, v] : m.t_)
        if (k.second == dm) lead.set(k.first, 0, v);
    if (!lead.is_constant() || lead.is_zero())
        throw InternalError("rem_y: modulus leading y-coefficient is not a unit constant");
    long lc = lead.coeff(0, 0);
    long lcinv = 1;
    for (long t = 1; t < p_; ++t)
        if (lc * t % p_ == 1) { lcinv = t; break; }

    Poly2 r = *this;
    while (r.deg_y() >= dm) {
        int dy = r.deg_y();
        // subtract (top y-slice / lc) * y^(dy-dm) * m
        Poly2 slice(p_);
        for (auto& [k, v] : r.t_)
            if (k.second == dy) slice.set(k.first, 0, v * lcinv);
        Poly2 shift = Poly2::mono(p_, 1, 0, dy - dm);
        r = r - slice * shift * m;
        if (r.deg_y() >= dy && !r.is_zero()) throw InternalError("rem_y: no progress");
    }
    return r;
}

std::string Poly2::str(const std::string& xv, const std::string& yv) const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        auto& [k, v] = *it;
        if (!s.empty()) s += " + ";
        bool named = k.first > 0 || k.second > 0;
        if (v != 1 || !named) s += std::to_string(v);
        if (k.first > 0) {
            if (v != 1) s += "*";
            s += xv;
            if (k.first > 1) s += "^" + std::to_string(k.first);
        }
        if (k.second > 0) {
            if (v != 1 || k.first > 0) s += "*";
            s += yv;
            if (k.second > 1) s += "^" + std::to_string(k.second);
        }
    }
    return s;
}

namespace {

// resultant of univariate f, g over a field by the Euclidean remainder chain
FE resultant_univ(Poly f, Poly g) {
    const Field* K = f.field();
    if (f.is_zero() || g.is_zero()) return K->zero();
    FE acc = K->one();
    bool neg = false;
    while (g.degree() > 0) {
        Poly r = f % g;
        if (r.is_zero()) return K->zero();
        // res(f,g) = (-1)^(df*dg) lc(g)^(df - dr) res(g, r)
        int df = f.degree(), dg = g.degree(), dr = r.degree();
        if ((df & 1) && (dg & 1)) neg = !neg;
        acc = acc * g.lc().pow(df - dr);
        f = g;
        g = r;
    }
    // g constant nonzero: res = g^deg(f)
    acc = acc * g.coeff(0).pow(f.degree());
    return neg ? -acc : acc;
}

} // namespace

Poly resultant_y(const Poly2& a, const Poly2& b) {
    long p = a.p();
    const Field* Fp = Field::prime(p);
    int da = a.deg_y(), db = b.deg_y();
    if (da < 1) throw InternalError("resultant_y: first argument must involve y");
    if (db < 0) return Poly(Fp);
    if (db == 0) {
        // res_y(a, b) = b^da for constant-in-y b
        Poly bx = b.univariate_x(Fp);
        Poly r = Poly::constant(Fp, Fp->one());
        for (int i = 0; i < da; ++i) r = r * bx;
        return r;
    }
    // lc_y(a) must be a unit constant so evaluation never drops a's degree
    Poly alead = a.coeff_of_y(da, Fp);
    if (alead.degree() != 0)
        throw InternalError("resultant_y: leading y-coefficient of a must be constant");
    long lca = alead.coeff(0).prime_value();

    int dres = a.deg_x() * db + b.deg_x() * da;
    long long need = dres + 1;
    int e = 1;
    long long q = p;
    while (q < need) {
        q *= p;
        ++e;
    }
    const Field* K = Field::canonical(p, e);

    std::vector<FE> pts, vals;
    pts.reserve(need);
    vals.reserve(need);
    FE lca_k = K->from_int(lca);
    for (long long idx = 0; idx < need; ++idx) {
        FE x0 = K->element(idx);
        Poly fa = a.at_x(x0);
        Poly fb = b.at_x(x0);
        FE v;
        if (fb.is_zero()) {
            v = K->zero();
        } else {
            // degree drop of b at x0 contributes lc_y(a)^drop
            int drop = db - fb.degree();
            v = resultant_univ(fa, fb) * lca_k.pow(drop);
        }
        pts.push_back(x0);
        vals.push_back(v);
    }

    // Lagrange interpolation over K with the master polynomial
    // M(x) = prod (x - p_j); basis_i = M / (x - p_i), scaled by 1/M'(p_i).
    std::vector<FE> master{K->one()};
    for (long long j = 0; j < need; ++j) {
        master.push_back(K->zero());
        for (size_t k = master.size() - 1; k >= 1; --k)
            master[k] = master[k - 1] - pts[j] * master[k];
        master[0] = -pts[j] * master[0];
    }
    Poly masterp(K, master);
    Poly dmaster = masterp.derivative();

    std::vector<FE> acc((size_t)need, K->zero());
    std::vector<FE> basis((size_t)need, K->zero());
    for (long long i = 0; i < need; ++i) {
        if (vals[i].is_zero()) continue;
        // synthetic division of M by (x - p_i)
        FE carry = K->zero();
        for (long long k = need; k >= 1; --k) {
            carry = master[k] + pts[i] * carry;
            basis[k - 1] = carry;
        }
        FE scale = vals[i] / dmaster.eval(pts[i]);
        for (long long k = 0; k < need; ++k) acc[k] += basis[k] * scale;
    }

    // coefficients must lie in the prime field
    std::vector<FE> cp;
    cp.reserve(acc.size());
    for (auto& c : acc) {
        long v;
        if (K->is_prime()) {
            v = c.prime_value();
        } else {
            const auto& coords = c.coords();
            for (size_t i = 1; i < coords.size(); ++i)
                if (!coords[i].is_zero())
                    throw InternalError("resultant_y: coefficient escaped the prime field");
            v = coords[0].prime_value();
        }
        cp.push_back(Fp->from_int(v));
    }
    return Poly(Fp, std::move(cp));
}

} // namespace tangokv
