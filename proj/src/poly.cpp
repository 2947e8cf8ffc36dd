#include "tangokv/poly.hpp"

#include <algorithm>
#include <random>

namespace tangokv {

Poly Poly::from_ints(const Field* K, const std::vector<long long>& v) {
    std::vector<FE> c;
    c.reserve(v.size());
    for (long long x : v) c.push_back(K->from_int(x));
    return Poly(K, std::move(c));
}

FE Poly::lc() const {
    if (c_.empty()) return K_->zero();
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<FE> r(std::max(c_.size(), o.c_.size()), K_->zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(K_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<FE> r(std::max(c_.size(), o.c_.size()), K_->zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Poly(K_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(K_);
    std::vector<FE> r(c_.size() + o.c_.size() - 1, K_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return Poly(K_, std::move(r));
}

Poly Poly::operator*(const FE& s) const {
    std::vector<FE> r = c_;
    for (auto& c : r) c = c * s;
    return Poly(K_, std::move(r));
}

Poly Poly::operator-() const {
    std::vector<FE> r = c_;
    for (auto& c : r) c = -c;
    return Poly(K_, std::move(r));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero()) throw ArithmeticOverflow("Poly: division by zero polynomial");
    if (degree() < d.degree()) return {Poly(K_), *this};
    FE lcinv = d.lc().inverse();
    std::vector<FE> rem = c_;
    std::vector<FE> quot(degree() - d.degree() + 1, K_->zero());
    for (int k = degree(); k >= d.degree(); --k) {
        FE c = rem[k] * lcinv;
        if (c.is_zero()) continue;
        quot[k - d.degree()] = c;
        for (int i = 0; i <= d.degree(); ++i)
            rem[k - d.degree() + i] -= c * d.c_[i];
    }
    return {Poly(K_, std::move(quot)), Poly(K_, std::move(rem))};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * lc().inverse();
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(K_);
    std::vector<FE> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * K_->from_int((long long)i));
    return Poly(K_, std::move(r));
}

FE Poly::eval(const FE& x) const {
    FE acc = K_->zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || !c_[i].is_one()) s += c_[i].str();
        if (i >= 1) {
            if (!c_[i].is_one()) s += "*";
            s += var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
    }
    return s;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

Poly powmod(const Poly& base, __int128 e, const Poly& mod) {
    const Field* K = base.field();
    Poly r = Poly::constant(K, K->one()) % mod;
    Poly b = base % mod;
    while (e > 0) {
        if (e & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return r;
}

Poly compose_mod(const Poly& g, const Poly& h, const Poly& m) {
    const Field* K = g.field();
    Poly acc(K);
    for (int i = g.degree(); i >= 0; --i) {
        acc = (acc * h) % m;
        acc = acc + Poly::constant(K, g.coeff(i));
    }
    return acc;
}

namespace {

// a^q mod m where q is the coefficient field order. Uses a plain powmod when
// q fits in 128 bits; otherwise iterates the p-power map (the coefficients of
// a are fixed by the q-power map, so a^q = a evaluated at x^q).
Poly qth_power(const Poly& a, const Poly& m) {
    const Field* K = a.field();
    try {
        return powmod(a, K->order(), m);
    } catch (const ArithmeticOverflow&) {
        Poly t = a % m;
        for (int i = 0; i < K->absolute_degree(); ++i) t = powmod(t, K->p(), m);
        return t;
    }
}

// p-th root of an element of F_q: c^(p^(a-1)) where a = [F_q : F_p].
FE pth_root(const FE& c) {
    FE r = c;
    for (int i = 0; i < c.field()->absolute_degree() - 1; ++i) r = r.frobenius();
    return r;
}

Poly pth_root_poly(const Poly& f) {
    // f has only exponents divisible by p
    const Field* K = f.field();
    long p = K->p();
    std::vector<FE> c;
    for (int i = 0; i <= f.degree(); i += (int)p) c.push_back(pth_root(f.coeff(i)));
    return Poly(K, std::move(c));
}

uint64_t poly_seed(const Poly& f) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](const std::string& s) {
        for (char ch : s) {
            h ^= (unsigned char)ch;
            h *= 1099511628211ull;
        }
    };
    mix(f.str());
    mix(f.field()->name());
    return h;
}

Poly random_poly(const Field* K, int deg, std::mt19937_64& rng) {
    long long cap;
    try {
        __int128 ord = K->order();
        cap = ord > (__int128)4e18 ? (long long)4e18 : (long long)ord;
    } catch (const ArithmeticOverflow&) {
        cap = (long long)4e18;
    }
    std::vector<FE> c;
    c.reserve(deg + 1);
    for (int i = 0; i <= deg; ++i)
        c.push_back(K->element((long long)(rng() % (uint64_t)cap)));
    return Poly(K, std::move(c));
}

void equal_degree_split(const Poly& f, int d, std::vector<Poly>& out, std::mt19937_64& rng) {
    // f: monic squarefree product of irreducibles, all of degree d
    const Field* K = f.field();
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    for (int attempt = 0; attempt < 256; ++attempt) {
        Poly a = random_poly(K, f.degree() - 1, rng) % f;
        if (a.degree() < 1) continue;
        Poly g = gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, out, rng);
            equal_degree_split(f / g, d, out, rng);
            return;
        }
        Poly b(K);
        if (K->p() == 2) {
            // trace map over F_2: sum of a^(2^i) for i < [F_q:F_2] * d
            Poly t = a;
            Poly acc = a;
            long long steps = (long long)K->absolute_degree() * d;
            for (long long i = 1; i < steps; ++i) {
                t = powmod(t, 2, f);
                acc = (acc + t) % f;
            }
            b = acc;
        } else {
            // norm down to F_q, then the (q-1)/2 power splits by quadratic
            // residuosity of the norm
            Poly nrm = a;
            Poly aqi = a;
            for (int i = 1; i < d; ++i) {
                aqi = qth_power(aqi, f);
                nrm = (nrm * aqi) % f;
            }
            __int128 e = (K->order() - 1) / 2;
            b = powmod(nrm, e, f) - Poly::constant(K, K->one());
        }
        Poly g2 = gcd(b, f);
        if (g2.degree() > 0 && g2.degree() < f.degree()) {
            equal_degree_split(g2, d, out, rng);
            equal_degree_split(f / g2, d, out, rng);
            return;
        }
    }
    throw InternalError("equal-degree splitting did not converge");
}

void factor_squarefree_monic(const Poly& f, int mult, std::vector<PolyFactor>& out,
                             std::mt19937_64& rng) {
    const Field* K = f.field();
    Poly u = f.monic();
    Poly h = Poly::x(K) % u; // x^(q^d) mod u as d advances
    int d = 0;
    while (u.degree() > 0) {
        ++d;
        if (2 * d > u.degree()) {
            out.push_back({u, mult});
            return;
        }
        h = qth_power(h, u);
        Poly g = gcd(h - Poly::x(K), u);
        if (g.degree() > 0) {
            std::vector<Poly> eq;
            equal_degree_split(g.monic(), d, eq, rng);
            for (auto& q : eq) out.push_back({q, mult});
            u = u / g;
            h = h % u;
        }
    }
}

} // namespace

std::vector<PolyFactor> factor(const Poly& fin) {
    if (fin.is_zero()) throw ParamViolation("factor: zero polynomial");
    std::vector<PolyFactor> out;
    Poly f = fin.monic();
    if (f.degree() == 0) return out;
    std::mt19937_64 rng(poly_seed(fin) ^ 0x9e3779b97f4a7c15ull);

    // squarefree decomposition, characteristic-p aware
    struct Task { Poly g; int mult; };
    std::vector<std::pair<Poly, int>> sf;
    std::vector<Task> stack{{f, 1}};
    while (!stack.empty()) {
        Task t = stack.back();
        stack.pop_back();
        Poly g = t.g;
        if (g.degree() == 0) continue;
        Poly gp = g.derivative();
        if (gp.is_zero()) {
            // g = h(x^p) = (pth root of h, coefficient-wise)^p
            stack.push_back({pth_root_poly(g), t.mult * (int)g.field()->p()});
            continue;
        }
        Poly a = gcd(g, gp);
        Poly w = g / a;
        int i = 1;
        while (w.degree() > 0) {
            Poly y = gcd(w, a);
            Poly z = w / y;
            if (z.degree() > 0) sf.push_back({z.monic(), t.mult * i});
            w = y;
            a = a / y;
            ++i;
        }
        if (a.degree() > 0) stack.push_back({a, t.mult});
    }

    for (auto& [g, m] : sf) factor_squarefree_monic(g, m, out, rng);

    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        return a.factor.str() < b.factor.str();
    });
    std::vector<PolyFactor> merged;
    for (auto& pf : out) {
        if (!merged.empty() && merged.back().factor == pf.factor)
            merged.back().multiplicity += pf.multiplicity;
        else
            merged.push_back(pf);
    }
    return merged;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    auto fs = factor(f);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

std::vector<FE> roots_in_field(const Poly& f) {
    std::vector<FE> roots;
    for (const auto& pf : factor(f)) {
        if (pf.factor.degree() == 1)
            roots.push_back(-pf.factor.coeff(0)); // monic x + c0
    }
    return roots;
}

} // namespace tangokv
