#include "tangokv/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace tangokv {

namespace {

long mod_pos(long long v, long p) {
    long long r = v % p;
    if (r < 0) r += p;
    return (long)r;
}

bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---- polynomial arithmetic over F_p on plain coefficient vectors ----
// Only used to bootstrap canonical defining polynomials; the general Poly
// class lives in poly.hpp and depends on Field.

using LV = std::vector<long>;

void lv_trim(LV& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

LV lv_mul(const LV& a, const LV& b, long p) {
    if (a.empty() || b.empty()) return {};
    LV r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    lv_trim(r);
    return r;
}

// remainder of a by monic m
LV lv_rem(LV a, const LV& m, long p) {
    lv_trim(a);
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        long c = a.back();
        size_t shift = a.size() - 1 - dm;
        if (c != 0)
            for (size_t i = 0; i < dm; ++i)
                a[shift + i] = mod_pos(a[shift + i] - c * m[i], p);
        a.pop_back();
        lv_trim(a);
    }
    return a;
}

LV lv_powmod_x(long long e_is, const LV& base, const LV& m, long p) {
    // base^e mod m, e >= 0 given as int64
    LV result{1};
    LV b = lv_rem(base, m, p);
    long long e = e_is;
    while (e > 0) {
        if (e & 1) result = lv_rem(lv_mul(result, b, p), m, p);
        b = lv_rem(lv_mul(b, b, p), m, p);
        e >>= 1;
    }
    return result;
}

LV lv_gcd(LV a, LV b, long p) {
    lv_trim(a);
    lv_trim(b);
    while (!b.empty()) {
        LV r = lv_rem(a, b, p);
        a = b;
        b = r;
    }
    // monic-normalize
    if (!a.empty()) {
        long inv = 1;
        long lc = a.back();
        for (long t = 1; t < p; ++t)
            if (lc * t % p == 1) { inv = t; break; }
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

// Rabin irreducibility test for a monic f over F_p. Exponents p^j fit in
// int64 for every canonical tower we build (p <= ~100, deg <= 12).
bool lv_irreducible(const LV& f, long p) {
    size_t k = f.size() - 1;
    if (k == 0) return false;
    if (k == 1) return true;
    auto pow_ll = [&](size_t j) {
        long long e = 1;
        for (size_t i = 0; i < j; ++i) {
            if (e > (long long)4e17 / p) throw ArithmeticOverflow("irreducibility exponent overflow");
            e *= p;
        }
        return e;
    };
    LV x{0, 1};
    // x^(p^k) == x mod f
    LV t = lv_powmod_x(pow_ll(k), x, f, p);
    LV xr = lv_rem(x, f, p);
    if (t != xr) return false;
    // gcd(x^(p^(k/q)) - x, f) == 1 for every prime q | k
    for (size_t q = 2; q <= k; ++q) {
        if (k % q != 0) continue;
        bool qprime = true;
        for (size_t d = 2; d * d <= q; ++d)
            if (q % d == 0) { qprime = false; break; }
        if (!qprime) continue;
        LV u = lv_powmod_x(pow_ll(k / q), x, f, p);
        // u - x
        LV diff = u;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = mod_pos(diff[1] - 1, p);
        lv_trim(diff);
        LV g = lv_gcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

// First monic irreducible of degree k over F_p in lexicographic coefficient
// order on (c0, c1, ..., c_{k-1}).
LV first_irreducible(long p, int k) {
    LV c(k, 0);
    while (true) {
        LV f = c;
        f.push_back(1);
        if (lv_irreducible(f, p)) return c;
        int i = k - 1;
        while (i >= 0) {
            if (++c[i] < p) break;
            c[i] = 0;
            --i;
        }
        if (i < 0) throw InternalError("no irreducible polynomial found"); // unreachable
    }
}

std::mutex registry_mutex;
std::map<std::string, std::unique_ptr<Field>>& registry() {
    static std::map<std::string, std::unique_ptr<Field>> r;
    return r;
}

} // namespace

// ---------------------------------------------------------------- FE

bool FE::is_zero() const {
    if (!K_) throw InternalError("FE: unset element");
    if (K_->is_prime()) return v_ == 0;
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool FE::is_one() const {
    if (K_->is_prime()) return v_ == 1 % K_->p();
    if (!c_[0].is_one()) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

FE FE::operator+(const FE& o) const {
    if (K_ != o.K_) throw InternalError("FE: mixed fields in +");
    FE r;
    r.K_ = K_;
    if (K_->is_prime()) {
        r.v_ = mod_pos(v_ + o.v_, K_->p());
    } else {
        r.c_ = K_->vec_add(c_, o.c_, +1);
    }
    return r;
}

FE FE::operator-(const FE& o) const {
    if (K_ != o.K_) throw InternalError("FE: mixed fields in -");
    FE r;
    r.K_ = K_;
    if (K_->is_prime()) {
        r.v_ = mod_pos(v_ - o.v_, K_->p());
    } else {
        r.c_ = K_->vec_add(c_, o.c_, -1);
    }
    return r;
}

FE FE::operator*(const FE& o) const {
    if (K_ != o.K_) throw InternalError("FE: mixed fields in *");
    FE r;
    r.K_ = K_;
    if (K_->is_prime()) {
        r.v_ = mod_pos(v_ * o.v_, K_->p());
    } else {
        r.c_ = K_->vec_mul(c_, o.c_);
    }
    return r;
}

FE FE::operator/(const FE& o) const { return *this * o.inverse(); }

FE FE::operator-() const {
    FE r;
    r.K_ = K_;
    if (K_->is_prime()) {
        r.v_ = mod_pos(-v_, K_->p());
    } else {
        r.c_.reserve(c_.size());
        for (const auto& c : c_) r.c_.push_back(-c);
    }
    return r;
}

FE FE::inverse() const {
    if (is_zero()) throw ArithmeticOverflow("FE: inverse of zero");
    FE r;
    r.K_ = K_;
    if (K_->is_prime()) {
        // extended Euclid on integers
        long p = K_->p();
        long a = v_, b = p, x0 = 1, x1 = 0;
        while (b != 0) {
            long q = a / b;
            long t = a - q * b; a = b; b = t;
            long tx = x0 - q * x1; x0 = x1; x1 = tx;
        }
        r.v_ = mod_pos(x0, p);
    } else {
        r.c_ = K_->vec_inv(c_);
    }
    return r;
}

FE FE::pow(__int128 e) const {
    if (e < 0) return inverse().pow(-e);
    FE r = K_->one();
    FE b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FE FE::frobenius() const { return pow(K_->p()); }

bool FE::operator==(const FE& o) const {
    if (K_ != o.K_) return false;
    if (K_->is_prime()) return v_ == o.v_;
    return c_ == o.c_;
}

int FE::cmp(const FE& o) const {
    if (K_ != o.K_) throw InternalError("FE: cmp across fields");
    if (K_->is_prime()) return v_ < o.v_ ? -1 : (v_ > o.v_ ? 1 : 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        int c = c_[i].cmp(o.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string FE::str() const {
    if (K_->is_prime()) return std::to_string(v_);
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += c_[i].str();
    }
    return s + "]";
}

// ---------------------------------------------------------------- Field

const Field* Field::prime(long p) {
    if (!is_prime_long(p)) throw ParamViolation("characteristic must be prime, got " + std::to_string(p));
    std::string key = "p" + std::to_string(p);
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& reg = registry();
    auto it = reg.find(key);
    if (it != reg.end()) return it->second.get();
    auto f = std::unique_ptr<Field>(new Field());
    f->p_ = p;
    f->name_ = "F_" + std::to_string(p);
    const Field* ptr = f.get();
    reg.emplace(key, std::move(f));
    return ptr;
}

const Field* Field::canonical(long p, int k) {
    if (k < 1 || k > 12) throw ParamViolation("canonical extension degree out of range: " + std::to_string(k));
    const Field* base = prime(p);
    if (k == 1) return base;
    LV low = first_irreducible(p, k);
    std::vector<FE> coeffs;
    coeffs.reserve(low.size());
    for (long c : low) coeffs.push_back(base->from_int(c));
    return extension(base, coeffs);
}

const Field* Field::extension(const Field* base, const std::vector<FE>& low_coeffs) {
    if (low_coeffs.empty()) throw ParamViolation("extension degree must be >= 1");
    for (const auto& c : low_coeffs)
        if (c.field() != base) throw InternalError("defining polynomial not over base field");
    // Verify irreducibility when the base is prime and degrees are small;
    // towers built from factorization output are irreducible by construction.
    if (base->is_prime() && low_coeffs.size() <= 12) {
        LV f;
        f.reserve(low_coeffs.size() + 1);
        for (const auto& c : low_coeffs) f.push_back(c.prime_value());
        f.push_back(1);
        if (!lv_irreducible(f, base->p()))
            throw ParamViolation("defining polynomial is reducible over " + base->name());
    }
    std::string key = "e[";
    for (const auto& c : low_coeffs) key += c.str() + ";";
    key += "]over(" + base->name_ + ")";
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& reg = registry();
    auto it = reg.find(key);
    if (it != reg.end()) return it->second.get();
    auto f = std::unique_ptr<Field>(new Field());
    f->base_ = base;
    f->p_ = base->p_;
    f->deg_ = (int)low_coeffs.size();
    f->abs_deg_ = base->abs_deg_ * f->deg_;
    f->def_ = low_coeffs;
    f->name_ = "F_" + std::to_string(f->p_) + "^" + std::to_string(f->abs_deg_);
    const Field* ptr = f.get();
    reg.emplace(key, std::move(f));
    return ptr;
}

__int128 Field::order() const {
    __int128 o = 1;
    for (int i = 0; i < abs_deg_; ++i) {
        if (o > (__int128)1 << 120) throw ArithmeticOverflow("field order exceeds 128 bits");
        o *= p_;
    }
    return o;
}

FE Field::zero() const { return from_int(0); }
FE Field::one() const { return from_int(1); }

FE Field::from_int(long long v) const {
    FE r;
    r.K_ = this;
    if (is_prime()) {
        r.v_ = mod_pos(v, p_);
    } else {
        r.c_.assign(deg_, base_->zero());
        r.c_[0] = base_->from_int(v);
    }
    return r;
}

FE Field::make(std::vector<FE> coords) const {
    if (is_prime()) throw InternalError("make(coords) on a prime field");
    if ((int)coords.size() > deg_) throw InternalError("coordinate vector too long");
    for (const auto& c : coords)
        if (c.field() != base_) throw InternalError("coordinate not in base field");
    coords.resize(deg_, base_->zero());
    FE r;
    r.K_ = this;
    r.c_ = std::move(coords);
    return r;
}

FE Field::generator() const {
    if (is_prime()) throw InternalError("generator() on a prime field");
    std::vector<FE> c(deg_, base_->zero());
    if (deg_ == 1) {
        // degree-1 extension: generator is -c0
        return make({-def_[0]});
    }
    c[1] = base_->one();
    FE r;
    r.K_ = this;
    r.c_ = std::move(c);
    return r;
}

FE Field::element(long long index) const {
    if (is_prime()) return from_int(index);
    std::vector<FE> c;
    c.reserve(deg_);
    long long sub = 1;
    for (int i = 0; i < base_->abs_deg_; ++i) sub *= p_;
    for (int i = 0; i < deg_; ++i) {
        c.push_back(base_->element(index % sub));
        index /= sub;
    }
    FE r;
    r.K_ = this;
    r.c_ = std::move(c);
    return r;
}

std::vector<FE> Field::vec_add(const std::vector<FE>& a, const std::vector<FE>& b, int sign) const {
    std::vector<FE> r;
    r.reserve(deg_);
    for (int i = 0; i < deg_; ++i) r.push_back(sign > 0 ? a[i] + b[i] : a[i] - b[i]);
    return r;
}

std::vector<FE> Field::vec_mul(const std::vector<FE>& a, const std::vector<FE>& b) const {
    std::vector<FE> prod(2 * deg_ - 1, base_->zero());
    for (int i = 0; i < deg_; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < deg_; ++j) {
            if (b[j].is_zero()) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    // reduce by the monic defining polynomial
    for (int k = 2 * deg_ - 2; k >= deg_; --k) {
        FE c = prod[k];
        if (c.is_zero()) continue;
        for (int i = 0; i < deg_; ++i) prod[k - deg_ + i] -= c * def_[i];
        prod[k] = base_->zero();
    }
    prod.resize(deg_);
    return prod;
}

std::vector<FE> Field::vec_inv(const std::vector<FE>& a) const {
    // extended Euclid in base_[x] for gcd(a, defpoly) = 1
    using V = std::vector<FE>;
    auto trim = [](V& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    auto sub_scaled = [&](V& x, const V& y, const FE& c, size_t shift) {
        if (x.size() < y.size() + shift) x.resize(y.size() + shift, base_->zero());
        for (size_t i = 0; i < y.size(); ++i) x[i + shift] -= c * y[i];
        trim(x);
    };
    V r0 = def_;
    r0.push_back(base_->one());
    V r1 = a;
    trim(r1);
    V s0{}, s1{base_->one()};
    while (!r1.empty()) {
        // divide r0 by r1
        V q(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, base_->zero());
        V rem = r0;
        FE lcinv = r1.back().inverse();
        while (rem.size() >= r1.size() && !rem.empty()) {
            FE c = rem.back() * lcinv;
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            sub_scaled(rem, r1, c, shift);
            if (rem.size() > r1.size() + shift) throw InternalError("division failed");
        }
        // (r0, r1) = (r1, rem); (s0, s1) = (s1, s0 - q*s1)
        V s2 = s0;
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            if (s2.size() < s1.size() + i) s2.resize(s1.size() + i, base_->zero());
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        trim(s2);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r0.size() != 1) throw InternalError("element not invertible: defining polynomial reducible?");
    FE scale = r0[0].inverse();
    V out = s0;
    trim(out);
    out.resize(deg_, base_->zero());
    for (auto& c : out) c = c * scale;
    return out;
}

} // namespace tangokv
