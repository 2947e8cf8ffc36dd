#include "tangokv/laurent.hpp"

#include <algorithm>

#include "tangokv/poly2.hpp"

namespace tangokv {

Series::Series(const Field* K, long lead, std::vector<FE> c, long prec)
    : K_(K), lead_(lead), c_(std::move(c)), prec_(prec) {
    normalize();
}

void Series::normalize() {
    // clip to the window, strip leading zeros, drop trailing zeros
    if (lead_ + (long)c_.size() > prec_) c_.resize(std::max<long>(0, prec_ - lead_));
    size_t skip = 0;
    while (skip < c_.size() && c_[skip].is_zero()) ++skip;
    if (skip) {
        c_.erase(c_.begin(), c_.begin() + skip);
        lead_ += (long)skip;
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) lead_ = prec_;
}

Series Series::zero_to(const Field* K, long prec) { return Series(K, prec, {}, prec); }

Series Series::constant(const Field* K, const FE& c, long prec) {
    return Series(K, 0, {c}, prec);
}

Series Series::monomial(const Field* K, const FE& c, long e, long prec) {
    return Series(K, e, {c}, prec);
}

long Series::valuation() const {
    if (c_.empty())
        throw PrecisionExhausted("series is zero to precision " + std::to_string(prec_));
    return lead_;
}

FE Series::coeff(long e) const {
    if (e >= prec_) throw PrecisionExhausted("coefficient beyond precision window");
    if (e < lead_ || e >= lead_ + (long)c_.size()) return K_->zero();
    return c_[e - lead_];
}

Series Series::operator+(const Series& o) const {
    long prec = std::min(prec_, o.prec_);
    long lead = std::min(lead_, o.lead_);
    if (lead >= prec) return zero_to(K_, prec);
    std::vector<FE> c(prec - lead, K_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        long e = lead_ + (long)i;
        if (e < prec) c[e - lead] += c_[i];
    }
    for (size_t i = 0; i < o.c_.size(); ++i) {
        long e = o.lead_ + (long)i;
        if (e < prec) c[e - lead] += o.c_[i];
    }
    return Series(K_, lead, std::move(c), prec);
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator-() const {
    std::vector<FE> c = c_;
    for (auto& x : c) x = -x;
    return Series(K_, lead_, std::move(c), prec_);
}

Series Series::operator*(const Series& o) const {
    // product exact below min(pa + vb, pb + va)
    long prec = std::min(prec_ + o.lead_, o.prec_ + lead_);
    long lead = lead_ + o.lead_;
    if (c_.empty() || o.c_.empty()) return zero_to(K_, prec);
    if (lead >= prec) return zero_to(K_, prec);
    std::vector<FE> c(prec - lead, K_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            long e = lead_ + (long)i + o.lead_ + (long)j;
            if (e >= prec) break;
            c[e - lead] += c_[i] * o.c_[j];
        }
    }
    return Series(K_, lead, std::move(c), prec);
}

Series Series::scaled(const FE& s) const {
    std::vector<FE> c = c_;
    for (auto& x : c) x = x * s;
    return Series(K_, lead_, std::move(c), prec_);
}

Series Series::shifted(long k) const {
    return Series(K_, lead_ + k, c_, prec_ + k);
}

Series Series::inverse() const {
    long v = valuation(); // throws on zero window
    // unit part u with u(0) != 0, relative length L
    long L = prec_ - v;
    std::vector<FE> u(L, K_->zero());
    for (size_t i = 0; i < c_.size() && (long)i < L; ++i) u[i] = c_[i];
    FE u0inv = u[0].inverse();
    std::vector<FE> w(L, K_->zero());
    for (long n = 0; n < L; ++n) {
        FE s = n == 0 ? K_->one() : K_->zero();
        for (long k = 1; k <= n; ++k) s -= u[k] * w[n - k];
        w[n] = s * u0inv;
    }
    return Series(K_, -v, std::move(w), prec_ - 2 * v);
}

Series Series::derivative() const {
    std::vector<FE> c;
    c.reserve(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        long e = lead_ + (long)i;
        c.push_back(c_[i] * K_->from_int(e));
    }
    return Series(K_, lead_ - 1, std::move(c), prec_ - 1);
}

Series Series::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    Series result = constant(K_, K_->one(), prec_);
    Series cur = *this;
    int e = n;
    while (e > 0) {
        if (e & 1) result = result * cur;
        e >>= 1;
        if (e) cur = cur * cur;
    }
    return result;
}

Series Series::truncated(long new_prec) const {
    return Series(K_, lead_, c_, std::min(prec_, new_prec));
}

std::string Series::str() const {
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += c_[i].str() + "*t^" + std::to_string(lead_ + (long)i);
    }
    if (s.empty()) s = "0";
    s += " + O(t^" + std::to_string(prec_) + ")";
    return s;
}

Series series_solve_curve(const Poly2& eq, const Series& x, const Series& y_seed, long prec) {
    Poly2 eqy = eq.dy();
    if (eqy.is_zero())
        throw NoConvergence("equation has identically vanishing y-derivative");
    Series y = y_seed; // the seed carries the working precision headroom
    long last_err_val = (long)-4e18;
    for (int iter = 0; iter < 200; ++iter) {
        Series err = eq.eval_series(x, y);
        if (err.is_zero_to_prec()) {
            if (err.prec_abs() >= prec) return y;
            throw PrecisionExhausted("series solve lost precision before target");
        }
        long ev = err.valuation();
        if (ev >= prec) return y;
        if (ev <= last_err_val)
            throw NoConvergence("Newton correction stalled at valuation " + std::to_string(ev));
        last_err_val = ev;
        Series d = eqy.eval_series(x, y);
        Series delta = err * d.inverse();
        y = y - delta;
    }
    throw NoConvergence("Newton iteration exceeded its step budget");
}

} // namespace tangokv
