#include "tangokv/divisor.hpp"

#include <algorithm>

namespace tangokv {

void Divisor::add(const Place& pl, const Rat& c) {
    if (c.is_zero()) return;
    auto it = t_.find(pl.key);
    if (it == t_.end()) {
        t_.emplace(pl.key, std::make_pair(pl, c));
        return;
    }
    Rat s = it->second.second + c;
    if (s.is_zero())
        t_.erase(it);
    else
        it->second.second = s;
}

Rat Divisor::coeff(const std::string& key) const {
    auto it = t_.find(key);
    return it == t_.end() ? Rat(0) : it->second.second;
}

Divisor Divisor::operator+(const Divisor& o) const {
    Divisor r = *this;
    for (auto& [k, pc] : o.t_) r.add(pc.first, pc.second);
    return r;
}

Divisor Divisor::operator-(const Divisor& o) const {
    Divisor r = *this;
    for (auto& [k, pc] : o.t_) r.add(pc.first, -pc.second);
    return r;
}

Divisor Divisor::operator*(const Rat& s) const {
    Divisor r(curve_id_);
    if (s.is_zero()) return r;
    for (auto& [k, pc] : t_) r.add(pc.first, pc.second * s);
    return r;
}

bool Divisor::operator==(const Divisor& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (auto& [k, pc] : t_) {
        auto it = o.t_.find(k);
        if (it == o.t_.end() || it->second.second != pc.second) return false;
    }
    return true;
}

Divisor Divisor::round_down() const {
    Divisor r(curve_id_);
    for (auto& [k, pc] : t_) r.add(pc.first, Rat(pc.second.floor()));
    return r;
}

Divisor Divisor::p_floor(long p) const {
    if (p < 2) throw PreconditionViolation("p_floor needs p >= 2");
    return (*this * Rat(1, p)).round_down();
}

Rat Divisor::degree() const {
    Rat d(0);
    for (auto& [k, pc] : t_) d += pc.second * Rat(pc.first.residue_deg);
    return d;
}

bool Divisor::is_integral() const {
    for (auto& [k, pc] : t_)
        if (!pc.second.is_integer()) return false;
    return true;
}

bool Divisor::is_effective() const {
    for (auto& [k, pc] : t_)
        if (pc.second < Rat(0)) return false;
    return true;
}

bool Divisor::geq(const Divisor& o) const {
    for (auto& [k, pc] : t_)
        if (pc.second < o.coeff(k)) return false;
    for (auto& [k, pc] : o.t_)
        if (coeff(k) < pc.second) return false;
    return true;
}

std::string Divisor::str() const {
    if (t_.empty()) return "0";
    // infinity places first, then finite by key
    std::vector<const std::pair<Place, Rat>*> parts;
    for (auto& [k, pc] : t_)
        if (pc.first.is_infinity()) parts.push_back(&pc);
    for (auto& [k, pc] : t_)
        if (!pc.first.is_infinity()) parts.push_back(&pc);
    std::string s;
    for (auto* pc : parts) {
        const Rat& c = pc->second;
        if (s.empty()) {
            s = c.str() + "*" + pc->first.display;
        } else if (c < Rat(0)) {
            s += " - " + (-c).str() + "*" + pc->first.display;
        } else {
            s += " + " + c.str() + "*" + pc->first.display;
        }
    }
    return s;
}

namespace {

// is f constant on the curve? (then div(f) = 0 and df = 0)
bool constant_on_curve(const Poly2& A, const Poly2& B, const Poly2& F) {
    Poly2 a = A.rem_y(F), b = B.rem_y(F);
    if (b.is_zero()) throw PreconditionViolation("denominator vanishes on the curve");
    if (a.is_zero()) return true; // f == 0
    long p = F.p();
    for (long c = 1; c < p; ++c)
        if (a == b * c) return true;
    return false;
}

struct Candidates {
    std::vector<Place> places;
    std::map<std::string, bool> seen;
    void take(std::vector<Place>&& more) {
        for (auto& pl : more) {
            if (seen.count(pl.key)) continue;
            seen[pl.key] = true;
            places.push_back(std::move(pl));
        }
    }
};

} // namespace

long valuation_at(const CurveModel& curve, const Place& pl, const Fn2& f, bool of_differential) {
    long scale = 1;
    if (pl.is_infinity()) scale = std::max(curve.pole_x(), std::max(curve.pole_y(), 1L));
    // the needed absolute window: past the degree identity's reach plus the
    // pole budget of f at this place; doubled on exhaustion below
    long expected = 2 * curve.genus() + scale +
                    std::max(0, f.num.total_degree()) + std::max(0, f.den.total_degree()) + 4;
    long prec = expected + 16;
    for (int attempt = 0;; ++attempt) {
        try {
            auto [xs, ys] = curve.parametrize(pl, prec);
            Series num = f.num.eval_series(xs, ys);
            Series den = f.den.eval_series(xs, ys);
            Series val = num * den.inverse(); // throws when den is zero to precision
            if (of_differential) val = val.derivative();
            return val.valuation();
        } catch (const PrecisionExhausted&) {
            if (attempt >= 3)
                throw PrecisionExhausted("valuation at " + pl.display + " of " + f.label +
                                         " undetermined at precision " + std::to_string(prec));
            prec *= 2;
        }
    }
}

Divisor divisor_of_function(const CurveModel& curve, const Fn2& f) {
    const Poly2& F = curve.equation();
    Poly2 a = f.num.rem_y(F);
    Poly2 b = f.den.rem_y(F);
    if (a.is_zero()) throw PreconditionViolation("divisor_of_function: f vanishes on the curve");
    if (b.is_zero())
        throw PreconditionViolation("divisor_of_function: denominator vanishes on the curve");

    Divisor d(curve.id());
    if (constant_on_curve(f.num, f.den, F)) return d;

    Candidates cand;
    if (!a.is_constant()) cand.take(places_on(F, a));
    if (!b.is_constant()) cand.take(places_on(F, b));
    cand.places.push_back(curve.infinity_place());

    for (const Place& pl : cand.places) d.add(pl, Rat(valuation_at(curve, pl, f, false)));
    if (d.degree() != Rat(0))
        throw SupportLeak("div(" + f.label + ") on " + curve.id() + " has degree " +
                          d.degree().str() + ", expected 0: " + d.str());
    return d;
}

Divisor divisor_of_differential(const CurveModel& curve, const Fn2& f) {
    const Poly2& F = curve.equation();
    const Poly2& A = f.num;
    const Poly2& B = f.den;
    Poly2 a = A.rem_y(F);
    Poly2 b = B.rem_y(F);
    if (a.is_zero())
        throw PreconditionViolation("divisor_of_differential: f vanishes on the curve");
    if (b.is_zero())
        throw PreconditionViolation("divisor_of_differential: denominator vanishes on the curve");

    // df = W / (B^2 F_y) dx with W = (A_x B - A B_x) F_y - (A_y B - A B_y) F_x;
    // df == 0 on the curve iff W does, which decides membership in K^p(C).
    Poly2 Fx = F.dx(), Fy = F.dy();
    Poly2 W = (A.dx() * B - A * B.dx()) * Fy - (A.dy() * B - A * B.dy()) * Fx;
    Poly2 w = W.rem_y(F);
    if (w.is_zero())
        throw FrobeniusKernel("d(" + f.label + ") = 0: the function is a p-th power");

    Candidates cand;
    if (!w.is_constant()) cand.take(places_on(F, w));
    if (!a.is_constant()) cand.take(places_on(F, a));
    if (!b.is_constant()) cand.take(places_on(F, b));
    Poly2 fyr = Fy.rem_y(F);
    if (!fyr.is_zero() && !fyr.is_constant()) cand.take(places_on(F, fyr));
    cand.places.push_back(curve.infinity_place());

    Divisor d(curve.id());
    for (const Place& pl : cand.places) d.add(pl, Rat(valuation_at(curve, pl, f, true)));
    Rat want(2 * (curve.genus() - 1));
    if (d.degree() != want)
        throw SupportLeak("(d " + f.label + ") on " + curve.id() + " has degree " +
                          d.degree().str() + ", expected " + want.str() + ": " + d.str());
    return d;
}

} // namespace tangokv
