#include "tangokv/curve.hpp"

#include <algorithm>

namespace tangokv {

std::string family_name(Family f) {
    switch (f) {
        case Family::HyperellipticOdd: return "hyperelliptic_odd";
        case Family::Superelliptic: return "superelliptic";
        case Family::PlaneProjective: return "plane_projective";
        case Family::RationalLine: return "rational_line";
        case Family::EllipticWeierstrass: return "elliptic_weierstrass";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
    for (Family f : {Family::HyperellipticOdd, Family::Superelliptic, Family::PlaneProjective,
                     Family::RationalLine, Family::EllipticWeierstrass})
        if (family_name(f) == s) return f;
    return std::nullopt;
}

// ------------------------------------------------------------------ Place

Place Place::infinity(int index) {
    Place pl;
    pl.kind = Kind::Infinity;
    pl.residue_deg = 1;
    pl.key = "inf" + std::to_string(index);
    pl.display = "zinf";
    return pl;
}

Place Place::finite(const Poly& phi, const Poly& psi) {
    Place pl;
    pl.kind = Kind::Finite;
    const Field* Fp = phi.field();
    const Field* Kx;
    FE x0;
    if (phi.degree() == 1) {
        Kx = Fp;
        x0 = -phi.coeff(0);
    } else {
        std::vector<FE> low(phi.coeffs().begin(), phi.coeffs().end() - 1);
        Kx = Field::extension(Fp, low);
        x0 = Kx->generator();
    }
    if (psi.field() != Kx) throw InternalError("place: psi not over F_p(x0)");
    if (psi.degree() == 1) {
        pl.K = Kx;
        pl.x0 = x0;
        pl.y0 = -psi.coeff(0);
    } else {
        std::vector<FE> low(psi.coeffs().begin(), psi.coeffs().end() - 1);
        const Field* K = Field::extension(Kx, low);
        pl.K = K;
        pl.x0 = K->make({x0});
        pl.y0 = K->generator();
    }
    pl.residue_deg = std::max(1, phi.degree()) * std::max(1, psi.degree());
    pl.key = "fin[" + phi.str() + "][" + psi.str("y") + "]";
    if (pl.residue_deg == 1)
        pl.display = "(x=" + pl.x0.str() + ",y=" + pl.y0.str() + ")";
    else
        pl.display = "(deg" + std::to_string(pl.residue_deg) + ": " + phi.str() + "=0, " +
                     psi.str("y") + "=0)";
    return pl;
}

// ------------------------------------------------------------------ Fn2

Fn2 Fn2::monomial(long p, int i, int j) {
    std::string l;
    if (i == 0 && j == 0) l = "1";
    if (i > 0) l += "x" + (i > 1 ? "^" + std::to_string(i) : std::string());
    if (j > 0)
        l += (l.empty() ? "" : "*") + std::string("y") +
             (j > 1 ? "^" + std::to_string(j) : std::string());
    return Fn2(Poly2::mono(p, 1, i, j), Poly2::mono(p, 1, 0, 0), l);
}

Fn2 Fn2::polynomial(Poly2 n, std::string l) {
    long p = n.p();
    return Fn2(std::move(n), Poly2::mono(p, 1, 0, 0), std::move(l));
}

// ------------------------------------------------------------ place search

std::vector<Place> places_on(const Poly2& F, const Poly2& G) {
    const Field* Fp = Field::prime(F.p());
    Poly2 W = G.rem_y(F);
    if (W.is_zero()) throw InternalError("places_on: condition vanishes on the whole curve");
    if (W.is_constant()) return {};

    Poly R(Fp);
    if (W.deg_y() <= 0) {
        R = W.univariate_x(Fp);
    } else {
        R = resultant_y(F, W);
    }
    if (R.is_zero()) throw InternalError("places_on: resultant vanished identically");
    if (R.degree() == 0) return {};

    std::vector<Place> out;
    for (const auto& pf : factor(R)) {
        const Poly& phi = pf.factor;
        const Field* Kx;
        FE x0;
        if (phi.degree() == 1) {
            Kx = Fp;
            x0 = -phi.coeff(0);
        } else {
            std::vector<FE> low(phi.coeffs().begin(), phi.coeffs().end() - 1);
            Kx = Field::extension(Fp, low);
            x0 = Kx->generator();
        }
        Poly fx = F.at_x(x0);
        Poly wx = W.at_x(x0);
        Poly u = wx.is_zero() ? fx.monic() : gcd(fx, wx);
        if (u.degree() < 1)
            throw InternalError("places_on: resultant root without a common fiber point");
        for (const auto& qf : factor(u)) out.push_back(Place::finite(phi, qf.factor));
    }
    return out;
}

// ----------------------------------------------------------- construction

namespace {

bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Poly2 hyperelliptic_eq(long p, long h) {
    return Poly2::mono(p, 1, 0, 2) - Poly2::mono(p, 1, (int)(p * h), 0) -
           Poly2::mono(p, 1, (int)(p + 1), 0) - Poly2::mono(p, 1, 0, 0);
}

Poly2 superelliptic_eq(long p, long h) {
    return Poly2::mono(p, 1, 0, (int)(h * p - 1)) - Poly2::mono(p, 1, (int)p, 0) +
           Poly2::mono(p, 1, 1, 0);
}

Poly2 plane_eq(long p) {
    // chart x2 = 1: x^(p+1) - x^(p-1) y - y^p + y
    return Poly2::mono(p, 1, (int)(p + 1), 0) - Poly2::mono(p, 1, (int)(p - 1), 1) -
           Poly2::mono(p, 1, 0, (int)p) + Poly2::mono(p, 1, 0, 1);
}

EllipticCoeffs elliptic_model(long p) {
    // Supersingular models wherever a small closed form exists, so the n = 0
    // upper bound is attained by a short witness.
    if (p == 2) return {0, 0, 1, 0, 0};                  // y^2 + y = x^3
    if (p == 3) return {0, 0, 0, 1, 0};                  // y^2 = x^3 + x
    if (p % 3 == 2) return {0, 0, 0, 0, 1};              // y^2 = x^3 + 1
    if (p % 4 == 3) return {0, 0, 0, 1, 0};              // y^2 = x^3 + x
    for (long b = 1; b < p; ++b)
        if ((4 + 27 * b * b) % p != 0) return {0, 0, 0, 1, b};
    throw InternalError("no smooth Weierstrass model found");
}

Poly2 elliptic_eq(long p, const EllipticCoeffs& a) {
    return Poly2::mono(p, 1, 0, 2) + Poly2::mono(p, a.a1, 1, 1) + Poly2::mono(p, a.a3, 0, 1) -
           Poly2::mono(p, 1, 3, 0) - Poly2::mono(p, a.a2, 2, 0) - Poly2::mono(p, a.a4, 1, 0) -
           Poly2::mono(p, a.a6, 0, 0);
}

} // namespace

CurveModel::CurveModel(Family fam, long p, long h, Poly2 F)
    : fam_(fam), p_(p), h_(h), F_(std::move(F)) {}

CurveModel CurveModel::make(Family fam, long p, long h) {
    if (!is_prime_long(p)) throw ParamViolation("p must be prime, got " + std::to_string(p));
    switch (fam) {
        case Family::HyperellipticOdd: {
            if (p < 3) throw ParamViolation("hyperelliptic_odd needs p >= 3");
            if (h < 3 || h % 2 == 0)
                throw ParamViolation("hyperelliptic_odd needs odd h >= 3, got " + std::to_string(h));
            CurveModel c(fam, p, h, hyperelliptic_eq(p, h));
            c.genus_ = (p * h - 1) / 2;
            c.id_ = "hyperelliptic_odd(p=" + std::to_string(p) + ",h=" + std::to_string(h) + ")";
            auto s = c.smoothness_check();
            if (!s.smooth) throw SmoothnessFailure(c.id_ + " singular at " + s.witness);
            return c;
        }
        case Family::Superelliptic: {
            if (h <= 2) throw ParamViolation("superelliptic needs h > 2, got " + std::to_string(h));
            CurveModel c(fam, p, h, superelliptic_eq(p, h));
            c.genus_ = (h * p - 2) * (p - 1) / 2;
            c.id_ = "superelliptic(p=" + std::to_string(p) + ",h=" + std::to_string(h) + ")";
            auto s = c.smoothness_check();
            if (!s.smooth) throw SmoothnessFailure(c.id_ + " singular at " + s.witness);
            return c;
        }
        case Family::PlaneProjective: {
            if (p < 3) throw ParamViolation("plane_projective needs p >= 3");
            CurveModel c(fam, p, 0, plane_eq(p));
            c.genus_ = p * (p - 1) / 2; // smooth plane curve of degree p+1
            c.id_ = "plane_projective(p=" + std::to_string(p) + ")";
            auto s = c.smoothness_check();
            if (!s.smooth) throw SmoothnessFailure(c.id_ + " singular at " + s.witness);
            return c;
        }
        case Family::RationalLine: {
            CurveModel c(fam, p, 0, Poly2::mono(p, 1, 0, 1));
            c.genus_ = 0;
            c.id_ = "rational_line(p=" + std::to_string(p) + ")";
            return c;
        }
        case Family::EllipticWeierstrass: {
            CurveModel c(fam, p, 0, Poly2::zero(p));
            c.ell_ = elliptic_model(p);
            c.F_ = elliptic_eq(p, c.ell_);
            c.genus_ = 1;
            c.id_ = "elliptic_weierstrass(p=" + std::to_string(p) + ")";
            auto s = c.smoothness_check();
            if (!s.smooth) throw SmoothnessFailure(c.id_ + " singular at " + s.witness);
            return c;
        }
    }
    throw ParamViolation("unknown family");
}

long CurveModel::pole_x() const {
    switch (fam_) {
        case Family::HyperellipticOdd: return 2;
        case Family::Superelliptic: return h_ * p_ - 1;
        case Family::PlaneProjective: return p_;
        case Family::RationalLine: return 1;
        case Family::EllipticWeierstrass: return 2;
    }
    return 0;
}

long CurveModel::pole_y() const {
    switch (fam_) {
        case Family::HyperellipticOdd: return p_ * h_;
        case Family::Superelliptic: return p_;
        case Family::PlaneProjective: return p_ + 1;
        case Family::RationalLine: return 0; // y vanishes identically
        case Family::EllipticWeierstrass: return 3;
    }
    return 0;
}

std::vector<long> CurveModel::semigroup_generators() const {
    if (fam_ == Family::RationalLine) return {1};
    return {pole_x(), pole_y()};
}

std::optional<Fn2> CurveModel::family_witness() const {
    long p = p_;
    switch (fam_) {
        case Family::HyperellipticOdd:
            return Fn2(Poly2::mono(p, 1, 0, 1), Poly2::mono(p, 1, (int)p, 0),
                       "y/x^" + std::to_string(p));
        case Family::Superelliptic:
            return Fn2::monomial(p, 0, 1);
        case Family::PlaneProjective:
            // x0/x1 in the chart x2 = 1
            return Fn2(Poly2::mono(p, 1, 1, 0), Poly2::mono(p, 1, 0, 1), "x0/x1");
        case Family::RationalLine:
            return Fn2::monomial(p, 1, 0);
        case Family::EllipticWeierstrass:
            if (p == 2) return Fn2::monomial(p, 1, 0);
            if (p == 3) return Fn2::monomial(p, 0, 1);
            if (p % 3 == 2) return Fn2::monomial(p, 1, 1);
            if (p == 7)
                return Fn2::polynomial(Poly2::mono(p, 1, 2, 1) + Poly2::mono(p, 3, 0, 1),
                                       "x^2*y + 3y");
            return std::nullopt;
    }
    return std::nullopt;
}

std::pair<Series, Series> CurveModel::parametrize(const Place& pl, long prec) const {
    long bucket = ((prec + 63) / 64) * 64;
    std::lock_guard<std::mutex> lock(cache_->m);
    auto key = std::make_pair(pl.key, bucket);
    auto it = cache_->entries.find(key);
    if (it != cache_->entries.end()) return it->second;
    auto r = parametrize_uncached(pl, bucket);
    cache_->entries.emplace(key, r);
    return r;
}

std::pair<Series, Series> CurveModel::parametrize_uncached(const Place& pl, long prec) const {
    const long scale = std::max(pole_x(), std::max(pole_y(), 2L));
    if (pl.is_infinity()) {
        long wide = prec + scale * (F_.total_degree() + 2) + 32;
        const Field* Fp = Field::prime(p_);
        switch (fam_) {
            case Family::RationalLine: {
                Series x = Series::monomial(Fp, Fp->one(), -1, wide);
                Series y = Series::zero_to(Fp, wide);
                return {x, y};
            }
            case Family::HyperellipticOdd: {
                Series x = Series::monomial(Fp, Fp->one(), -2, wide);
                Series seed = Series::monomial(Fp, Fp->one(), -p_ * h_, wide);
                Series y = series_solve_curve(F_, x, seed, prec);
                return {x, y};
            }
            case Family::Superelliptic: {
                Series x = Series::monomial(Fp, Fp->one(), -(h_ * p_ - 1), wide);
                Series seed = Series::monomial(Fp, Fp->one(), -p_, wide);
                Series y = series_solve_curve(F_, x, seed, prec);
                return {x, y};
            }
            case Family::EllipticWeierstrass: {
                // chart z = -x/y, w = -1/y:
                // w = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3
                Poly2 G = Poly2::mono(p_, 1, 3, 0) + Poly2::mono(p_, ell_.a1, 1, 1) +
                          Poly2::mono(p_, ell_.a2, 2, 1) + Poly2::mono(p_, ell_.a3, 0, 2) +
                          Poly2::mono(p_, ell_.a4, 1, 2) + Poly2::mono(p_, ell_.a6, 0, 3) -
                          Poly2::mono(p_, 1, 0, 1);
                Series z = Series::monomial(Fp, Fp->one(), 1, wide);
                Series seed = Series::monomial(Fp, Fp->one(), 3, wide);
                Series w = series_solve_curve(G, z, seed, prec + 8);
                Series winv = w.inverse();
                return {z * winv, -winv};
            }
            case Family::PlaneProjective: {
                // chart x1 = 1: u^(p+1) = w (u^(p-1) + 1 - w^(p-1));
                // main chart X = u/w, Y = 1/w
                Poly2 G = Poly2::mono(p_, 1, (int)(p_ + 1), 0) - Poly2::mono(p_, 1, (int)(p_ - 1), 1) -
                          Poly2::mono(p_, 1, 0, 1) + Poly2::mono(p_, 1, 0, (int)p_);
                Series u = Series::monomial(Fp, Fp->one(), 1, wide);
                Series seed = Series::monomial(Fp, Fp->one(), p_ + 1, wide);
                Series w = series_solve_curve(G, u, seed, prec + 2 * (p_ + 1) + 8);
                Series winv = w.inverse();
                return {u * winv, winv};
            }
        }
        throw InternalError("unhandled family in parametrize");
    }

    // finite place: the coordinate with nonvanishing partial is solved for
    const Field* K = pl.K;
    long wide = prec + F_.total_degree() + 16;
    FE fy = F_.dy().eval(pl.x0, pl.y0);
    if (!fy.is_zero()) {
        Series x = Series::constant(K, pl.x0, wide) + Series::monomial(K, K->one(), 1, wide);
        Series y = series_solve_curve(F_, x, Series::constant(K, pl.y0, wide), prec);
        return {x, y};
    }
    FE fx = F_.dx().eval(pl.x0, pl.y0);
    if (fx.is_zero()) throw InternalError("parametrize: singular point " + pl.display);
    Series y = Series::constant(K, pl.y0, wide) + Series::monomial(K, K->one(), 1, wide);
    Series x = series_solve_curve(F_.swap_xy(), y, Series::constant(K, pl.x0, wide), prec);
    return {x, y};
}

SmoothnessResult check_smooth_affine(const Poly2& F) {
    Poly2 Fx = F.dx(), Fy = F.dy();
    if (Fx.is_zero() && Fy.is_zero())
        return {false, "both partial derivatives vanish identically"};
    const Poly2& G = Fx.is_zero() ? Fy : Fx;
    const Poly2& other = Fx.is_zero() ? Fx : Fy;
    Poly2 Gr = G.rem_y(F);
    if (Gr.is_zero())
        return {false, "a partial derivative vanishes on the whole curve"};
    if (Gr.is_constant()) return {true, ""};
    for (const Place& pl : places_on(F, G)) {
        if (other.eval(pl.x0, pl.y0).is_zero())
            return {false, pl.display};
    }
    return {true, ""};
}

SmoothnessResult CurveModel::smoothness_check() const {
    if (fam_ == Family::RationalLine) return {true, ""};
    SmoothnessResult aff = check_smooth_affine(F_);
    if (!aff.smooth) return aff;
    // infinity branch: the family parametrization must converge (Hensel step
    // with unit derivative = smooth unibranch point of the normalized model)
    try {
        auto [x, y] = parametrize(infinity_place(), 24);
        Series r = F_.eval_series(x, y);
        if (!r.is_zero_to_prec() && r.valuation() < 12)
            return {false, "infinity branch fails the curve equation"};
    } catch (const NoConvergence&) {
        return {false, "no smooth branch at infinity"};
    }
    if (fam_ == Family::PlaneProjective) {
        // the only point with x2 = 0 is (0:1:0); check it in the chart x1 = 1
        Poly2 G = Poly2::mono(p_, 1, (int)(p_ + 1), 0) - Poly2::mono(p_, 1, (int)(p_ - 1), 1) -
                  Poly2::mono(p_, 1, 0, 1) + Poly2::mono(p_, 1, 0, (int)p_);
        const Field* Fp = Field::prime(p_);
        FE z = Fp->zero();
        if (G.dx().eval(z, z).is_zero() && G.dy().eval(z, z).is_zero())
            return {false, "(0:1:0)"};
    }
    return {true, ""};
}

} // namespace tangokv
