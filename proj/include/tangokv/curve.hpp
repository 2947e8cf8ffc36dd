#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tangokv/laurent.hpp"
#include "tangokv/poly2.hpp"

namespace tangokv {

enum class Family {
    HyperellipticOdd,     // y^2 = x^(ph) + x^(p+1) + 1, p >= 3, h >= 3 odd
    Superelliptic,        // y^(hp-1) = x^p - x, h > 2
    PlaneProjective,      // x0^(p+1) = x1 x2 (x0^(p-1) + x1^(p-1) - x2^(p-1)), p >= 3
    RationalLine,         // P^1 with coordinate x
    EllipticWeierstrass,  // built-in smooth Weierstrass model per p
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

/// A place of the curve over F_p. Finite places are closed points, keyed by
/// the minimal polynomial phi of x0 over F_p and the irreducible factor psi
/// of F(x0, y) over F_p(x0) that cuts out y0; the pair is canonical, so
/// places discovered along different routes get identical keys.
struct Place {
    enum class Kind { Finite, Infinity };
    Kind kind = Kind::Infinity;
    int residue_deg = 1;
    std::string key, display;
    // finite data: coordinates in the residue field
    const Field* K = nullptr;
    FE x0, y0;

    bool is_infinity() const { return kind == Kind::Infinity; }
    static Place infinity(int index = 0);
    static Place finite(const Poly& phi, const Poly& psi_over_kx);
};

/// A rational function on a curve, as a ratio of bivariate polynomials in
/// the main affine chart.
struct Fn2 {
    Poly2 num, den;
    std::string label;

    Fn2(Poly2 n, Poly2 d, std::string l) : num(std::move(n)), den(std::move(d)), label(std::move(l)) {}
    static Fn2 monomial(long p, int i, int j);
    static Fn2 polynomial(Poly2 n, std::string l);
};

struct SmoothnessResult {
    bool smooth = true;
    std::string witness; // singular point when !smooth
};

struct EllipticCoeffs {
    long a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
};

class CurveModel {
  public:
    /// Validated construction; h is ignored by families that take no h.
    static CurveModel make(Family fam, long p, long h = 0);

    Family family() const { return fam_; }
    long p() const { return p_; }
    long h() const { return h_; }
    long genus() const { return genus_; }
    const Poly2& equation() const { return F_; }
    const std::string& id() const { return id_; }

    /// Pole orders of the coordinate functions at the infinity place
    /// (pole_y is 0 on the rational line where y vanishes identically).
    long pole_x() const;
    long pole_y() const;

    /// Generators of the Weierstrass semigroup at the infinity place.
    std::vector<long> semigroup_generators() const;

    Place infinity_place() const { return Place::infinity(0); }

    /// Local parametrization (x(t), y(t)) in the main chart, satisfying the
    /// curve equation to at least the requested precision. Results are cached
    /// per place and precision bucket; copies of the model share the cache.
    std::pair<Series, Series> parametrize(const Place& pl, long prec) const;

    SmoothnessResult smoothness_check() const;

    /// The family's closed-form maximizing function for the Tango search.
    std::optional<Fn2> family_witness() const;

  private:
    CurveModel(Family fam, long p, long h, Poly2 F);
    std::pair<Series, Series> parametrize_uncached(const Place& pl, long prec) const;

    struct ParamCache {
        std::mutex m;
        std::map<std::pair<std::string, long>, std::pair<Series, Series>> entries;
    };

    Family fam_;
    long p_, h_;
    EllipticCoeffs ell_;
    Poly2 F_;
    long genus_ = 0;
    std::string id_;
    std::shared_ptr<ParamCache> cache_ = std::make_shared<ParamCache>();
};

/// All places of the curve where both F and G vanish (G not identically zero
/// on the curve). Complete over the algebraic closure: every residue degree
/// is found, by factoring the x-resultant over F_p and then factoring the
/// fiber polynomial over each quotient field.
std::vector<Place> places_on(const Poly2& F, const Poly2& G);

/// Smoothness of an arbitrary affine model (used by the family check and by
/// tests on ad-hoc singular models).
SmoothnessResult check_smooth_affine(const Poly2& F);

} // namespace tangokv
