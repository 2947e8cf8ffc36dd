#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tangokv/poly.hpp"

namespace tangokv {

class Series;

/// Bivariate polynomial over a prime field F_p (curve equations and the
/// rational functions fed to the divisor machinery all have prime-field
/// coefficients; evaluation embeds them into any field of characteristic p).
class Poly2 {
  public:
    explicit Poly2(long p) : p_(p) {}

    static Poly2 mono(long p, long coeff, int ex, int ey);
    static Poly2 zero(long p) { return Poly2(p); }

    long p() const { return p_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    int deg_x() const;
    int deg_y() const;
    int total_degree() const;
    long coeff(int ex, int ey) const;

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 operator*(long s) const;
    Poly2 operator-() const;
    bool operator==(const Poly2& o) const { return p_ == o.p_ && t_ == o.t_; }

    Poly2 dx() const;
    Poly2 dy() const;
    /// Swaps the roles of the two variables.
    Poly2 swap_xy() const;

    FE eval(const FE& x, const FE& y) const;
    Series eval_series(const Series& x, const Series& y) const;

    /// Coefficient of y^j as a univariate polynomial in x over K.
    Poly coeff_of_y(int j, const Field* K) const;
    /// This polynomial with x fixed to x0, as a univariate in y over x0's field.
    Poly at_x(const FE& x0) const;
    /// Requires deg_y == 0; the polynomial as a univariate in x over K.
    Poly univariate_x(const Field* K) const;

    /// Remainder of this by m under division in y; m's leading y-coefficient
    /// must be a nonzero constant (true for every supported curve model).
    Poly2 rem_y(const Poly2& m) const;

    std::string str(const std::string& xv = "x", const std::string& yv = "y") const;

  private:
    void set(int ex, int ey, long v);
    long p_;
    std::map<std::pair<int, int>, long> t_; // (ex, ey) -> coeff in [1, p)
};

/// Resultant of a and b with respect to y, as a univariate polynomial in x
/// over F_p. Computed by evaluation at enough points of a scratch extension
/// field and interpolation. a's leading y-coefficient must be a nonzero
/// constant. Zero iff a and b share a factor involving y.
Poly resultant_y(const Poly2& a, const Poly2& b);

} // namespace tangokv
