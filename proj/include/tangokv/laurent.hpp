#pragma once

#include <string>
#include <vector>

#include "tangokv/finite_field.hpp"

namespace tangokv {

class Poly2;

/// Truncated Laurent series over a finite field. A series knows the window
/// of exponents it is trustworthy on: coefficients are stored from lead()
/// upward and every exponent below prec_abs() is exact (exponents past the
/// stored block are exact zeros). All operations propagate the window, so a
/// nonzero coefficient reported by valuation() is never an artifact.
class Series {
  public:
    static Series zero_to(const Field* K, long prec);
    static Series constant(const Field* K, const FE& c, long prec);
    static Series monomial(const Field* K, const FE& c, long e, long prec);

    const Field* field() const { return K_; }
    /// First exponent of the stored block (= valuation when nonzero).
    long lead() const { return lead_; }
    /// Exponent bound: coefficients at exponents < prec_abs() are exact.
    long prec_abs() const { return prec_; }
    bool is_zero_to_prec() const { return c_.empty(); }

    /// Least exponent with nonzero coefficient. Throws PrecisionExhausted
    /// when the whole window is zero.
    long valuation() const;
    FE coeff(long e) const;

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator-() const;
    Series scaled(const FE& s) const;
    Series shifted(long k) const; // multiply by t^k
    Series inverse() const;
    Series derivative() const;
    Series pow(int n) const;
    Series truncated(long new_prec) const;

    std::string str() const;

  private:
    Series(const Field* K, long lead, std::vector<FE> c, long prec);
    void normalize();

    const Field* K_;
    long lead_;
    std::vector<FE> c_;
    long prec_;
};

/// Solves eq(x(t), y) = 0 for y as a Laurent series by Newton iteration from
/// the given seed. The seed must identify a single branch: the y-derivative
/// of eq on the seed needs a strictly smaller valuation than the running
/// error (Hensel's condition). Throws NoConvergence when the iteration stops
/// making progress before the requested precision.
Series series_solve_curve(const Poly2& eq, const Series& x, const Series& y_seed, long prec);

} // namespace tangokv
