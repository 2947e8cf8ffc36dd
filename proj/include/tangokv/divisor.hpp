#pragma once

#include <map>
#include <string>

#include "tangokv/curve.hpp"
#include "tangokv/rational.hpp"

namespace tangokv {

/// A formal finite sum of places with exact rational coefficients. Zero
/// coefficients are never stored; degree weights each coefficient by the
/// residue degree of its place.
class Divisor {
  public:
    Divisor() = default;
    explicit Divisor(std::string curve_id) : curve_id_(std::move(curve_id)) {}

    const std::string& curve_id() const { return curve_id_; }
    bool is_zero() const { return t_.empty(); }
    size_t support_size() const { return t_.size(); }

    void add(const Place& pl, const Rat& c);
    Rat coeff(const std::string& key) const;

    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator*(const Rat& s) const;
    bool operator==(const Divisor& o) const;

    /// Coefficient-wise floor.
    Divisor round_down() const;
    /// round_down of (1/p) * D.
    Divisor p_floor(long p) const;

    Rat degree() const;
    bool is_integral() const;
    bool is_effective() const;
    /// Coefficient-wise >=.
    bool geq(const Divisor& o) const;

    /// Canonical text form "c1*P1 + c2*P2" with exact rationals.
    std::string str() const;

    const std::map<std::string, std::pair<Place, Rat>>& terms() const { return t_; }

  private:
    std::string curve_id_;
    std::map<std::string, std::pair<Place, Rat>> t_;
};

inline Divisor round_down(const Divisor& d) { return d.round_down(); }
inline Divisor p_floor(const Divisor& d, long p) { return d.p_floor(p); }

/// Divisor of the rational differential df. The support candidates are the
/// zeros of f's numerator and denominator, the zeros of dx (where F_y
/// vanishes on the curve), the zeros of df/dx cleared of denominators, and
/// the infinity place; completeness is certified by the degree identity
/// deg(df) = 2g - 2 (SupportLeak otherwise). Throws FrobeniusKernel when
/// df = 0, i.e. f is a p-th power.
Divisor divisor_of_differential(const CurveModel& curve, const Fn2& f);

/// Divisor of the function f (zeros minus poles); degree 0 is asserted.
Divisor divisor_of_function(const CurveModel& curve, const Fn2& f);

/// Exact valuation v_P(f) / v_P(df) at one place, by local expansion with
/// retry-on-precision per the doubling policy.
long valuation_at(const CurveModel& curve, const Place& pl, const Fn2& f, bool of_differential);

} // namespace tangokv
