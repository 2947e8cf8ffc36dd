#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tangokv/errors.hpp"

namespace tangokv {

class Field;

/// An element of a finite field. Prime-field elements hold a single residue;
/// extension elements hold their coordinate vector over the base field in the
/// polynomial basis of the defining polynomial. All arithmetic is exact.
class FE {
  public:
    FE() = default; // invalid until assigned from a Field factory

    const Field* field() const { return K_; }
    bool valid() const { return K_ != nullptr; }
    bool is_zero() const;
    bool is_one() const;

    FE operator+(const FE& o) const;
    FE operator-(const FE& o) const;
    FE operator*(const FE& o) const;
    FE operator/(const FE& o) const;
    FE operator-() const;
    FE& operator+=(const FE& o) { return *this = *this + o; }
    FE& operator-=(const FE& o) { return *this = *this - o; }
    FE& operator*=(const FE& o) { return *this = *this * o; }

    FE inverse() const;
    FE pow(__int128 e) const;
    /// Absolute Frobenius x -> x^p.
    FE frobenius() const;

    bool operator==(const FE& o) const;
    bool operator!=(const FE& o) const { return !(*this == o); }
    /// Total order on elements of one field (coordinate-lexicographic);
    /// used only for canonical keys.
    int cmp(const FE& o) const;

    std::string str() const;

    // Low-level access used by Field and the polynomial layer.
    long prime_value() const { return v_; }
    const std::vector<FE>& coords() const { return c_; }

  private:
    friend class Field;
    const Field* K_ = nullptr;
    long v_ = 0;         // payload when K_ is a prime field
    std::vector<FE> c_;  // payload when K_ is an extension (size = degree over base)
};

/// A finite field, either F_p or an extension of another Field by a monic
/// defining polynomial. Fields are interned: construction functions return
/// pointers into a global registry, so pointer equality is field equality
/// and elements stay cheap to copy.
class Field {
  public:
    static const Field* prime(long p);

    /// Deterministic extension tower over F_p: the defining polynomial is the
    /// first monic irreducible of degree k in lexicographic coefficient order
    /// (constant coefficient most significant). k = 1 returns the prime field.
    static const Field* canonical(long p, int k);

    /// Extension of `base` by a monic polynomial given as its list of
    /// lower coefficients c0..c_{k-1} (the defining polynomial is
    /// x^k + c_{k-1} x^{k-1} + ... + c0). Irreducibility is verified when the
    /// field is small enough to run the test; factorization-produced inputs
    /// are irreducible by construction.
    static const Field* extension(const Field* base, const std::vector<FE>& low_coeffs);

    long p() const { return p_; }
    const Field* base() const { return base_; }
    bool is_prime() const { return base_ == nullptr; }
    int degree_over_base() const { return deg_; }
    int absolute_degree() const { return abs_deg_; }
    /// p^absolute_degree; throws ArithmeticOverflow when it exceeds 128 bits.
    __int128 order() const;

    FE zero() const;
    FE one() const;
    FE from_int(long long v) const;
    /// Element from coordinates over the base field (size <= degree).
    FE make(std::vector<FE> coords) const;
    /// The class of the adjoined variable (extensions only).
    FE generator() const;
    /// Enumerates elements by index in [0, p^abs_deg); index 0 is zero.
    FE element(long long index) const;

    const std::vector<FE>& defpoly_low() const { return def_; }
    const std::string& name() const { return name_; }

  private:
    Field() = default;
    friend class FE;

    // extension-element helpers (operate on coordinate vectors over base_)
    std::vector<FE> vec_add(const std::vector<FE>& a, const std::vector<FE>& b, int sign) const;
    std::vector<FE> vec_mul(const std::vector<FE>& a, const std::vector<FE>& b) const;
    std::vector<FE> vec_inv(const std::vector<FE>& a) const;

    const Field* base_ = nullptr;
    long p_ = 0;
    int deg_ = 1;
    int abs_deg_ = 1;
    std::vector<FE> def_; // low coefficients of the monic defining polynomial
    std::string name_;
};

} // namespace tangokv
