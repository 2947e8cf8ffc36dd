#pragma once

#include <utility>
#include <vector>

#include "tangokv/finite_field.hpp"

namespace tangokv {

/// Univariate polynomial over a Field. The coefficient list never carries a
/// trailing zero, so degree() is size-1 and the zero polynomial has
/// degree -1.
class Poly {
  public:
    explicit Poly(const Field* K) : K_(K) {}
    Poly(const Field* K, std::vector<FE> coeffs) : K_(K), c_(std::move(coeffs)) { trim(); }

    static Poly x(const Field* K) { return Poly(K, {K->zero(), K->one()}); }
    static Poly constant(const Field* K, const FE& c) { return Poly(K, {c}); }
    static Poly from_ints(const Field* K, const std::vector<long long>& v);

    const Field* field() const { return K_; }
    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    FE coeff(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : K_->zero(); }
    FE lc() const;
    const std::vector<FE>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FE& s) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return K_ == o.K_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Quotient and remainder; the divisor may have any invertible leading
    /// coefficient (always true over a field).
    std::pair<Poly, Poly> divrem(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divrem(d).first; }
    Poly operator%(const Poly& d) const { return divrem(d).second; }

    Poly monic() const;
    Poly derivative() const;
    FE eval(const FE& x) const;
    std::string str(const std::string& var = "x") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    const Field* K_;
    std::vector<FE> c_;
};

/// Coefficient-wise derivative; in characteristic p the derivative of x^p
/// vanishes.
inline Poly formal_derivative(const Poly& f) { return f.derivative(); }

Poly gcd(Poly a, Poly b); // monic
Poly powmod(const Poly& base, __int128 e, const Poly& mod);
/// g(h) mod m.
Poly compose_mod(const Poly& g, const Poly& h, const Poly& m);

struct PolyFactor {
    Poly factor; // monic irreducible
    int multiplicity;
};

/// Full factorization over the coefficient field (squarefree split,
/// distinct-degree, equal-degree). Deterministic: the equal-degree stage
/// seeds its generator from the input coefficients. Returns monic factors;
/// the unit is factored out.
std::vector<PolyFactor> factor(const Poly& f);

bool is_irreducible(const Poly& f);

/// Roots in the coefficient field, one entry per distinct root.
std::vector<FE> roots_in_field(const Poly& f);

} // namespace tangokv
