#include "tangokv/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace tangokv {

Semigroup::Semigroup(std::vector<long> generators, long expected_genus)
    : gens_(std::move(generators)), genus_(expected_genus) {
    if (gens_.empty()) throw ParamViolation("semigroup needs generators");
    long g = 0;
    for (long x : gens_) {
        if (x < 1) throw ParamViolation("semigroup generators must be positive");
        g = std::gcd(g, x);
    }
    if (g != 1) throw ParamViolation("semigroup generators must be coprime");
    long maxg = *std::max_element(gens_.begin(), gens_.end());
    long bound = maxg * maxg + 2 * expected_genus + 2;
    member_.assign(bound + 1, 0);
    member_[0] = 1;
    for (long m = 1; m <= bound; ++m)
        for (long x : gens_)
            if (m >= x && member_[m - x]) { member_[m] = 1; break; }
    conductor_ = 0;
    for (long m = bound; m >= 0; --m)
        if (!member_[m]) { conductor_ = m + 1; break; }
    long gaps = 0;
    for (long m = 1; m < conductor_; ++m)
        if (!member_[m]) ++gaps;
    // Weierstrass gap count equals the genus; a mismatch means the
    // generator data does not belong to the claimed curve.
    if (gaps != genus_)
        throw InternalError("semigroup gap count " + std::to_string(gaps) +
                            " != genus " + std::to_string(genus_));
}

Semigroup Semigroup::standard(long genus) {
    switch (genus) {
        case 0: return Semigroup({1}, 0);
        case 1: return Semigroup({2, 3}, 1);
        case 2: return Semigroup({2, 5}, 2);
        default: throw ParamViolation("no standard semigroup for genus " + std::to_string(genus));
    }
}

bool Semigroup::contains(long m) const {
    if (m < 0) return false;
    if (m >= (long)member_.size()) return m >= conductor_;
    return member_[m] != 0;
}

long Semigroup::count_upto(long m) const {
    long c = 0;
    for (long i = 0; i <= m; ++i)
        if (contains(i)) ++c;
    return c;
}

long h0_one_point(const Semigroup& sg, long m) {
    if (m < 0) return 0;
    long h0 = sg.count_upto(m);
    if (m > 2 * sg.genus() - 2 && h0 != m - sg.genus() + 1)
        throw InternalError("one-point h^0 disagrees with Riemann-Roch in the stable range");
    return h0;
}

long h1_curve(const Semigroup& sg, long m) {
    long h1 = h0_one_point(sg, 2 * sg.genus() - 2 - m);
    long h0 = h0_one_point(sg, m);
    if (h0 - h1 != m - sg.genus() + 1)
        throw InternalError("Riemann-Roch identity failed at m = " + std::to_string(m));
    return h1;
}

long h1_split_surface(const SplitBundle& xb, long a, long m) {
    if (a >= 0) {
        // f_* O(aE + mF) = S^a(O + L) tensor O(m zinf) = sum_i O((i d + m) zinf)
        long total = 0;
        for (long i = 0; i <= a; ++i) total += h1_curve(xb.sg, i * xb.d + m);
        return total;
    }
    if (a == -1) return 0; // both direct images vanish
    // a <= -2: Serre duality on X against K_X = (-2, 2g - 2 + d)
    long g = xb.sg.genus();
    return h1_split_surface(xb, -2 - a, (2 * g - 2 + xb.d) - m);
}

GridReport kodaira_vanishing_grid(const SplitBundle& xb, long bound) {
    GridReport rep;
    SurfaceLattice lat = xb.lattice();
    for (long x = -bound; x <= bound; ++x)
        for (long y = -bound; y <= bound; ++y) {
            SurfaceClass H{Rat(x), Rat(y)};
            if (!ample_test(H, lat).ample()) continue;
            ++rep.cells_checked;
            long h1 = h1_split_surface(xb, -x, -y);
            if (h1 != 0)
                rep.violations.push_back("h1(X, -(" + std::to_string(x) + "," + std::to_string(y) +
                                         ")) = " + std::to_string(h1) + " on g=" +
                                         std::to_string(xb.sg.genus()) + ", d=" + std::to_string(xb.d));
        }
    return rep;
}

} // namespace tangokv
