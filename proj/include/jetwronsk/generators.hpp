#ifndef JETWRONSK_GENERATORS_HPP
#define JETWRONSK_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "jetwronsk/family.hpp"
#include "jetwronsk/jet.hpp"
#include "jetwronsk/polynomial.hpp"
#include "jetwronsk/reparam.hpp"
#include "jetwronsk/series.hpp"

namespace jetwronsk {

// Seeded generator for the randomized suites. Draws come from mt19937_64
// through modular reduction only, so a seed reproduces the same cases on any
// platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Inclusive.
    long range(long lo, long hi);

    Rational rational(long max_abs_num = 6, long max_den = 3);
    Rational nonzero_rational(long max_abs_num = 6, long max_den = 3);

    Polynomial polynomial(const std::vector<std::string>& vars, int max_degree, int max_terms);
    Polynomial nonzero_polynomial(const std::vector<std::string>& vars, int max_degree,
                                  int max_terms);

    // Zero constant term; degree-1 coefficient may be anything.
    TruncatedSeries curve_component(int order);

    Reparam reparam(int k);

    JetPoint jet_point(const JetContext& ctx);

private:
    std::mt19937_64 eng_;
};

// Random family with generic small linear tau's and sparse low-degree a_I.
FamilySpec random_family(Rng& rng, int n, int k, int N, int delta, int r, int a_degree = 1);

// A family together with a smooth rational point of (F(a) = 0): the constant
// term of one coefficient a_I is adjusted so that F(x) = 0 exactly; resamples
// until the point is a smooth point of the hypersurface.
struct FamilyWithPoint {
    FamilySpec spec;
    Polynomial F;
    std::vector<Rational> x;
};
FamilyWithPoint random_family_with_point(Rng& rng, int n, int k, int N, int delta, int r);

}  // namespace jetwronsk

#endif
