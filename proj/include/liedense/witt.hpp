#pragma once

// Dimension pipelines for free and restricted free Lie algebras:
// the classical Witt formula, its restricted variant, and the
// generalized machinery that extracts graded dimensions of a free
// graded Lie algebra from the logarithm of its enveloping series.

#include <map>

#include "liedense/numkit.hpp"

namespace liedense {

// dim of the degree-n component of the free Lie algebra on d
// generators: (1/n) sum_{l|n} mu(l) d^{n/l}.  The division is exact;
// a remainder aborts with a diagnostic.
BigInt witt_dim(int d, int n);

// dim of the degree-n component of the free restricted Lie algebra:
// sum_{i=0..j} witt_dim(d, n/p^i) where n = p^j m with p not dividing m.
BigInt restricted_dim(int d, int p, int n);

DimSeq witt_dims(int d, int max_degree);
DimSeq restricted_dims(int d, int p, int max_degree);

// Counts of free homogeneous generators per degree.  Zero counts are
// normalized away.
class GenProfile {
public:
    GenProfile() = default;
    explicit GenProfile(std::map<int, long long> entries);

    // "2:1,3:2" means one generator of degree 2 and two of degree 3.
    static GenProfile parse(const std::string& text);

    bool empty() const { return entries_.empty(); }
    int max_degree() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }
    long long count(int degree) const;
    const std::map<int, long long>& entries() const { return entries_; }
    std::string str() const;

private:
    std::map<int, long long> entries_;
};

// Dominant growth data of the enveloping series 1/(1 - sum r_i t^i):
// lambda is the unique positive real root of t^e - sum r_i t^{e-i},
// the remaining roots have modulus at most residual_bound.
struct GrowthRoot {
    double lambda = 0.0;
    double residual_bound = 0.0;
};

// Graded dimensions w_n of the free graded Lie algebra with the given
// generator profile, via w_n = (1/n) sum_{m|n} mu(n/m) m b_m with
// b = log(1/(1 - sum r_i t^i)).  Every w_n must come out a nonnegative
// integer; anything else signals a bug and throws.
DimSeq free_graded_lie_dims(const GenProfile& profile, int max_degree);

// Restricted dimensions from ordinary ones by telescoping over p-power
// divisors: c_n = w_m + w_{pm} + ... + w_{p^k m} for n = p^k m.
DimSeq restricted_from_ordinary(const DimSeq& w, int p);

// Bisection with exact-rational sign tests; only the reported value is
// rounded to binary64.
GrowthRoot dominant_root(const GenProfile& profile, double tol);

// Prefix sums l(n) = sum_{m<=n} seq(m).
DimSeq cumulative(const DimSeq& seq);

} // namespace liedense
