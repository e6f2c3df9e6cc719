#pragma once

// Exact arithmetic substrate: arbitrary-precision integers/rationals
// (GMP-backed), the Moebius function, graded dimension sequences and
// truncated power series with rational coefficients.  Everything here
// is immutable after construction and safe for concurrent use.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "liedense/errors.hpp"

namespace liedense {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Rational from a pre-reduced pair; canonicalizes (gcd 1, positive
// denominator) so the usual invariants hold no matter the input.
BigRat make_rat(BigInt num, BigInt den);

// Parses "a/b", "a", or a decimal/floating literal.  Decimal literals
// are converted through binary64 and then taken exactly, so "0.1" means
// the binary64 value nearest 0.1, not 1/10.
BigRat parse_rat(const std::string& text);

std::string rat_str(const BigRat& q); // "num/den", or "num" when den == 1
double rat_f64(const BigRat& q);

// Classical Moebius function; mu(0) is a domain error.
int moebius(std::uint64_t n);

// Throws unless p is prime.
void require_prime(int p);

// Graded dimension sequence: one nonnegative integer per degree
// 1..max_degree.  Degree 0 is deliberately excluded; gradings here
// start at 1.
class DimSeq {
public:
    DimSeq() = default;
    explicit DimSeq(int max_degree) : dims_(static_cast<std::size_t>(max_degree)) {}

    int max_degree() const { return static_cast<int>(dims_.size()); }

    const BigInt& at(int degree) const;
    void set(int degree, BigInt value); // value must be >= 0

    bool operator==(const DimSeq&) const = default;

private:
    std::vector<BigInt> dims_; // index 0 holds degree 1
};

// Truncated formal power series over the rationals.  The truncation
// order is part of the value; mixing orders is a usage error, never a
// silent re-truncation.
class TruncSeries {
public:
    explicit TruncSeries(int order);
    TruncSeries(int order, std::vector<BigRat> coeffs); // coeffs padded with zeros to order+1

    static TruncSeries one(int order);
    // c * t^degree
    static TruncSeries monomial(int order, int degree, const BigRat& c);

    int order() const { return order_; }
    const BigRat& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    void set(int k, BigRat v) { coeffs_.at(static_cast<std::size_t>(k)) = std::move(v); }

    bool operator==(const TruncSeries&) const = default;

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);

private:
    int order_ = 0;
    std::vector<BigRat> coeffs_; // size order_+1
};

// Cauchy product truncated at the common order.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

// Multiplicative inverse of a series with constant term 1.
TruncSeries series_inverse(const TruncSeries& a);

// Formal logarithm of a series with constant term 1.
TruncSeries series_log(const TruncSeries& a);

// base^e truncated; e >= 0.
TruncSeries series_pow(const TruncSeries& base, const BigInt& e);

// Expands prod_{n>=1} ((1 - t^{np}) / (1 - t^n))^{c_n} to the given
// order.  For the dimension sequence of a graded restricted Lie
// algebra this reproduces the dimension series of its universal
// restricted enveloping algebra, which makes it a handy consistency
// oracle.
TruncSeries jennings_product(const DimSeq& c, int p, int order);

} // namespace liedense
