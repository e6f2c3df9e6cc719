#include "liedense/numkit.hpp"

#include <utility>

namespace liedense {

BigRat make_rat(BigInt num, BigInt den) {
    if (den == 0)
        throw ValidationError("rational with zero denominator");
    BigRat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

BigRat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        try {
            BigInt num(text.substr(0, slash));
            BigInt den(text.substr(slash + 1));
            return make_rat(num, den);
        } catch (const std::invalid_argument&) {
            throw ValidationError("cannot parse rational: " + text);
        }
    }
    if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
        text.find('E') == std::string::npos) {
        try {
            return BigRat(BigInt(text));
        } catch (const std::invalid_argument&) {
            throw ValidationError("cannot parse rational: " + text);
        }
    }
    // Decimal literal: go through binary64 and take its exact value.
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ValidationError("cannot parse rational: " + text);
    }
    if (pos != text.size())
        throw ValidationError("cannot parse rational: " + text);
    return BigRat(v);
}

std::string rat_str(const BigRat& q) {
    return q.get_str();
}

double rat_f64(const BigRat& q) {
    return q.get_d();
}

int moebius(std::uint64_t n) {
    if (n == 0)
        throw ValidationError("moebius(0) is undefined");
    int factors = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            ++factors;
        }
    }
    if (n > 1)
        ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

void require_prime(int p) {
    if (p < 2)
        throw ValidationError("p must be prime, got " + std::to_string(p));
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0)
            throw ValidationError("p must be prime, got " + std::to_string(p));
}

const BigInt& DimSeq::at(int degree) const {
    if (degree < 1 || degree > max_degree())
        throw std::out_of_range("DimSeq degree " + std::to_string(degree) + " out of range 1.." +
                                std::to_string(max_degree()));
    return dims_[static_cast<std::size_t>(degree - 1)];
}

void DimSeq::set(int degree, BigInt value) {
    if (degree < 1 || degree > max_degree())
        throw std::out_of_range("DimSeq degree " + std::to_string(degree) + " out of range 1.." +
                                std::to_string(max_degree()));
    if (value < 0)
        throw ValidationError("DimSeq entries must be nonnegative");
    dims_[static_cast<std::size_t>(degree - 1)] = std::move(value);
}

TruncSeries::TruncSeries(int order) : order_(order) {
    if (order < 0)
        throw ValidationError("series order must be nonnegative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries::TruncSeries(int order, std::vector<BigRat> coeffs) : TruncSeries(order) {
    if (coeffs.size() > coeffs_.size())
        throw ValidationError("more coefficients than the truncation order admits");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs_[i] = std::move(coeffs[i]);
}

TruncSeries TruncSeries::one(int order) {
    TruncSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncSeries TruncSeries::monomial(int order, int degree, const BigRat& c) {
    TruncSeries s(order);
    if (degree < 0)
        throw ValidationError("monomial degree must be nonnegative");
    if (degree <= order)
        s.coeffs_[static_cast<std::size_t>(degree)] = c;
    return s;
}

namespace {
void require_same_order(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order())
        throw ValidationError("mixed truncation orders: " + std::to_string(a.order()) + " vs " +
                              std::to_string(b.order()));
}
} // namespace

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b);
    TruncSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k)
        r.set(k, a[k] + b[k]);
    return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b);
    TruncSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k)
        r.set(k, a[k] - b[k]);
    return r;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b);
    const int n = a.order();
    TruncSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j] == 0)
                continue;
            r.set(i + j, r[i + j] + a[i] * b[j]);
        }
    }
    return r;
}

TruncSeries series_inverse(const TruncSeries& a) {
    if (a[0] != 1)
        throw ValidationError("series_inverse requires constant term 1");
    const int n = a.order();
    TruncSeries b(n);
    b.set(0, BigRat(1));
    for (int k = 1; k <= n; ++k) {
        BigRat acc(0);
        for (int j = 1; j <= k; ++j)
            acc += a[j] * b[k - j];
        b.set(k, -acc);
    }
    return b;
}

TruncSeries series_log(const TruncSeries& a) {
    if (a[0] != 1)
        throw ValidationError("series_log requires constant term 1");
    const int n = a.order();
    // From a * (log a)' = a': n*b_n = n*a_n - sum_{k<n} k*b_k*a_{n-k}.
    TruncSeries b(n);
    for (int k = 1; k <= n; ++k) {
        BigRat acc = BigRat(k) * a[k];
        for (int j = 1; j < k; ++j)
            acc -= BigRat(j) * b[j] * a[k - j];
        b.set(k, acc / k);
    }
    return b;
}

TruncSeries series_pow(const TruncSeries& base, const BigInt& e) {
    if (e < 0)
        throw ValidationError("series_pow requires a nonnegative exponent");
    TruncSeries result = TruncSeries::one(base.order());
    TruncSeries sq = base;
    BigInt k = e;
    while (k != 0) {
        if (mpz_odd_p(k.get_mpz_t()))
            result = series_mul(result, sq);
        k >>= 1;
        if (k != 0)
            sq = series_mul(sq, sq);
    }
    return result;
}

TruncSeries jennings_product(const DimSeq& c, int p, int order) {
    if (p < 2)
        throw ValidationError("jennings_product requires p >= 2");
    TruncSeries acc = TruncSeries::one(order);
    const int top = std::min(order, c.max_degree());
    for (int n = 1; n <= top; ++n) {
        if (c.at(n) == 0)
            continue;
        // (1 - t^{np}) / (1 - t^n) = 1 + t^n + ... + t^{(p-1)n}
        TruncSeries factor(order);
        for (int i = 0; i < p && static_cast<long long>(i) * n <= order; ++i)
            factor.set(i * n, BigRat(1));
        acc = series_mul(acc, series_pow(factor, c.at(n)));
    }
    return acc;
}

} // namespace liedense
