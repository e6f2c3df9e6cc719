#include "liedense/witt.hpp"

#include <sstream>

namespace liedense {

BigInt witt_dim(int d, int n) {
    if (d < 1)
        throw ValidationError("witt_dim requires rank d >= 1");
    if (n < 1)
        throw ValidationError("witt_dim requires degree n >= 1");
    BigInt acc(0);
    for (int l = 1; l <= n; ++l) {
        if (n % l != 0)
            continue;
        int mu = moebius(static_cast<std::uint64_t>(l));
        if (mu == 0)
            continue;
        BigInt term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(n / l));
        acc += mu * term;
    }
    if (acc % n != 0)
        throw std::logic_error("witt_dim: divisor sum not divisible by n (d=" +
                               std::to_string(d) + ", n=" + std::to_string(n) + ")");
    return acc / n;
}

BigInt restricted_dim(int d, int p, int n) {
    require_prime(p);
    if (n < 1)
        throw ValidationError("restricted_dim requires degree n >= 1");
    BigInt acc(0);
    int m = n;
    while (true) {
        acc += witt_dim(d, m);
        if (m % p != 0)
            break;
        m /= p;
    }
    return acc;
}

DimSeq witt_dims(int d, int max_degree) {
    DimSeq s(max_degree);
    for (int n = 1; n <= max_degree; ++n)
        s.set(n, witt_dim(d, n));
    return s;
}

DimSeq restricted_dims(int d, int p, int max_degree) {
    DimSeq s(max_degree);
    for (int n = 1; n <= max_degree; ++n)
        s.set(n, restricted_dim(d, p, n));
    return s;
}

GenProfile::GenProfile(std::map<int, long long> entries) {
    for (auto& [deg, count] : entries) {
        if (deg < 1)
            throw ValidationError("generator degrees must be >= 1");
        if (count < 0)
            throw ValidationError("generator counts must be >= 0");
        if (count > 0)
            entries_.emplace(deg, count);
    }
}

GenProfile GenProfile::parse(const std::string& text) {
    std::map<int, long long> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ValidationError("profile entry '" + item + "' is not of the form degree:count");
        try {
            int deg = std::stoi(item.substr(0, colon));
            long long count = std::stoll(item.substr(colon + 1));
            entries[deg] += count;
        } catch (const std::exception&) {
            throw ValidationError("profile entry '" + item + "' is not of the form degree:count");
        }
    }
    return GenProfile(entries);
}

long long GenProfile::count(int degree) const {
    auto it = entries_.find(degree);
    return it == entries_.end() ? 0 : it->second;
}

std::string GenProfile::str() const {
    std::string out;
    for (const auto& [deg, count] : entries_) {
        if (!out.empty())
            out += ',';
        out += std::to_string(deg) + ":" + std::to_string(count);
    }
    return out;
}

DimSeq free_graded_lie_dims(const GenProfile& profile, int max_degree) {
    if (profile.empty())
        throw ValidationError("free_graded_lie_dims requires a nonempty profile");
    TruncSeries denom = TruncSeries::one(max_degree);
    for (const auto& [deg, count] : profile.entries()) {
        if (deg <= max_degree)
            denom.set(deg, denom[deg] - BigRat(static_cast<long>(count)));
    }
    TruncSeries b = series_log(series_inverse(denom));

    DimSeq w(max_degree);
    for (int n = 1; n <= max_degree; ++n) {
        BigRat acc(0);
        for (int m = 1; m <= n; ++m) {
            if (n % m != 0)
                continue;
            int mu = moebius(static_cast<std::uint64_t>(n / m));
            if (mu == 0)
                continue;
            acc += BigRat(mu) * BigRat(m) * b[m];
        }
        acc /= n;
        if (acc.get_den() != 1)
            throw std::logic_error("free_graded_lie_dims: w_" + std::to_string(n) +
                                   " = " + rat_str(acc) + " is not an integer (profile " +
                                   profile.str() + ")");
        if (acc < 0)
            throw std::logic_error("free_graded_lie_dims: w_" + std::to_string(n) +
                                   " = " + rat_str(acc) + " is negative (profile " +
                                   profile.str() + ")");
        w.set(n, acc.get_num());
    }
    return w;
}

DimSeq restricted_from_ordinary(const DimSeq& w, int p) {
    if (p < 2)
        throw ValidationError("restricted_from_ordinary requires p >= 2");
    DimSeq c(w.max_degree());
    for (int n = 1; n <= w.max_degree(); ++n) {
        BigInt acc(0);
        int m = n;
        while (true) {
            acc += w.at(m);
            if (m % p != 0)
                break;
            m /= p;
        }
        c.set(n, acc);
    }
    return c;
}

namespace {
// Sign of f(t) = t^e - sum_i r_i t^{e-i} at a rational point.
int profile_poly_sign(const GenProfile& profile, const BigRat& t) {
    const int e = profile.max_degree();
    BigRat acc(1);
    // Horner over degrees e, e-1, ..., 0 with coefficients
    // 1, -r_1, ..., -r_e.
    for (int k = e - 1; k >= 0; --k) {
        acc *= t;
        long long r = profile.count(e - k);
        if (r != 0)
            acc -= BigRat(static_cast<long>(r));
    }
    return sgn(acc);
}
} // namespace

GrowthRoot dominant_root(const GenProfile& profile, double tol) {
    if (profile.empty())
        throw ValidationError("dominant_root requires a nonempty profile");
    if (!(tol > 0))
        throw ValidationError("dominant_root requires tol > 0");

    const int e = profile.max_degree();
    GrowthRoot root;
    if (e == 1) {
        root.lambda = static_cast<double>(profile.count(1));
        root.residual_bound = root.lambda;
        return root;
    }

    BigRat lo(0);
    BigRat hi(1);
    for (const auto& [deg, count] : profile.entries())
        hi += BigRat(static_cast<long>(count));
    if (profile_poly_sign(profile, hi) <= 0)
        throw std::logic_error("dominant_root: bracket failure");
    BigRat width = hi - lo;
    const BigRat tol_rat(tol);
    while (width > tol_rat) {
        BigRat mid = (lo + hi) / 2;
        if (profile_poly_sign(profile, mid) > 0)
            hi = mid;
        else
            lo = mid;
        width = hi - lo;
    }
    root.lambda = rat_f64((lo + hi) / 2);
    root.residual_bound = root.lambda;
    return root;
}

DimSeq cumulative(const DimSeq& seq) {
    DimSeq out(seq.max_degree());
    BigInt acc(0);
    for (int n = 1; n <= seq.max_degree(); ++n) {
        acc += seq.at(n);
        out.set(n, acc);
    }
    return out;
}

} // namespace liedense
