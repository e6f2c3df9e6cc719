#include "liedense/fpvec.hpp"

#include <stdexcept>

namespace liedense {

FpVec::FpVec(int p, std::size_t n) : p_(p), n_(n) {
    if (p < 2)
        throw std::invalid_argument("FpVec requires p >= 2");
    if (p == 2)
        bits_.assign((n + 63) / 64, 0);
    else {
        if (p > 255)
            throw std::invalid_argument("FpVec supports p <= 255");
        bytes_.assign(n, 0);
    }
}

int FpVec::get(std::size_t i) const {
    if (p_ == 2)
        return static_cast<int>((bits_[i >> 6] >> (i & 63)) & 1u);
    return bytes_[i];
}

void FpVec::add_at(std::size_t i, int c) {
    c %= p_;
    if (c < 0)
        c += p_;
    if (c == 0)
        return;
    if (p_ == 2)
        bits_[i >> 6] ^= std::uint64_t(1) << (i & 63);
    else
        bytes_[i] = static_cast<std::uint8_t>((bytes_[i] + c) % p_);
}

void FpVec::add_scaled(const FpVec& o, int c) {
    add_scaled_shifted(0, o, c);
}

void FpVec::add_scaled_shifted(std::size_t off, const FpVec& o, int c) {
    c %= p_;
    if (c < 0)
        c += p_;
    if (c == 0 || o.n_ == 0)
        return;
    if (off + o.n_ > n_)
        throw std::out_of_range("FpVec window does not fit");
    if (p_ == 2) {
        const std::size_t word = off >> 6;
        const unsigned shift = static_cast<unsigned>(off & 63);
        if (shift == 0) {
            for (std::size_t i = 0; i < o.bits_.size(); ++i)
                bits_[word + i] ^= o.bits_[i];
        } else {
            for (std::size_t i = 0; i < o.bits_.size(); ++i) {
                const std::uint64_t v = o.bits_[i];
                bits_[word + i] ^= v << shift;
                const std::uint64_t high = v >> (64 - shift);
                if (high)
                    bits_[word + i + 1] ^= high;
            }
        }
    } else {
        for (std::size_t i = 0; i < o.n_; ++i) {
            if (o.bytes_[i])
                bytes_[off + i] =
                    static_cast<std::uint8_t>((bytes_[off + i] + c * o.bytes_[i]) % p_);
        }
    }
}

void FpVec::scale(int c) {
    c %= p_;
    if (c < 0)
        c += p_;
    if (c == 1)
        return;
    if (p_ == 2) {
        if (c == 0)
            bits_.assign(bits_.size(), 0);
        return;
    }
    for (auto& b : bytes_)
        b = static_cast<std::uint8_t>((b * c) % p_);
}

bool FpVec::is_zero() const {
    if (p_ == 2) {
        for (auto w : bits_)
            if (w)
                return false;
        return true;
    }
    for (auto b : bytes_)
        if (b)
            return false;
    return true;
}

std::ptrdiff_t FpVec::first_nonzero() const {
    if (p_ == 2) {
        for (std::size_t w = 0; w < bits_.size(); ++w)
            if (bits_[w])
                return static_cast<std::ptrdiff_t>(w * 64 + __builtin_ctzll(bits_[w]));
        return -1;
    }
    for (std::size_t i = 0; i < bytes_.size(); ++i)
        if (bytes_[i])
            return static_cast<std::ptrdiff_t>(i);
    return -1;
}

int fp_inverse(int c, int p) {
    int r = 1;
    int base = c % p;
    int e = p - 2; // Fermat
    while (e) {
        if (e & 1)
            r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

} // namespace liedense
