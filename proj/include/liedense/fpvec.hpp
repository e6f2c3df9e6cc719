#pragma once

// Dense coefficient vectors over F_p.  The p = 2 case is bit-packed
// into machine words so that row reduction and shifted accumulation
// run on whole-word XORs; odd p uses one byte per coefficient.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace liedense {

class FpVec {
public:
    FpVec() = default;
    FpVec(int p, std::size_t n);

    int p() const { return p_; }
    std::size_t size() const { return n_; }

    int get(std::size_t i) const;
    void add_at(std::size_t i, int c); // this[i] += c

    // this += c * o (sizes must match)
    void add_scaled(const FpVec& o, int c);
    // this[off .. off+o.size()) += c * o; the window must fit
    void add_scaled_shifted(std::size_t off, const FpVec& o, int c);

    void scale(int c);
    bool is_zero() const;
    std::ptrdiff_t first_nonzero() const; // -1 if zero

    // f(index, coeff) for every nonzero entry, ascending index
    template <class F>
    void for_each_nonzero(F&& f) const {
        if (p_ == 2) {
            for (std::size_t w = 0; w < bits_.size(); ++w) {
                std::uint64_t v = bits_[w];
                while (v) {
                    unsigned b = static_cast<unsigned>(__builtin_ctzll(v));
                    f(w * 64 + b, 1);
                    v &= v - 1;
                }
            }
        } else {
            for (std::size_t i = 0; i < bytes_.size(); ++i)
                if (bytes_[i])
                    f(i, static_cast<int>(bytes_[i]));
        }
    }

    bool operator==(const FpVec&) const = default;

private:
    int p_ = 0;
    std::size_t n_ = 0;
    std::vector<std::uint64_t> bits_; // p == 2; unused high bits stay zero
    std::vector<std::uint8_t> bytes_; // p > 2
};

// c^{-1} mod p for 1 <= c < p, p prime.
int fp_inverse(int c, int p);

} // namespace liedense
