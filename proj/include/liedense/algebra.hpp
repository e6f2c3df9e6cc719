#pragma once

// Elements of the truncated free associative algebra
// F_p<x_1,...,x_d> / (words longer than trunc).  Words of degree n are
// indexed by their base-d rank, and each degree keeps a dense
// coefficient block, allocated only once touched.  Brackets and the
// p-map are the induced [u,v] = uv - vu and u^[p] = u^p.

#include <string>
#include <utility>
#include <vector>

#include "liedense/errors.hpp"
#include "liedense/fpvec.hpp"

namespace liedense {

class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(int d, int p, int trunc); // zero element

    static AlgebraElement unit(int d, int p, int trunc); // empty word
    static AlgebraElement generator(int d, int p, int trunc, int index); // 1-based

    int d() const { return d_; }
    int p() const { return p_; }
    int trunc() const { return trunc_; }

    std::size_t block_size(int deg) const; // d^deg

    bool is_zero() const;
    int min_degree() const; // -1 when zero
    int max_degree() const; // -1 when zero
    bool is_homogeneous() const; // zero counts as homogeneous

    // nullptr when the block was never touched (all zero)
    const FpVec* block(int deg) const;
    FpVec& mutable_block(int deg);

    void add_word(int deg, std::size_t rank, int c);
    void add_scaled(const AlgebraElement& o, int c);
    AlgebraElement homogeneous_part(int deg) const;

    friend AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement p_power() const; // associative p-th power

    // Nonzero terms as (word, coeff), word rendered like "21" for
    // x_2 x_1 (dot-separated once d > 9); degree-major ascending.
    std::vector<std::pair<std::string, int>> terms() const;

    bool operator==(const AlgebraElement&) const;

private:
    void require_compatible(const AlgebraElement& o) const;
    static void mul_acc(AlgebraElement& dst, const AlgebraElement& a, const AlgebraElement& b,
                        int sign);

    int d_ = 0;
    int p_ = 0;
    int trunc_ = -1;
    std::vector<FpVec> blocks_; // [deg] for deg in 0..trunc; empty vec = untouched
};

std::string render_word(int d, int deg, std::size_t rank);

} // namespace liedense
