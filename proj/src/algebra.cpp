#include "liedense/algebra.hpp"

namespace liedense {

namespace {
constexpr std::size_t kMaxBlock = std::size_t(1) << 26;
} // namespace

AlgebraElement::AlgebraElement(int d, int p, int trunc) : d_(d), p_(p), trunc_(trunc) {
    if (d < 1)
        throw ValidationError("algebra requires d >= 1");
    if (p < 2)
        throw ValidationError("algebra requires p >= 2");
    if (trunc < 0)
        throw ValidationError("algebra requires truncation >= 0");
    std::size_t size = 1;
    for (int n = 1; n <= trunc; ++n) {
        if (size > kMaxBlock / static_cast<std::size_t>(d))
            throw ResourceError("degree " + std::to_string(n) + " needs more than 2^26 columns");
        size *= static_cast<std::size_t>(d);
    }
    blocks_.resize(static_cast<std::size_t>(trunc) + 1);
}

AlgebraElement AlgebraElement::unit(int d, int p, int trunc) {
    AlgebraElement e(d, p, trunc);
    e.add_word(0, 0, 1);
    return e;
}

AlgebraElement AlgebraElement::generator(int d, int p, int trunc, int index) {
    if (index < 1 || index > d)
        throw ValidationError("generator index " + std::to_string(index) + " out of range 1.." +
                              std::to_string(d));
    AlgebraElement e(d, p, trunc);
    if (trunc >= 1)
        e.add_word(1, static_cast<std::size_t>(index - 1), 1);
    return e;
}

std::size_t AlgebraElement::block_size(int deg) const {
    std::size_t size = 1;
    for (int n = 0; n < deg; ++n)
        size *= static_cast<std::size_t>(d_);
    return size;
}

bool AlgebraElement::is_zero() const {
    for (const auto& b : blocks_)
        if (b.size() != 0 && !b.is_zero())
            return false;
    return true;
}

int AlgebraElement::min_degree() const {
    for (int n = 0; n <= trunc_; ++n) {
        const auto& b = blocks_[static_cast<std::size_t>(n)];
        if (b.size() != 0 && !b.is_zero())
            return n;
    }
    return -1;
}

int AlgebraElement::max_degree() const {
    for (int n = trunc_; n >= 0; --n) {
        const auto& b = blocks_[static_cast<std::size_t>(n)];
        if (b.size() != 0 && !b.is_zero())
            return n;
    }
    return -1;
}

bool AlgebraElement::is_homogeneous() const {
    return min_degree() == max_degree();
}

const FpVec* AlgebraElement::block(int deg) const {
    if (deg < 0 || deg > trunc_)
        return nullptr;
    const auto& b = blocks_[static_cast<std::size_t>(deg)];
    return b.size() == 0 ? nullptr : &b;
}

FpVec& AlgebraElement::mutable_block(int deg) {
    auto& b = blocks_.at(static_cast<std::size_t>(deg));
    if (b.size() == 0)
        b = FpVec(p_, block_size(deg));
    return b;
}

void AlgebraElement::add_word(int deg, std::size_t rank, int c) {
    if (deg > trunc_)
        return;
    mutable_block(deg).add_at(rank, c);
}

void AlgebraElement::add_scaled(const AlgebraElement& o, int c) {
    require_compatible(o);
    for (int n = 0; n <= trunc_; ++n) {
        const FpVec* ob = o.block(n);
        if (ob && !ob->is_zero())
            mutable_block(n).add_scaled(*ob, c);
    }
}

AlgebraElement AlgebraElement::homogeneous_part(int deg) const {
    AlgebraElement e(d_, p_, trunc_);
    const FpVec* b = block(deg);
    if (b)
        e.mutable_block(deg) = *b;
    return e;
}

void AlgebraElement::require_compatible(const AlgebraElement& o) const {
    if (d_ != o.d_ || p_ != o.p_ || trunc_ != o.trunc_)
        throw ValidationError("mixed algebra parameters");
}

void AlgebraElement::mul_acc(AlgebraElement& dst, const AlgebraElement& a,
                             const AlgebraElement& b, int sign) {
    for (int i = 0; i <= a.trunc_; ++i) {
        const FpVec* ab = a.block(i);
        if (!ab || ab->is_zero())
            continue;
        for (int j = 0; i + j <= a.trunc_; ++j) {
            const FpVec* bb = b.block(j);
            if (!bb || bb->is_zero())
                continue;
            FpVec& out = dst.mutable_block(i + j);
            const std::size_t stride = b.block_size(j);
            ab->for_each_nonzero([&](std::size_t rank, int coeff) {
                out.add_scaled_shifted(rank * stride, *bb, sign * coeff);
            });
        }
    }
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
    a.require_compatible(b);
    AlgebraElement out(a.d_, a.p_, a.trunc_);
    AlgebraElement::mul_acc(out, a, b, 1);
    return out;
}

AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) {
    a.require_compatible(b);
    AlgebraElement out(a.d_, a.p_, a.trunc_);
    AlgebraElement::mul_acc(out, a, b, 1);
    AlgebraElement::mul_acc(out, b, a, -1);
    return out;
}

AlgebraElement AlgebraElement::p_power() const {
    AlgebraElement out = *this;
    for (int k = 1; k < p_; ++k)
        out = mul(out, *this);
    return out;
}

std::string render_word(int d, int deg, std::size_t rank) {
    if (deg == 0)
        return "1";
    std::vector<int> letters(static_cast<std::size_t>(deg));
    for (int i = deg - 1; i >= 0; --i) {
        letters[static_cast<std::size_t>(i)] = static_cast<int>(rank % static_cast<std::size_t>(d)) + 1;
        rank /= static_cast<std::size_t>(d);
    }
    std::string out;
    for (int i = 0; i < deg; ++i) {
        if (d > 9 && i > 0)
            out += '.';
        out += std::to_string(letters[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::vector<std::pair<std::string, int>> AlgebraElement::terms() const {
    std::vector<std::pair<std::string, int>> out;
    for (int n = 0; n <= trunc_; ++n) {
        const FpVec* b = block(n);
        if (!b)
            continue;
        b->for_each_nonzero(
            [&](std::size_t rank, int coeff) { out.emplace_back(render_word(d_, n, rank), coeff); });
    }
    return out;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (d_ != o.d_ || p_ != o.p_ || trunc_ != o.trunc_)
        return false;
    for (int n = 0; n <= trunc_; ++n) {
        const FpVec* a = block(n);
        const FpVec* b = o.block(n);
        const bool az = !a || a->is_zero();
        const bool bz = !b || b->is_zero();
        if (az != bz)
            return false;
        if (!az && !(*a == *b))
            return false;
    }
    return true;
}

} // namespace liedense
