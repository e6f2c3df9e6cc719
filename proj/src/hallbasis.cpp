#include "liedense/hallbasis.hpp"

#include <algorithm>
#include <cctype>

namespace liedense {

// ---------------------------------------------------------------------------
// LieExpr

namespace {

int compare_expr(const LieExpr& a, const LieExpr& b);

int compare_atom(const LieExpr::Atom& x, const LieExpr::Atom& y) {
    if (x.kind != y.kind)
        return static_cast<int>(x.kind) < static_cast<int>(y.kind) ? -1 : 1;
    switch (x.kind) {
    case LieExpr::Atom::Kind::Gen:
        return x.gen < y.gen ? -1 : (x.gen > y.gen ? 1 : 0);
    case LieExpr::Atom::Kind::Bracket: {
        int c = compare_expr(x.a, y.a);
        if (c != 0)
            return c;
        return compare_expr(x.b, y.b);
    }
    case LieExpr::Atom::Kind::PPow:
        return compare_expr(x.a, y.a);
    }
    return 0;
}

int compare_expr(const LieExpr& a, const LieExpr& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    const std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = compare_atom(*ta[i].atom, *tb[i].atom);
        if (c != 0)
            return c;
        if (ta[i].coeff != tb[i].coeff)
            return ta[i].coeff < tb[i].coeff ? -1 : 1;
    }
    if (ta.size() != tb.size())
        return ta.size() < tb.size() ? -1 : 1;
    return 0;
}

int reduce_coeff(long long c, int p) {
    long long r = c % p;
    if (r < 0)
        r += p;
    return static_cast<int>(r);
}

} // namespace

LieExpr LieExpr::zero(int p) {
    if (p < 2)
        throw ValidationError("LieExpr requires p >= 2");
    return LieExpr(p);
}

LieExpr LieExpr::generator(int p, int index) {
    LieExpr e = zero(p);
    if (index < 1)
        throw ValidationError("generator index must be >= 1");
    auto atom = std::make_shared<Atom>();
    atom->kind = Atom::Kind::Gen;
    atom->gen = index;
    e.terms_.push_back({1, std::move(atom)});
    return e;
}

LieExpr LieExpr::make_bracket(const LieExpr& a, const LieExpr& b) {
    if (a.p() != b.p())
        throw ValidationError("mixed characteristics in bracket");
    LieExpr e = zero(a.p());
    if (a.is_zero() || b.is_zero())
        return e;
    auto atom = std::make_shared<Atom>();
    atom->kind = Atom::Kind::Bracket;
    atom->a = a;
    atom->b = b;
    e.terms_.push_back({1, std::move(atom)});
    return e;
}

LieExpr LieExpr::make_p_power(const LieExpr& a) {
    LieExpr e = zero(a.p());
    if (a.is_zero())
        return e;
    auto atom = std::make_shared<Atom>();
    atom->kind = Atom::Kind::PPow;
    atom->a = a;
    e.terms_.push_back({1, std::move(atom)});
    return e;
}

void LieExpr::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return compare_atom(*x.atom, *y.atom) < 0; });
    std::vector<Term> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && compare_atom(*merged.back().atom, *t.atom) == 0)
            merged.back().coeff = reduce_coeff(merged.back().coeff + t.coeff, p_);
        else
            merged.push_back(std::move(t));
    }
    terms_.clear();
    for (auto& t : merged)
        if (t.coeff != 0)
            terms_.push_back(std::move(t));
}

LieExpr LieExpr::operator+(const LieExpr& o) const {
    if (p_ != o.p_)
        throw ValidationError("mixed characteristics in sum");
    LieExpr e = *this;
    e.terms_.insert(e.terms_.end(), o.terms_.begin(), o.terms_.end());
    e.normalize();
    return e;
}

LieExpr LieExpr::operator-(const LieExpr& o) const {
    return *this + o.scaled(-1);
}

LieExpr LieExpr::scaled(int c) const {
    if (terms_.empty())
        return *this;
    LieExpr e(p_);
    const int cc = reduce_coeff(c, p_);
    if (cc == 0)
        return e;
    for (const auto& t : terms_)
        e.terms_.push_back({reduce_coeff(static_cast<long long>(t.coeff) * cc, p_), t.atom});
    e.normalize();
    return e;
}

int LieExpr::max_generator() const {
    int m = 0;
    for (const auto& t : terms_) {
        switch (t.atom->kind) {
        case Atom::Kind::Gen:
            m = std::max(m, t.atom->gen);
            break;
        case Atom::Kind::Bracket:
            m = std::max({m, t.atom->a.max_generator(), t.atom->b.max_generator()});
            break;
        case Atom::Kind::PPow:
            m = std::max(m, t.atom->a.max_generator());
            break;
        }
    }
    return m;
}

namespace {
std::string atom_str(const LieExpr::Atom& atom) {
    switch (atom.kind) {
    case LieExpr::Atom::Kind::Gen:
        return "x" + std::to_string(atom.gen);
    case LieExpr::Atom::Kind::Bracket:
        return "[" + atom.a.str() + "," + atom.b.str() + "]";
    case LieExpr::Atom::Kind::PPow:
        return "P(" + atom.a.str() + ")";
    }
    return {};
}
} // namespace

std::string LieExpr::str() const {
    if (terms_.empty())
        return "0*x1"; // grammar has no bare zero
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i > 0)
            out += " + ";
        if (terms_[i].coeff != 1)
            out += std::to_string(terms_[i].coeff) + "*";
        out += atom_str(*terms_[i].atom);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, int d, int p) : text_(text), d_(d), p_(p) {}

    LieExpr parse() {
        LieExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(pos_, "trailing input");
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    long long parse_int() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw ParseError(start, "expected a number");
        if (pos_ - start > 18)
            throw ParseError(start, "number too large");
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

    LieExpr parse_expr() {
        LieExpr e = parse_term();
        while (true) {
            skip_ws();
            if (eat('+'))
                e = e + parse_term();
            else if (eat('-'))
                e = e - parse_term();
            else
                return e;
        }
    }

    LieExpr parse_term() {
        skip_ws();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            long long coeff = parse_int();
            expect('*');
            return parse_atom().scaled(static_cast<int>(coeff % p_));
        }
        return parse_atom();
    }

    LieExpr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError(pos_, "unexpected end of input");
        const char c = text_[pos_];
        if (c == 'x') {
            const std::size_t at = pos_;
            ++pos_;
            long long idx = parse_int();
            if (idx < 1 || idx > d_)
                throw ParseError(at, "generator index " + std::to_string(idx) +
                                         " out of range 1.." + std::to_string(d_));
            return LieExpr::generator(p_, static_cast<int>(idx));
        }
        if (c == '[') {
            ++pos_;
            LieExpr a = parse_expr();
            expect(',');
            LieExpr b = parse_expr();
            expect(']');
            return LieExpr::make_bracket(a, b);
        }
        if (c == 'P') {
            ++pos_;
            expect('(');
            LieExpr a = parse_expr();
            expect(')');
            return LieExpr::make_p_power(a);
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int d_;
    int p_;
};

} // namespace

LieExpr parse_expr(std::string_view text, int d, int p) {
    if (d < 1)
        throw ValidationError("parse_expr requires d >= 1");
    if (p < 2)
        throw ValidationError("parse_expr requires p >= 2");
    return ExprParser(text, d, p).parse();
}

AlgebraElement to_associative(const LieExpr& e, int d, int p, int trunc) {
    if (e.p() != 0 && e.p() != p)
        throw ValidationError("expression characteristic differs from p");
    AlgebraElement out(d, p, trunc);
    for (const auto& t : e.terms()) {
        AlgebraElement a(d, p, trunc);
        switch (t.atom->kind) {
        case LieExpr::Atom::Kind::Gen:
            a = AlgebraElement::generator(d, p, trunc, t.atom->gen);
            break;
        case LieExpr::Atom::Kind::Bracket:
            a = bracket(to_associative(t.atom->a, d, p, trunc),
                        to_associative(t.atom->b, d, p, trunc));
            break;
        case LieExpr::Atom::Kind::PPow:
            a = to_associative(t.atom->a, d, p, trunc).p_power();
            break;
        }
        out.add_scaled(a, t.coeff);
    }
    return out;
}

// ---------------------------------------------------------------------------
// HallBasis

HallBasis HallBasis::enumerate(int d, int max_weight, long long count_limit) {
    if (d < 1)
        throw ValidationError("Hall basis requires d >= 1");
    if (max_weight < 1)
        throw ValidationError("Hall basis requires max weight >= 1");
    HallBasis hb;
    hb.d_ = d;
    hb.max_weight_ = max_weight;
    hb.by_weight_.resize(static_cast<std::size_t>(max_weight) + 1);

    for (int i = 1; i <= d; ++i) {
        BasicCommutator c;
        c.weight = 1;
        c.generator = i;
        c.hall_index = static_cast<int>(hb.all_.size());
        hb.by_weight_[1].push_back(c.hall_index);
        hb.all_.push_back(c);
    }

    for (int n = 2; n <= max_weight; ++n) {
        const std::size_t known = hb.all_.size(); // everything of weight < n
        for (std::size_t u = 0; u < known; ++u) {
            const int wu = hb.all_[u].weight;
            const int wv = n - wu;
            if (wv < 1 || wv > wu)
                continue;
            for (int v : hb.by_weight_[static_cast<std::size_t>(wv)]) {
                if (wv == wu && v >= static_cast<int>(u))
                    break; // hall order demands u > v
                // if u = [y,z] then v >= z
                if (hb.all_[u].left >= 0 && v < hb.all_[u].right)
                    continue;
                BasicCommutator c;
                c.weight = n;
                c.left = static_cast<int>(u);
                c.right = v;
                c.hall_index = static_cast<int>(hb.all_.size());
                hb.by_weight_[static_cast<std::size_t>(n)].push_back(c.hall_index);
                hb.all_.push_back(c);
                if (static_cast<long long>(hb.all_.size()) > count_limit)
                    throw ResourceError("basic commutator count exceeds limit " +
                                        std::to_string(count_limit) + " at weight " +
                                        std::to_string(n));
            }
        }
    }
    return hb;
}

const std::vector<int>& HallBasis::at_weight(int w) const {
    return by_weight_.at(static_cast<std::size_t>(w));
}

std::string HallBasis::print(int hall_index) const {
    const BasicCommutator& c = all_.at(static_cast<std::size_t>(hall_index));
    if (c.weight == 1)
        return "x" + std::to_string(c.generator);
    return "[" + print(c.left) + "," + print(c.right) + "]";
}

LieExpr HallBasis::to_expr(int hall_index, int p) const {
    const BasicCommutator& c = all_.at(static_cast<std::size_t>(hall_index));
    if (c.weight == 1)
        return LieExpr::generator(p, c.generator);
    return LieExpr::make_bracket(to_expr(c.left, p), to_expr(c.right, p));
}

AlgebraElement HallBasis::to_algebra(int hall_index, int p, int trunc) const {
    const BasicCommutator& c = all_.at(static_cast<std::size_t>(hall_index));
    if (c.weight == 1)
        return AlgebraElement::generator(d_, p, trunc, c.generator);
    return bracket(to_algebra(c.left, p, trunc), to_algebra(c.right, p, trunc));
}

std::vector<AlgebraElement> HallBasis::to_algebra_all(int p, int trunc) const {
    std::vector<AlgebraElement> out;
    out.reserve(all_.size());
    for (const auto& c : all_) {
        if (c.weight == 1)
            out.push_back(AlgebraElement::generator(d_, p, trunc, c.generator));
        else
            out.push_back(bracket(out[static_cast<std::size_t>(c.left)],
                                  out[static_cast<std::size_t>(c.right)]));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Closure

std::string mode_name(ClosureMode mode) {
    switch (mode) {
    case ClosureMode::Lie:
        return "lie";
    case ClosureMode::Restricted:
        return "restricted";
    case ClosureMode::LieIdeal:
        return "lie-ideal";
    case ClosureMode::RestrictedIdeal:
        return "restricted-ideal";
    }
    return {};
}

ClosureMode parse_mode(const std::string& name) {
    if (name == "lie")
        return ClosureMode::Lie;
    if (name == "restricted")
        return ClosureMode::Restricted;
    if (name == "lie-ideal" || name == "lieIdeal")
        return ClosureMode::LieIdeal;
    if (name == "restricted-ideal" || name == "restrictedIdeal")
        return ClosureMode::RestrictedIdeal;
    throw ValidationError("unknown closure mode: " + name);
}

DimSeq SubalgebraBasis::dims() const {
    DimSeq s(trunc);
    for (int n = 1; n <= trunc; ++n)
        s.set(n, static_cast<long>(per_degree[static_cast<std::size_t>(n - 1)].size()));
    return s;
}

std::optional<FpVec> RowEchelon::reduce(FpVec r) const {
    while (true) {
        const std::ptrdiff_t piv = r.first_nonzero();
        if (piv < 0)
            return std::nullopt;
        const auto it = std::lower_bound(pivots_.begin(), pivots_.end(),
                                         static_cast<std::size_t>(piv));
        if (it == pivots_.end() || *it != static_cast<std::size_t>(piv)) {
            const int lead = r.get(static_cast<std::size_t>(piv));
            if (lead != 1)
                r.scale(fp_inverse(lead, p_));
            return r;
        }
        const std::size_t idx = static_cast<std::size_t>(it - pivots_.begin());
        r.add_scaled(rows_[idx], p_ - r.get(static_cast<std::size_t>(piv)));
    }
}

void RowEchelon::add_row(FpVec row) {
    const std::ptrdiff_t piv = row.first_nonzero();
    if (piv < 0)
        throw std::logic_error("RowEchelon::add_row on zero row");
    const auto it = std::lower_bound(pivots_.begin(), pivots_.end(),
                                     static_cast<std::size_t>(piv));
    if (it != pivots_.end() && *it == static_cast<std::size_t>(piv))
        throw std::logic_error("RowEchelon::add_row pivot collision");
    const std::size_t idx = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, static_cast<std::size_t>(piv));
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(row));
}

namespace {
bool mode_restricted(ClosureMode m) {
    return m == ClosureMode::Restricted || m == ClosureMode::RestrictedIdeal;
}
bool mode_ideal(ClosureMode m) {
    return m == ClosureMode::LieIdeal || m == ClosureMode::RestrictedIdeal;
}

void check_columns(int d, int trunc, const ClosureLimits& limits) {
    std::size_t size = 1;
    for (int n = 1; n <= trunc; ++n) {
        if (size > limits.max_columns / static_cast<std::size_t>(d) ||
            size * static_cast<std::size_t>(d) > limits.max_columns)
            throw ResourceError("degree " + std::to_string(n) + " needs " + std::to_string(d) +
                                "^" + std::to_string(n) + " columns, over the limit of " +
                                std::to_string(limits.max_columns) + " (use --force)");
        size *= static_cast<std::size_t>(d);
    }
}
} // namespace

ClosureEngine::ClosureEngine(int d, int p, int trunc, ClosureMode mode, ClosureLimits limits)
    : d_(d), p_(p), trunc_(trunc), mode_(mode) {
    require_prime(p);
    if (trunc < 1)
        throw ValidationError("closure requires truncation >= 1");
    check_columns(d, trunc, limits);
    echelons_.reserve(static_cast<std::size_t>(trunc));
    AlgebraElement probe(d, p, trunc); // validates d, p and block sizes
    for (int n = 1; n <= trunc; ++n)
        echelons_.emplace_back(p, probe.block_size(n));
    elems_.resize(static_cast<std::size_t>(trunc));
    if (mode_ideal(mode)) {
        for (int i = 1; i <= d; ++i)
            ambient_gens_.push_back(AlgebraElement::generator(d, p, trunc, i));
    }
}

void ClosureEngine::enqueue(int deg, AlgebraElement elem) {
    pending_.emplace(std::make_pair(deg, seq_++), std::move(elem));
}

void ClosureEngine::add_generator(const AlgebraElement& g) {
    if (g.is_zero())
        return;
    if (!g.is_homogeneous())
        throw ValidationError("closure generators must be homogeneous (see gradedify)");
    if (g.min_degree() == 0)
        throw ValidationError("closure generators must have degree >= 1");
    enqueue(g.min_degree(), g);
    drain();
}

void ClosureEngine::drain() {
    while (!pending_.empty()) {
        auto it = pending_.begin();
        const int deg = it->first.first;
        AlgebraElement elem = std::move(it->second);
        pending_.erase(it);

        const FpVec* blk = elem.block(deg);
        if (!blk || blk->is_zero())
            continue;
        auto reduced = echelons_[static_cast<std::size_t>(deg - 1)].reduce(*blk);
        if (!reduced)
            continue;
        AlgebraElement stored(d_, p_, trunc_);
        stored.mutable_block(deg) = *reduced;
        echelons_[static_cast<std::size_t>(deg - 1)].add_row(std::move(*reduced));
        elems_[static_cast<std::size_t>(deg - 1)].push_back(stored);

        // (a) brackets with the current basis
        for (int b = 1; b + deg <= trunc_; ++b) {
            for (const auto& other : elems_[static_cast<std::size_t>(b - 1)]) {
                if (b == deg && &other == &elems_[static_cast<std::size_t>(deg - 1)].back())
                    continue; // [e,e] = 0
                enqueue(deg + b, bracket(stored, other));
            }
        }
        // (b) p-map
        if (mode_restricted(mode_) && static_cast<long long>(deg) * p_ <= trunc_)
            enqueue(deg * p_, stored.p_power());
        // (c) brackets with the ambient generators
        if (mode_ideal(mode_) && deg + 1 <= trunc_) {
            for (const auto& x : ambient_gens_)
                enqueue(deg + 1, bracket(stored, x));
        }
    }
}

bool ClosureEngine::in_span(const AlgebraElement& homogeneous) const {
    if (homogeneous.is_zero())
        return true;
    if (!homogeneous.is_homogeneous())
        throw ValidationError("in_span expects a homogeneous element");
    const int deg = homogeneous.min_degree();
    if (deg < 1 || deg > trunc_)
        return false;
    return !echelons_[static_cast<std::size_t>(deg - 1)].reduce(*homogeneous.block(deg)).has_value();
}

long ClosureEngine::dim_at(int deg) const {
    if (deg < 1 || deg > trunc_)
        return 0;
    return static_cast<long>(elems_[static_cast<std::size_t>(deg - 1)].size());
}

DimSeq ClosureEngine::dims() const {
    DimSeq s(trunc_);
    for (int n = 1; n <= trunc_; ++n)
        s.set(n, dim_at(n));
    return s;
}

SubalgebraBasis ClosureEngine::snapshot() const {
    SubalgebraBasis b;
    b.d = d_;
    b.p = p_;
    b.trunc = trunc_;
    b.mode = mode_;
    b.stable = true; // ascending-degree processing reaches the fixpoint
    b.per_degree = elems_;
    return b;
}

SubalgebraBasis closure(const std::vector<LieExpr>& gens, int d, int p, int trunc,
                        ClosureMode mode, ClosureLimits limits) {
    ClosureEngine engine(d, p, trunc, mode, limits);
    for (const auto& g : gens) {
        AlgebraElement img = to_associative(g, d, p, trunc);
        if (img.is_zero())
            continue;
        if (!img.is_homogeneous())
            throw ValidationError("generator '" + g.str() +
                                  "' is not homogeneous; use gradedify for filtered input");
        engine.add_generator(img);
    }
    return engine.snapshot();
}

DimSeq graded_dims(const SubalgebraBasis& basis) {
    return basis.dims();
}

// ---------------------------------------------------------------------------
// gradedify: filtered closure with a global echelon ordered by
// (degree, word rank), so pivots are leading terms.

namespace {

class FilteredClosure {
public:
    FilteredClosure(int d, int p, int trunc, ClosureMode mode, const ClosureLimits& limits)
        : d_(d), p_(p), trunc_(trunc), mode_(mode) {
        AlgebraElement probe(d, p, trunc);
        offsets_.resize(static_cast<std::size_t>(trunc) + 1, 0);
        std::size_t total = 0;
        for (int n = 1; n <= trunc; ++n) {
            offsets_[static_cast<std::size_t>(n)] = total;
            total += probe.block_size(n);
        }
        if (total > limits.max_columns)
            throw ResourceError("filtered closure needs " + std::to_string(total) +
                                " columns, over the limit of " +
                                std::to_string(limits.max_columns) + " (use --force)");
        echelon_ = RowEchelon(p, total);
        total_cols_ = total;
        if (mode_ideal(mode)) {
            for (int i = 1; i <= d; ++i)
                ambient_gens_.push_back(AlgebraElement::generator(d, p, trunc, i));
        }
    }

    void add(const AlgebraElement& g) {
        queue_.push_back(g);
        drain();
    }

    DimSeq leading_dims() const {
        DimSeq s(trunc_);
        for (const auto& [deg, elem] : basis_)
            s.set(deg, s.at(deg) + 1);
        return s;
    }

private:
    FpVec flatten(const AlgebraElement& e) const {
        FpVec row(p_, total_cols_);
        for (int n = 1; n <= trunc_; ++n) {
            const FpVec* b = e.block(n);
            if (b && !b->is_zero())
                row.add_scaled_shifted(offsets_[static_cast<std::size_t>(n)], *b, 1);
        }
        return row;
    }

    AlgebraElement unflatten(const FpVec& row) const {
        AlgebraElement e(d_, p_, trunc_);
        row.for_each_nonzero([&](std::size_t idx, int coeff) {
            int deg = trunc_;
            while (offsets_[static_cast<std::size_t>(deg)] > idx)
                --deg;
            e.add_word(deg, idx - offsets_[static_cast<std::size_t>(deg)], coeff);
        });
        return e;
    }

    void drain() {
        while (head_ < queue_.size()) {
            AlgebraElement e = std::move(queue_[head_++]);
            if (head_ == queue_.size()) {
                queue_.clear();
                head_ = 0;
            }
            if (e.is_zero())
                continue;
            if (e.min_degree() == 0)
                throw ValidationError("filtered closure elements must have degree >= 1");
            auto reduced = echelon_.reduce(flatten(e));
            if (!reduced)
                continue;
            const std::size_t piv = static_cast<std::size_t>(reduced->first_nonzero());
            int lead_deg = trunc_;
            while (offsets_[static_cast<std::size_t>(lead_deg)] > piv)
                --lead_deg;
            AlgebraElement stored = unflatten(*reduced);
            echelon_.add_row(std::move(*reduced));

            for (const auto& [odeg, other] : basis_)
                queue_.push_back(bracket(stored, other));
            if (mode_restricted(mode_))
                queue_.push_back(stored.p_power());
            if (mode_ideal(mode_)) {
                for (const auto& x : ambient_gens_)
                    queue_.push_back(bracket(stored, x));
            }
            basis_.emplace_back(lead_deg, std::move(stored));
        }
    }

    int d_, p_, trunc_;
    ClosureMode mode_;
    std::vector<std::size_t> offsets_;
    std::size_t total_cols_ = 0;
    RowEchelon echelon_;
    std::vector<std::pair<int, AlgebraElement>> basis_;
    std::vector<AlgebraElement> ambient_gens_;
    std::vector<AlgebraElement> queue_;
    std::size_t head_ = 0;
};

} // namespace

GradedifyReport gradedify(const std::vector<LieExpr>& gens, int d, int p, int trunc,
                          ClosureMode mode, ClosureLimits limits) {
    FilteredClosure fc(d, p, trunc, mode, limits);
    int top = 0;
    bool inhomogeneous = false;
    for (const auto& g : gens) {
        AlgebraElement img = to_associative(g, d, p, trunc);
        if (img.is_zero())
            continue;
        if (!img.is_homogeneous())
            inhomogeneous = true;
        top = std::max(top, img.max_degree());
        fc.add(img);
    }
    GradedifyReport report;
    report.leading_dims = fc.leading_dims();
    report.trust_horizon = inhomogeneous ? std::max(0, trunc - top + 1) : trunc;
    return report;
}

} // namespace liedense
