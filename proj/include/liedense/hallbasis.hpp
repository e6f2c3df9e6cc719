#pragma once

// Brute-force oracle for free and restricted free Lie algebras,
// realized inside the truncated free associative algebra: Hall basic
// commutators, the Lie-expression input language, and closure /
// echelonization of subalgebras and ideals.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liedense/algebra.hpp"
#include "liedense/numkit.hpp"

namespace liedense {

// ---------------------------------------------------------------------------
// Lie expressions
//
// Grammar (whitespace insignificant):
//   expr := term (('+'|'-') term)*
//   term := (INT '*')? atom
//   atom := 'x' INT | '[' expr ',' expr ']' | 'P(' expr ')'
// Coefficients are reduced mod p; 'P' is the p-map.

class LieExpr {
public:
    struct Atom;
    using AtomPtr = std::shared_ptr<const Atom>;
    struct Term {
        int coeff; // 1..p-1
        AtomPtr atom;
    };

    LieExpr() = default;
    static LieExpr zero(int p);
    static LieExpr generator(int p, int index);
    static LieExpr make_bracket(const LieExpr& a, const LieExpr& b);
    static LieExpr make_p_power(const LieExpr& a);

    int p() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    LieExpr operator+(const LieExpr& o) const;
    LieExpr operator-(const LieExpr& o) const;
    LieExpr scaled(int c) const;

    int max_generator() const;
    std::string str() const; // canonical printer, emits the grammar back

private:
    explicit LieExpr(int p) : p_(p) {}
    void normalize();

    int p_ = 0;
    std::vector<Term> terms_;
};

struct LieExpr::Atom {
    enum class Kind { Gen, Bracket, PPow } kind;
    int gen = 0;    // Kind::Gen
    LieExpr a, b;   // Bracket: [a,b]; PPow: P(a)
};

// Throws ParseError with the byte offset on malformed input or a
// generator index outside 1..d.
LieExpr parse_expr(std::string_view text, int d, int p);

// Image under the canonical embedding into the truncated free
// associative algebra.
AlgebraElement to_associative(const LieExpr& e, int d, int p, int trunc);

// ---------------------------------------------------------------------------
// Basic commutators

struct BasicCommutator {
    int weight;
    int generator = 0;   // 1-based, weight 1 only
    int left = -1;       // indices into the Hall order, -1 for generators
    int right = -1;
    int hall_index = -1; // position in the global Hall order
};

class HallBasis {
public:
    // Weight-n count equals the Witt dimension.  Ties in the Hall order
    // are broken by construction order (left index, then right), so the
    // enumeration is deterministic.  Exceeding count_limit raises a
    // resource error.
    static HallBasis enumerate(int d, int max_weight,
                               long long count_limit = (1LL << 22));

    int d() const { return d_; }
    int max_weight() const { return max_weight_; }
    const std::vector<BasicCommutator>& all() const { return all_; }
    const std::vector<int>& at_weight(int w) const;

    std::string print(int hall_index) const; // nested grammar form, e.g. "[[x2,x1],x1]"
    LieExpr to_expr(int hall_index, int p) const;
    AlgebraElement to_algebra(int hall_index, int p, int trunc) const;
    // All images in Hall order, computed bottom-up in one pass.
    std::vector<AlgebraElement> to_algebra_all(int p, int trunc) const;

private:
    int d_ = 0;
    int max_weight_ = 0;
    std::vector<BasicCommutator> all_;
    std::vector<std::vector<int>> by_weight_; // [w] -> hall indices
};

// ---------------------------------------------------------------------------
// Closure

enum class ClosureMode { Lie, Restricted, LieIdeal, RestrictedIdeal };

std::string mode_name(ClosureMode mode);
ClosureMode parse_mode(const std::string& name);

struct ClosureLimits {
    std::size_t max_columns = std::size_t(1) << 20;
};

struct SubalgebraBasis {
    int d = 0;
    int p = 0;
    int trunc = 0;
    ClosureMode mode = ClosureMode::Lie;
    bool stable = false;
    std::vector<std::vector<AlgebraElement>> per_degree; // [deg-1], echelonized

    DimSeq dims() const;
};

// Row echelon over F_p; rows kept with strictly increasing pivots and
// leading coefficient 1.  Reduction order is fixed, so results are
// bitwise deterministic.
class RowEchelon {
public:
    RowEchelon() = default;
    RowEchelon(int p, std::size_t cols) : p_(p), cols_(cols) {}

    // Forward-reduces r against the stored rows; returns the normalized
    // remainder, or nullopt when r lies in the span.
    std::optional<FpVec> reduce(FpVec r) const;
    void add_row(FpVec row); // row must be normalized with a fresh pivot

    std::size_t rank() const { return rows_.size(); }
    const std::vector<FpVec>& rows() const { return rows_; }

private:
    int p_ = 2;
    std::size_t cols_ = 0;
    std::vector<FpVec> rows_;
    std::vector<std::size_t> pivots_;
};

// Incremental closure of homogeneous generators.  Work is processed in
// ascending degree, which reaches the per-degree fixpoint exactly
// within the truncation.  Generators may be added at any time (the
// greedy construction relies on this); cascading work only ever flows
// to strictly higher degrees.
class ClosureEngine {
public:
    ClosureEngine(int d, int p, int trunc, ClosureMode mode, ClosureLimits limits = {});

    void add_generator(const AlgebraElement& g); // homogeneous; zero is ignored
    bool in_span(const AlgebraElement& homogeneous) const;

    long dim_at(int deg) const;
    DimSeq dims() const;
    SubalgebraBasis snapshot() const;

    int d() const { return d_; }
    int p() const { return p_; }
    int trunc() const { return trunc_; }

private:
    struct Pending {
        long long seq;
        int deg;
        AlgebraElement elem;
    };
    void drain();
    void enqueue(int deg, AlgebraElement elem);

    int d_, p_, trunc_;
    ClosureMode mode_;
    std::vector<RowEchelon> echelons_;                  // [deg-1]
    std::vector<std::vector<AlgebraElement>> elems_;    // [deg-1]
    std::vector<AlgebraElement> ambient_gens_;          // x_1..x_d, ideal modes
    std::multimap<std::pair<int, long long>, AlgebraElement> pending_;
    long long seq_ = 0;
};

// Closure of homogeneous generators; inhomogeneous input is rejected
// (use gradedify for that).
SubalgebraBasis closure(const std::vector<LieExpr>& gens, int d, int p, int trunc,
                        ClosureMode mode, ClosureLimits limits = {});

DimSeq graded_dims(const SubalgebraBasis& basis);

// Leading-term dimensions of the subalgebra generated by possibly
// inhomogeneous elements: the closure is computed in the truncated
// algebra and echelonized by lowest nonzero degree.  With an
// inhomogeneous generator of top component degree g, dims are
// certified only for degrees <= trunc - g + 1; the report marks the
// horizon.  Homogeneous input reproduces closure() exactly.
struct GradedifyReport {
    DimSeq leading_dims;
    int trust_horizon = 0;
};

GradedifyReport gradedify(const std::vector<LieExpr>& gens, int d, int p, int trunc,
                          ClosureMode mode, ClosureLimits limits = {});

} // namespace liedense
