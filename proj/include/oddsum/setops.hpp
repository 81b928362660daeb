#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oddsum/gf2poly.hpp"

namespace oddsum {

/// Finite set of nonnegative integers, kept sorted and deduplicated.
class IntSet {
public:
    IntSet() = default;
    explicit IntSet(std::vector<uint64_t> elements);

    const std::vector<uint64_t>& elements() const { return elems_; }
    size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    bool contains(uint64_t v) const;

    Gf2Poly to_poly() const { return Gf2Poly::from_set(elems_); }
    static IntSet from_poly(const Gf2Poly& p) { return IntSet(p.support()); }

    /// Comma-joined ascending elements, e.g. "1,2,3"; empty set renders "".
    std::string to_string() const;
    static IntSet parse(const std::string& text);

    friend bool operator==(const IntSet&, const IntSet&) = default;
    friend auto operator<=>(const IntSet& a, const IntSet& b) {
        return a.elems_ <=> b.elems_;
    }

private:
    std::vector<uint64_t> elems_;
};

/// Finite set of integer tuples of a fixed dimension, sorted lexicographically.
class GridSet {
public:
    using Point = std::vector<int64_t>;

    explicit GridSet(size_t dimension) : dim_(dimension) {}
    GridSet(size_t dimension, std::vector<Point> points);

    size_t dimension() const { return dim_; }
    const std::vector<Point>& points() const { return pts_; }
    size_t size() const { return pts_.size(); }

    /// {0,1}^r.
    static GridSet cube(size_t r);

    /// "(a,b),(c,d)" in lexicographic order.
    std::string to_string() const;
    static GridSet parse(const std::string& text);

    friend bool operator==(const GridSet&, const GridSet&) = default;

private:
    size_t dim_;
    std::vector<Point> pts_;
};

namespace setops {

/// {i*a : a in A}.
IntSet dilate(const IntSet& a, uint64_t factor);

/// Elements belonging to an odd number of the given sets.
IntSet symdiff(const std::vector<IntSet>& sets);

/// Odd-representation sumset: values expressible as a+b in an odd number of
/// ways. Computed through the GF(2) polynomial product.
IntSet oplus(const IntSet& a, const IntSet& b);

/// Odd-representation sumset over integer tuples (componentwise sums).
GridSet oplus_grid(const GridSet& a, const GridSet& b);

/// Odd-representation productset: values expressible as a*b in an odd number
/// of ways. All elements must be positive. Equals the symmetric difference of
/// the dilations {a*B : a in A}.
IntSet nabla(const IntSet& a, const IntSet& b);

// Counting implementations of the same operators: hash-map multiplicity
// bookkeeping with no polynomial arithmetic. Used by tests and the CLI
// --oracle flag as an independent route.
IntSet symdiff_counting(const std::vector<IntSet>& sets);
IntSet oplus_counting(const IntSet& a, const IntSet& b);
IntSet nabla_counting(const IntSet& a, const IntSet& b);

}  // namespace setops

}  // namespace oddsum
