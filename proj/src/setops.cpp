#include "oddsum/setops.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace oddsum {

IntSet::IntSet(std::vector<uint64_t> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool IntSet::contains(uint64_t v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

std::string IntSet::to_string() const {
    std::string s;
    for (uint64_t v : elems_) {
        if (!s.empty()) s += ",";
        s += std::to_string(v);
    }
    return s;
}

IntSet IntSet::parse(const std::string& text) {
    std::vector<uint64_t> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + comma, v);
        if (ec != std::errc() || ptr != text.data() + comma)
            throw std::invalid_argument("invalid set literal: '" + text + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    return IntSet(std::move(out));
}

GridSet::GridSet(size_t dimension, std::vector<Point> points)
    : dim_(dimension), pts_(std::move(points)) {
    for (const Point& p : pts_)
        if (p.size() != dim_)
            throw std::invalid_argument("grid point dimension mismatch");
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

GridSet GridSet::cube(size_t r) {
    std::vector<Point> pts;
    pts.reserve(size_t(1) << r);
    for (uint64_t mask = 0; mask < (uint64_t(1) << r); ++mask) {
        Point p(r);
        for (size_t i = 0; i < r; ++i) p[i] = (mask >> i) & 1;
        pts.push_back(std::move(p));
    }
    return GridSet(r, std::move(pts));
}

std::string GridSet::to_string() const {
    std::string s;
    for (const Point& p : pts_) {
        if (!s.empty()) s += ",";
        s += "(";
        for (size_t i = 0; i < p.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(p[i]);
        }
        s += ")";
    }
    return s;
}

GridSet GridSet::parse(const std::string& text) {
    std::vector<Point> pts;
    size_t pos = 0;
    while (pos < text.size()) {
        const size_t open = text.find('(', pos);
        if (open == std::string::npos) break;
        const size_t close = text.find(')', open);
        if (close == std::string::npos)
            throw std::invalid_argument("unbalanced grid tuple: '" + text + "'");
        Point p;
        size_t cur = open + 1;
        while (cur < close) {
            size_t comma = text.find(',', cur);
            if (comma == std::string::npos || comma > close) comma = close;
            int64_t v = 0;
            auto [ptr, ec] = std::from_chars(text.data() + cur, text.data() + comma, v);
            if (ec != std::errc() || ptr != text.data() + comma)
                throw std::invalid_argument("invalid grid coordinate in '" + text + "'");
            p.push_back(v);
            cur = comma + 1;
        }
        pts.push_back(std::move(p));
        pos = close + 1;
    }
    if (pts.empty()) throw std::invalid_argument("empty grid set literal");
    const size_t dim = pts.front().size();
    return GridSet(dim, std::move(pts));
}

namespace setops {

IntSet dilate(const IntSet& a, uint64_t factor) {
    if (factor == 0) throw std::invalid_argument("dilate: factor must be positive");
    std::vector<uint64_t> out;
    out.reserve(a.size());
    for (uint64_t v : a.elements()) out.push_back(detail::checked_mul(v, factor));
    return IntSet(std::move(out));
}

IntSet symdiff(const std::vector<IntSet>& sets) {
    Gf2Poly acc;
    for (const IntSet& s : sets) acc = add(acc, s.to_poly());
    return IntSet::from_poly(acc);
}

IntSet oplus(const IntSet& a, const IntSet& b) {
    return IntSet::from_poly(mul(a.to_poly(), b.to_poly()));
}

GridSet oplus_grid(const GridSet& a, const GridSet& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("oplus_grid: dimension mismatch");
    std::map<GridSet::Point, uint64_t> counts;
    for (const auto& p : a.points())
        for (const auto& q : b.points()) {
            GridSet::Point s(p.size());
            for (size_t i = 0; i < p.size(); ++i) s[i] = p[i] + q[i];
            ++counts[s];
        }
    std::vector<GridSet::Point> out;
    for (const auto& [pt, c] : counts)
        if (c & 1) out.push_back(pt);
    return GridSet(a.dimension(), std::move(out));
}

IntSet nabla(const IntSet& a, const IntSet& b) {
    for (uint64_t v : a.elements())
        if (v == 0) throw std::invalid_argument("nabla: elements must be positive");
    for (uint64_t v : b.elements())
        if (v == 0) throw std::invalid_argument("nabla: elements must be positive");
    std::vector<IntSet> dilations;
    dilations.reserve(a.size());
    for (uint64_t v : a.elements()) dilations.push_back(dilate(b, v));
    return symdiff(dilations);
}

namespace {

IntSet collect_odd(std::unordered_set<uint64_t>& odd) {
    return IntSet({odd.begin(), odd.end()});
}

void toggle(std::unordered_set<uint64_t>& odd, uint64_t v) {
    auto [it, inserted] = odd.insert(v);
    if (!inserted) odd.erase(it);
}

}  // namespace

IntSet symdiff_counting(const std::vector<IntSet>& sets) {
    std::unordered_set<uint64_t> odd;
    for (const IntSet& s : sets)
        for (uint64_t v : s.elements()) toggle(odd, v);
    return collect_odd(odd);
}

IntSet oplus_counting(const IntSet& a, const IntSet& b) {
    std::unordered_set<uint64_t> odd;
    for (uint64_t x : a.elements())
        for (uint64_t y : b.elements()) toggle(odd, detail::checked_add(x, y));
    return collect_odd(odd);
}

IntSet nabla_counting(const IntSet& a, const IntSet& b) {
    for (uint64_t v : a.elements())
        if (v == 0) throw std::invalid_argument("nabla: elements must be positive");
    for (uint64_t v : b.elements())
        if (v == 0) throw std::invalid_argument("nabla: elements must be positive");
    std::unordered_set<uint64_t> odd;
    for (uint64_t x : a.elements())
        for (uint64_t y : b.elements()) toggle(odd, detail::checked_mul(x, y));
    return collect_odd(odd);
}

}  // namespace setops

}  // namespace oddsum
