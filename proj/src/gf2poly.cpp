#include "oddsum/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace oddsum {

namespace detail {

uint64_t checked_add(uint64_t a, uint64_t b) {
    uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("exponent addition overflows 64 bits");
    return r;
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
    uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("exponent multiplication overflows 64 bits");
    return r;
}

}  // namespace detail

using detail::checked_add;
using detail::checked_mul;

namespace {

// Products with a result span below this many bits run on the dense kernel.
constexpr uint64_t kDenseSpanBits = uint64_t(1) << 26;
// Dense products spanning more bits than this consider the Karatsuba route.
constexpr uint64_t kKaratsubaSpanBits = uint64_t(1) << 16;
constexpr size_t kKaraBaseWords = 32;

// dst[0..na+nb) ^= a(x)*b(x), schoolbook with a 4-bit window table of b.
void clmul_basecase(uint64_t* dst, const uint64_t* a, size_t na,
                    const uint64_t* b, size_t nb) {
    if (na == 0 || nb == 0) return;
    const size_t tw = nb + 1;
    std::vector<uint64_t> tbl(16 * tw, 0);
    auto T = [&](unsigned v) { return tbl.data() + v * tw; };
    std::copy(b, b + nb, T(1));
    for (unsigned v = 2; v < 16; v += 2) {
        const uint64_t* half = T(v / 2);
        uint64_t* even = T(v);
        uint64_t carry = 0;
        for (size_t w = 0; w < tw; ++w) {
            even[w] = (half[w] << 1) | carry;
            carry = half[w] >> 63;
        }
        uint64_t* odd = T(v + 1);
        const uint64_t* one = T(1);
        for (size_t w = 0; w < tw; ++w) odd[w] = even[w] ^ one[w];
    }
    for (size_t i = 0; i < na; ++i) {
        const uint64_t aw = a[i];
        if (aw == 0) continue;
        uint64_t* out = dst + i;
        for (unsigned s = 0; s < 64; s += 4) {
            const unsigned v = (aw >> s) & 0xF;
            if (v == 0) continue;
            const uint64_t* t = T(v);
            if (s == 0) {
                for (size_t w = 0; w < tw; ++w) out[w] ^= t[w];
            } else {
                uint64_t carry = 0;
                for (size_t w = 0; w < tw; ++w) {
                    out[w] ^= (t[w] << s) | carry;
                    carry = t[w] >> (64 - s);
                }
                // The top table word holds at most 3 bits, so with s >= 4
                // nothing is carried past out[tw-1].
            }
        }
    }
}

// dst[0..2n) ^= a*b for equal-length operands; dst regions written into must
// be zero on entry. Splits at h = ceil(n/2).
void clmul_recursive(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    if (n <= kKaraBaseWords) {
        clmul_basecase(dst, a, n, b, n);
        return;
    }
    const size_t h = (n + 1) / 2;
    const size_t nh = n - h;
    clmul_recursive(dst, a, b, h);
    clmul_recursive(dst + 2 * h, a + h, b + h, nh);
    std::vector<uint64_t> sa(h, 0), sb(h, 0), z1(2 * h, 0);
    std::copy(a, a + h, sa.begin());
    std::copy(b, b + h, sb.begin());
    for (size_t i = 0; i < nh; ++i) {
        sa[i] ^= a[h + i];
        sb[i] ^= b[h + i];
    }
    clmul_recursive(z1.data(), sa.data(), sb.data(), h);
    for (size_t i = 0; i < 2 * h; ++i) z1[i] ^= dst[i];
    for (size_t i = 0; i < 2 * nh; ++i) z1[i] ^= dst[2 * h + i];
    for (size_t i = 0; i < 2 * h; ++i) dst[h + i] ^= z1[i];
}

std::vector<uint64_t> clmul_karatsuba(const std::vector<uint64_t>& a,
                                      const std::vector<uint64_t>& b) {
    const size_t n = std::max(a.size(), b.size());
    std::vector<uint64_t> pa(n, 0), pb(n, 0), out(2 * n, 0);
    std::copy(a.begin(), a.end(), pa.begin());
    std::copy(b.begin(), b.end(), pb.begin());
    clmul_recursive(out.data(), pa.data(), pb.data(), n);
    return out;
}

// acc ^= src shifted left by bitoff bits.
void xor_shifted(std::vector<uint64_t>& acc, uint64_t bitoff,
                 const std::vector<uint64_t>& src) {
    const size_t woff = bitoff / 64;
    const unsigned s = bitoff % 64;
    if (s == 0) {
        for (size_t i = 0; i < src.size(); ++i) acc[woff + i] ^= src[i];
    } else {
        uint64_t carry = 0;
        for (size_t i = 0; i < src.size(); ++i) {
            acc[woff + i] ^= (src[i] << s) | carry;
            carry = src[i] >> (64 - s);
        }
        if (carry) acc[woff + src.size()] ^= carry;
    }
}

double karatsuba_cost_estimate(size_t words) {
    // Basecase of kKaraBaseWords words costs about 16*w^2 word ops.
    double leaves = std::pow(double(words) / kKaraBaseWords, 1.585);
    return 16.0 * kKaraBaseWords * kKaraBaseWords * std::max(leaves, 1.0);
}

}  // namespace

Gf2Poly Gf2Poly::from_set(std::vector<uint64_t> exponents) {
    std::sort(exponents.begin(), exponents.end());
    exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
    Gf2Poly p;
    p.exps_ = std::move(exponents);
    return p;
}

Gf2Poly Gf2Poly::from_dense(uint64_t base, std::vector<uint64_t> words) {
    size_t first = 0;
    while (first < words.size() && words[first] == 0) ++first;
    if (first == words.size()) return {};
    size_t last = words.size();
    while (words[last - 1] == 0) --last;
    words.erase(words.begin() + last, words.end());
    words.erase(words.begin(), words.begin() + first);
    Gf2Poly p;
    p.base_ = base + 64 * first;
    p.words_ = std::move(words);
    return p;
}

Gf2Poly Gf2Poly::geometric(uint64_t a, uint64_t n) {
    if (a == 0 || n == 0)
        throw std::invalid_argument("geometric: a and n must be positive");
    checked_mul(a, n - 1);
    std::vector<uint64_t> e(n);
    for (uint64_t i = 0; i < n; ++i) e[i] = i * a;
    Gf2Poly p;
    p.exps_ = std::move(e);
    return p;
}

Gf2Poly Gf2Poly::pow_one_plus_y(uint64_t e) {
    const int bits = std::popcount(e);
    if (bits > 24)
        throw std::overflow_error("pow_one_plus_y: support too large to materialize");
    std::vector<uint64_t> sums{0};
    sums.reserve(size_t(1) << bits);
    for (unsigned b = 0; b < 64; ++b) {
        if (!(e >> b & 1)) continue;
        const uint64_t p2 = uint64_t(1) << b;
        const size_t half = sums.size();
        // p2 exceeds every sum of lower bits, so the two halves stay disjoint
        // and the concatenation stays sorted.
        for (size_t i = 0; i < half; ++i) sums.push_back(sums[i] + p2);
    }
    Gf2Poly p;
    p.exps_ = std::move(sums);
    return p;
}

template <typename Fn>
void Gf2Poly::for_each(Fn&& fn) const {
    if (dense()) {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t word = words_[w];
            while (word) {
                const unsigned b = std::countr_zero(word);
                fn(base_ + 64 * w + b);
                word &= word - 1;
            }
        }
    } else {
        for (uint64_t e : exps_) fn(e);
    }
}

bool Gf2Poly::is_zero() const { return exps_.empty() && words_.empty(); }

uint64_t Gf2Poly::support_size() const {
    if (!dense()) return exps_.size();
    uint64_t n = 0;
    for (uint64_t w : words_) n += std::popcount(w);
    return n;
}

bool Gf2Poly::contains(uint64_t exponent) const {
    if (dense()) {
        if (exponent < base_) return false;
        const uint64_t off = exponent - base_;
        if (off / 64 >= words_.size()) return false;
        return words_[off / 64] >> (off % 64) & 1;
    }
    return std::binary_search(exps_.begin(), exps_.end(), exponent);
}

uint64_t Gf2Poly::degree() const {
    if (is_zero()) throw std::logic_error("degree of zero polynomial");
    if (!dense()) return exps_.back();
    const uint64_t top = words_.back();
    return base_ + 64 * (words_.size() - 1) + (63 - std::countl_zero(top));
}

uint64_t Gf2Poly::min_exponent() const {
    if (is_zero()) throw std::logic_error("min exponent of zero polynomial");
    if (!dense()) return exps_.front();
    return base_ + std::countr_zero(words_.front());
}

std::vector<uint64_t> Gf2Poly::support() const {
    if (!dense()) return exps_;
    std::vector<uint64_t> out;
    out.reserve(support_size());
    for_each([&](uint64_t e) { out.push_back(e); });
    return out;
}

Gf2Poly Gf2Poly::inflate(uint64_t d) const {
    if (d == 0) throw std::invalid_argument("inflate: factor must be positive");
    if (d == 1 || is_zero()) return *this;
    std::vector<uint64_t> e;
    e.reserve(support_size());
    for_each([&](uint64_t x) { e.push_back(checked_mul(x, d)); });
    Gf2Poly p;
    p.exps_ = std::move(e);
    return p;
}

std::vector<Gf2Poly> Gf2Poly::residue_split(uint64_t t) const {
    if (t == 0) throw std::invalid_argument("residue_split: t must be positive");
    std::vector<std::vector<uint64_t>> buckets(t);
    for_each([&](uint64_t e) { buckets[e % t].push_back(e / t); });
    std::vector<Gf2Poly> out(t);
    for (uint64_t i = 0; i < t; ++i) out[i].exps_ = std::move(buckets[i]);
    return out;
}

std::string Gf2Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for_each([&](uint64_t e) {
        if (!s.empty()) s += "+";
        if (e == 0)
            s += "1";
        else if (e == 1)
            s += "x";
        else
            s += "x^" + std::to_string(e);
    });
    return s;
}

Gf2Poly add(const Gf2Poly& p, const Gf2Poly& q) {
    if (p.is_zero()) return q;
    if (q.is_zero()) return p;
    if (p.dense() && q.dense()) {
        const uint64_t base = std::min(p.base_, q.base_);
        const uint64_t end = std::max(p.base_ + 64 * p.words_.size(),
                                      q.base_ + 64 * q.words_.size());
        if (end - base <= kDenseSpanBits) {
            std::vector<uint64_t> words((end - base) / 64, 0);
            for (size_t i = 0; i < p.words_.size(); ++i)
                words[(p.base_ - base) / 64 + i] ^= p.words_[i];
            for (size_t i = 0; i < q.words_.size(); ++i)
                words[(q.base_ - base) / 64 + i] ^= q.words_[i];
            return Gf2Poly::from_dense(base, std::move(words));
        }
    }
    const std::vector<uint64_t> a = p.support();
    const std::vector<uint64_t> b = q.support();
    std::vector<uint64_t> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    Gf2Poly r;
    r.exps_ = std::move(out);
    return r;
}

namespace {

// Word image of a support list relative to base = min_exponent & ~63.
std::pair<uint64_t, std::vector<uint64_t>> densify(const std::vector<uint64_t>& supp,
                                                   uint64_t deg) {
    const uint64_t base = supp.front() & ~uint64_t(63);
    std::vector<uint64_t> words((deg - base) / 64 + 1, 0);
    for (uint64_t e : supp) words[(e - base) / 64] |= uint64_t(1) << ((e - base) % 64);
    return {base, std::move(words)};
}

}  // namespace

Gf2Poly mul(const Gf2Poly& p, const Gf2Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    const uint64_t lo = checked_add(p.min_exponent(), q.min_exponent());
    const uint64_t hi = checked_add(p.degree(), q.degree());

    if (hi - lo + 1 >= kDenseSpanBits) {
        // Wide span: hash-parity accumulation over exponent pairs.
        const std::vector<uint64_t> a = p.support();
        const std::vector<uint64_t> b = q.support();
        std::unordered_set<uint64_t> odd;
        odd.reserve(std::min<size_t>(a.size() * b.size() / 2 + 1, size_t(1) << 22));
        for (uint64_t e : a)
            for (uint64_t f : b) {
                const uint64_t s = checked_add(e, f);
                auto [it, inserted] = odd.insert(s);
                if (!inserted) odd.erase(it);
            }
        return Gf2Poly::from_set({odd.begin(), odd.end()});
    }

    // Dense kernel. Operand spans are bounded by the result span, so both
    // word images are small.
    std::vector<uint64_t> wa_store, wb_store;
    uint64_t abase = p.base_, bbase = q.base_;
    if (!p.dense()) std::tie(abase, wa_store) = densify(p.exps_, p.degree());
    if (!q.dense()) std::tie(bbase, wb_store) = densify(q.exps_, q.degree());
    const std::vector<uint64_t>& wa = p.dense() ? p.words_ : wa_store;
    const std::vector<uint64_t>& wb = q.dense() ? q.words_ : wb_store;

    const bool a_sparser = p.support_size() <= q.support_size();
    const Gf2Poly& sparser = a_sparser ? p : q;
    const std::vector<uint64_t>& other = a_sparser ? wb : wa;
    const uint64_t obase = a_sparser ? bbase : abase;

    const double term_cost =
        double(sparser.support_size()) * double(other.size() + 1);
    if (hi - lo + 1 > kKaratsubaSpanBits &&
        karatsuba_cost_estimate(std::max(wa.size(), wb.size())) < term_cost) {
        std::vector<uint64_t> out = clmul_karatsuba(wa, wb);
        return Gf2Poly::from_dense(abase + bbase, std::move(out));
    }

    const uint64_t accbase = (sparser.min_exponent() + obase) & ~uint64_t(63);
    std::vector<uint64_t> acc((hi - accbase) / 64 + 1, 0);
    sparser.for_each([&](uint64_t e) { xor_shifted(acc, e + obase - accbase, other); });
    return Gf2Poly::from_dense(accbase, std::move(acc));
}

bool operator==(const Gf2Poly& p, const Gf2Poly& q) {
    if (p.dense() && q.dense())
        return p.base_ == q.base_ && p.words_ == q.words_;
    if (!p.dense() && !q.dense()) return p.exps_ == q.exps_;
    if (p.support_size() != q.support_size()) return false;
    return p.support() == q.support();
}

}  // namespace oddsum
