#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oddsum {

/// Polynomial over GF(2) identified with its support: the set of exponents
/// whose coefficient is 1. Encodes a finite set S of nonnegative integers as
/// sum_{s in S} x^s, so that polynomial addition is symmetric difference and
/// polynomial multiplication is the odd-representation sumset.
///
/// Values are immutable after construction and safe to share across threads.
/// Internally either a sorted exponent list (sets, sparse data) or a bit
/// array (products over a narrow exponent span); two polynomials compare
/// equal iff their supports are equal, regardless of representation.
///
/// Exponents are unsigned 64-bit. Any operation that would produce an
/// exponent outside that range throws std::overflow_error instead of
/// wrapping.
class Gf2Poly {
public:
    /// The zero polynomial (empty support).
    Gf2Poly() = default;

    /// p_S for the given support; duplicates collapse (set semantics).
    static Gf2Poly from_set(std::vector<uint64_t> exponents);

    /// 1 + x^a + x^{2a} + ... + x^{(n-1)a}.
    static Gf2Poly geometric(uint64_t a, uint64_t n);

    /// (1+y)^e over GF(2): support = all subset sums of the binary digits
    /// of e (Lucas). Support size is 2^popcount(e); throws
    /// std::overflow_error when that is too large to materialize.
    static Gf2Poly pow_one_plus_y(uint64_t e);

    bool is_zero() const;
    uint64_t support_size() const;
    /// Parity of the support size, i.e. the value of the polynomial at x=1.
    int eval_at_one() const { return static_cast<int>(support_size() & 1); }
    bool contains(uint64_t exponent) const;
    /// Largest exponent; polynomial must be nonzero.
    uint64_t degree() const;
    uint64_t min_exponent() const;

    /// Support as an ascending exponent list.
    std::vector<uint64_t> support() const;

    /// Substitute x -> x^d: every exponent is multiplied by d. Support size
    /// is unchanged.
    Gf2Poly inflate(uint64_t d) const;

    /// Split by exponent residue mod t: returns [q_0,...,q_{t-1}] with
    /// p(x) = sum_i x^i q_i(x^t). Each exponent e contributes e/t to
    /// q_{e mod t}.
    std::vector<Gf2Poly> residue_split(uint64_t t) const;

    /// "x^e + x^f + ..." with exponents ascending, "0" for zero.
    std::string to_string() const;

    friend Gf2Poly add(const Gf2Poly& p, const Gf2Poly& q);
    friend Gf2Poly mul(const Gf2Poly& p, const Gf2Poly& q);
    friend bool operator==(const Gf2Poly& p, const Gf2Poly& q);

private:
    // Sparse: exps_ sorted ascending, words_ empty.
    // Dense: words_ nonempty, bit b of words_[w] is exponent
    // base_ + 64*w + b; base_ is a multiple of 64, first and last words
    // are nonzero.
    std::vector<uint64_t> exps_;
    std::vector<uint64_t> words_;
    uint64_t base_ = 0;

    bool dense() const { return !words_.empty(); }
    template <typename Fn> void for_each(Fn&& fn) const;
    static Gf2Poly from_dense(uint64_t base, std::vector<uint64_t> words);
};

/// Coefficientwise XOR: p_{S} + p_{T} = p_{S symdiff T}.
Gf2Poly add(const Gf2Poly& p, const Gf2Poly& q);

/// Carry-less product with mod-2 coefficients: the support of the result is
/// the set of sums s+t (s in supp p, t in supp q) realized an odd number of
/// ways. Narrow-span products run on a dense word kernel (shift-XOR, or
/// Karatsuba for large balanced operands); wide-span products fall back to
/// hash-parity accumulation.
Gf2Poly mul(const Gf2Poly& p, const Gf2Poly& q);

bool operator==(const Gf2Poly& p, const Gf2Poly& q);
inline bool operator!=(const Gf2Poly& p, const Gf2Poly& q) { return !(p == q); }

namespace detail {
uint64_t checked_add(uint64_t a, uint64_t b);
uint64_t checked_mul(uint64_t a, uint64_t b);
}  // namespace detail

}  // namespace oddsum
