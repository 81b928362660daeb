#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oddsum/gf2poly.hpp"

namespace oddsum::theorem {

using u128 = unsigned __int128;

/// Input to the sumset lower bound: checks that
///   | V (+) (+)_{i=1..k} {a_i, 2 a_i, ..., n a_i} |  >=  n
/// where (+) is the odd-representation sumset. V defaults to {0}, which is
/// the plain k-fold sumset statement; a general V must have odd size.
struct Instance {
    uint64_t n;
    std::vector<uint64_t> a;
    std::vector<uint64_t> v;

    Instance(uint64_t n_, std::vector<uint64_t> a_, std::vector<uint64_t> v_ = {0});

    size_t k() const { return a.size(); }
};

/// Machine-checkable witness that the product polynomial of an instance has
/// at least n odd coefficients, organized by exponent residue classes mod t
/// (n = 2^alpha * t, t odd): each of the t classes lists at least 2^alpha
/// exponents carrying coefficient 1.
///
/// The witnessed polynomial is the canonical normalized product derived from
/// the instance (see make_certificate): the a_i are divided by g = gcd(a),
/// and V is replaced by the residue class of V mod g with odd cardinality
/// (rebased to start at 0). Both reductions preserve a bijection onto a
/// subset of the original product's support, so the listed total carries
/// over to the original instance.
struct Certificate {
    uint64_t g = 1;            // gcd extracted from the a list
    uint64_t alpha = 0;        // n = 2^alpha * t
    uint64_t t = 1;            // odd part of n
    std::vector<uint32_t> j_bits;  // bit positions of (2^alpha-1) * sum 2^{v2(a_i)}
    std::vector<std::vector<uint64_t>> residues;  // residues[i]: exponents == i (mod t)
    uint64_t total = 0;        // full support size of the witnessed product
    bool truncated = false;    // classes cut to exactly 2^alpha entries each
};

struct VerifyResult {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

struct Report {
    uint64_t support_size;
    uint64_t n;
    bool pass;
};

/// Divides the a list by its gcd; returns the reduced instance and the gcd.
/// The geometric-factor product of the reduced list has the same support
/// size as the original (substitute x -> x^g).
std::pair<Instance, uint64_t> normalize(const Instance& inst);

/// n = 2^alpha * t with t odd.
std::pair<uint64_t, uint64_t> split_n(uint64_t n);

/// p_V(x) * prod_i (1 + x^{a_i} + ... + x^{(n-1) a_i}). Its support size
/// equals the odd-sumset cardinality of the instance.
Gf2Poly build_p(const Instance& inst);

/// The t-term and 2^alpha-term halves of the geometric factors:
///   q = prod_i (1 + x^{a_i} + ... + x^{(t-1) a_i})
///   r = prod_i (1 + x^{t a_i} + ... + x^{(2^alpha - 1) t a_i})
/// so that q*r equals build_p with V = {0}.
std::pair<Gf2Poly, Gf2Poly> build_qr(const Instance& inst);

/// Term counts of the expanded q by exponent residue mod t, before GF(2)
/// cancellation. With gcd(a) = 1 the table is the constant t^(k-1). Rejects
/// instances where t^k exceeds 128 bits.
std::vector<u128> residue_counts(const Instance& inst);

/// Bit positions of E = (2^alpha - 1) * sum_i 2^{v2(a_i)}; always at least
/// alpha positions.
std::vector<uint32_t> exponent_J(uint64_t alpha, const std::vector<uint64_t>& a);

/// Nonnegative integers below bound whose base-2 digits avoid every bit in
/// j_bits. Together with the subset sums of the j_bits powers these tile
/// the nonnegative integers by direct sum.
std::vector<uint64_t> tiling_complement(const std::vector<uint32_t>& j_bits,
                                        uint64_t bound);

/// The unique s with m = s + r, s a subset sum of the j_bits powers and r
/// avoiding them: m masked to the j_bits positions.
uint64_t color_of(uint64_t m, const std::vector<uint32_t>& j_bits);

Certificate make_certificate(const Instance& inst);

/// Recomputes the witnessed product from scratch and audits every field of
/// the certificate against it. Failures are reported, not thrown.
VerifyResult verify_certificate(const Instance& inst, const Certificate& cert);

/// Support size of build_p against n; V must be {0}.
Report verify_thm1(const Instance& inst);

/// Support size of build_p against n for odd-size V.
Report verify_thm2(const Instance& inst);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

std::string u128_to_string(u128 v);

}  // namespace oddsum::theorem
