#include "oddsum/theorem.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oddsum::theorem {

using detail::checked_add;
using detail::checked_mul;

Instance::Instance(uint64_t n_, std::vector<uint64_t> a_, std::vector<uint64_t> v_)
    : n(n_), a(std::move(a_)), v(std::move(v_)) {
    if (n == 0) throw std::invalid_argument("instance: n must be positive");
    if (a.empty()) throw std::invalid_argument("instance: need at least one a_i");
    for (uint64_t ai : a)
        if (ai == 0) throw std::invalid_argument("instance: a_i must be positive");
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.empty()) throw std::invalid_argument("instance: V must be nonempty");
    if (v.size() % 2 == 0)
        throw std::invalid_argument("instance: V must have odd size");
}

std::pair<Instance, uint64_t> normalize(const Instance& inst) {
    uint64_t g = 0;
    for (uint64_t ai : inst.a) g = std::gcd(g, ai);
    std::vector<uint64_t> reduced;
    reduced.reserve(inst.a.size());
    for (uint64_t ai : inst.a) reduced.push_back(ai / g);
    return {Instance(inst.n, std::move(reduced), inst.v), g};
}

std::pair<uint64_t, uint64_t> split_n(uint64_t n) {
    if (n == 0) throw std::invalid_argument("split_n: n must be positive");
    const uint64_t alpha = std::countr_zero(n);
    return {alpha, n >> alpha};
}

Gf2Poly build_p(const Instance& inst) {
    Gf2Poly p = Gf2Poly::from_set(inst.v);
    for (uint64_t ai : inst.a) p = mul(p, Gf2Poly::geometric(ai, inst.n));
    return p;
}

std::pair<Gf2Poly, Gf2Poly> build_qr(const Instance& inst) {
    const auto [alpha, t] = split_n(inst.n);
    Gf2Poly q = Gf2Poly::from_set({0});
    Gf2Poly r = Gf2Poly::from_set({0});
    for (uint64_t ai : inst.a) {
        q = mul(q, Gf2Poly::geometric(ai, t));
        r = mul(r, Gf2Poly::geometric(checked_mul(t, ai), uint64_t(1) << alpha));
    }
    return {std::move(q), std::move(r)};
}

std::vector<u128> residue_counts(const Instance& inst) {
    const auto [alpha, t] = split_n(inst.n);
    // t^k must fit the accumulator: these are true term counts.
    u128 bound = 1;
    for (size_t i = 0; i < inst.a.size(); ++i) {
        if (bound > ~u128(0) / t)
            throw std::overflow_error("residue_counts: t^k exceeds 128 bits");
        bound *= t;
    }
    std::vector<u128> counts(t, 0);
    counts[0] = 1;
    for (uint64_t ai : inst.a) {
        // The factor contributes exponents j*ai mod t, j = 0..t-1: the
        // subgroup generated by gcd(ai, t), each element hit gcd(ai, t)
        // times. Convolution therefore spreads each coset sum uniformly.
        const uint64_t d = std::gcd(ai % t, t);
        std::vector<u128> coset_sum(d, 0);
        for (uint64_t b = 0; b < t; ++b) coset_sum[b % d] += counts[b];
        for (uint64_t b = 0; b < t; ++b) counts[b] = d * coset_sum[b % d];
    }
    return counts;
}

std::vector<uint32_t> exponent_J(uint64_t alpha, const std::vector<uint64_t>& a) {
    if (alpha >= 64)
        throw std::overflow_error("exponent_J: 2^alpha exceeds 64 bits");
    uint64_t sum = 0;
    for (uint64_t ai : a) {
        if (ai == 0) throw std::invalid_argument("exponent_J: a_i must be positive");
        sum = checked_add(sum, uint64_t(1) << std::countr_zero(ai));
    }
    const uint64_t e = alpha == 0 ? 0 : checked_mul((uint64_t(1) << alpha) - 1, sum);
    std::vector<uint32_t> bits;
    for (uint32_t b = 0; b < 64; ++b)
        if (e >> b & 1) bits.push_back(b);
    return bits;
}

namespace {

uint64_t j_mask(const std::vector<uint32_t>& j_bits) {
    uint64_t mask = 0;
    for (uint32_t b : j_bits) {
        if (b >= 64) throw std::invalid_argument("bit position out of range");
        mask |= uint64_t(1) << b;
    }
    return mask;
}

}  // namespace

std::vector<uint64_t> tiling_complement(const std::vector<uint32_t>& j_bits,
                                        uint64_t bound) {
    const uint64_t mask = j_mask(j_bits);
    std::vector<uint64_t> out;
    for (uint64_t m = 0; m < bound; ++m)
        if ((m & mask) == 0) out.push_back(m);
    return out;
}

uint64_t color_of(uint64_t m, const std::vector<uint32_t>& j_bits) {
    return m & j_mask(j_bits);
}

namespace {

// The certificate witnesses the product of a reduced instance: a_i / g, and
// the odd-cardinality residue class of V mod g shifted back to the origin.
// Both steps are support-size-preserving injections into the original
// product's support, and they restore the per-residue uniformity that the
// class decomposition needs.
Instance witnessed_instance(const Instance& inst, uint64_t& g_out) {
    auto [norm, g] = normalize(inst);
    g_out = g;
    if (g == 1) return norm;
    std::map<uint64_t, std::vector<uint64_t>> classes;
    for (uint64_t v : inst.v) classes[v % g].push_back(v);
    for (auto& [c, members] : classes) {
        if (members.size() % 2 == 0) continue;
        std::vector<uint64_t> reduced;
        reduced.reserve(members.size());
        for (uint64_t v : members) reduced.push_back((v - c) / g);
        return Instance(inst.n, norm.a, std::move(reduced));
    }
    // |V| odd forces an odd class.
    throw std::logic_error("witnessed_instance: no odd V class");
}

constexpr uint64_t kFullCertificateLimit = uint64_t(1) << 16;

}  // namespace

Certificate make_certificate(const Instance& inst) {
    Certificate cert;
    const Instance witness = witnessed_instance(inst, cert.g);
    const auto [alpha, t] = split_n(inst.n);
    cert.alpha = alpha;
    cert.t = t;
    cert.j_bits = exponent_J(alpha, witness.a);

    const Gf2Poly p = build_p(witness);
    cert.residues.assign(t, {});
    uint64_t total = 0;
    for (uint64_t e : p.support()) {
        cert.residues[e % t].push_back(e);
        ++total;
    }
    cert.total = total;

    const uint64_t per_class = uint64_t(1) << alpha;
    for (uint64_t i = 0; i < t; ++i) {
        if (cert.residues[i].size() < per_class)
            throw std::logic_error(
                "make_certificate: residue class " + std::to_string(i) +
                " has fewer than 2^alpha odd exponents; this would falsify "
                "the bound");
    }
    if (total > kFullCertificateLimit) {
        cert.truncated = true;
        for (auto& cls : cert.residues) cls.resize(per_class);
    }
    return cert;
}

VerifyResult verify_certificate(const Instance& inst, const Certificate& cert) {
    auto fail = [](std::string reason) {
        return VerifyResult{false, std::move(reason)};
    };

    const auto [alpha, t] = split_n(inst.n);
    if (cert.alpha != alpha || cert.t != t)
        return fail("alpha/t do not match the 2-adic split of n");
    if (cert.t % 2 == 0) return fail("t is not odd");

    uint64_t g = 0;
    const Instance witness = witnessed_instance(inst, g);
    if (cert.g != g) return fail("g does not match gcd of the a list");
    if (cert.j_bits != exponent_J(alpha, witness.a))
        return fail("J does not match the recomputed bit set");
    if (cert.j_bits.size() < alpha) return fail("|J| < alpha");

    if (cert.residues.size() != t) return fail("wrong number of residue classes");
    const uint64_t per_class = uint64_t(1) << alpha;

    const Gf2Poly p = build_p(witness);
    if (cert.total != p.support_size())
        return fail("total does not match the recomputed support size");
    if (cert.total < inst.n) return fail("total below n");

    uint64_t listed = 0;
    for (uint64_t i = 0; i < t; ++i) {
        const auto& cls = cert.residues[i];
        if (cls.size() < per_class)
            return fail("residue class " + std::to_string(i) +
                        " lists fewer than 2^alpha exponents");
        uint64_t prev = 0;
        bool first = true;
        for (uint64_t e : cls) {
            if (!first && e <= prev)
                return fail("residue class " + std::to_string(i) +
                            " is not strictly ascending");
            if (e % t != i)
                return fail("exponent " + std::to_string(e) +
                            " is not congruent to its class index");
            if (!p.contains(e))
                return fail("exponent " + std::to_string(e) +
                            " has even multiplicity in the product");
            prev = e;
            first = false;
        }
        listed += cls.size();
    }
    if (cert.truncated) {
        if (listed < inst.n) return fail("truncated listing smaller than n");
    } else {
        if (listed != cert.total)
            return fail("untruncated certificate does not list the full support");
    }
    return {};
}

Report verify_thm1(const Instance& inst) {
    if (inst.v != std::vector<uint64_t>{0})
        throw std::invalid_argument("verify_thm1: V must be {0}");
    const uint64_t size = build_p(inst).support_size();
    return {size, inst.n, size >= inst.n};
}

Report verify_thm2(const Instance& inst) {
    const uint64_t size = build_p(inst).support_size();
    return {size, inst.n, size >= inst.n};
}

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s += char('0' + int(v % 10));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace oddsum::theorem
