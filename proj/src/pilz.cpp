#include "oddsum/pilz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "oddsum/gf2poly.hpp"

namespace oddsum::pilz {

std::vector<uint64_t> primes_upto(uint64_t n) {
    if (n == 0) throw std::invalid_argument("primes_upto: n must be positive");
    std::vector<bool> composite(n + 1, false);
    std::vector<uint64_t> primes;
    for (uint64_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (uint64_t m = p * p; m <= n; m += p) composite[m] = true;
    }
    return primes;
}

GridSet::Point exponent_vector(uint64_t k, const std::vector<uint64_t>& primes) {
    if (k == 0) throw std::invalid_argument("exponent_vector: k must be positive");
    GridSet::Point coords(primes.size(), 0);
    for (size_t i = 0; i < primes.size(); ++i)
        while (k % primes[i] == 0) {
            k /= primes[i];
            ++coords[i];
        }
    if (k != 1)
        throw std::invalid_argument(
            "exponent_vector: leftover factor " + std::to_string(k) +
            " outside the prime list");
    return coords;
}

uint64_t from_exponent_vector(const GridSet::Point& coords,
                              const std::vector<uint64_t>& primes) {
    if (coords.size() != primes.size())
        throw std::invalid_argument("from_exponent_vector: dimension mismatch");
    uint64_t k = 1;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < 0)
            throw std::invalid_argument("from_exponent_vector: negative valuation");
        for (int64_t j = 0; j < coords[i]; ++j) k = detail::checked_mul(k, primes[i]);
    }
    return k;
}

GridSet build_Sn(uint64_t n) {
    const std::vector<uint64_t> primes = primes_upto(n);
    std::vector<GridSet::Point> pts;
    pts.reserve(n);
    for (uint64_t k = 1; k <= n; ++k) pts.push_back(exponent_vector(k, primes));
    return GridSet(primes.size(), std::move(pts));
}

uint64_t pilz_size(const IntSet& a, uint64_t n) {
    if (n == 0) throw std::invalid_argument("pilz_size: n must be positive");
    if (a.empty()) throw std::invalid_argument("pilz_size: A must be nonempty");
    if (a.elements().front() == 0)
        throw std::invalid_argument("pilz_size: elements must be positive");
    const Gf2Poly pa = a.to_poly();
    Gf2Poly acc;
    for (uint64_t i = 1; i <= n; ++i) acc = add(acc, pa.inflate(i));
    return acc.support_size();
}

double lower_bound_display(uint64_t n) {
    if (n < 2) throw std::invalid_argument("lower_bound_display: n must be >= 2");
    return double(n) / std::pow(std::log(double(n)), 0.2223);
}

namespace {

// Lexicographic successor over nonempty subsets of [1, umax] with at most
// max_size elements: [1], [1,2], ..., [1,2,...], [1,3], ..., [umax].
class SubsetEnumerator {
public:
    SubsetEnumerator(uint64_t umax, uint64_t max_size, std::vector<uint64_t> start_after)
        : umax_(umax), max_size_(max_size), cur_(std::move(start_after)) {
        started_ = !cur_.empty();
    }

    bool next() {
        if (!started_) {
            started_ = true;
            if (umax_ >= 1 && max_size_ >= 1) {
                cur_ = {1};
                return true;
            }
            return false;
        }
        if (cur_.size() < max_size_ && cur_.back() < umax_) {
            cur_.push_back(cur_.back() + 1);
            return true;
        }
        while (!cur_.empty()) {
            if (cur_.back() < umax_) {
                ++cur_.back();
                return true;
            }
            cur_.pop_back();
        }
        return false;
    }

    const std::vector<uint64_t>& current() const { return cur_; }

private:
    uint64_t umax_;
    uint64_t max_size_;
    std::vector<uint64_t> cur_;
    bool started_ = false;
};

}  // namespace

ScanSummary scan(uint64_t n, uint64_t universe_max, uint64_t max_size,
                 const ScanOptions& opts, const RecordSink& sink) {
    if (n == 0 || universe_max == 0 || max_size == 0)
        throw std::invalid_argument("scan: n, universe_max and max_size must be positive");

    unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    constexpr size_t kChunk = 512;

    if (!opts.start_after.empty()) {
        const auto& cur = opts.start_after.elements();
        if (cur.size() > max_size || cur.front() < 1 || cur.back() > universe_max)
            throw std::invalid_argument("scan: resume cursor outside the enumeration range");
    }
    SubsetEnumerator en(universe_max, max_size, opts.start_after.elements());
    ScanSummary summary;
    bool first_record = true;
    bool exhausted = false;
    bool budget_hit = false;

    while (!exhausted && !budget_hit) {
        std::vector<std::vector<uint64_t>> batch;
        const size_t wave_cap = size_t(threads) * kChunk;
        batch.reserve(wave_cap);
        while (batch.size() < wave_cap) {
            if (summary.scanned + batch.size() >= opts.budget) {
                budget_hit = true;
                break;
            }
            if (!en.next()) {
                exhausted = true;
                break;
            }
            batch.push_back(en.current());
        }
        if (batch.empty()) break;

        std::vector<ScanRecord> recs(batch.size());
        std::vector<std::exception_ptr> errors(threads);
        auto worker = [&](size_t slot, size_t begin, size_t end) {
            try {
                for (size_t i = begin; i < end; ++i) {
                    IntSet set(std::move(batch[i]));
                    const uint64_t size = pilz_size(set, n);
                    recs[i] = ScanRecord{n, std::move(set), size, size >= n};
                }
            } catch (...) {
                errors[slot] = std::current_exception();
            }
        };
        if (threads == 1 || batch.size() <= kChunk) {
            worker(0, 0, batch.size());
        } else {
            std::vector<std::thread> pool;
            const size_t per = (batch.size() + threads - 1) / threads;
            for (unsigned t = 0; t < threads; ++t) {
                const size_t b = t * per;
                const size_t e = std::min(batch.size(), b + per);
                if (b < e) pool.emplace_back(worker, t, b, e);
            }
            for (auto& th : pool) th.join();
        }
        for (const std::exception_ptr& err : errors)
            if (err) std::rethrow_exception(err);

        // Merge in enumeration order so output and summary are deterministic.
        for (ScanRecord& rec : recs) {
            if (sink) sink(rec);
            if (first_record || rec.delta_size < summary.min_size) {
                summary.min_size = rec.delta_size;
                summary.argmin.clear();
                first_record = false;
            }
            if (rec.delta_size == summary.min_size) summary.argmin.push_back(rec.set);
            if (!rec.pass) summary.violations.push_back(rec);
            summary.cursor = std::move(rec.set);
            ++summary.scanned;
        }
    }
    summary.complete = !budget_hit;
    return summary;
}

CubeReport cube_check(uint64_t r, const GridSet& a, uint64_t max_r) {
    if (r == 0 || r > max_r)
        throw std::invalid_argument("cube_check: r out of range");
    const GridSet cube = GridSet::cube(r);
    const uint64_t size = setops::oplus_grid(cube, a).size();
    return {size, size >= (uint64_t(1) << r)};
}

std::string scan_csv_header() { return "n,set,delta_size,pass\n"; }

std::string scan_csv_row(const ScanRecord& rec) {
    return std::to_string(rec.n) + ",\"" + rec.set.to_string() + "\"," +
           std::to_string(rec.delta_size) + "," + (rec.pass ? "true" : "false") +
           "\n";
}

std::string scan_summary_text(const ScanSummary& summary) {
    std::string s;
    s += "scanned=" + std::to_string(summary.scanned) + "\n";
    s += "min_size=" + std::to_string(summary.min_size) + "\n";
    for (const IntSet& a : summary.argmin) s += "argmin \"" + a.to_string() + "\"\n";
    s += "violations=" + std::to_string(summary.violations.size()) + "\n";
    for (const ScanRecord& rec : summary.violations)
        s += "violation \"" + rec.set.to_string() +
             "\" delta_size=" + std::to_string(rec.delta_size) + "\n";
    s += std::string("complete=") + (summary.complete ? "true" : "false") + "\n";
    if (!summary.complete) s += "cursor \"" + summary.cursor.to_string() + "\"\n";
    return s;
}

}  // namespace oddsum::pilz
