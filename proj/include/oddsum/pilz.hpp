#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "oddsum/setops.hpp"

namespace oddsum::pilz {

/// Primes up to n, ascending.
std::vector<uint64_t> primes_upto(uint64_t n);

/// Prime-valuation vector of k over the given prime list. Throws if k has a
/// prime factor outside the list.
GridSet::Point exponent_vector(uint64_t k, const std::vector<uint64_t>& primes);

/// Integer encoded by a valuation vector: prod primes[i]^coords[i].
uint64_t from_exponent_vector(const GridSet::Point& coords,
                              const std::vector<uint64_t>& primes);

/// {v_1, ..., v_n} in Z^pi(n): the exponent vectors of 1..n over the primes
/// up to n. For n = 1 the grid has dimension zero and the set is the
/// singleton empty tuple.
GridSet build_Sn(uint64_t n);

/// |A delta 2A delta ... delta nA|: the quantity Pilz's conjecture bounds
/// below by n. A must be nonempty with positive elements.
uint64_t pilz_size(const IntSet& a, uint64_t n);

/// n / (ln n)^0.2223, the published lower-bound curve; display only.
/// Natural logarithm.
double lower_bound_display(uint64_t n);

struct ScanRecord {
    uint64_t n;
    IntSet set;
    uint64_t delta_size;
    bool pass;  // delta_size >= n
};

struct ScanSummary {
    uint64_t scanned = 0;
    uint64_t min_size = 0;
    std::vector<IntSet> argmin;        // all sets achieving min_size, in order
    std::vector<ScanRecord> violations;
    bool complete = true;
    IntSet cursor;  // last set processed; resume point when !complete
};

struct ScanOptions {
    uint64_t budget = uint64_t(1) << 24;  // max subsets to process
    unsigned threads = 0;                 // 0: hardware concurrency
    IntSet start_after;                   // resume after this set
};

using RecordSink = std::function<void(const ScanRecord&)>;

/// Enumerates every nonempty A in [1, universe_max] with |A| <= max_size in
/// lexicographic order of the sorted element lists, computes pilz_size for
/// each, and reports the minimum, its witnesses and any conjecture
/// violations. Records are delivered to the sink in enumeration order.
/// Stops after opts.budget subsets; summary.complete tells whether the
/// range was exhausted.
ScanSummary scan(uint64_t n, uint64_t universe_max, uint64_t max_size,
                 const ScanOptions& opts = {}, const RecordSink& sink = {});

struct CubeReport {
    uint64_t size;
    bool pass;
};

/// |{0,1}^r (+) A| >= 2^r check for small r.
CubeReport cube_check(uint64_t r, const GridSet& a, uint64_t max_r = 3);

// CSV / summary rendering shared by the CLI and the golden tests.
std::string scan_csv_header();
std::string scan_csv_row(const ScanRecord& rec);
std::string scan_summary_text(const ScanSummary& summary);

}  // namespace oddsum::pilz
