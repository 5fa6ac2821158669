#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddwheel/classalgebra.hpp"
#include "oddwheel/numeric.hpp"
#include "oddwheel/wheel.hpp"

namespace oddwheel {

enum class SearchParity { any, all_odd };

// Bounded exhaustive search over wheels with spoke and rim lengths in
// [1, max_len].  Candidates are deduplicated up to cyclic rotation and
// reflection of the labeling; each realizable instance is reported exactly
// once, on its canonical form, in a deterministic order independent of the
// execution policy.
struct SearchParams {
    std::size_t n = 3;
    int max_len = 1;
    SearchParity parity = SearchParity::any;
    ExecutionPolicy policy = ExecutionPolicy::serial;

    // Resource limits, checked between work chunks; 0 disables a limit.
    // When exceeded, search_wheels throws LimitError carrying the cursor of
    // the first unprocessed unit.
    unsigned long long max_nodes = 0;
    double max_seconds = 0.0;

    // Decimal index of the spoke-vector unit to start from, as previously
    // reported in a LimitError or checkpoint; empty starts from the
    // beginning.  Only meaningful with identical n / max_len / parity.
    std::string resume_cursor;

    // Emit a checkpoint event roughly every this many units; 0 disables.
    unsigned long long checkpoint_every = 0;
};

struct SearchResult {
    WheelLengths wheel;
    SignVector signs;
};

struct SearchEvent {
    enum class Kind { result, parity_certificate, checkpoint };

    Kind kind;
    std::optional<SearchResult> result;       // Kind::result
    std::optional<std::vector<Int>> spokes;   // Kind::parity_certificate
    std::optional<ParityCertificate> parity;  // Kind::parity_certificate
    std::string cursor;                       // Kind::checkpoint
    unsigned long long nodes_examined = 0;    // Kind::checkpoint
};

using SearchSink = std::function<void(const SearchEvent&)>;

struct SearchStats {
    unsigned long long units_processed = 0;
    unsigned long long nodes_examined = 0;
    unsigned long long results_emitted = 0;
    unsigned long long certificates_emitted = 0;
    std::string final_cursor;  // one past the last unit: resuming here is a no-op
};

// Streams events to the sink and returns the tallies.  Events arrive in a
// deterministic order: units ascending, and within a unit rim vectors
// ascending.  For parity = all_odd with odd n, no candidate is examined;
// one parity-certificate event is emitted per surviving spoke vector
// instead.  Throws ValidationError on bad parameters and LimitError (with
// resume cursor) when a budget runs out.
SearchStats search_wheels(const SearchParams& params, const SearchSink& sink);

// Canonical representative of the wheel's dihedral orbit: the labeling
// whose interleaved (spoke, rim) sequence is lexicographically least over
// all rotations and reflections.  Returned as (spokes, rims).
std::pair<std::vector<Int>, std::vector<Int>> canonical_form(const WheelLengths& w);

bool is_canonical(const WheelLengths& w);

}  // namespace oddwheel
