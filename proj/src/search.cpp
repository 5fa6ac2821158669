#include "oddwheel/search.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <exception>
#include <system_error>

#include "oddwheel/errors.hpp"
#include "oddwheel/triangle.hpp"

namespace oddwheel {
namespace {

constexpr unsigned long long kChunkUnits = 256;

// ---------- canonical form over the dihedral orbit ----------

struct Variant {
    std::size_t anchor;
    bool reflected;
};

// Element j of the interleaved (spoke, rim, spoke, rim, ...) sequence the
// variant induces.  A reflection visits spokes backwards; the rim between
// spokes k-j and k-j-1 is rims[k-j-1].
const Int& variant_entry(const std::vector<Int>& spokes, const std::vector<Int>& rims,
                         const Variant& v, std::size_t j) {
    const std::size_t n = spokes.size();
    const std::size_t pair = j / 2;
    if (!v.reflected) {
        const std::size_t idx = (v.anchor + pair) % n;
        return (j % 2 == 0) ? spokes[idx] : rims[idx];
    }
    if (j % 2 == 0) {
        return spokes[(v.anchor + n - pair) % n];
    }
    return rims[(v.anchor + 2 * n - pair - 1) % n];
}

int compare_variants(const std::vector<Int>& spokes, const std::vector<Int>& rims,
                     const Variant& a, const Variant& b) {
    for (std::size_t j = 0; j < 2 * spokes.size(); ++j) {
        int c = cmp(variant_entry(spokes, rims, a, j), variant_entry(spokes, rims, b, j));
        if (c != 0) return c;
    }
    return 0;
}

bool vectors_canonical(const std::vector<Int>& spokes, const std::vector<Int>& rims) {
    const Variant identity{0, false};
    for (std::size_t k = 0; k < spokes.size(); ++k) {
        for (bool reflected : {false, true}) {
            if (k == 0 && !reflected) continue;
            if (compare_variants(spokes, rims, Variant{k, reflected}, identity) < 0) {
                return false;
            }
        }
    }
    return true;
}

// ---------- per-unit rim enumeration ----------

struct RimOption {
    Int rim;
    bool degenerate;
    Int ch;       // characteristic; meaningful only when !degenerate
    Rat abs_cos;  // |cos| of the hub angle; meaningful only when !degenerate
};

struct UnitContext {
    std::vector<std::vector<RimOption>> options;  // valid rims per position, ascending
    std::vector<std::vector<Int>> suffix_chars;   // chars reachable at positions >= pos
};

UnitContext build_unit_context(const std::vector<Int>& spokes, int max_len, bool odd_only) {
    const std::size_t n = spokes.size();
    UnitContext ctx;
    ctx.options.resize(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        const Int& s1 = spokes[pos];
        const Int& s2 = spokes[(pos + 1) % n];
        Int lo = s1 > s2 ? s1 - s2 : s2 - s1;
        if (lo < 1) lo = 1;
        Int hi = s1 + s2;
        if (hi > max_len) hi = max_len;
        if (odd_only) {
            if (mpz_even_p(lo.get_mpz_t())) lo += 1;
            if (mpz_even_p(hi.get_mpz_t())) hi -= 1;
        }
        const int step = odd_only ? 2 : 1;
        for (Int r = lo; r <= hi; r += step) {
            IntTriangle t(r, s1, s2);
            RimOption opt;
            opt.rim = r;
            opt.degenerate = t.is_degenerate();
            if (!opt.degenerate) {
                opt.ch = *characteristic(t);
                opt.abs_cos = abs(triangle_cos(t));
            }
            ctx.options[pos].push_back(std::move(opt));
        }
    }
    ctx.suffix_chars.resize(n + 1);
    for (std::size_t pos = n; pos-- > 0;) {
        std::vector<Int> merged = ctx.suffix_chars[pos + 1];
        for (const RimOption& opt : ctx.options[pos]) {
            if (!opt.degenerate) merged.push_back(opt.ch);
        }
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        ctx.suffix_chars[pos] = std::move(merged);
    }
    return ctx;
}

// Depth-first enumeration of rim vectors for one spoke vector, pruned by
// residual-group feasibility: once no later position can produce a group's
// characteristic, a lone member can never cancel its irrational sine, and a
// pair with mismatched |cos| can never sum to a multiple of pi.  Groups of
// three or more are left to the exact decision at the leaf.
class RimSearcher {
public:
    RimSearcher(const std::vector<Int>& spokes, const UnitContext& ctx,
                std::vector<SearchEvent>& out)
        : spokes_(spokes), ctx_(ctx), out_(out), rims_(spokes.size()) {}

    unsigned long long nodes() const { return nodes_; }

    void run() { dfs(0); }

private:
    struct GroupTrack {
        Int ch;
        int count;
        Rat cos0;
        bool pair_equal;
    };

    static constexpr std::size_t kNoGroup = static_cast<std::size_t>(-1);

    void dfs(std::size_t pos) {
        if (pos == spokes_.size()) {
            leaf();
            return;
        }
        for (const RimOption& opt : ctx_.options[pos]) {
            rims_[pos] = opt.rim;
            std::size_t idx = push_group(opt);
            if (feasible(pos + 1)) dfs(pos + 1);
            pop_group(idx);
        }
    }

    std::size_t push_group(const RimOption& opt) {
        if (opt.degenerate) return kNoGroup;
        for (std::size_t i = 0; i < groups_.size(); ++i) {
            if (groups_[i].ch == opt.ch) {
                GroupTrack& g = groups_[i];
                ++g.count;
                if (g.count == 2) g.pair_equal = (g.cos0 == opt.abs_cos);
                return i;
            }
        }
        groups_.push_back(GroupTrack{opt.ch, 1, opt.abs_cos, false});
        return groups_.size() - 1;
    }

    void pop_group(std::size_t idx) {
        if (idx == kNoGroup) return;
        GroupTrack& g = groups_[idx];
        --g.count;
        if (g.count == 0) groups_.pop_back();  // stack discipline: it was pushed last
    }

    bool feasible(std::size_t depth) const {
        const std::vector<Int>& future = ctx_.suffix_chars[depth];
        for (const GroupTrack& g : groups_) {
            if (std::binary_search(future.begin(), future.end(), g.ch)) continue;
            if (g.count == 1) return false;
            if (g.count == 2 && !g.pair_equal) return false;
        }
        return true;
    }

    void leaf() {
        ++nodes_;
        if (!vectors_canonical(spokes_, rims_)) return;
        WheelLengths w(spokes_, rims_);
        Certificate cert = realizable(w);
        if (cert.kind != CertificateKind::realizable) return;
        SearchEvent ev{};
        ev.kind = SearchEvent::Kind::result;
        ev.result = SearchResult{std::move(w), *std::move(cert.witness_signs)};
        out_.push_back(std::move(ev));
    }

    const std::vector<Int>& spokes_;
    const UnitContext& ctx_;
    std::vector<SearchEvent>& out_;
    std::vector<Int> rims_;
    std::vector<GroupTrack> groups_;
    unsigned long long nodes_ = 0;
};

unsigned long long parse_cursor(const std::string& cursor) {
    if (cursor.empty()) return 0;
    unsigned long long value = 0;
    auto [ptr, ec] = std::from_chars(cursor.data(), cursor.data() + cursor.size(), value);
    if (ec != std::errc() || ptr != cursor.data() + cursor.size()) {
        throw ValidationError("resume cursor must be a decimal unit index, got \"" +
                              cursor + "\"");
    }
    return value;
}

}  // namespace

std::pair<std::vector<Int>, std::vector<Int>> canonical_form(const WheelLengths& w) {
    const std::vector<Int>& spokes = w.spokes();
    const std::vector<Int>& rims = w.rims();
    Variant best{0, false};
    for (std::size_t k = 0; k < w.size(); ++k) {
        for (bool reflected : {false, true}) {
            Variant v{k, reflected};
            if (compare_variants(spokes, rims, v, best) < 0) best = v;
        }
    }
    std::vector<Int> out_spokes, out_rims;
    out_spokes.reserve(w.size());
    out_rims.reserve(w.size());
    for (std::size_t j = 0; j < 2 * w.size(); ++j) {
        if (j % 2 == 0) {
            out_spokes.push_back(variant_entry(spokes, rims, best, j));
        } else {
            out_rims.push_back(variant_entry(spokes, rims, best, j));
        }
    }
    return {std::move(out_spokes), std::move(out_rims)};
}

bool is_canonical(const WheelLengths& w) { return vectors_canonical(w.spokes(), w.rims()); }

SearchStats search_wheels(const SearchParams& params, const SearchSink& sink) {
    if (params.n < 3) {
        throw ValidationError("search needs n >= 3, got " + std::to_string(params.n));
    }
    if (params.max_len < 1) {
        throw ValidationError("search needs max_len >= 1, got " +
                              std::to_string(params.max_len));
    }
    const bool odd_only = params.parity == SearchParity::all_odd;
    const unsigned long long base =
        odd_only ? static_cast<unsigned long long>((params.max_len + 1) / 2)
                 : static_cast<unsigned long long>(params.max_len);

    unsigned long long total = 1;
    for (std::size_t i = 0; i < params.n; ++i) {
        if (total > (1ull << 62) / base) {
            throw ValidationError(
                "search space exceeds the resumable index range; reduce n or max_len");
        }
        total *= base;
    }
    std::vector<unsigned long long> powers(params.n, 1);
    for (std::size_t i = params.n - 1; i-- > 0;) {
        powers[i] = powers[i + 1] * base;
    }

    unsigned long long start = parse_cursor(params.resume_cursor);
    if (start > total) start = total;

    const bool short_circuit = odd_only && params.n % 2 == 1;
    const auto t0 = std::chrono::steady_clock::now();
    SearchStats stats;
    unsigned long long next_checkpoint =
        params.checkpoint_every ? start + params.checkpoint_every : 0;

    for (unsigned long long chunk_start = start; chunk_start < total;) {
        const unsigned long long chunk_end =
            std::min(total, chunk_start + kChunkUnits);
        const std::size_t count = static_cast<std::size_t>(chunk_end - chunk_start);
        std::vector<std::vector<SearchEvent>> buffers(count);
        std::vector<unsigned long long> node_counts(count, 0);
        std::vector<std::exception_ptr> errors(count);

        auto work = [&](std::size_t k) {
            try {
                const unsigned long long u = chunk_start + k;
                std::vector<Int> spokes(params.n);
                for (std::size_t i = 0; i < params.n; ++i) {
                    unsigned long long digit = (u / powers[i]) % base;
                    spokes[i] = odd_only ? static_cast<long>(2 * digit + 1)
                                         : static_cast<long>(digit + 1);
                }
                // Canonical forms start with a minimal spoke, so other units
                // cannot contribute and are skipped outright.
                if (spokes[0] != *std::min_element(spokes.begin(), spokes.end())) return;

                if (short_circuit) {
                    SearchEvent ev{};
                    ev.kind = SearchEvent::Kind::parity_certificate;
                    ev.parity = parity_certificate(spokes);
                    ev.spokes = std::move(spokes);
                    buffers[k].push_back(std::move(ev));
                    node_counts[k] = 1;
                    return;
                }
                UnitContext ctx = build_unit_context(spokes, params.max_len, odd_only);
                RimSearcher searcher(spokes, ctx, buffers[k]);
                searcher.run();
                node_counts[k] = searcher.nodes();
            } catch (...) {
                errors[k] = std::current_exception();
            }
        };

        if (params.policy == ExecutionPolicy::parallel) {
#pragma omp parallel for schedule(dynamic)
            for (long long k = 0; k < static_cast<long long>(count); ++k) {
                work(static_cast<std::size_t>(k));
            }
        } else {
            for (std::size_t k = 0; k < count; ++k) work(k);
        }

        for (std::size_t k = 0; k < count; ++k) {
            if (errors[k]) std::rethrow_exception(errors[k]);
            ++stats.units_processed;
            stats.nodes_examined += node_counts[k];
            for (SearchEvent& ev : buffers[k]) {
                if (ev.kind == SearchEvent::Kind::result) ++stats.results_emitted;
                if (ev.kind == SearchEvent::Kind::parity_certificate) {
                    ++stats.certificates_emitted;
                }
                sink(ev);
            }
        }
        chunk_start = chunk_end;

        if (next_checkpoint && chunk_end >= next_checkpoint && chunk_end < total) {
            SearchEvent ev{};
            ev.kind = SearchEvent::Kind::checkpoint;
            ev.cursor = std::to_string(chunk_end);
            ev.nodes_examined = stats.nodes_examined;
            sink(ev);
            next_checkpoint = chunk_end + params.checkpoint_every;
        }

        if (chunk_end < total) {
            if (params.max_nodes && stats.nodes_examined >= params.max_nodes) {
                throw LimitError("node budget exhausted after " +
                                     std::to_string(stats.nodes_examined) +
                                     " candidates; resume from the carried cursor",
                                 std::to_string(chunk_end));
            }
            if (params.max_seconds > 0) {
                double elapsed =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                        .count();
                if (elapsed >= params.max_seconds) {
                    throw LimitError("time budget exhausted after " +
                                         std::to_string(stats.nodes_examined) +
                                         " candidates; resume from the carried cursor",
                                     std::to_string(chunk_end));
                }
            }
        }
    }

    stats.final_cursor = std::to_string(total);
    return stats;
}

}  // namespace oddwheel
