#include "oddwheel/sweeps.hpp"

#include <algorithm>
#include <utility>

#include "oddwheel/classalgebra.hpp"
#include "oddwheel/errors.hpp"
#include "oddwheel/triangle.hpp"
#include "oddwheel/wheel.hpp"

namespace oddwheel {
namespace {

// A counterexample tagged with its enumeration position, so merged parallel
// results can be ordered exactly like the serial run.
struct TaggedViolation {
    unsigned long long major;
    unsigned long long minor;
    std::string message;
};

struct LocalResult {
    unsigned long long cases = 0;
    std::vector<TaggedViolation> violations;
};

// Runs per_index(i, local) over [0, total) either serially or under OpenMP,
// then merges the per-thread tallies into a policy-independent SweepResult.
template <typename Fn>
SweepResult run_indexed(unsigned long long total, ExecutionPolicy policy, Fn per_index) {
    std::vector<LocalResult> partials;
    if (policy == ExecutionPolicy::serial) {
        partials.emplace_back();
        for (unsigned long long i = 0; i < total; ++i) {
            per_index(i, partials.back());
        }
    } else {
#pragma omp parallel
        {
            LocalResult local;
#pragma omp for schedule(dynamic, 256) nowait
            for (long long i = 0; i < static_cast<long long>(total); ++i) {
                per_index(static_cast<unsigned long long>(i), local);
            }
#pragma omp critical
            partials.push_back(std::move(local));
        }
    }

    SweepResult out;
    std::vector<TaggedViolation> merged;
    for (LocalResult& part : partials) {
        out.cases_checked += part.cases;
        std::move(part.violations.begin(), part.violations.end(),
                  std::back_inserter(merged));
    }
    std::sort(merged.begin(), merged.end(), [](const TaggedViolation& a,
                                               const TaggedViolation& b) {
        return std::pair(a.major, a.minor) < std::pair(b.major, b.minor);
    });
    out.violations.reserve(merged.size());
    for (TaggedViolation& v : merged) out.violations.push_back(std::move(v.message));
    return out;
}

int odd_value_count(int bound) { return bound >= 1 ? (bound + 1) / 2 : 0; }

// Valid triangle side check; for all-odd sides the inequalities are
// automatically strict (an odd side cannot equal the even sum of two odds).
bool sides_valid(int a, int b, int c) { return a <= b + c && b <= a + c && c <= a + b; }

std::string triple_str(int a, int b, int c) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) +
           ")";
}

std::string lengths_str(const std::vector<Int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

}  // namespace

SweepResult odd_characteristic_sweep(int bound, ExecutionPolicy policy) {
    if (bound < 1) throw ValidationError("sweep bound must be >= 1");
    const unsigned long long m = static_cast<unsigned long long>(odd_value_count(bound));
    return run_indexed(m * m * m, policy, [m](unsigned long long idx, LocalResult& local) {
        int a = 2 * static_cast<int>(idx / (m * m)) + 1;
        int b = 2 * static_cast<int>((idx / m) % m) + 1;
        int c = 2 * static_cast<int>(idx % m) + 1;
        if (!sides_valid(a, b, c)) return;
        ++local.cases;
        std::optional<Int> ch = characteristic(IntTriangle(a, b, c));
        if (!ch) {
            local.violations.push_back({idx, 0,
                                        "odd triangle " + triple_str(a, b, c) +
                                            " has no characteristic"});
            return;
        }
        if (mpz_fdiv_ui(ch->get_mpz_t(), 8) != 3) {
            local.violations.push_back({idx, 0,
                                        "odd triangle " + triple_str(a, b, c) +
                                            " has characteristic " + to_string(*ch) +
                                            " != 3 (mod 8)"});
        }
    });
}

SweepResult class_shortcut_sweep(int bound, ExecutionPolicy policy) {
    if (bound < 1) throw ValidationError("sweep bound must be >= 1");
    const unsigned long long m = static_cast<unsigned long long>(odd_value_count(bound));
    return run_indexed(m * m * m, policy, [m](unsigned long long idx, LocalResult& local) {
        int a = 2 * static_cast<int>(idx / (m * m)) + 1;
        int b = 2 * static_cast<int>((idx / m) % m) + 1;
        int c = 2 * static_cast<int>(idx % m) + 1;
        if (!sides_valid(a, b, c)) return;
        ++local.cases;
        try {
            AngleClass from_cos = angle_class(triangle_cos(IntTriangle(a, b, c)));
            AngleClass from_product = odd_triangle_class(b, c);
            if (from_cos != from_product) {
                local.violations.push_back(
                    {idx, 0,
                     "odd triangle " + triple_str(a, b, c) + ": class from cosine is " +
                         std::to_string(from_cos.value()) + ", product shortcut gives " +
                         std::to_string(from_product.value())});
            }
        } catch (const Error& e) {
            local.violations.push_back({idx, 0,
                                        "odd triangle " + triple_str(a, b, c) +
                                            " raised: " + e.what()});
        }
    });
}

SweepResult odd_wheel_sweep(const std::vector<std::size_t>& n_values, int max_len,
                            ExecutionPolicy policy) {
    if (max_len < 1) throw ValidationError("sweep bound must be >= 1");
    for (std::size_t n : n_values) {
        if (n < 3 || n % 2 == 0) {
            throw ValidationError("odd wheel sweep needs odd n >= 3, got " +
                                  std::to_string(n));
        }
    }

    const int m = odd_value_count(max_len);
    SweepResult combined;
    for (std::size_t n : n_values) {
        unsigned long long total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= static_cast<unsigned long long>(m);

        SweepResult part = run_indexed(
            total, policy, [n, m, max_len](unsigned long long idx, LocalResult& local) {
                std::vector<Int> spokes(n);
                unsigned long long rest = idx;
                for (std::size_t i = n; i-- > 0;) {
                    spokes[i] = 2 * static_cast<int>(rest % m) + 1;
                    rest /= m;
                }

                // Enumerate all-odd rim vectors compatible with the triangle
                // inequalities, one position at a time.
                std::vector<Int> rims(n);
                auto rim_dfs = [&](auto&& self, std::size_t pos) -> void {
                    if (pos == n) {
                        ++local.cases;
                        WheelLengths w(spokes, rims);
                        if (std::optional<SignVector> witness = exhaustive_closure_search(w)) {
                            std::string signs;
                            for (int s : witness->signs()) signs += (s == 1 ? '+' : '-');
                            local.violations.push_back(
                                {0, 0,
                                 "all-odd wheel spokes " + lengths_str(w.spokes()) +
                                     " rims " + lengths_str(w.rims()) +
                                     " closes with signs " + signs});
                        }
                        try {
                            Certificate cert = certify_odd_wheel(w);
                            if (cert.kind != CertificateKind::parity_contradiction) {
                                local.violations.push_back(
                                    {0, 0,
                                     "certification of spokes " + lengths_str(w.spokes()) +
                                         " rims " + lengths_str(w.rims()) +
                                         " did not yield a parity contradiction"});
                            }
                        } catch (const Error& e) {
                            local.violations.push_back(
                                {0, 0,
                                 "certification of spokes " + lengths_str(w.spokes()) +
                                     " rims " + lengths_str(w.rims()) +
                                     " raised: " + e.what()});
                        }
                        return;
                    }
                    const Int& s1 = spokes[pos];
                    const Int& s2 = spokes[(pos + 1) % n];
                    Int low = s1 > s2 ? s1 - s2 + 1 : s2 - s1 + 1;  // odd, since spokes are
                    Int high = s1 + s2 - 1;
                    if (high > max_len) high = max_len;
                    for (Int r = low; r <= high; r += 2) {
                        rims[pos] = r;
                        self(self, pos + 1);
                    }
                };
                // Tag violations with the enumeration position for stable
                // ordering under the parallel policy.
                std::size_t before = local.violations.size();
                rim_dfs(rim_dfs, 0);
                for (std::size_t v = before; v < local.violations.size(); ++v) {
                    local.violations[v].major = idx;
                    local.violations[v].minor = v - before;
                }
            });

        combined.cases_checked += part.cases_checked;
        std::move(part.violations.begin(), part.violations.end(),
                  std::back_inserter(combined.violations));
    }
    return combined;
}

}  // namespace oddwheel
