/**************************************************************************
 * Copyright 2026 The ghforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "ghforge/verifier.hpp"

#include "ghforge/error.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace ghforge {

namespace {

constexpr std::uint32_t kDenseTableMaxOrder = 1024;

// Subtraction in Z_p^n on base-p encodings.
class AdditiveGroup {
public:
    AdditiveGroup(std::uint32_t p, std::uint32_t n) : p_(p), n_(n), q_(1) {
        for (std::uint32_t j = 0; j < n; ++j) {
            q_ *= p;
        }
        if (q_ <= kDenseTableMaxOrder) {
            table_.resize(std::size_t{q_} * q_);
            for (std::uint32_t x = 0; x < q_; ++x) {
                for (std::uint32_t y = 0; y < q_; ++y) {
                    table_[std::size_t{x} * q_ + y] = static_cast<std::uint16_t>(slow_sub(x, y));
                }
            }
        }
    }

    std::uint32_t order() const noexcept { return q_; }

    std::uint32_t sub(std::uint32_t x, std::uint32_t y) const noexcept {
        return table_.empty() ? slow_sub(x, y) : table_[std::size_t{x} * q_ + y];
    }

private:
    std::uint32_t slow_sub(std::uint32_t x, std::uint32_t y) const noexcept {
        std::uint32_t out = 0;
        std::uint32_t scale = 1;
        for (std::uint32_t j = 0; j < n_; ++j) {
            out += ((x % p_ + p_ - y % p_) % p_) * scale;
            x /= p_;
            y /= p_;
            scale *= p_;
        }
        return out;
    }

    std::uint32_t p_;
    std::uint32_t n_;
    std::uint32_t q_;
    std::vector<std::uint16_t> table_;
};

void fill_histogram(const GHMatrix& h, const AdditiveGroup& group, std::uint32_t i, std::uint32_t l,
                    std::vector<std::uint32_t>& counts) {
    std::fill(counts.begin(), counts.end(), 0);
    const auto ri = h.row(i);
    const auto rl = h.row(l);
    for (std::size_t j = 0; j < ri.size(); ++j) {
        ++counts[group.sub(ri[j], rl[j])];
    }
}

bool is_flat(const std::vector<std::uint32_t>& counts, std::uint32_t lambda) {
    return std::all_of(counts.begin(), counts.end(), [lambda](std::uint32_t c) { return c == lambda; });
}

// Position of pair (i, l), i < l, in the lexicographic enumeration of pairs.
std::uint64_t pair_rank(std::uint64_t k, std::uint64_t i, std::uint64_t l) {
    return i * (k - 1) - i * (i - 1) / 2 + (l - i - 1);
}

struct WorkerResult {
    std::vector<PairFailure> failures;
};

} // namespace

std::vector<std::uint32_t> row_pair_histogram(const GHMatrix& h, std::uint32_t i, std::uint32_t l) {
    if (i >= h.order() || l >= h.order()) {
        throw InvalidArgument("row index out of range");
    }
    if (i == l) {
        throw InvalidArgument("row pair must consist of two distinct rows");
    }
    const AdditiveGroup group(h.field().characteristic(), h.field().degree());
    std::vector<std::uint32_t> counts(group.order());
    fill_histogram(h, group, i, l, counts);
    return counts;
}

VerificationReport verify_gh(const GHMatrix& h, std::uint32_t lambda, VerifyOptions options) {
    const AdditiveGroup group(h.field().characteristic(), h.field().degree());
    const std::uint32_t q = group.order();
    const std::uint32_t k = h.order();
    if (lambda == 0 || std::uint64_t{q} * lambda != k) {
        throw InvalidArgument("order " + std::to_string(k) + " is not q*lambda = " + std::to_string(q) + "*" +
                              std::to_string(lambda));
    }

    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    threads = std::max(1u, std::min<unsigned>(threads, k));

    // Smallest failing pair key (i * k + l) seen so far; rows whose first pair
    // lies beyond it cannot improve the result.
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    std::vector<WorkerResult> results(threads);

    auto work = [&](unsigned w) {
        std::vector<std::uint32_t> counts(q);
        auto& out = results[w].failures;
        for (std::uint32_t i = w; i < k; i += threads) {
            if (!options.collect_all_failures && std::uint64_t{i} * k + i + 1 > best.load(std::memory_order_relaxed)) {
                return;
            }
            for (std::uint32_t l = i + 1; l < k; ++l) {
                fill_histogram(h, group, i, l, counts);
                if (is_flat(counts, lambda)) {
                    continue;
                }
                out.push_back({i, l, counts});
                if (!options.collect_all_failures) {
                    const std::uint64_t key = std::uint64_t{i} * k + l;
                    std::uint64_t cur = best.load(std::memory_order_relaxed);
                    while (key < cur && !best.compare_exchange_weak(cur, key, std::memory_order_relaxed)) {
                    }
                    return;
                }
            }
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back(work, w);
        }
    }

    std::vector<PairFailure> failures;
    for (auto& r : results) {
        std::move(r.failures.begin(), r.failures.end(), std::back_inserter(failures));
    }
    std::sort(failures.begin(), failures.end(), [](const PairFailure& a, const PairFailure& b) {
        return std::pair(a.row_i, a.row_l) < std::pair(b.row_i, b.row_l);
    });

    VerificationReport report;
    report.u = q;
    report.lambda = lambda;
    report.order = k;
    report.passed = failures.empty();
    const std::uint64_t all_pairs = std::uint64_t{k} * (k - 1) / 2;
    if (report.passed) {
        report.checked_pairs = all_pairs;
        return report;
    }
    report.first_failure = failures.front();
    if (options.collect_all_failures) {
        report.checked_pairs = all_pairs;
        report.failures = std::move(failures);
    } else {
        report.checked_pairs = pair_rank(k, report.first_failure->row_i, report.first_failure->row_l) + 1;
    }
    return report;
}

} // namespace ghforge
