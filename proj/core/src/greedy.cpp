#include "bhseq/greedy.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "bhseq/closed_forms.hpp"
#include "bhseq/representations.hpp"

namespace bhseq {
namespace {

constexpr Element kNone = std::numeric_limits<Element>::max();

[[noreturn]] void cap_exceeded(unsigned h, std::size_t index, Element cap) {
    throw_internal("cap exceeded: no admissible a_" + std::to_string(index) + "(" + std::to_string(h) +
                   ") <= " + std::to_string(cap));
}

}  // namespace

GreedyState::GreedyState(unsigned h, BackendPolicy backend) {
    const Element zero[] = {0};
    table_ = build_support_table(zero, h, backend);
}

Element GreedyState::scan_sequential(Element from, Element cap) {
    for (Element b = from; b <= cap; ++b) {
        ++tested_;
        if (admissible(table_, b)) return b;
    }
    return kNone;
}

Element GreedyState::scan_parallel(Element from, Element cap, const GreedyOptions& options) {
    const unsigned workers = options.threads;
    const Element window = options.window ? options.window : Element{64} * workers;
    std::atomic<std::uint64_t> tested{0};

    for (Element lo = from; lo <= cap;) {
        const Element hi = std::min(cap, lo + window - 1);
        std::atomic<Element> best{kNone};
        // A worker that throws on candidate b only matters if no smaller
        // candidate succeeds, matching what the sequential scan would report.
        std::exception_ptr failure;
        Element failure_at = kNone;
        std::mutex failure_mutex;
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    Element b = lo + w;
                    try {
                        for (; b <= hi; b += workers) {
                            if (b >= best.load(std::memory_order_relaxed)) return;
                            tested.fetch_add(1, std::memory_order_relaxed);
                            if (admissible(table_, b)) {
                                Element cur = best.load();
                                while (b < cur && !best.compare_exchange_weak(cur, b)) {
                                }
                                return;
                            }
                        }
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (b < failure_at) {
                            failure_at = b;
                            failure = std::current_exception();
                        }
                    }
                });
            }
        }
        if (failure && failure_at < best.load()) std::rethrow_exception(failure);
        if (best.load() != kNone) {
            tested_ += tested.load();
            return best.load();
        }
        if (hi == cap) break;
        lo = hi + 1;
    }
    tested_ += tested.load();
    return kNone;
}

Element GreedyState::next_term(const GreedyOptions& options) {
    const std::size_t index = table_.ground_set_size();
    const Element cap = upper_bound_sum(h(), static_cast<unsigned>(index));
    const Element from = checked::add(table_.max_element(), 1, "candidate");

    const Element b = options.threads > 1 ? scan_parallel(from, cap, options) : scan_sequential(from, cap);
    if (b == kNone) cap_exceeded(h(), index, cap);
    table_ = insert_element(table_, b);
    return b;
}

SequenceRecord greedy_sequence(unsigned h, unsigned k, const GreedyOptions& options) {
    require_order(h);
    if (options.threads == 0) throw InvalidInput("threads must be at least 1");
    SequenceRecord rec;
    rec.h = h;
    rec.k_max = k;
    rec.terms.reserve(k + 1);
    rec.elapsed.reserve(k + 1);
    // fail before allocating h + 1 supports if the largest h-fold sum cannot fit
    if (k > 0) checked::mul(h, upper_bound_sum(h, k));

    GreedyState state(h, options.backend);
    rec.terms.push_back(0);
    rec.elapsed.emplace_back(0);
    for (unsigned i = 1; i <= k; ++i) {
        const auto start = std::chrono::steady_clock::now();
        rec.terms.push_back(state.next_term(options));
        rec.elapsed.push_back(std::chrono::steady_clock::now() - start);
    }
    rec.scan_cap = k == 0 ? 0 : upper_bound_sum(h, k);
    return rec;
}

std::vector<Element> greedy_bruteforce_oracle(unsigned h, unsigned k) {
    require_order(h);
    std::vector<Element> terms{0};
    while (terms.size() < static_cast<std::size_t>(k) + 1) {
        const Element cap = upper_bound_sum(h, static_cast<unsigned>(terms.size()));
        terms.push_back(terms.back() + 1);
        while (!is_bh_set_bruteforce(terms, h)) {
            if (terms.back() >= cap) cap_exceeded(h, terms.size() - 1, cap);
            ++terms.back();
        }
    }
    return terms;
}

std::vector<Element> mian_chowla_prefix(std::size_t count) {
    std::vector<Element> terms;
    if (count == 0) return terms;
    terms.push_back(1);
    while (terms.size() < count) {
        terms.push_back(terms.back() + 1);
        while (!is_bh_set_bruteforce(terms, 2)) ++terms.back();
    }
    return terms;
}

}  // namespace bhseq
