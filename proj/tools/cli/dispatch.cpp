#include "cli/dispatch.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <mutex>
#include <new>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "bhseq/bhseq.hpp"

namespace bhseq::cli {
namespace {

constexpr Element kBruteForceBudget = 20'000'000;

struct GenerateArgs {
    unsigned h = 1;
    unsigned terms = 0;
    std::string format = "bfile";
    std::string output;
    unsigned jobs = 1;
};

struct VerifyArgs {
    unsigned h = 1;
    std::string set;
};

struct TheoremArgs {
    unsigned h_min = 1;
    unsigned h_max = 1;
    std::string format = "text";
    unsigned jobs = 1;
};

struct WitnessArgs {
    unsigned h = 1;
    Element c = 1;
};

struct Lemma1Args {
    unsigned h = 2;
    bool brief = false;
};

struct BenchArgs {
    unsigned h = 2;
    unsigned terms = 5;
    unsigned jobs = 1;
};

std::string join(const std::vector<IntegerInterval>& ivs) {
    std::string s;
    for (const auto& iv : ivs) {
        if (!s.empty()) s += ' ';
        s += iv.to_string();
    }
    return s.empty() ? "(empty)" : s;
}

int run_generate(const GenerateArgs& a, std::ostream& out) {
    GreedyOptions opts;
    opts.threads = a.jobs;
    const auto record = greedy_sequence(a.h, a.terms, opts);

    std::ofstream file;
    if (!a.output.empty()) {
        file.open(a.output);
        if (!file) throw InvalidInput("cannot open output file " + a.output);
    }
    std::ostream& sink = a.output.empty() ? out : file;
    if (a.format == "json") {
        sink << sequence_json(record).dump(2) << '\n';
    } else if (a.format == "csv") {
        emit_csv(record, sink);
    } else {
        emit_bfile(record, sink);
    }
    sink.flush();
    if (!sink) throw std::runtime_error("write failed");
    return kOk;
}

std::vector<Element> load_set(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        if (!in) throw InvalidInput("cannot read set file " + arg);
        return read_set(in);
    }
    if (arg.find_first_of("{,") != std::string::npos ||
        (!arg.empty() && arg.find_first_not_of("0123456789") == std::string::npos)) {
        return parse_set_literal(arg);
    }
    throw InvalidInput("set file not found: " + arg);
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
    const auto set = load_set(a.set);
    const std::string name = "B_" + std::to_string(a.h);

    // Cardinality route on the set translated to start at 0.
    std::vector<Element> shifted = set;
    for (auto& v : shifted) v -= set.front();
    const auto table = build_support_table(shifted, a.h);
    const bool by_cardinality = verify_by_cardinality(table);
    const auto expected = binomial(set.size() + a.h - 1, a.h);

    std::optional<std::optional<Collision>> brute;
    if (expected && *expected <= kBruteForceBudget) brute = find_collision_bruteforce(set, a.h);

    if (brute && brute->has_value() == by_cardinality) {
        throw_internal("verifiers disagree on this set");
    }

    if (by_cardinality) {
        out << name << '\n';
    } else if (brute) {
        out << "NOT " << name << ": " << (*brute)->to_string() << '\n';
    } else {
        out << "NOT " << name << '\n';
    }
    out << "  bruteforce: ";
    if (!brute) {
        out << "skipped (" << (expected ? std::to_string(*expected) : std::string("> 2^64")) << " multisets)\n";
    } else if (brute->has_value()) {
        out << "NOT " << name << ": " << (*brute)->to_string() << '\n';
    } else {
        out << name << '\n';
    }
    out << "  cardinality: |D_" << a.h << "| = " << table.support(a.h).size() << ", C(" << set.size() + a.h - 1
        << ',' << a.h << ") = " << (expected ? std::to_string(*expected) : std::string("> 2^64")) << " -> "
        << (by_cardinality ? name : "NOT " + name) << '\n';
    return by_cardinality ? kOk : kFailure;
}

int run_theorem(const TheoremArgs& a, std::ostream& out) {
    const auto rows = theorem_scan(a.h_min, a.h_max, a.jobs);
    const bool all_match = std::all_of(rows.begin(), rows.end(), [](const TheoremRow& r) { return r.match; });

    // Growth of a_4 in h is only reported; it is not a pass/fail condition.
    std::vector<unsigned> non_increasing;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        if (!(rows[i].a4_greedy < rows[i + 1].a4_greedy)) non_increasing.push_back(rows[i].h);
    }

    if (a.format == "json") {
        nlohmann::ordered_json doc;
        doc["rows"] = theorem_json(rows);
        doc["all_match"] = all_match;
        doc["a4_increasing"] = non_increasing.empty();
        out << doc.dump(2) << '\n';
    } else if (a.format == "csv") {
        emit_theorem_csv(rows, out);
    } else {
        emit_theorem_text(rows, out);
        if (non_increasing.empty()) {
            out << "a4(h) < a4(h+1) for every scanned h\n";
        } else {
            for (auto h : non_increasing) out << "note: a4(" << h << ") >= a4(" << h + 1 << ")\n";
        }
        out << (all_match ? "all rows MATCH\n" : "MISMATCH found\n");
    }
    return all_match ? kOk : kFailure;
}

int run_witness(const WitnessArgs& a, std::ostream& out) {
    const auto w = collision_witness(a.h, a.c);
    if (!w) {
        out << "none\n";
        return kOk;
    }
    const Element second = Element{a.h} + 1;
    const Element third = closed_form_term(a.h, 3);
    const Element value = w->y1 + w->y2 * second + w->y3 * third;
    out << w->to_string() << '\n';
    out << w->x0 << '*' << a.c << " + " << w->x1 << " + " << w->x2 << '*' << second << " + " << w->x3 << '*' << third
        << " = " << w->y1 << " + " << w->y2 << '*' << second << " + " << w->y3 << '*' << third << " = " << value
        << '\n';
    return kOk;
}

int run_lemma1(const Lemma1Args& a, std::ostream& out) {
    const auto fam = lemma1_interval_family(a.h);
    const auto witnesses = lemma1_witness_set(a.h);
    const Element a4 = closed_form_term(a.h, 4);
    bool ok = fam.all_claims_hold();

    out << "h = " << a.h << '\n';
    out << "intervals:\n";
    for (const auto& li : fam.intervals) {
        if (a.brief && li.label.find("piece") != std::string::npos) continue;
        out << "  " << std::left << std::setw(34) << li.label << ' ' << li.interval.to_string() << '\n';
    }
    out << "overlap threshold floor((h^2-1)/(2h+1)) = " << fam.overlap_threshold << '\n';
    out << "claims:\n";
    for (const auto& c : fam.claims) out << "  " << (c.holds ? "ok   " : "FAIL ") << c.label << '\n';

    out << "merged union: " << join(fam.merged_union) << '\n';
    const IntegerInterval expected(static_cast<std::int64_t>(a.h) + 2, static_cast<std::int64_t>(a4) - 1);
    const bool union_ok = fam.merged_union.size() == 1 && fam.merged_union.front() == expected;
    ok = ok && union_ok;
    out << "expected [h+2, a4(h)-1] = " << expected.to_string() << ": " << (union_ok ? "ok" : "FAIL") << '\n';

    std::size_t outside = 0;
    for (const auto& li : fam.intervals) {
        if (!union_contains(witnesses, li.interval)) {
            ++outside;
            out << "  not in witness set: " << li.label << ' ' << li.interval.to_string() << '\n';
        }
    }
    ok = ok && outside == 0;
    out << "containment in witness set: " << (outside == 0 ? "ok" : "FAIL") << " (" << fam.intervals.size()
        << " intervals)\n";
    out << "witness set: " << join(witnesses) << '\n';
    return ok ? kOk : kFailure;
}

int run_bench(const BenchArgs& a, std::ostream& out) {
    GreedyOptions opts;
    opts.threads = a.jobs;
    GreedyState state(a.h);
    out << "h = " << a.h << ", terms = " << a.terms << ", jobs = " << a.jobs << '\n';
    out << "k a_k candidates seconds candidates_per_second\n";
    using clock = std::chrono::steady_clock;
    double total_seconds = 0;
    for (unsigned k = 1; k <= a.terms; ++k) {
        const auto before = state.candidates_tested();
        const auto start = clock::now();
        const Element term = state.next_term(opts);
        const double secs = std::chrono::duration<double>(clock::now() - start).count();
        total_seconds += secs;
        const auto n = state.candidates_tested() - before;
        out << k << ' ' << term << ' ' << n << ' ' << secs << ' ' << (secs > 0 ? n / secs : 0.0) << '\n';
    }
    const auto total = state.candidates_tested();
    out << "throughput: " << (total_seconds > 0 ? total / total_seconds : 0.0) << " candidates/second\n";
    out << "table memory: " << state.table().memory_bytes() << " bytes ("
        << (state.table().backend() == Backend::Dense ? "dense" : "sparse") << ")\n";
    return kOk;
}

}  // namespace

std::vector<TheoremRow> theorem_scan(unsigned h_min, unsigned h_max, unsigned jobs) {
    if (h_min == 0 || h_min > h_max) throw InvalidInput("h range must be nonempty with h >= 1");
    if (jobs == 0) throw InvalidInput("jobs must be at least 1");
    const std::size_t n = h_max - h_min + 1;
    std::vector<TheoremRow> rows(n);
    std::vector<std::exception_ptr> failures(n);

    auto compute = [&](std::size_t i) {
        try {
            TheoremRow r;
            r.h = h_min + static_cast<unsigned>(i);
            r.a4_greedy = greedy_sequence(r.h, 4).terms[4];
            r.a4_formula = closed_form_term(r.h, 4);
            if (r.h >= 2) r.a4_witness = min_unblocked(r.h);
            r.match = r.a4_greedy == r.a4_formula && (!r.a4_witness || *r.a4_witness == r.a4_formula);
            rows[i] = r;
        } catch (...) {
            failures[i] = std::current_exception();
        }
    };

    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < std::min<std::size_t>(jobs, n); ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) compute(i);
            });
        }
    }
    for (const auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }
    return rows;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Greedy B_h-set construction and verification"};
    app.name("bhseq");
    const auto kPositive = CLI::Range(1u, std::numeric_limits<unsigned>::max());

    // "-h" would clash with the --h option every subcommand takes
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.set_version_flag("--version", "bhseq 0.1.0");

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Print the greedy B_h-set a_0..a_K (b-file indices start at 0)");
    generate->add_option("--h", gen.h, "Order h of the B_h condition")->required()->check(kPositive);
    generate->add_option("--terms", gen.terms, "Number of terms K after a_0")->required()->check(CLI::Range(0u, std::numeric_limits<unsigned>::max()));
    generate->add_option("--format", gen.format, "Output format; b-file offset is 0")
        ->check(CLI::IsMember({"bfile", "json", "csv"}));
    generate->add_option("--output", gen.output, "Write to this file instead of stdout");
    generate->add_option("--jobs", gen.jobs, "Threads for the candidate scan")->check(kPositive);

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Check whether a set is B_h with both verifiers");
    verify->add_option("--h", ver.h, "Order h")->required()->check(kPositive);
    verify->add_option("--set", ver.set, "Set file (one integer per line, '#' comments) or literal {0,1,3}")
        ->required();

    TheoremArgs thm;
    auto* theorem = app.add_subcommand("theorem", "Compare greedy a_4(h), the closed form and the witness scan");
    theorem->add_option("--h-min", thm.h_min, "First h")->required()->check(kPositive);
    theorem->add_option("--h-max", thm.h_max, "Last h")->required()->check(kPositive);
    theorem->add_option("--format", thm.format, "Report format")->check(CLI::IsMember({"text", "json", "csv"}));
    theorem->add_option("--jobs", thm.jobs, "Scan this many h values concurrently")->check(kPositive);

    WitnessArgs wit;
    auto* witness = app.add_subcommand("witness", "Search for a collision witness blocking candidate c");
    witness->add_option("--h", wit.h, "Order h")->required()->check(kPositive);
    witness->add_option("--c", wit.c, "Candidate c >= 1")->required()->check(CLI::Range(Element{1}, std::numeric_limits<Element>::max()));

    Lemma1Args lem;
    auto* lemma1 = app.add_subcommand("lemma1", "Evaluate the blocked-candidate interval family at h");
    lemma1->add_option("--h", lem.h, "Order h >= 2")->required()->check(CLI::Range(2u, 1'000'000u));
    lemma1->add_flag("--brief", lem.brief, "Omit the per-y2 / per-x2 pieces");

    BenchArgs ben;
    auto* bench = app.add_subcommand("bench", "Measure candidate-scan throughput and table memory");
    bench->add_option("--h", ben.h, "Order h")->required()->check(kPositive);
    bench->add_option("--terms", ben.terms, "Terms to compute")->check(kPositive);
    bench->add_option("--jobs", ben.jobs, "Threads for the candidate scan")->check(kPositive);

    try {
        app.parse(argc, argv);
        if (*theorem && thm.h_min > thm.h_max) throw InvalidInput("--h-min must not exceed --h-max");
        if (*generate) return run_generate(gen, out);
        if (*verify) return run_verify(ver, out);
        if (*theorem) return run_theorem(thm, out);
        if (*witness) return run_witness(wit, out);
        if (*lemma1) return run_lemma1(lem, out);
        if (*bench) return run_bench(ben, out);
        return kUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kResource;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

}  // namespace bhseq::cli
