#include "cli/formats.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include "bhseq/errors.hpp"
#include "bhseq/representations.hpp"

namespace bhseq::cli {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string_view strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

Element parse_element(std::string_view token, std::size_t line_no) {
    Element v = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (token.empty() || ec != std::errc() || ptr != end) {
        const std::string where = line_no ? " on line " + std::to_string(line_no) : std::string{};
        if (ec == std::errc::result_out_of_range) {
            throw OverflowError("value '" + std::string(token) + "'" + where + " exceeds 64 bits");
        }
        throw InvalidInput("expected a nonnegative integer" + where + ", got '" + std::string(token) + "'");
    }
    return v;
}

}  // namespace

void emit_bfile(const SequenceRecord& record, std::ostream& out) {
    for (std::size_t i = 0; i < record.terms.size(); ++i) out << i << ' ' << record.terms[i] << '\n';
}

std::vector<Element> read_bfile(std::istream& in) {
    std::vector<Element> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = strip_comment(line);
        if (body.empty()) continue;
        const auto space = body.find(' ');
        if (space == std::string_view::npos) {
            throw InvalidInput("b-file line " + std::to_string(line_no) + " lacks 'index value'");
        }
        const Element index = parse_element(body.substr(0, space), line_no);
        if (index != values.size()) {
            throw InvalidInput("b-file index " + std::to_string(index) + " on line " + std::to_string(line_no) +
                               ", expected " + std::to_string(values.size()));
        }
        values.push_back(parse_element(trim(body.substr(space + 1)), line_no));
    }
    return values;
}

nlohmann::ordered_json sequence_json(const SequenceRecord& record) {
    nlohmann::ordered_json elapsed = nlohmann::ordered_json::array();
    for (auto ns : record.elapsed) elapsed.push_back(static_cast<double>(ns.count()) / 1e6);
    return {
        {"h", record.h},
        {"k", record.k_max},
        {"offset", 0},
        {"terms", record.terms},
        {"cap", record.scan_cap},
        {"elapsed_ms", elapsed},
    };
}

void emit_csv(const SequenceRecord& record, std::ostream& out) {
    out << "# h=" << record.h << " offset=0\n";
    out << "index,value\n";
    for (std::size_t i = 0; i < record.terms.size(); ++i) out << i << ',' << record.terms[i] << '\n';
}

std::vector<Element> read_set(std::istream& in) {
    std::vector<Element> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = strip_comment(line);
        if (!body.empty()) values.push_back(parse_element(body, line_no));
    }
    return normalize_set(std::move(values));
}

std::vector<Element> parse_set_literal(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '{') {
        if (text.back() != '}') throw InvalidInput("unterminated set literal");
        text = text.substr(1, text.size() - 2);
    }
    std::vector<Element> values;
    while (!text.empty()) {
        const auto comma = text.find(',');
        values.push_back(parse_element(trim(text.substr(0, comma)), 0));
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return normalize_set(std::move(values));
}

void emit_theorem_text(const std::vector<TheoremRow>& rows, std::ostream& out) {
    out << "h a4_greedy a4_formula a4_witness match\n";
    for (const auto& r : rows) {
        out << r.h << ' ' << r.a4_greedy << ' ' << r.a4_formula << ' '
            << (r.a4_witness ? std::to_string(*r.a4_witness) : "-") << ' ' << (r.match ? "MATCH" : "MISMATCH")
            << '\n';
    }
}

void emit_theorem_csv(const std::vector<TheoremRow>& rows, std::ostream& out) {
    out << "h,a4_greedy,a4_formula,a4_witness,match\n";
    for (const auto& r : rows) {
        out << r.h << ',' << r.a4_greedy << ',' << r.a4_formula << ','
            << (r.a4_witness ? std::to_string(*r.a4_witness) : "") << ',' << (r.match ? "MATCH" : "MISMATCH")
            << '\n';
    }
}

nlohmann::ordered_json theorem_json(const std::vector<TheoremRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        arr.push_back({
            {"h", r.h},
            {"a4_greedy", r.a4_greedy},
            {"a4_formula", r.a4_formula},
            {"a4_witness", r.a4_witness ? nlohmann::ordered_json(*r.a4_witness) : nlohmann::ordered_json(nullptr)},
            {"match", r.match},
        });
    }
    return arr;
}

}  // namespace bhseq::cli
