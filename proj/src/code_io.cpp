#include "ccode/code_io.hpp"

#include <charconv>
#include <vector>

namespace ccode {

namespace {

// Tokenizes the non-comment part of the file into integers.
std::vector<long> int_tokens(std::string_view text) {
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (c == '#') {
            while (pos < text.size() && text[pos] != '\n') ++pos;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ',') {
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\r' &&
               text[end] != '\n' && text[end] != ',' && text[end] != '#')
            ++end;
        long value = 0;
        auto [p, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
        if (ec != std::errc() || p != text.data() + end)
            throw ParseError("invalid token '" + std::string(text.substr(pos, end - pos)) + "'");
        out.push_back(value);
        pos = end;
    }
    return out;
}

}  // namespace

CircuitCode parse_code_file(std::string_view text) {
    const std::vector<long> tok = int_tokens(text);
    if (tok.size() < 3) throw ParseError("missing header 'n k N'");
    const long n = tok[0], k = tok[1], count = tok[2];
    if (n < 1 || n > kMaxDimension) throw ParseError("dimension out of range: " + std::to_string(n));
    if (k < 1 || k > n) throw ParseError("claimed spread out of range: " + std::to_string(k));
    if (count < 0) throw ParseError("negative length");
    if (tok.size() - 3 != static_cast<std::size_t>(count))
        throw LengthMismatch("header says " + std::to_string(count) + " elements, body has " +
                             std::to_string(tok.size() - 3));
    std::vector<int> elems;
    elems.reserve(static_cast<std::size_t>(count));
    for (std::size_t i = 3; i < tok.size(); ++i) {
        if (tok[i] < 1 || tok[i] > n)
            throw ElementOutOfRange("transition element " + std::to_string(tok[i]) +
                                    " outside [1, " + std::to_string(n) + "]");
        elems.push_back(static_cast<int>(tok[i]));
    }
    return CircuitCode(static_cast<int>(n), static_cast<int>(k), TransitionSequence(std::move(elems)));
}

std::string serialize_code_file(const CircuitCode& code) {
    std::string out = std::to_string(code.dimension()) + " " + std::to_string(code.claimed_spread()) +
                      " " + std::to_string(code.length()) + "\n";
    const auto& seq = code.seq();
    for (std::size_t i = 0; i < seq.size(); ++i) {
        out += std::to_string(seq[i]);
        out += (i + 1) % 30 == 0 || i + 1 == seq.size() ? '\n' : ' ';
    }
    return out;
}

std::string export_table_csv(const BoundTable& table) {
    const GridRange& r = table.range();
    std::string out = "n";
    for (int k = r.k_lo; k <= r.k_hi; ++k) out += "," + std::to_string(k);
    out += "\n";
    for (int n = r.n_lo; n <= r.n_hi; ++n) {
        out += std::to_string(n);
        for (int k = r.k_lo; k <= r.k_hi; ++k) {
            out += ",";
            if (BoundEntryPtr e = table.find(n, k)) out += e->value.str();
        }
        out += "\n";
    }
    return out;
}

std::string export_table_text(const BoundTable& table) {
    std::string out;
    for (const BoundEntryPtr& e : table.entries()) {
        out += "K(" + std::to_string(e->n) + "," + std::to_string(e->k) + ") >= " + e->value.str();
        if (e->exact) out += " (exact)";
        out += "  via " + chain_line(*e);
        if (!e->note.empty()) out += "  {" + e->note + "}";
        out += "\n";
    }
    return out;
}

}  // namespace ccode
