#include "umet/text_io.hpp"

#include <sstream>
#include <vector>

namespace umet {

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> split(const std::string& line, char separator) {
    std::vector<Token> out;
    std::size_t start = 0;
    while (start <= line.size()) {
        std::size_t end = line.find(separator, start);
        if (end == std::string::npos) end = line.size();
        std::string piece = line.substr(start, end - start);
        // trim surrounding blanks, keeping the column of the payload
        std::size_t lead = piece.find_first_not_of(" \t");
        if (lead == std::string::npos) {
            out.push_back({"", start + 1});
        } else {
            const std::size_t tail = piece.find_last_not_of(" \t");
            out.push_back({piece.substr(lead, tail - lead + 1), start + lead + 1});
        }
        if (end == line.size()) break;
        start = end + 1;
    }
    return out;
}

std::vector<Token> words(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i == line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(line);
    }
    return out;
}

Rat parse_rat_at(const Token& token, std::size_t line) {
    try {
        return Rat::parse(token.text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line, token.column);
    }
}

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t") == std::string::npos;
}

constexpr const char* kRangePrefix = "range:";

}  // namespace

RangeSet parse_range_set(const std::string& text) {
    std::vector<Rat> values;
    for (const Token& t : split(text, ',')) {
        if (t.text.empty()) throw ParseError("range set: empty entry", 1, t.column);
        values.push_back(parse_rat_at(t, 1));
    }
    try {
        return RangeSet(std::move(values));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1);
    }
}

std::string to_text(const RangeSet& range) {
    std::string out;
    for (std::size_t i = 0; i < range.size(); ++i) {
        if (i) out += ',';
        out += range[i].to_string();
    }
    return out;
}

StepFunction parse_step_function(const std::string& text) {
    const std::vector<std::string> lines = lines_of(text);
    std::size_t n = 0;
    while (n < lines.size() && is_blank(lines[n])) ++n;
    if (n == lines.size() || lines[n].rfind(kRangePrefix, 0) != 0)
        throw ParseError("step function: expected a leading 'range:' line", n + 1);
    const RangeSet range = parse_range_set(lines[n].substr(6));

    std::vector<StepFunction::Piece> pieces;
    for (std::size_t i = n + 1; i < lines.size(); ++i) {
        if (is_blank(lines[i])) continue;
        const std::vector<Token> w = words(lines[i]);
        if (w.size() != 2)
            throw ParseError("step function: expected 'bits value'", i + 1,
                             w.empty() ? 1 : w[0].column);
        CellPath cell;
        try {
            cell = CellPath::parse(w[0].text);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), i + 1, w[0].column);
        }
        pieces.push_back({cell, parse_rat_at(w[1], i + 1)});
    }
    try {
        return StepFunction(std::move(pieces), range);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1);
    }
}

std::string to_text(const StepFunction& fn) {
    std::string out = std::string(kRangePrefix) + " " + to_text(fn.range()) + "\n";
    for (const auto& [cell, value] : fn.pieces())
        out += cell.to_string() + " " + value.to_string() + "\n";
    return out;
}

FiniteUltraSpace parse_matrix(const std::string& text, bool strict) {
    const std::vector<std::string> lines = lines_of(text);
    std::size_t n = 0;
    while (n < lines.size() && is_blank(lines[n])) ++n;
    if (n == lines.size()) throw ParseError("matrix: no label line", n + 1);

    std::optional<RangeSet> declared;
    if (lines[n].rfind(kRangePrefix, 0) == 0) {
        declared = parse_range_set(lines[n].substr(6));
        ++n;
        while (n < lines.size() && is_blank(lines[n])) ++n;
        if (n == lines.size()) throw ParseError("matrix: no label line", n + 1);
    }

    std::vector<std::string> labels;
    for (const Token& t : words(lines[n])) labels.push_back(t.text);

    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> entries;
    for (std::size_t i = n + 1; i < lines.size(); ++i) {
        if (is_blank(lines[i])) continue;
        std::vector<Rat> row;
        for (const Token& t : words(lines[i])) {
            row.push_back(parse_rat_at(t, i + 1));
            entries.push_back(row.back());
        }
        if (row.size() != rows.size() + 1)
            throw ParseError("matrix: row " + std::to_string(rows.size() + 2) + " of the triangle needs " +
                                 std::to_string(rows.size() + 1) + " entries",
                             i + 1);
        rows.push_back(std::move(row));
    }
    RangeSet range = declared ? *declared : RangeSet::closure(entries);
    try {
        return FiniteUltraSpace::from_lower_triangle(std::move(labels), rows, strict,
                                                     std::move(range));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), n + 1);
    }
}

std::string to_text(const FiniteUltraSpace& space) {
    std::string out;
    std::vector<Rat> entries;
    for (std::size_t i = 0; i < space.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) entries.push_back(space.d(i, j));
    if (!(RangeSet::closure(entries) == space.range()))
        out += std::string(kRangePrefix) + " " + to_text(space.range()) + "\n";
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (i) out += ' ';
        out += space.label(i);
    }
    out += '\n';
    for (std::size_t i = 1; i < space.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (j) out += ' ';
            out += space.d(i, j).to_string();
        }
        out += '\n';
    }
    return out;
}

DecreasingSequence parse_sequence(const std::string& text) {
    std::vector<Rat> entries;
    const std::vector<std::string> lines = lines_of(text);
    std::size_t n = 0;
    while (n < lines.size() && is_blank(lines[n])) ++n;
    if (n == lines.size()) return DecreasingSequence();
    for (const Token& t : split(lines[n], ',')) {
        if (t.text.empty()) throw ParseError("sequence: empty entry", n + 1, t.column);
        entries.push_back(parse_rat_at(t, n + 1));
    }
    try {
        return DecreasingSequence(std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), n + 1);
    }
}

std::string to_text(const DecreasingSequence& sequence) {
    if (sequence.entries().empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < sequence.entries().size(); ++i) {
        if (i) out += ',';
        out += sequence.entries()[i].to_string();
    }
    return out;
}

}  // namespace umet
