#include "pseudocone/alist.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace pseudocone {

namespace {

struct Lines {
    std::vector<std::string> text;
    std::vector<std::size_t> numbers;  // original 1-based line numbers
};

Lines split_nonblank_lines(const std::string& text) {
    Lines out;
    std::size_t lineno = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (std::all_of(line.begin(), line.end(),
                        [](unsigned char c) { return std::isspace(c); }))
            continue;
        out.text.push_back(line);
        out.numbers.push_back(lineno);
    }
    return out;
}

std::vector<long long> parse_ints(const std::string& line, std::size_t lineno) {
    std::vector<long long> vals;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            vals.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("not an integer: '" + tok + "'", lineno);
        }
    }
    return vals;
}

bool looks_dense(const std::string& first_line) {
    std::istringstream in(first_line);
    std::string tok;
    std::size_t tokens = 0;
    bool binary = true;
    while (in >> tok) {
        ++tokens;
        for (char c : tok)
            if (c != '0' && c != '1') binary = false;
    }
    // an alist header has exactly two integers; a dense row is one 0/1 token
    return tokens == 1 && binary;
}

BinaryMatrix parse_dense(const Lines& lines) {
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < lines.text.size(); ++i) {
        std::istringstream in(lines.text[i]);
        std::string tok;
        in >> tok;
        std::string extra;
        if (in >> extra) throw ParseError("dense row must be a single 0/1 token", lines.numbers[i]);
        std::vector<int> row;
        for (char c : tok) {
            if (c != '0' && c != '1')
                throw ParseError("dense row contains a non-binary character", lines.numbers[i]);
            row.push_back(c - '0');
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("dense rows have inconsistent lengths", lines.numbers[i]);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix", 1);
    return BinaryMatrix::from_rows(rows);
}

}  // namespace

BinaryMatrix parse_alist(const std::string& text) {
    const Lines lines = split_nonblank_lines(text);
    if (lines.text.empty()) throw ParseError("empty input", 1);
    if (looks_dense(lines.text.front())) return parse_dense(lines);

    std::size_t cursor = 0;
    auto next_line = [&]() -> std::pair<std::vector<long long>, std::size_t> {
        if (cursor >= lines.text.size())
            throw ParseError("unexpected end of file",
                             lines.numbers.empty() ? 1 : lines.numbers.back());
        const auto vals = parse_ints(lines.text[cursor], lines.numbers[cursor]);
        const auto num = lines.numbers[cursor];
        ++cursor;
        return {vals, num};
    };

    const auto [header, header_line] = next_line();
    if (header.size() != 2 || header[0] < 1 || header[1] < 1)
        throw ParseError("header must be 'n m' with positive dimensions", header_line);
    const auto n = static_cast<std::size_t>(header[0]);
    const auto m = static_cast<std::size_t>(header[1]);

    const auto [maxdeg, maxdeg_line] = next_line();
    if (maxdeg.size() != 2 || maxdeg[0] < 0 || maxdeg[1] < 0)
        throw ParseError("expected 'max_col_weight max_row_weight'", maxdeg_line);

    const auto [col_weights, cw_line] = next_line();
    if (col_weights.size() != n) throw ParseError("expected n column weights", cw_line);
    const auto [row_weights, rw_line] = next_line();
    if (row_weights.size() != m) throw ParseError("expected m row weights", rw_line);

    BinaryMatrix h(m, n);
    std::vector<std::vector<std::size_t>> col_lists(n);
    for (std::size_t c = 0; c < n; ++c) {
        const auto [vals, lineno] = next_line();
        for (long long v : vals) {
            if (v == 0) continue;  // padding
            if (v < 1 || v > static_cast<long long>(m))
                throw ParseError("row index out of range", lineno);
            col_lists[c].push_back(static_cast<std::size_t>(v - 1));
        }
        if (col_lists[c].size() != static_cast<std::size_t>(col_weights[c]))
            throw ParseError("column neighbor count disagrees with declared weight", lineno);
        for (auto r : col_lists[c]) h.set(r, c, true);
    }
    for (std::size_t r = 0; r < m; ++r) {
        const auto [vals, lineno] = next_line();
        std::vector<std::size_t> nbrs;
        for (long long v : vals) {
            if (v == 0) continue;
            if (v < 1 || v > static_cast<long long>(n))
                throw ParseError("column index out of range", lineno);
            nbrs.push_back(static_cast<std::size_t>(v - 1));
        }
        if (nbrs.size() != static_cast<std::size_t>(row_weights[r]))
            throw ParseError("row neighbor count disagrees with declared weight", lineno);
        std::sort(nbrs.begin(), nbrs.end());
        const auto from_cols = h.row_support(r);
        if (nbrs != from_cols)
            throw InconsistentAdjacency("row " + std::to_string(r + 1) +
                                        ": row list disagrees with column lists");
    }
    return h;
}

std::string serialize_alist(const BinaryMatrix& h) {
    const std::size_t n = h.cols();
    const std::size_t m = h.rows();
    std::size_t max_col = 0, max_row = 0;
    std::vector<std::vector<std::size_t>> cols(n), rows(m);
    for (std::size_t r = 0; r < m; ++r) {
        rows[r] = h.row_support(r);
        max_row = std::max(max_row, rows[r].size());
        for (auto c : rows[r]) cols[c].push_back(r);
    }
    for (std::size_t c = 0; c < n; ++c) max_col = std::max(max_col, cols[c].size());

    std::ostringstream out;
    out << n << " " << m << "\n" << max_col << " " << max_row << "\n";
    for (std::size_t c = 0; c < n; ++c) out << (c ? " " : "") << cols[c].size();
    out << "\n";
    for (std::size_t r = 0; r < m; ++r) out << (r ? " " : "") << rows[r].size();
    out << "\n";
    auto emit_padded = [&](const std::vector<std::size_t>& list, std::size_t width) {
        for (std::size_t i = 0; i < width; ++i)
            out << (i ? " " : "") << (i < list.size() ? list[i] + 1 : 0);
        out << "\n";
    };
    for (std::size_t c = 0; c < n; ++c) emit_padded(cols[c], max_col);
    for (std::size_t r = 0; r < m; ++r) emit_padded(rows[r], max_row);
    return out.str();
}

}  // namespace pseudocone
