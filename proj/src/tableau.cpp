#include "knc/tableau.hpp"

#include <istream>
#include <sstream>

namespace knc {

bool column_strictly_increasing(const Column& c) {
    for (size_t i = 0; i + 1 < c.size(); ++i)
        if (!letter_less(c[i], c[i + 1])) return false;
    return true;
}

Tableau::Tableau(SkewShape s, std::vector<Column> cols) : shape(std::move(s)), columns(std::move(cols)) {
    if (static_cast<int>(columns.size()) != shape.column_count())
        throw input_error("column count does not match shape");
    for (int j = 0; j < shape.column_count(); ++j)
        if (static_cast<int>(columns[static_cast<size_t>(j)].size()) != shape.col_len(j))
            throw input_error("column " + std::to_string(j + 1) + " does not match shape");
}

Tableau Tableau::straight(std::vector<Column> cols) {
    // Outer shape is the conjugate of the column length sequence.
    std::vector<int> lens;
    lens.reserve(cols.size());
    for (const Column& c : cols) lens.push_back(static_cast<int>(c.size()));
    if (!is_partition(lens)) throw input_error("column lengths of a straight tableau must weakly decrease");
    return Tableau(SkewShape(conjugate(lens), {}), std::move(cols));
}

std::optional<Letter> Tableau::cell(int row, int col) const {
    if (col < 1 || col > shape.column_count()) return std::nullopt;
    int top = shape.col_top(col - 1);
    int len = shape.col_len(col - 1);
    if (row <= top || row > top + len) return std::nullopt;
    return columns[static_cast<size_t>(col - 1)][static_cast<size_t>(row - top - 1)];
}

std::vector<std::vector<Letter>> Tableau::rows() const {
    std::vector<std::vector<Letter>> out(shape.outer.size());
    for (size_t r = 0; r < shape.outer.size(); ++r) {
        int row = static_cast<int>(r) + 1;
        for (int c = 1; c <= shape.outer[r]; ++c)
            if (auto x = cell(row, c)) out[r].push_back(*x);
    }
    return out;
}

Word reading_word(const Tableau& t) {
    Word w;
    w.reserve(static_cast<size_t>(t.cells()));
    for (auto it = t.columns.rbegin(); it != t.columns.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

WeightVector tableau_weight(const Tableau& t, int n) { return word_weight(reading_word(t), n); }

bool tableau_less(const Tableau& a, const Tableau& b) {
    if (a.shape.outer != b.shape.outer) return a.shape.outer < b.shape.outer;
    if (a.shape.inner != b.shape.inner) return a.shape.inner < b.shape.inner;
    return word_less(reading_word(a), reading_word(b));
}

bool is_semistandard(const Tableau& t, std::string* why) {
    for (size_t j = 0; j < t.columns.size(); ++j) {
        if (!column_strictly_increasing(t.columns[j])) {
            if (why) *why = "column " + std::to_string(j + 1) + " is not strictly increasing";
            return false;
        }
    }
    for (size_t r = 0; r < t.shape.outer.size(); ++r) {
        int row = static_cast<int>(r) + 1;
        std::optional<Letter> prev;
        for (int c = 1; c <= t.shape.outer[r]; ++c) {
            auto x = t.cell(row, c);
            if (!x) continue;
            if (prev && letter_less(*x, *prev)) {
                if (why)
                    *why = "row " + std::to_string(row) + " is not weakly increasing at column " +
                           std::to_string(c);
                return false;
            }
            prev = x;
        }
    }
    return true;
}

Tableau tableau_from_reading_word(const Word& w, const SkewShape& shape) {
    if (static_cast<int>(w.size()) != shape.cells())
        throw invariant_error("word length does not match shape");
    int k = shape.column_count();
    std::vector<Column> cols(static_cast<size_t>(k));
    size_t pos = 0;
    for (int j = k - 1; j >= 0; --j) {
        int len = shape.col_len(j);
        cols[static_cast<size_t>(j)].assign(w.begin() + static_cast<long>(pos),
                                            w.begin() + static_cast<long>(pos + static_cast<size_t>(len)));
        pos += static_cast<size_t>(len);
    }
    return Tableau(shape, std::move(cols));
}

std::string format_tableau(const Tableau& t) {
    std::string out;
    for (size_t r = 0; r < t.shape.outer.size(); ++r) {
        int row = static_cast<int>(r) + 1;
        for (int c = 1; c <= t.shape.outer[r]; ++c) {
            if (c > 1) out += ' ';
            auto x = t.cell(row, c);
            out += x ? std::to_string(*x) : std::string(".");
        }
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::stringstream ss(line);
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace

Tableau parse_tableau(const std::string& text) {
    std::stringstream ss(text);
    return read_tableau(ss);
}

Tableau read_tableau(std::istream& in) {
    std::vector<int> outer, inner;
    std::vector<std::vector<Letter>> grid;  // per row: entries after the dots
    std::string line;
    while (std::getline(in, line)) {
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            if (grid.empty()) continue;  // skip leading blank lines
            break;
        }
        int dots = 0;
        std::vector<Letter> entries;
        for (const auto& tok : tokens) {
            if (tok == ".") {
                if (!entries.empty()) throw input_error("skew cell '.' after an entry");
                ++dots;
            } else {
                try {
                    size_t pos = 0;
                    entries.push_back(std::stoi(tok, &pos));
                    if (pos != tok.size()) throw std::invalid_argument(tok);
                } catch (const std::exception&) {
                    throw input_error("cannot parse tableau entry '" + tok + "'");
                }
            }
        }
        inner.push_back(dots);
        outer.push_back(dots + static_cast<int>(entries.size()));
        grid.push_back(std::move(entries));
    }
    if (grid.empty()) return Tableau{};
    SkewShape shape(outer, inner);  // validates both partitions
    std::vector<Column> cols(static_cast<size_t>(shape.column_count()));
    for (int j = 0; j < shape.column_count(); ++j) {
        int top = shape.col_top(j);
        int len = shape.col_len(j);
        for (int r = top; r < top + len; ++r)
            cols[static_cast<size_t>(j)].push_back(
                grid[static_cast<size_t>(r)][static_cast<size_t>(j - inner[static_cast<size_t>(r)])]);
    }
    return Tableau(shape, std::move(cols));
}

}  // namespace knc
