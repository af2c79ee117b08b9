#include "sasyno/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace sasyno {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool parse_finite_double(const std::string& text, double& out) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && std::isfinite(out);
}

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(trim(line.substr(start)));
            break;
        }
        cells.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return cells;
}

}  // namespace

LabelColumn LabelColumn::parse(const std::string& text) {
    const std::string t = trim(text);
    if (t == "last") return last();
    if (!t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) {
            return std::isdigit(c);
        })) {
        return at(static_cast<std::size_t>(std::stoull(t)));
    }
    if (t.empty()) {
        throw CsvError("label column selector is empty");
    }
    return named(t);
}

std::size_t LabelColumn::resolve(const std::vector<std::string>& header,
                                 std::size_t column_count) const {
    switch (kind_) {
        case Kind::Last:
            return column_count - 1;
        case Kind::Index:
            if (index_ >= column_count) {
                std::ostringstream msg;
                msg << "label column index " << index_ << " out of range, file has "
                    << column_count << " columns";
                throw CsvError(msg.str());
            }
            return index_;
        case Kind::Name: {
            const auto it = std::find(header.begin(), header.end(), name_);
            if (it == header.end()) {
                throw CsvError("label column '" + name_ + "' not found in header");
            }
            return static_cast<std::size_t>(it - header.begin());
        }
    }
    throw CsvError("unreachable label column kind");
}

CsvTable read_csv(const std::filesystem::path& path, const LabelColumn& label) {
    std::ifstream in(path);
    if (!in) {
        throw CsvError("cannot open file: " + path.string());
    }

    std::vector<std::vector<std::string>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        std::vector<std::string> cells = split_row(line);
        if (!rows.empty() && cells.size() != rows.front().size()) {
            std::ostringstream msg;
            msg << "ragged row " << line_no << ": expected " << rows.front().size()
                << " columns, found " << cells.size();
            throw CsvError(msg.str(), line_no);
        }
        rows.push_back(std::move(cells));
    }
    if (rows.empty()) {
        throw CsvError("empty file: " + path.string());
    }

    const std::size_t ncols = rows.front().size();
    if (ncols < 2) {
        throw CsvError("need at least one feature column plus a label column");
    }

    // When selecting the label by name, row 1 must be a header. Otherwise
    // row 1 is a header iff any of its non-label cells is non-numeric.
    std::size_t label_col;
    bool has_header;
    if (label.is_name()) {
        label_col = label.resolve(rows.front(), ncols);
        has_header = true;
    } else {
        label_col = label.resolve({}, ncols);
        has_header = false;
        for (std::size_t c = 0; c < ncols && !has_header; ++c) {
            double unused;
            if (c != label_col && !parse_finite_double(rows.front()[c], unused)) {
                has_header = true;
            }
        }
    }

    CsvTable table;
    table.label_col = label_col;
    std::size_t first_data = 0;
    if (has_header) {
        table.header = rows.front();
        first_data = 1;
        if (rows.size() == 1) {
            throw CsvError("no data rows in file: " + path.string());
        }
    }

    table.data = Dataset(ncols - 1);
    table.data.reserve(rows.size() - first_data);
    for (std::size_t r = first_data; r < rows.size(); ++r) {
        Sample s;
        s.features.reserve(ncols - 1);
        for (std::size_t c = 0; c < ncols; ++c) {
            if (c == label_col) {
                s.label = rows[r][c];
                continue;
            }
            double v;
            if (!parse_finite_double(rows[r][c], v)) {
                std::ostringstream msg;
                msg << "non-numeric feature cell at row " << (r + 1) << ", column "
                    << (c + 1) << ": '" << rows[r][c] << "'";
                throw CsvError(msg.str(), r + 1, c + 1);
            }
            s.features.push_back(v);
        }
        table.data.add(std::move(s));
    }
    return table;
}

Dataset load_csv(const std::filesystem::path& path, const LabelColumn& label) {
    return read_csv(path, label).data;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

void write_csv(const std::filesystem::path& path, const Dataset& d,
               const std::vector<std::string>& header, std::size_t label_col) {
    const std::size_t ncols = d.dimensionality() + 1;
    if (label_col >= ncols) {
        throw CsvError("write_csv: label column position out of range");
    }
    if (!header.empty() && header.size() != ncols) {
        throw CsvError("write_csv: header width does not match the dataset");
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw CsvError("cannot open file for writing: " + path.string());
    }
    auto write_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) out << ',';
            out << cells[c];
        }
        out << '\n';
    };

    if (!header.empty()) write_row(header);
    std::vector<std::string> cells(ncols);
    for (const Sample& s : d) {
        std::size_t f = 0;
        for (std::size_t c = 0; c < ncols; ++c) {
            cells[c] = (c == label_col) ? s.label : format_double(s.features[f++]);
        }
        write_row(cells);
    }
    if (!out) {
        throw CsvError("write failed: " + path.string());
    }
}

}  // namespace sasyno
