#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "sasyno/dataset.hpp"

namespace sasyno {

// Parse or I/O failure; positions are 1-based (row 0 / col 0 mean "not
// applicable"). The message always carries the position when one exists.
class CsvError : public std::runtime_error {
public:
    CsvError(std::string message, std::size_t row = 0, std::size_t col = 0)
        : std::runtime_error(std::move(message)), row_(row), col_(col) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t row_;
    std::size_t col_;
};

// Selects which column holds the class label: a 0-based index, a header
// name, or the last column.
class LabelColumn {
public:
    static LabelColumn last() { return LabelColumn(Kind::Last, 0, {}); }
    static LabelColumn at(std::size_t index) { return LabelColumn(Kind::Index, index, {}); }
    static LabelColumn named(std::string name) {
        return LabelColumn(Kind::Name, 0, std::move(name));
    }

    // "last" -> last column; all-digit text -> 0-based index; anything else
    // -> header name.
    static LabelColumn parse(const std::string& text);

    bool is_name() const noexcept { return kind_ == Kind::Name; }
    const std::string& name() const noexcept { return name_; }

    // Resolves to a concrete column index. `header` is empty when the file
    // has none; name selection then fails.
    std::size_t resolve(const std::vector<std::string>& header, std::size_t column_count) const;

private:
    enum class Kind { Last, Index, Name };
    LabelColumn(Kind kind, std::size_t index, std::string name)
        : kind_(kind), index_(index), name_(std::move(name)) {}

    Kind kind_;
    std::size_t index_;
    std::string name_;
};

// A loaded CSV file together with enough layout to write a matching file
// back out.
struct CsvTable {
    Dataset data;
    std::vector<std::string> header;  // empty when the file had none
    std::size_t label_col = 0;        // resolved 0-based position
};

// Comma-separated, UTF-8. The first row is detected as a header when any of
// its non-label cells fails to parse as a number. Feature cells must be
// finite reals; errors name the offending row and column.
CsvTable read_csv(const std::filesystem::path& path, const LabelColumn& label);

Dataset load_csv(const std::filesystem::path& path, const LabelColumn& label);

// Writes `header` (when nonempty) then one row per sample, with the label
// placed at `label_col` and features keeping their order around it. Numbers
// are rendered shortest-round-trip, so equal datasets produce equal bytes.
void write_csv(const std::filesystem::path& path, const Dataset& d,
               const std::vector<std::string>& header, std::size_t label_col);

// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

}  // namespace sasyno
