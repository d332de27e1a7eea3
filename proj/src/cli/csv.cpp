#include "wmw/cli/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

namespace wmw::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view text, double& out) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return false;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
    return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

bool is_column_number(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::size_t resolve_column(const std::vector<std::string>* header, const std::string& column,
                           const char* what) {
    if (column.empty()) return 0;
    if (header) {
        const auto it = std::find_if(header->begin(), header->end(),
                                     [&](const std::string& h) { return trim(h) == column; });
        if (it != header->end()) return static_cast<std::size_t>(it - header->begin());
    }
    if (is_column_number(column)) {
        const std::size_t n = std::stoul(column);
        if (n >= 1) return n - 1;
    }
    throw CsvError(std::string("unknown ") + what + " column: " + column);
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::size_t first_data_line = 1;
};

Table load(std::istream& in, const CsvSpec& spec) {
    Table t;
    t.rows = parse_csv(in, spec.delimiter);
    if (spec.header) {
        if (t.rows.empty()) throw CsvError("missing header row");
        t.header = std::move(t.rows.front());
        t.rows.erase(t.rows.begin());
        t.first_data_line = 2;
    }
    return t;
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CsvError("cannot open " + path);
    return in;
}

// Numeric value at `col`, or false when the row should be skipped.
bool value_at(const std::vector<std::string>& row, std::size_t col, std::size_t record,
              const CsvSpec& spec, double& out) {
    if (col < row.size() && parse_double(row[col], out)) return true;
    if (spec.skip_bad) return false;
    throw CsvError("record " + std::to_string(record) + ": " +
                   (col < row.size() ? "not a number: '" + row[col] + "'" : std::string("missing column")));
}

}  // namespace

std::vector<std::vector<std::string>> parse_csv(std::istream& in, char delimiter) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;

    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_record = [&] {
        end_field();
        const bool blank = record.size() == 1 && trim(record.front()).empty();
        if (!blank) records.push_back(std::move(record));
        record.clear();
    };

    char c = 0;
    while (in.get(c)) {
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"' && trim(field).empty()) {
            field.clear();
            in_quotes = true;
            field_started = true;
        } else if (c == delimiter) {
            end_field();
        } else if (c == '\n') {
            end_record();
        } else if (c == '\r') {
            if (in.peek() == '\n') in.get(c);
            end_record();
        } else {
            field.push_back(c);
            field_started = true;
        }
    }
    if (in_quotes) throw CsvError("unterminated quoted field");
    if (field_started || !field.empty() || !record.empty()) end_record();
    return records;
}

std::vector<double> read_values(std::istream& in, const CsvSpec& spec) {
    const Table t = load(in, spec);
    const std::size_t col = resolve_column(spec.header ? &t.header : nullptr, spec.value_column, "value");
    std::vector<double> values;
    values.reserve(t.rows.size());
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        double v = 0.0;
        if (value_at(t.rows[r], col, r + t.first_data_line, spec, v)) values.push_back(v);
    }
    return values;
}

std::vector<double> read_values_file(const std::string& path, const CsvSpec& spec) {
    auto in = open(path);
    return read_values(in, spec);
}

GroupedValues read_grouped(std::istream& in, const CsvSpec& spec) {
    const Table t = load(in, spec);
    const auto* header = spec.header ? &t.header : nullptr;
    if (spec.group_column.empty()) throw CsvError("single-file mode needs a group column");
    const std::size_t gcol = resolve_column(header, spec.group_column, "group");
    const std::size_t vcol = resolve_column(header, spec.value_column, "value");

    GroupedValues g;
    g.x_label = spec.group_x_label;
    g.y_label = spec.group_y_label;
    const bool explicit_labels = !g.x_label.empty() && !g.y_label.empty();
    if (!explicit_labels && (!g.x_label.empty() || !g.y_label.empty())) {
        throw CsvError("give both group labels or neither");
    }

    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        const std::size_t record = r + t.first_data_line;
        if (gcol >= row.size()) {
            if (spec.skip_bad) continue;
            throw CsvError("record " + std::to_string(record) + ": missing group column");
        }
        const std::string label(trim(row[gcol]));
        if (!explicit_labels) {
            if (g.x_label.empty()) {
                g.x_label = label;
            } else if (label != g.x_label && g.y_label.empty()) {
                g.y_label = label;
            } else if (label != g.x_label && label != g.y_label) {
                throw CsvError("more than two groups in column " + spec.group_column);
            }
        } else if (label != g.x_label && label != g.y_label) {
            continue;
        }
        double v = 0.0;
        if (!value_at(row, vcol, record, spec, v)) continue;
        (label == g.x_label ? g.x : g.y).push_back(v);
    }
    if (g.x.empty() || g.y.empty()) throw CsvError("need exactly two non-empty groups");
    return g;
}

GroupedValues read_grouped_file(const std::string& path, const CsvSpec& spec) {
    auto in = open(path);
    return read_grouped(in, spec);
}

}  // namespace wmw::cli
