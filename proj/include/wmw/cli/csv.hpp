#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "wmw/error.hpp"

namespace wmw::cli {

class CsvError : public Error {
public:
    using Error::Error;
};

struct CsvSpec {
    enum class Mode { TwoFiles, SingleFile };
    Mode mode = Mode::TwoFiles;
    /// Header name, or a 1-based column number. Empty selects column 1.
    std::string value_column;
    std::string group_column;
    /// When empty, the two distinct labels are taken in order of first appearance.
    std::string group_x_label;
    std::string group_y_label;
    char delimiter = ',';
    bool header = true;
    bool skip_bad = false;
};

/// RFC 4180 records: quoted fields may contain delimiters, doubled quotes and
/// line breaks. Blank lines are dropped.
std::vector<std::vector<std::string>> parse_csv(std::istream& in, char delimiter);

std::vector<double> read_values(std::istream& in, const CsvSpec& spec);
std::vector<double> read_values_file(const std::string& path, const CsvSpec& spec);

struct GroupedValues {
    std::vector<double> x;
    std::vector<double> y;
    std::string x_label;
    std::string y_label;
};

GroupedValues read_grouped(std::istream& in, const CsvSpec& spec);
GroupedValues read_grouped_file(const std::string& path, const CsvSpec& spec);

}  // namespace wmw::cli
