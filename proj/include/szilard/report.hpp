#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace szilard::report {

inline constexpr const char* kUndefined = "undefined";

/// Nine significant digits in scientific notation.
std::string number(double value);
std::string number(const std::optional<double>& value);
std::string integer(long value);

/// Rows of preformatted cells under a mandatory header.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row);
};

/// Comma separated, LF line endings, header first.
void write_csv(std::ostream& out, const Table& table);

/// Flat JSON object; values are raw JSON text.
class JsonObject {
public:
    void add_raw(std::string key, std::string json);
    void add_number(std::string key, double value);
    void add_number(std::string key, const std::optional<double>& value);
    void add_integer(std::string key, long value);
    void add_string(std::string key, const std::string& value);
    void add_bool(std::string key, bool value);
    void add_numbers(std::string key, const std::vector<double>& values);

    void write(std::ostream& out) const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

/// A single-row table as a flat object. Cells that parse as numbers stay numbers.
JsonObject row_object(const Table& table);

std::string quote(const std::string& text);

}  // namespace szilard::report
