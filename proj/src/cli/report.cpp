#include "szilard/report.hpp"

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>

namespace szilard::report {

std::string number(double value) {
    if (std::isnan(value))
        return kUndefined;
    return fmt::format("{:.8e}", value);
}

std::string number(const std::optional<double>& value) {
    return value ? number(*value) : std::string(kUndefined);
}

std::string integer(long value) {
    return fmt::format("{}", value);
}

void Table::add(std::vector<std::string> row) {
    if (row.size() != header.size())
        throw std::logic_error("table row width does not match the header");
    rows.push_back(std::move(row));
}

void write_csv(std::ostream& out, const Table& table) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out << ',';
            out << cells[i];
        }
        out << '\n';
    };
    line(table.header);
    for (const auto& row : table.rows)
        line(row);
}

std::string quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        default: out += c;
        }
    }
    return out + '"';
}

void JsonObject::add_raw(std::string key, std::string json) {
    entries_.emplace_back(std::move(key), std::move(json));
}

void JsonObject::add_number(std::string key, double value) {
    add_raw(std::move(key), std::isfinite(value) ? number(value) : quote(kUndefined));
}

void JsonObject::add_number(std::string key, const std::optional<double>& value) {
    if (value)
        add_number(std::move(key), *value);
    else
        add_raw(std::move(key), quote(kUndefined));
}

void JsonObject::add_integer(std::string key, long value) {
    add_raw(std::move(key), integer(value));
}

void JsonObject::add_string(std::string key, const std::string& value) {
    add_raw(std::move(key), quote(value));
}

void JsonObject::add_bool(std::string key, bool value) {
    add_raw(std::move(key), value ? "true" : "false");
}

void JsonObject::add_numbers(std::string key, const std::vector<double>& values) {
    std::string json = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            json += ',';
        json += std::isfinite(values[i]) ? number(values[i]) : quote(kUndefined);
    }
    add_raw(std::move(key), json + "]");
}

void JsonObject::write(std::ostream& out) const {
    out << '{';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out << ',';
        out << quote(entries_[i].first) << ':' << entries_[i].second;
    }
    out << "}\n";
}

JsonObject row_object(const Table& table) {
    if (table.rows.size() != 1)
        throw std::invalid_argument("JSON output holds a single result; use --format csv for " +
                                    std::to_string(table.rows.size()) + " rows");
    JsonObject obj;
    const auto& row = table.rows.front();
    for (std::size_t i = 0; i < row.size(); ++i) {
        const std::string& cell = row[i];
        bool numeric = !cell.empty() && cell != kUndefined;
        for (char c : cell)
            if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.' ||
                  c == 'e'))
                numeric = false;
        obj.add_raw(table.header[i], numeric ? cell : quote(cell));
    }
    return obj;
}

}  // namespace szilard::report
