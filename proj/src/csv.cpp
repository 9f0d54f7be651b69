#include "leosim/csv.hpp"

#include <charconv>

#include "leosim/errors.hpp"

namespace leosim::csv {

std::vector<std::vector<std::string>> parse(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (text[i] == '\n' || text[i] == '\r') {  // blank line
            ++i;
            continue;
        }
        if (text[i] == '#') {  // comment line
            while (i < n && text[i] != '\n') ++i;
            continue;
        }
        std::vector<std::string> row;
        std::string field;
        bool in_quotes = false;
        while (i < n) {
            const char c = text[i];
            if (in_quotes) {
                if (c == '"') {
                    if (i + 1 < n && text[i + 1] == '"') {
                        field += '"';
                        i += 2;
                    } else {
                        in_quotes = false;
                        ++i;
                    }
                } else {
                    field += c;
                    ++i;
                }
                continue;
            }
            if (c == '"') {
                in_quotes = true;
                ++i;
            } else if (c == ',') {
                row.push_back(std::move(field));
                field.clear();
                ++i;
            } else if (c == '\r') {
                ++i;
            } else if (c == '\n') {
                ++i;
                break;
            } else {
                field += c;
                ++i;
            }
        }
        if (in_quotes) throw DataError("csv: unterminated quoted field");
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string escape_field(std::string_view field) {
    const bool needs_quotes =
        field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += escape_field(fields[i]);
    }
    return out;
}

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw InvalidInputError("format_double: conversion failed");
    return std::string(buf, ptr);
}

}  // namespace leosim::csv
