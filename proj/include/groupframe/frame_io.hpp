// SPDX-License-Identifier: Apache-2.0
//
// groupframe: group frames with few distinct inner products
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

// Text frame file, version 1:
//
//   FRM1 <rows> <cols>
//   # key=value              (zero or more metadata lines)
//   <re>:<im> <re>:<im> ...  (rows lines, cols entries each)
//
// Numbers use the shortest decimal that round-trips, so parse(format(M))
// reproduces every entry bit for bit.

#include <charconv>
#include <cmath>
#include <cstddef>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "groupframe/frame.hpp"

namespace groupframe {

class FrameParseError : public std::runtime_error {
public:
    FrameParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

namespace detail {

inline void append_double(std::string& out, double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
}

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

inline std::vector<Token> split_ws(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

inline double parse_double(std::string_view s, std::size_t line, std::size_t column) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw FrameParseError(line, column, "malformed number '" + std::string(s) + "'");
    }
    if (!std::isfinite(v)) throw FrameParseError(line, column, "non-finite number");
    return v;
}

inline std::size_t parse_dim(std::string_view s, std::size_t line, std::size_t column) {
    std::size_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || v == 0) {
        throw FrameParseError(line, column, "bad dimension '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace detail

inline std::string format_frame(const FrameMatrix& frame) {
    std::string out = "FRM1 " + std::to_string(frame.rows()) + " " + std::to_string(frame.cols()) + "\n";
    for (const auto& [key, value] : frame.provenance().entries()) {
        if (key.empty() || key.find_first_of("=\n ") != std::string::npos || value.find('\n') != std::string::npos) {
            throw std::invalid_argument("format_frame: metadata entry '" + key + "' cannot be serialized");
        }
        out += "# " + key + "=" + value + "\n";
    }
    out.reserve(out.size() + frame.rows() * frame.cols() * 48);
    for (std::size_t i = 0; i < frame.rows(); ++i) {
        for (std::size_t j = 0; j < frame.cols(); ++j) {
            if (j) out += ' ';
            const cplx z = frame(i, j);
            detail::append_double(out, z.real());
            out += ':';
            detail::append_double(out, z.imag());
        }
        out += '\n';
    }
    return out;
}

inline void write_frame(std::ostream& os, const FrameMatrix& frame) { os << format_frame(frame); }

inline FrameMatrix parse_frame(std::string_view text) {
    std::size_t pos = 0;
    std::size_t line_no = 0;
    auto next_line = [&](std::string_view& line) {
        if (pos >= text.size()) return false;
        const std::size_t end = text.find('\n', pos);
        line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = end == std::string_view::npos ? text.size() : end + 1;
        ++line_no;
        return true;
    };

    std::string_view line;
    if (!next_line(line)) throw FrameParseError(1, 1, "empty input");
    const auto header = detail::split_ws(line);
    if (header.size() != 3 || header[0].text != "FRM1") throw FrameParseError(1, 1, "expected header 'FRM1 <rows> <cols>'");
    const std::size_t rows = detail::parse_dim(header[1].text, 1, header[1].column);
    const std::size_t cols = detail::parse_dim(header[2].text, 1, header[2].column);

    Provenance prov;
    ComplexMatrix M(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    std::size_t row = 0;
    bool in_body = false;
    while (next_line(line)) {
        if (!in_body && !line.empty() && line[0] == '#') {
            std::string_view body = line.substr(1);
            if (!body.empty() && body[0] == ' ') body.remove_prefix(1);
            if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
            const std::size_t eq = body.find('=');
            if (eq == std::string_view::npos || eq == 0) throw FrameParseError(line_no, 1, "metadata line must be '# key=value'");
            prov.set(std::string(body.substr(0, eq)), std::string(body.substr(eq + 1)));
            continue;
        }
        const auto tokens = detail::split_ws(line);
        if (tokens.empty()) {
            if (row == rows) continue;  // trailing blank lines
            throw FrameParseError(line_no, 1, "blank line inside matrix body");
        }
        in_body = true;
        if (row >= rows) throw FrameParseError(line_no, 1, "more than " + std::to_string(rows) + " rows");
        if (tokens.size() != cols) {
            const std::size_t col = tokens.size() > cols ? tokens[cols].column : line.size() + 1;
            throw FrameParseError(line_no, col, "expected " + std::to_string(cols) + " entries, found " + std::to_string(tokens.size()));
        }
        for (std::size_t j = 0; j < cols; ++j) {
            const auto& tok = tokens[j];
            const std::size_t colon = tok.text.find(':');
            if (colon == std::string_view::npos) throw FrameParseError(line_no, tok.column, "entry must be '<re>:<im>'");
            const double re = detail::parse_double(tok.text.substr(0, colon), line_no, tok.column);
            const double im = detail::parse_double(tok.text.substr(colon + 1), line_no, tok.column + colon + 1);
            M(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j)) = cplx(re, im);
        }
        ++row;
    }
    if (row != rows) throw FrameParseError(line_no + 1, 1, "expected " + std::to_string(rows) + " rows, found " + std::to_string(row));
    return FrameMatrix(std::move(M), std::move(prov));
}

inline FrameMatrix read_frame(std::istream& is) {
    const std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    return parse_frame(text);
}

}  // namespace groupframe
