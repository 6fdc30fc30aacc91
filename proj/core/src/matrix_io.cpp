/**************************************************************************
 * matrix_io.cpp
 *
 * Copyright 2026 The lrc4 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/
#include "lrc4/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "lrc4/error.hpp"

namespace lrc4 {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size() || line[i] == '#') break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

std::size_t parse_count(const Token& t, std::size_t line) {
    std::size_t v = 0;
    const auto* end = t.text.data() + t.text.size();
    const auto res = std::from_chars(t.text.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end) throw ParseError("expected a count, got '" + std::string(t.text) + "'", line, t.column);
    return v;
}

bool is_generator_marker(std::string_view line) {
    const auto p = line.find('#');
    if (p == std::string_view::npos) return false;
    auto rest = line.substr(p + 1);
    while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
    while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t' || rest.back() == '\r')) rest.remove_suffix(1);
    return rest == "generator";
}

}  // namespace

std::string export_matrix(const Matrix& m, MatrixKind kind) {
    std::string s;
    if (kind == MatrixKind::generator) s += "# generator\n";
    s += "gf4 " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) s += ' ';
            s += m(r, c).symbol();
        }
        s += '\n';
    }
    return s;
}

ImportedMatrix import_matrix_text(std::string_view text) {
    const auto lines = split_lines(text);
    ImportedMatrix out;
    std::optional<std::pair<std::size_t, std::size_t>> shape;
    std::vector<F4> entries;
    std::size_t rows_read = 0;
    std::size_t last_line = lines.size();

    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::size_t lineno = li + 1;
        const auto toks = tokenize(lines[li]);
        if (toks.empty()) {
            if (!shape && is_generator_marker(lines[li])) out.kind = MatrixKind::generator;
            continue;
        }
        if (!shape) {
            if (toks[0].text != "gf4") throw ParseError("expected header 'gf4 <rows> <cols>'", lineno, toks[0].column);
            if (toks.size() != 3) throw ParseError("header needs exactly two counts", lineno, toks[0].column);
            shape = {parse_count(toks[1], lineno), parse_count(toks[2], lineno)};
            entries.reserve(shape->first * shape->second);
            continue;
        }
        if (rows_read == shape->first) throw ParseError("more rows than declared", lineno, toks[0].column);
        if (toks.size() != shape->second)
            throw ParseError("row has " + std::to_string(toks.size()) + " symbols, expected " +
                                 std::to_string(shape->second),
                             lineno, toks.size() > shape->second ? toks[shape->second].column : toks.back().column);
        for (const auto& t : toks) {
            if (t.text == "?") throw ParseError("erasure mark '?' is not allowed in a matrix", lineno, t.column);
            const auto x = F4::parse(t.text);
            if (!x) throw ParseError("unknown symbol '" + std::string(t.text) + "'", lineno, t.column);
            entries.push_back(*x);
        }
        ++rows_read;
        last_line = lineno;
    }
    if (!shape) throw ParseError("missing header 'gf4 <rows> <cols>'", lines.size() + 1, 1);
    if (rows_read != shape->first)
        throw ParseError("expected " + std::to_string(shape->first) + " rows, found " + std::to_string(rows_read),
                         last_line + 1, 1);
    out.matrix = Matrix(shape->first, shape->second, std::move(entries));
    return out;
}

Matrix import_matrix(std::string_view text) { return import_matrix_text(text).matrix; }

LinearCode code_from_import(const ImportedMatrix& m) {
    return m.kind == MatrixKind::generator ? LinearCode::from_generator(m.matrix) : LinearCode::from_parity(m.matrix);
}

ErasureWord parse_erasure_word(std::string_view text) {
    ErasureWord w;
    const auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        for (const auto& t : tokenize(lines[li])) {
            if (t.text == "?") {
                w.emplace_back(std::nullopt);
                continue;
            }
            const auto x = F4::parse(t.text);
            if (!x) throw ParseError("unknown symbol '" + std::string(t.text) + "'", li + 1, t.column);
            w.emplace_back(*x);
        }
    }
    return w;
}

std::string format_word(const ErasureWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += w[i] ? w[i]->symbol() : '?';
    }
    return s;
}

std::string format_vector(const Vector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += v[i].symbol();
    }
    return s;
}

std::vector<Support> import_groups(std::string_view text) {
    std::vector<Support> groups;
    const auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        // commas are accepted as separators
        std::string line(lines[li]);
        for (auto& ch : line)
            if (ch == ',') ch = ' ';
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        std::vector<std::size_t> pos;
        for (const auto& t : toks) {
            const auto v = parse_count(t, li + 1);
            if (v == 0) throw ParseError("positions are 1-based", li + 1, t.column);
            pos.push_back(v);
        }
        groups.push_back(from_one_based(pos));
    }
    return groups;
}

std::string export_groups(const std::vector<Support>& groups) {
    std::string s;
    for (const auto& g : groups) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(g[i] + 1);
        }
        s += '\n';
    }
    return s;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

}  // namespace lrc4
