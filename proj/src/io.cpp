#include "benthad/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace benthad {

HadamardMatrix parse_had(std::istream& in)
{
    std::string header;
    if (!std::getline(in, header))
        throw ParseError("missing order line");
    int v = 0;
    try {
        size_t pos = 0;
        v = std::stoi(header, &pos);
        if (pos != header.size())
            throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError("order line is not a decimal integer: '" + header + "'");
    }
    if (v <= 0)
        throw ParseError("order must be positive");
    std::vector<std::vector<int>> grid;
    grid.reserve(static_cast<size_t>(v));
    std::string line;
    for (int i = 0; i < v; ++i) {
        if (!std::getline(in, line))
            throw ParseError("expected " + std::to_string(v) + " rows, got " +
                             std::to_string(i));
        if (static_cast<int>(line.size()) != v)
            throw ParseError("row " + std::to_string(i + 1) + " has length " +
                             std::to_string(line.size()) + ", expected " +
                             std::to_string(v));
        std::vector<int> row(static_cast<size_t>(v));
        for (int j = 0; j < v; ++j) {
            if (line[j] == '+')
                row[j] = 1;
            else if (line[j] == '-')
                row[j] = -1;
            else
                throw ParseError(std::string("bad character '") + line[j] +
                                 "' in row " + std::to_string(i + 1));
        }
        grid.push_back(std::move(row));
    }
    return HadamardMatrix::from_grid(grid);
}

HadamardMatrix parse_matrix_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return parse_had(in);
}

std::string to_had(const HadamardMatrix& h)
{
    std::string s = std::to_string(h.order()) + "\n";
    for (int i = 0; i < h.order(); ++i) {
        for (int j = 0; j < h.order(); ++j)
            s.push_back(h.at(i, j) > 0 ? '+' : '-');
        s.push_back('\n');
    }
    return s;
}

void write_matrix_file(const HadamardMatrix& h, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write '" + path + "'");
    out << to_had(h);
}

std::string content_hash(const HadamardMatrix& h)
{
    std::uint64_t hash = 14695981039346656037ull;
    auto mix = [&hash](char c) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ull;
    };
    for (char c : std::to_string(h.order()))
        mix(c);
    mix('\n');
    for (int x : h.entries())
        mix(x > 0 ? '+' : '-');
    static const char* hex = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = hex[hash & 0xf];
        hash >>= 4;
    }
    return s;
}

HadamardMatrix resolve_matrix(const std::string& name, int size_limit)
{
    auto as_int = [](const std::string& s) -> std::optional<int> {
        if (s.empty())
            return std::nullopt;
        for (char c : s)
            if (!isdigit(static_cast<unsigned char>(c)))
                return std::nullopt;
        try {
            return std::stoi(s);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    };
    if (name.size() >= 2 && name[0] == 's') {
        if (auto v = as_int(name.substr(1))) {
            int h = 0;
            while ((1 << h) < *v)
                ++h;
            if ((1 << h) == *v)
                return HadamardMatrix::sylvester(h, size_limit);
        }
    }
    for (auto [prefix, kind] :
         {std::pair{std::string("paley1-"), PaleyKind::I},
          std::pair{std::string("paley2-"), PaleyKind::II}}) {
        if (name.rfind(prefix, 0) == 0) {
            if (auto q = as_int(name.substr(prefix.size())))
                return HadamardMatrix::paley(*q, kind, size_limit);
        }
    }
    return parse_matrix_file(name);
}

} // namespace benthad
