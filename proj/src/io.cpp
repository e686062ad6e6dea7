#include "hwlab/io.hpp"

#include "hwlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace hwlab::io {

namespace {

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) next = s.size();
        parts.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return parts;
}

} // namespace

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    for (std::string_view part : split(text, ',')) {
        part = trimmed(part);
        if (part.empty()) throw ParseError("empty entry in rational list");
        out.push_back(parse_rational(part));
    }
    if (out.empty()) throw ParseError("empty rational list");
    return out;
}

Poly parse_poly_spec(std::string_view text) {
    std::map<int, Rational> by_degree;
    for (std::string_view part : split(text, ',')) {
        part = trimmed(part);
        const size_t colon = part.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("polynomial term '" + std::string(part) +
                             "' is not of the form degree:coefficient");
        const std::string_view ds = trimmed(part.substr(0, colon));
        const std::string_view cs = trimmed(part.substr(colon + 1));
        int deg = 0;
        try {
            size_t used = 0;
            deg = std::stoi(std::string(ds), &used);
            if (used != ds.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("bad degree '" + std::string(ds) + "' in polynomial spec");
        }
        if (deg < 0) throw ParseError("negative degree in polynomial spec");
        if (!by_degree.emplace(deg, parse_rational(cs)).second)
            throw ParseError("degree " + std::to_string(deg) + " repeated in polynomial spec");
    }
    if (by_degree.empty()) throw ParseError("empty polynomial spec");
    std::vector<Rational> coeffs(static_cast<size_t>(by_degree.rbegin()->first) + 1, Rational(0));
    for (auto& [d, c] : by_degree) coeffs[static_cast<size_t>(d)] = c;
    return Poly(std::move(coeffs));
}

std::vector<Rational> read_alpha_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        std::string_view s = trimmed(line);
        if (s.empty() || s.front() == '#') continue;
        const size_t colon = s.find(':');
        if (colon == std::string_view::npos) continue;
        if (trimmed(s.substr(0, colon)) == "alpha")
            return parse_rational_list(s.substr(colon + 1));
    }
    throw ParseError("no 'alpha' field in '" + path + "'");
}

std::vector<Rational> read_moments_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::vector<Rational> mu;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::string_view s = trimmed(line);
        if (s.empty() || s.front() == '#') continue;
        auto cols = split(s, ',');
        if (first) {
            first = false;
            if (cols.size() >= 2 && trimmed(cols[0]) == "p" && trimmed(cols[1]) == "mu")
                continue; // header
        }
        if (cols.size() != 2)
            throw ParseError("moment row '" + std::string(s) + "' must have two columns");
        const Rational p = parse_rational(trimmed(cols[0]));
        if (p != Rational(static_cast<long>(mu.size())))
            throw ParseError("moment rows must list p = 0,1,2,... without gaps");
        mu.push_back(parse_rational(trimmed(cols[1])));
    }
    if (mu.empty()) throw ParseError("no moment rows in '" + path + "'");
    return mu;
}

std::string csv_field(std::string_view value) {
    if (value.find_first_of(",\"\n") == std::string_view::npos) return std::string(value);
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace hwlab::io
