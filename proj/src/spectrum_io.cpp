#include "recur/spectrum_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace recur::fourier {

namespace {

std::string next_line(std::istream& in, const char* what) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return line;
    }
    throw std::runtime_error(std::string("spectrum: unexpected end of input, expected ") + what);
}

std::istringstream keyed_line(std::istream& in, const std::string& key) {
    std::istringstream ls(next_line(in, key.c_str()));
    std::string word;
    ls >> word;
    if (word != key) throw std::runtime_error("spectrum: expected '" + key + "', found '" + word + "'");
    return ls;
}

double parse_real(const std::string& token) {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::runtime_error("spectrum: bad number '" + token + "'");
    return v;
}

bool compact_digits(const AttributeSpace& space, const std::vector<std::size_t>& attr_set) {
    for (auto m : attr_set) {
        if (space.cardinality(m) > 10) return false;
    }
    return true;
}

}  // namespace

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string format_digits(const Spectrum& s, const Digits& j) {
    if (j.empty()) return ".";
    std::string out;
    const bool compact = compact_digits(s.space(), s.attr_set());
    for (std::size_t k = 0; k < j.size(); ++k) {
        if (compact) {
            out.push_back(static_cast<char>('0' + j[k]));
        } else {
            if (k > 0) out.push_back('-');
            out += std::to_string(j[k]);
        }
    }
    return out;
}

void write_spectrum(std::ostream& out, const Spectrum& s) {
    const auto& space = s.space();
    out << "spectrum\n";
    out << "dimension " << space.dimension() << '\n';
    out << "names";
    for (const auto& a : space.attributes()) {
        if (a.name.empty() || a.name.find_first_of(" \t\r\n") != std::string::npos) {
            throw std::invalid_argument("attribute names must be non-empty and free of whitespace");
        }
        out << ' ' << a.name;
    }
    out << "\ncardinalities";
    for (const auto& a : space.attributes()) out << ' ' << a.cardinality;
    out << "\nattr_set";
    for (auto m : s.attr_set()) out << ' ' << m;
    out << "\nenergy_threshold " << format_real(s.energy_threshold()) << '\n';
    out << "coefficients " << s.size() << '\n';
    for (const auto& [j, w] : s.coefficients()) {
        out << format_digits(s, j) << ' ' << format_real(w.real()) << ' ' << format_real(w.imag()) << '\n';
    }
}

Spectrum read_spectrum(std::istream& in) {
    if (next_line(in, "header") != "spectrum") throw std::runtime_error("spectrum: missing header");
    std::size_t d = 0;
    keyed_line(in, "dimension") >> d;

    std::vector<std::string> names;
    {
        auto ls = keyed_line(in, "names");
        std::string name;
        while (ls >> name) names.push_back(name);
    }
    std::vector<std::uint32_t> cards;
    {
        auto ls = keyed_line(in, "cardinalities");
        std::uint32_t c = 0;
        while (ls >> c) cards.push_back(c);
    }
    if (names.size() != d || cards.size() != d) throw std::runtime_error("spectrum: header lengths differ from dimension");
    std::vector<Attribute> attrs;
    for (std::size_t m = 0; m < d; ++m) attrs.push_back({names[m], cards[m]});
    AttributeSpace space(std::move(attrs));

    std::vector<std::size_t> attr_set;
    {
        auto ls = keyed_line(in, "attr_set");
        std::size_t m = 0;
        while (ls >> m) attr_set.push_back(m);
    }
    std::string token;
    keyed_line(in, "energy_threshold") >> token;
    const double et = parse_real(token);

    std::size_t count = 0;
    keyed_line(in, "coefficients") >> count;
    for (auto m : attr_set) {
        if (m >= d) throw std::runtime_error("spectrum: attribute set index out of range");
    }
    const bool compact = compact_digits(space, attr_set);
    CoefficientMap coeffs;
    for (std::size_t i = 0; i < count; ++i) {
        std::istringstream ls(next_line(in, "coefficient"));
        std::string digits, re, im;
        if (!(ls >> digits >> re >> im)) throw std::runtime_error("spectrum: malformed coefficient line");
        Digits j;
        if (digits != ".") {
            if (compact) {
                for (char c : digits) {
                    if (c < '0' || c > '9') throw std::runtime_error("spectrum: bad digit string '" + digits + "'");
                    j.push_back(static_cast<std::uint32_t>(c - '0'));
                }
            } else {
                std::istringstream ds(digits);
                std::string part;
                while (std::getline(ds, part, '-')) j.push_back(static_cast<std::uint32_t>(std::stoul(part)));
            }
        }
        if (!coeffs.emplace(std::move(j), Coefficient{parse_real(re), parse_real(im)}).second) {
            throw std::runtime_error("spectrum: duplicate partition '" + digits + "'");
        }
    }
    return Spectrum(std::move(space), std::move(attr_set), std::move(coeffs), et);
}

}  // namespace recur::fourier
