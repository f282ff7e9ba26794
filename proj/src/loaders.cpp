#include "recur/loaders.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace recur::stream {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    std::string out(s.substr(b, e - b + 1));
    if (out.size() >= 2 && (out.front() == '"' || out.front() == '\'') && out.back() == out.front()) {
        out = out.substr(1, out.size() - 2);
    }
    return out;
}

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

bool is_missing(const std::string& v) { return v.empty() || v == "?"; }

std::optional<double> parse_number(const std::string& v) {
    double out = 0.0;
    const auto* end = v.data() + v.size();
    auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc() || ptr != end || !std::isfinite(out)) return std::nullopt;
    return out;
}

std::string sanitize_name(std::string name) {
    for (auto& c : name) {
        if (c == ' ' || c == '\t') c = '_';
    }
    return name.empty() ? std::string("_") : name;
}

enum class ColumnKind { kNominal, kNumeric, kCodes };

struct Column {
    std::string name;
    ColumnKind kind = ColumnKind::kNominal;
    std::vector<std::string> levels;  // nominal, in code order
    std::map<std::string, std::uint32_t> codes;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    bool declared = false;  // ARFF nominal list
};

// Shared second half of both loaders: typed columns + raw rows -> records.
LoadedStream build_stream(std::vector<Column>& columns, std::size_t class_index,
                          const std::vector<std::vector<std::string>>& rows, std::size_t skipped, std::uint32_t bins,
                          bool integer_codes) {
    const auto width = columns.size();
    std::vector<char> usable(rows.size(), 1);

    // Pass 1: decide column kinds and ranges.
    for (std::size_t c = 0; c < width; ++c) {
        if (c == class_index || columns[c].declared) continue;
        bool numeric = true;
        bool codes = integer_codes;
        for (std::size_t r = 0; r < rows.size() && numeric; ++r) {
            const auto& v = rows[r][c];
            if (is_missing(v)) continue;
            const auto x = parse_number(v);
            if (!x) {
                numeric = false;
            } else {
                columns[c].lo = std::min(columns[c].lo, *x);
                columns[c].hi = std::max(columns[c].hi, *x);
                if (*x < 0.0 || *x != std::floor(*x) || *x > 1e6) codes = false;
            }
        }
        if (numeric && columns[c].lo <= columns[c].hi) {
            columns[c].kind = codes ? ColumnKind::kCodes : ColumnKind::kNumeric;
        } else {
            columns[c].kind = ColumnKind::kNominal;
        }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            if (is_missing(rows[r][c])) usable[r] = 0;
        }
    }

    // Class column: {0,1} literally, otherwise at most two values in
    // first-appearance order (or declared order for ARFF).
    auto& cls = columns[class_index];
    LoadedStream out;
    bool literal01 = !cls.declared;
    for (std::size_t r = 0; r < rows.size() && literal01; ++r) {
        if (usable[r] && rows[r][class_index] != "0" && rows[r][class_index] != "1") literal01 = false;
    }
    if (literal01) {
        out.class_values = {"0", "1"};
    } else {
        if (!cls.declared) {
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (!usable[r]) continue;
                const auto& v = rows[r][class_index];
                if (!cls.codes.contains(v)) {
                    cls.codes.emplace(v, static_cast<std::uint32_t>(cls.levels.size()));
                    cls.levels.push_back(v);
                }
            }
        }
        if (cls.levels.size() > 2) throw std::runtime_error("class column '" + cls.name + "' is not binary");
        out.class_values = cls.levels;
    }

    std::vector<Attribute> attrs;
    std::vector<std::size_t> source;
    for (std::size_t c = 0; c < width; ++c) {
        if (c == class_index) continue;
        auto& col = columns[c];
        std::uint32_t cardinality = 2;
        if (col.kind == ColumnKind::kNumeric) {
            cardinality = std::max<std::uint32_t>(bins, 2);
        } else if (col.kind == ColumnKind::kCodes) {
            cardinality = std::max<std::uint32_t>(static_cast<std::uint32_t>(col.hi) + 1, 2);
        } else {
            if (!col.declared) {
                for (std::size_t r = 0; r < rows.size(); ++r) {
                    if (!usable[r]) continue;
                    const auto& v = rows[r][c];
                    if (!col.codes.contains(v)) {
                        col.codes.emplace(v, static_cast<std::uint32_t>(col.levels.size()));
                        col.levels.push_back(v);
                    }
                }
            }
            cardinality = std::max<std::uint32_t>(static_cast<std::uint32_t>(col.levels.size()), 2);
        }
        attrs.push_back({sanitize_name(col.name), cardinality});
        source.push_back(c);
    }
    out.space = AttributeSpace(std::move(attrs));

    // Pass 2: encode.
    out.skipped_rows = skipped;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!usable[r]) {
            ++out.skipped_rows;
            continue;
        }
        Record rec;
        rec.values.reserve(source.size());
        bool ok = true;
        for (auto c : source) {
            const auto& col = columns[c];
            const auto& v = rows[r][c];
            if (col.kind == ColumnKind::kNominal) {
                const auto it = col.codes.find(v);
                if (it == col.codes.end()) {
                    ok = false;
                    break;
                }
                rec.values.push_back(it->second);
            } else {
                const double x = *parse_number(v);
                rec.values.push_back(col.kind == ColumnKind::kCodes ? static_cast<Value>(x)
                                                                     : equal_width_bin(x, col.lo, col.hi, bins));
            }
        }
        const auto& label = rows[r][class_index];
        if (literal01) {
            rec.label = label == "1" ? 1 : 0;
        } else {
            const auto it = cls.codes.find(label);
            if (it == cls.codes.end()) ok = false;
            else rec.label = static_cast<std::uint8_t>(it->second);
        }
        if (!ok) {
            ++out.skipped_rows;
            continue;
        }
        out.records.push_back(std::move(rec));
    }
    if (out.records.empty()) throw std::runtime_error("no usable rows");
    return out;
}

}  // namespace

std::uint32_t equal_width_bin(double v, double lo, double hi, std::uint32_t bins) {
    if (bins < 2 || !(hi > lo)) return 0;
    const double width = (hi - lo) / bins;
    const auto b = static_cast<std::int64_t>(std::floor((v - lo) / width));
    return static_cast<std::uint32_t>(std::clamp<std::int64_t>(b, 0, bins - 1));
}

LoadedStream load_csv(std::istream& in, const CsvOptions& options) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("csv: missing header row");
    const auto header = split_fields(line);
    std::vector<Column> columns(header.size());
    std::optional<std::size_t> class_index;
    for (std::size_t c = 0; c < header.size(); ++c) {
        columns[c].name = header[c];
        if (header[c] == options.class_column) class_index = c;
    }
    if (!class_index) throw std::runtime_error("csv: no class column named '" + options.class_column + "'");
    if (header.size() < 2) throw std::runtime_error("csv: need at least one attribute column");

    std::vector<std::vector<std::string>> rows;
    std::size_t skipped = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        auto fields = split_fields(line);
        if (fields.size() != header.size()) {
            ++skipped;
            continue;
        }
        rows.push_back(std::move(fields));
    }
    return build_stream(columns, *class_index, rows, skipped, options.bins, options.integer_codes);
}

LoadedStream load_csv(const std::string& path, const CsvOptions& options) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return load_csv(in, options);
}

LoadedStream load_arff(std::istream& in, const std::string& class_attribute, std::uint32_t bins) {
    std::vector<Column> columns;
    std::string line;
    bool in_data = false;
    std::vector<std::vector<std::string>> rows;
    std::size_t skipped = 0;
    while (std::getline(in, line)) {
        const auto t = trim(line);
        if (t.empty() || t[0] == '%') continue;
        if (!in_data) {
            std::string lower = t;
            std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
            if (lower.rfind("@relation", 0) == 0) continue;
            if (lower.rfind("@data", 0) == 0) {
                in_data = true;
                continue;
            }
            if (lower.rfind("@attribute", 0) != 0) throw std::runtime_error("arff: unexpected line '" + t + "'");
            auto rest = trim(std::string_view(t).substr(10));
            std::string name;
            if (!rest.empty() && (rest[0] == '\'' || rest[0] == '"')) {
                const auto close = rest.find(rest[0], 1);
                if (close == std::string::npos) throw std::runtime_error("arff: unterminated attribute name");
                name = rest.substr(1, close - 1);
                rest = trim(std::string_view(rest).substr(close + 1));
            } else {
                const auto sp = rest.find_first_of(" \t");
                if (sp == std::string::npos) throw std::runtime_error("arff: attribute without type");
                name = rest.substr(0, sp);
                rest = trim(std::string_view(rest).substr(sp));
            }
            Column col;
            col.name = name;
            if (!rest.empty() && rest[0] == '{') {
                const auto close = rest.find('}');
                if (close == std::string::npos) throw std::runtime_error("arff: unterminated nominal list");
                col.declared = true;
                col.kind = ColumnKind::kNominal;
                for (auto& level : split_fields(std::string_view(rest).substr(1, close - 1))) {
                    col.codes.emplace(level, static_cast<std::uint32_t>(col.levels.size()));
                    col.levels.push_back(level);
                }
            } else {
                std::string type = rest;
                std::transform(type.begin(), type.end(), type.begin(), [](unsigned char ch) { return std::tolower(ch); });
                if (type != "numeric" && type != "real" && type != "integer") {
                    throw std::runtime_error("arff: unsupported attribute type '" + rest + "'");
                }
            }
            columns.push_back(std::move(col));
        } else {
            if (t[0] == '{') throw std::runtime_error("arff: sparse data is not supported");
            auto fields = split_fields(t);
            if (fields.size() != columns.size()) {
                ++skipped;
                continue;
            }
            rows.push_back(std::move(fields));
        }
    }
    if (columns.size() < 2) throw std::runtime_error("arff: need at least one attribute and a class");
    std::size_t class_index = columns.size() - 1;
    if (!class_attribute.empty()) {
        const auto it = std::find_if(columns.begin(), columns.end(), [&](const Column& c) { return c.name == class_attribute; });
        if (it == columns.end()) throw std::runtime_error("arff: no attribute named '" + class_attribute + "'");
        class_index = static_cast<std::size_t>(it - columns.begin());
    }
    return build_stream(columns, class_index, rows, skipped, bins, false);
}

LoadedStream load_arff(const std::string& path, const std::string& class_attribute, std::uint32_t bins) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return load_arff(in, class_attribute, bins);
}

void write_csv(std::ostream& out, const AttributeSpace& space, std::span<const Record> records) {
    for (std::size_t m = 0; m < space.dimension(); ++m) out << space.name(m) << ',';
    out << "class\n";
    std::string line;
    for (const auto& r : records) {
        line.clear();
        for (auto v : r.values) {
            line += std::to_string(v);
            line.push_back(',');
        }
        line.push_back(static_cast<char>('0' + r.label));
        line.push_back('\n');
        out << line;
    }
}

std::vector<std::uint8_t> moving_average_label(std::span<const double> series, std::size_t window) {
    if (window == 0) throw std::invalid_argument("window must be >= 1");
    if (series.size() < 2) throw std::invalid_argument("series needs at least two values");
    std::vector<std::uint8_t> labels(series.size(), 0);
    double previous = 0.0;
    for (std::size_t t = 0; t < series.size(); ++t) {
        // Summed afresh each step; the tolerance absorbs rounding between
        // prefix means of equal values.
        const std::size_t first = t + 1 > window ? t + 1 - window : 0;
        double sum = 0.0;
        for (std::size_t k = first; k <= t; ++k) sum += series[k];
        const double mean = sum / static_cast<double>(t + 1 - first);
        if (t > 0) labels[t] = mean - previous > 1e-12 * std::max(1.0, std::abs(previous)) ? 1 : 0;
        previous = mean;
    }
    return labels;
}

}  // namespace recur::stream
