#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "recur/attribute_space.hpp"
#include "recur/record.hpp"

namespace recur::stream {

struct LoadedStream {
    AttributeSpace space;
    std::vector<Record> records;
    std::size_t skipped_rows = 0;
    std::vector<std::string> class_values;  // raw class value for label 0 and 1
};

struct CsvOptions {
    std::string class_column = "class";
    std::uint32_t bins = 10;
    // Columns of non-negative integers are taken as ready-made codes
    // (cardinality max + 1) instead of being binned.
    bool integer_codes = false;
};

/// Comma-separated file with a header row. Nominal columns get dense codes in
/// first-appearance order; numeric columns are equal-width binned between the
/// column's min and max. Rows with the wrong field count or a missing value
/// ('?' or empty) are skipped and counted.
LoadedStream load_csv(std::istream& in, const CsvOptions& options);
LoadedStream load_csv(const std::string& path, const CsvOptions& options);

/// ARFF subset: @attribute with nominal lists or numeric/real/integer, and a
/// dense CSV @data body. The class is `class_attribute`, or the last
/// attribute when empty.
LoadedStream load_arff(std::istream& in, const std::string& class_attribute, std::uint32_t bins);
LoadedStream load_arff(const std::string& path, const std::string& class_attribute, std::uint32_t bins);

/// Writes records as integer codes with a header x-names,class.
void write_csv(std::ostream& out, const AttributeSpace& space, std::span<const Record> records);

/// label_t = 1 when the trailing mean over `window` values at t exceeds the
/// one at t-1 (prefix means during warm-up); label_0 = 0.
std::vector<std::uint8_t> moving_average_label(std::span<const double> series, std::size_t window);

/// Bin of v among `bins` equal-width bins over [lo, hi].
std::uint32_t equal_width_bin(double v, double lo, double hi, std::uint32_t bins);

}  // namespace recur::stream
