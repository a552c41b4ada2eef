#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace teich {

// Locale-independent decimal rendering at 12 significant digits, '.'
// separator; the fixed format every CSV/JSON report uses so runs diff
// cleanly.
std::string format_number(double v, int significant = 12);

// RFC-4180 field quoting: quotes only when needed, embedded quotes doubled.
std::string csv_escape(const std::string& field);

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    void header(const std::vector<std::string>& names);
    void row(const std::vector<std::string>& fields);

private:
    std::ostream& os_;
};

} // namespace teich
