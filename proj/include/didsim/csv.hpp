#ifndef DIDSIM_CSV_HPP
#define DIDSIM_CSV_HPP

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace didsim {

// Minimal CSV emitter: header row first, floating-point fields with 9
// significant digits, deterministic field order (caller-supplied).
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);

    void write_header(const std::vector<std::string>& names);

    CsvWriter& field(const std::string& v);
    CsvWriter& field(double v);
    CsvWriter& field(std::int64_t v);
    CsvWriter& field(std::uint64_t v);
    CsvWriter& field(int v) { return field(static_cast<std::int64_t>(v)); }
    void end_row();

    static std::string format_double(double v);

private:
    std::ofstream out_;
    bool row_started_ = false;
};

}  // namespace didsim

#endif
