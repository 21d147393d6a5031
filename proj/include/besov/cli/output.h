#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace besov::cli {

/// 17 significant digits, '.' decimal separator; "inf", "-inf" and "nan"
/// for non-finite values.
std::string format_number(double value);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  /// Throws std::invalid_argument when the width differs from the header.
  void add_row(std::vector<std::string> cells);

  std::size_t row_count() const { return rows_.size(); }
  std::string str() const;
  void write(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct ChartSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
};

/// Self-contained SVG line chart. Non-finite points (and non-positive ones
/// on log axes) are skipped.
std::string line_chart_svg(const ChartSpec& spec, const std::vector<Series>& series);
void write_line_chart(const std::filesystem::path& path, const ChartSpec& spec, const std::vector<Series>& series);

}  // namespace besov::cli
