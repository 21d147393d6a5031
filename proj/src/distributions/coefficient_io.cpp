#include "besov/distributions/coefficient_io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace besov {

using nlohmann::json;

BoundaryDistribution parse_coefficients(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("coefficient file: ") + e.what());
  }
  try {
    const int dimension = doc.at("dimension").get<int>();
    const int n_max = doc.at("n_max").get<int>();
    if (doc.contains("basis") && doc.at("basis").get<std::string>() != "real-orthonormal")
      throw std::invalid_argument("coefficient file: unsupported basis '" + doc.at("basis").get<std::string>() + "'");
    if (n_max < 0) throw std::invalid_argument("coefficient file: negative n_max");
    BoundaryDistribution mu(dimension, n_max);
    std::vector<bool> seen(mu.size(), false);
    for (const json& entry : doc.at("coefficients")) {
      const ModeIndex mode{entry.at("n").get<int>(), entry.at("m").get<int>()};
      if (!is_valid_mode(dimension, mode) || mode.degree > n_max)
        throw std::invalid_argument("coefficient file: mode (" + std::to_string(mode.degree) + ", " +
                                    std::to_string(mode.order) + ") out of range");
      const std::size_t i = flat_index(dimension, mode);
      if (seen[i]) throw std::invalid_argument("coefficient file: duplicate mode");
      seen[i] = true;
      mu[mode] = entry.at("value").get<double>();
    }
    return BoundaryDistribution(dimension, n_max,
                                std::vector<double>(mu.coefficients().begin(), mu.coefficients().end()));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("coefficient file: ") + e.what());
  }
}

std::string format_coefficients(const BoundaryDistribution& mu) {
  json doc;
  doc["dimension"] = mu.dimension();
  doc["n_max"] = mu.n_max();
  doc["basis"] = "real-orthonormal";
  json list = json::array();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const ModeIndex mode = mode_at(mu.dimension(), i);
    list.push_back({{"n", mode.degree}, {"m", mode.order}, {"value", mu.coefficients()[i]}});
  }
  doc["coefficients"] = std::move(list);
  return doc.dump(2) + "\n";
}

BoundaryDistribution read_coefficients(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open coefficient file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_coefficients(buffer.str());
}

void write_coefficients(const BoundaryDistribution& mu, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write coefficient file " + path.string());
  out << format_coefficients(mu);
}

}  // namespace besov
