#include "eqparse/learning/linear_model.h"

#include <charconv>
#include <sstream>
#include <system_error>

#include "eqparse/error.h"

namespace eqparse {
namespace {

constexpr std::string_view kMagic = "eqparse-model";
constexpr int kVersion = 1;

bool has_separator(std::string_view s) {
  return s.find_first_of(" \t\n\r=") != std::string_view::npos;
}

}  // namespace

std::map<std::string, std::string> LearnerConfig::describe() const {
  return {{"epochs", std::to_string(epochs)},
          {"learning_rate", format_weight(learning_rate)},
          {"margin_cost", format_weight(margin_cost)},
          {"max_outer_iters", std::to_string(max_outer_iters)},
          {"seed", std::to_string(seed)},
          {"average", average ? "1" : "0"}};
}

std::string format_weight(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw InvalidArgument("unformattable weight");
  return std::string(buf, end);
}

void LinearModel::write(std::ostream& out) const {
  out << kMagic << ' ' << kVersion << ' ' << weights.size();
  for (const auto& [key, value] : metadata) {
    if (key.empty() || has_separator(key) ||
        value.find_first_of(" \t\n\r") != std::string::npos) {
      throw InvalidArgument("metadata entry '" + key +
                            "' contains a separator");
    }
    out << ' ' << key << '=' << value;
  }
  out << '\n';
  for (const auto& [key, value] : weights) {
    if (key.find_first_of("\t\n\r") != std::string::npos) {
      throw InvalidArgument("feature name contains a tab or newline");
    }
    out << key << '\t' << format_weight(value) << '\n';
  }
}

LinearModel LinearModel::read(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw DataError("model: missing header");
  std::istringstream hs(header);
  std::string magic;
  int version = 0;
  std::size_t count = 0;
  if (!(hs >> magic >> version >> count) || magic != kMagic) {
    throw DataError("model: bad header '" + header + "'");
  }
  if (version != kVersion) {
    throw DataError("model: unsupported version " + std::to_string(version));
  }
  LinearModel model;
  std::string item;
  while (hs >> item) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw DataError("model: bad metadata '" + item + "'");
    }
    model.metadata[item.substr(0, eq)] = item.substr(eq + 1);
  }
  std::string line;
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) {
      throw DataError("model: expected " + std::to_string(count) +
                      " weights, got " + std::to_string(i));
    }
    auto tab = line.rfind('\t');
    if (tab == std::string::npos) {
      throw DataError("model: bad weight line '" + line + "'");
    }
    double value = 0.0;
    const char* first = line.data() + tab + 1;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw DataError("model: bad weight in line '" + line + "'");
    }
    std::string key = line.substr(0, tab);
    if (model.weights.contains(key)) {
      throw DataError("model: duplicate feature '" + key + "'");
    }
    model.weights.add(key, value);
  }
  return model;
}

}  // namespace eqparse
