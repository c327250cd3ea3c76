#include <sstream>

#include "twistbar/cli.hpp"

namespace twistbar::cli {

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  j["status"] = status;
  return j;
}

std::string Report::human() const {
  std::ostringstream os;
  os << command << "\n";
  for (const auto& line : lines) os << "  " << line << "\n";
  os << "status: " << status << "\n";
  return os.str();
}

}  // namespace twistbar::cli
