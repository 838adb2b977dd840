#include "gss/closure/io.hpp"

#include <json.hpp>

namespace gss::closure {

using nlohmann::json;

Space read_space(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("ground") || !j.contains("closed"))
    throw ValidationError("space file needs 'ground' and 'closed' fields");
  std::vector<std::string> ground = j.at("ground").get<std::vector<std::string>>();
  std::vector<std::vector<std::string>> family =
      j.at("closed").get<std::vector<std::vector<std::string>>>();
  return Space::from_closed_family(std::move(ground), family);
}

std::string write_space(const Space& space) {
  json j;
  j["ground"] = space.labels();
  std::vector<Subset> family = space.closed_family();
  std::sort(family.begin(), family.end(), [](Subset a, Subset b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  json closed = json::array();
  for (Subset c : family) closed.push_back(space.labels_of(c));
  j["closed"] = std::move(closed);
  return j.dump(2) + "\n";
}

std::map<std::string, std::string> read_map_table(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("table")) throw ValidationError("map file needs a 'table' field");
  return j.at("table").get<std::map<std::string, std::string>>();
}

std::string write_map_table(const SpaceMap& map) {
  json table = json::object();
  for (int i = 0; i < map.source.size(); ++i)
    table[map.source.labels()[static_cast<size_t>(i)]] =
        map.target.labels()[static_cast<size_t>(map.table[static_cast<size_t>(i)])];
  json j;
  j["table"] = std::move(table);
  return j.dump(2) + "\n";
}

}  // namespace gss::closure
