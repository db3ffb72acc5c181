#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ncg/group.hpp"

namespace ncg {

FiniteGroup group_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::format, std::string("Cayley table JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("labels") || !doc.contains("table")) {
    throw Error(ErrorKind::format,
                "Cayley table JSON must be an object with \"labels\" and \"table\"");
  }
  std::vector<std::string> labels;
  std::vector<std::vector<Element>> table;
  try {
    labels = doc.at("labels").get<std::vector<std::string>>();
    for (const auto& row : doc.at("table")) {
      std::vector<Element> r;
      for (const auto& v : row) {
        const auto i = v.get<long long>();
        if (i < 0) {
          throw Error(ErrorKind::validation,
                      "negative entry " + std::to_string(i) + " in table");
        }
        r.push_back(static_cast<Element>(i));
      }
      table.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::format, std::string("Cayley table JSON: ") + e.what());
  }
  return group_from_table(std::move(labels), std::move(table));
}

FiniteGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::format, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return group_from_json(buf.str());
}

}  // namespace ncg
