#include "gammalab/data.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gammalab {

using json = nlohmann::ordered_json;

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("GAMMALAB_DATA")) return env;
  return GAMMALAB_DATA_DIR;
}

std::string read_text(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

json read_json(const std::filesystem::path& file) {
  try {
    return json::parse(read_text(file));
  } catch (const json::exception& e) {
    throw std::runtime_error(file.string() + ": " + e.what());
  }
}

}  // namespace

BracketTable load_bracket_table(const std::filesystem::path& file) {
  json j = read_json(file);
  BracketTable t;
  t.name = j.at("name").get<std::string>();
  t.anchor = j.value("anchor", "");
  t.basis = j.at("basis").get<std::vector<std::string>>();
  for (const auto& e : j.at("entries")) t.entries.push_back(parse_bracket_entry(e.get<std::string>()));
  return t;
}

RelationSet load_relation_set(const std::filesystem::path& file) {
  json j = read_json(file);
  RelationSet r;
  r.name = j.at("name").get<std::string>();
  r.anchor = j.value("anchor", "");
  r.labels = j.at("labels").get<std::vector<std::string>>();
  if (j.contains("definitions"))
    for (const auto& [label, word] : j["definitions"].items()) r.definitions.emplace_back(label, parse_side(word.get<std::string>()));
  for (const auto& rel : j.at("relations")) r.relations.push_back(parse_relation(rel.get<std::string>()));
  return r;
}

BracketTable load_table(const std::filesystem::path& data_dir, const std::string& name) {
  return load_bracket_table(data_dir / "tables" / (name + ".json"));
}

RelationSet load_relations(const std::filesystem::path& data_dir, const std::string& name) {
  return load_relation_set(data_dir / "relations" / (name + ".json"));
}

std::vector<BracketTable> load_component_tables(const std::filesystem::path& data_dir) {
  std::vector<BracketTable> out;
  for (const char* name : {"d", "f", "b", "c"}) out.push_back(load_table(data_dir, name));
  return out;
}

GeneratorFile load_generator_file(const std::filesystem::path& file) {
  json j = read_json(file);
  GeneratorFile g;
  try {
    g.name = j.value("name", file.stem().string());
    g.dimension = j.at("dimension").get<std::size_t>();
    for (const auto& m : j.at("generators")) g.generators.push_back(parse_matrix(m.is_string() ? m.get<std::string>() : m.dump()));
  } catch (const json::exception& e) {
    throw std::runtime_error(file.string() + ": " + e.what());
  }
  if (g.generators.empty()) throw std::runtime_error(file.string() + ": no generators");
  for (const auto& m : g.generators)
    if (m.dim() != g.dimension)
      throw DimensionError(file.string() + ": generator of size " + std::to_string(m.dim()) + " in a file of dimension " +
                           std::to_string(g.dimension));
  return g;
}

std::vector<ExactMatrix> load_pool(const std::filesystem::path& file) {
  json j = read_json(file);
  if (!j.is_array()) throw std::runtime_error(file.string() + ": pool must be a JSON array of matrices");
  std::vector<ExactMatrix> out;
  for (const auto& m : j) out.push_back(parse_matrix(m.is_string() ? m.get<std::string>() : m.dump()));
  return out;
}

}  // namespace gammalab
