#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gammalab/brackets.hpp"

namespace gammalab {

/// GAMMALAB_DATA if set, else the data directory of the source tree.
std::filesystem::path default_data_dir();

BracketTable load_bracket_table(const std::filesystem::path& file);
RelationSet load_relation_set(const std::filesystem::path& file);

/// Tables d, f, b, c from <data>/tables, in that order.
std::vector<BracketTable> load_component_tables(const std::filesystem::path& data_dir);
BracketTable load_table(const std::filesystem::path& data_dir, const std::string& name);
RelationSet load_relations(const std::filesystem::path& data_dir, const std::string& name);

/// {"name": str, "dimension": int, "generators": [matrix, ...]}
struct GeneratorFile {
  std::string name;
  std::size_t dimension = 0;
  std::vector<ExactMatrix> generators;
};
/// Throws std::runtime_error on malformed files and DimensionError when a
/// generator does not match the declared dimension.
GeneratorFile load_generator_file(const std::filesystem::path& file);

/// A JSON array of matrices in the text format (strings or nested arrays).
std::vector<ExactMatrix> load_pool(const std::filesystem::path& file);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_text(const std::filesystem::path& file);

}  // namespace gammalab
