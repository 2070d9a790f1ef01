#ifndef SGEC_DATASETS_HPP
#define SGEC_DATASETS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sgec/graph.hpp"

namespace sgec {

struct DatasetInfo {
  std::string name;
  std::size_t vertices;
  std::size_t edges;
  std::string description;
};

// Zachary's karate club, 1-based edge list with a "# vertices 34" header.
std::string_view karate_club_edge_list();
Graph karate_club();

std::vector<DatasetInfo> bundled_datasets();

// Bundled graphs by name. Unknown names (including "sandi", which is not
// redistributed) throw Error(unknown_dataset) with ingestion instructions.
Graph load_dataset(std::string_view name);

}  // namespace sgec

#endif  // SGEC_DATASETS_HPP
