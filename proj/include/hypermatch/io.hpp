#pragma once

#include <iosfwd>
#include <string>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

// Text format: first line "k n m", then m lines of k space-separated 0-based
// vertex ids. Duplicate edges and out-of-range ids are rejected.
Hypergraph parse_text(std::istream& in);
Hypergraph parse_text(const std::string& s);
std::string serialize_text(const Hypergraph& H);

// JSON format: {"k": int, "n": int, "edges": [[int,...],...]}, edges sorted.
Hypergraph parse_json(const std::string& s);
std::string serialize_json(const Hypergraph& H);

enum class InstanceFormat { text, json };

Hypergraph load_instance(const std::string& path, InstanceFormat fmt);
void save_instance(const Hypergraph& H, std::ostream& out, InstanceFormat fmt);

}  // namespace hypermatch
