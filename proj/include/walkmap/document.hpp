#ifndef WALKMAP_DOCUMENT_HPP
#define WALKMAP_DOCUMENT_HPP

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "walkmap/embedding.hpp"
#include "walkmap/homotopy.hpp"
#include "walkmap/rewrite.hpp"

namespace walkmap {

/// A parsed map file:
///   { "nodes": N, "edges": [[s,t],...], "rotation": { "<node>": ["e3+","e7-",...] } }
/// "rotation" is optional; without it the document describes a bare graph.
struct MapDocument {
  Graph graph;
  std::optional<RotationMap> map;
};

enum class DocumentErrorKind { Json, Schema, Rotation };

class DocumentError : public ValidationError {
 public:
  DocumentError(DocumentErrorKind kind, const std::string& message) : ValidationError(message), kind_(kind) {}

  DocumentErrorKind kind() const { return kind_; }
  /// 2 malformed JSON, 3 schema violation, 4 invalid rotation.
  int exit_code() const;

 private:
  DocumentErrorKind kind_;
};

MapDocument parse_map_document(std::string_view text);

/// Canonical form: object keys sorted, rotation listed for every node,
/// darts written as "e<id><+|->".
nlohmann::json to_json(const MapDocument& doc);
std::string serialize_map_document(const MapDocument& doc);

nlohmann::json to_json(const Face& face, const RotationMap& m);
nlohmann::json to_json(const ReductionStep& step);
nlohmann::json to_json(const ReductionTrace& trace);
nlohmann::json to_json(const HomotopyMove& move);
nlohmann::json to_json(const HomotopyCertificate& cert);
nlohmann::json to_json(const SphericityVerdict& verdict);

}  // namespace walkmap

#endif  // WALKMAP_DOCUMENT_HPP
