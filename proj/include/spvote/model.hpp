#pragma once

#include <string>
#include <string_view>

#include "spvote/error.hpp"

namespace spvote {

// uniform: impartial culture over single-peaked votes.
// conitzer: uniform peak, then fair left/right extension.
enum class Model { uniform, conitzer };

inline std::string_view to_string(Model m) {
  switch (m) {
    case Model::uniform: return "uniform";
    case Model::conitzer: return "conitzer";
  }
  return "?";
}

inline Model parse_model(std::string_view name) {
  if (name == "uniform") return Model::uniform;
  if (name == "conitzer") return Model::conitzer;
  throw DomainError("unknown model '" + std::string(name) + "'");
}

}  // namespace spvote
