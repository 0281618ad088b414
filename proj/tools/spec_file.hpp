#ifndef NOETHER_TOOLS_SPEC_FILE_HPP
#define NOETHER_TOOLS_SPEC_FILE_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "noether/noether.hpp"

namespace noether::cli {

/// One analysis problem as read from disk: the field system, the Lagrangian,
/// the generator given as (X, Y) and decomposed on load, plus the optional
/// numeric scenario block.
struct SpecFile {
  FieldSystem system;
  Expr lagrangian;
  Generator generator;
  std::optional<Scenario> scenario;  // sys/lagrangian/gen duplicated inside
};

/// Parses and validates a spec document. Error messages name the offending
/// spec field.
SpecFile parse_spec(const nlohmann::json& doc);

SpecFile load_spec_file(const std::string& path);

}  // namespace noether::cli

#endif
