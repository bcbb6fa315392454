#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "gasket/eigen.hpp"
#include "gasket/numeric.hpp"
#include "gasket/quadnum.hpp"

namespace gasket::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

struct RunConfig {
  std::string command;
  int level = 3;
  std::string cls;  // forest class name; empty: the command's default
  std::uint64_t seed = 0;
  int samples = 1;
  std::string out;  // empty: stdout
  std::string format = "json";
  std::string cell;  // empty: $GASKET_CELL, then the built-in gasket
  bool strict = false;
};

nlohmann::json to_json(const RunConfig& c);
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const QuadNum& q);
nlohmann::json to_json(const AlgebraicValue& v);

int cli_dispatch(int argc, char** argv);

}  // namespace gasket::cli
