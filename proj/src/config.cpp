/*
   Copyright 2026 the jchx authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#include "jchx/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace jchx {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' has non-numeric value '" +
                      value + "'");
  }
  if (pos != value.size() || std::isnan(v))
    throw ConfigError("config: key '" + key + "' has non-numeric value '" +
                      value + "'");
  return v;
}

long parse_long(const std::string& key, const std::string& value) {
  const double v = parse_double(key, value);
  const long l = long(v);
  if (double(l) != v)
    throw ConfigError("config: key '" + key + "' must be an integer");
  return l;
}

}  // namespace

std::map<std::string, std::string> parse_kv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(lineno) +
                        " is not a key = value assignment");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("config: line " + std::to_string(lineno) +
                        " has an empty key or value");
    if (!kv.emplace(key, value).second)
      throw ConfigError("config: duplicate key '" + key + "'");
  }
  return kv;
}

ModelParams model_params_from(const std::map<std::string, std::string>& kv) {
  ModelParams p;
  bool saw_epsilon = false, saw_delta = false;
  double epsilon = 0.0;
  for (const auto& [key, value] : kv) {
    if (key == "omega") p.omega = parse_double(key, value);
    else if (key == "delta") { p.delta = parse_double(key, value); saw_delta = true; }
    else if (key == "epsilon") { epsilon = parse_double(key, value); saw_epsilon = true; }
    else if (key == "g") p.g = parse_double(key, value);
    else if (key == "mu") p.mu = parse_double(key, value);
    else if (key == "t") p.t = parse_double(key, value);
    else if (key == "v1") p.v1 = parse_double(key, value);
    else if (key == "n_max") p.n_max = int(parse_long(key, value));
    else if (key == "range_cutoff") {
      if (value == "inf" || value == "infinity")
        p.range_cutoff = std::numeric_limits<double>::infinity();
      else
        p.range_cutoff = parse_double(key, value);
    } else if (key == "rydberg_weight_exponent") {
      const long e = parse_long(key, value);
      if (e != 2 && e != 4)
        throw ConfigError("config: rydberg_weight_exponent must be 2 or 4");
      p.convention = e == 4 ? WeightConvention::literal : WeightConvention::calibrated;
    } else {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }
  if (saw_epsilon) {
    const double implied = p.omega - epsilon;
    if (saw_delta && implied != p.delta)
      throw ConfigError(
          "config: delta and epsilon contradict (delta = omega - epsilon "
          "must hold exactly)");
    p.delta = implied;
  }
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return p;
}

ModelParams load_model_params(const std::string& path) {
  return model_params_from(parse_kv_file(path));
}

ExperimentalInputs experimental_inputs_from(
    const std::map<std::string, std::string>& kv) {
  ExperimentalInputs in;
  bool saw_units = false;
  for (const auto& [key, value] : kv) {
    if (key == "eta_c") in.eta_c = parse_double(key, value);
    else if (key == "Gamma") in.Gamma = parse_double(key, value);
    else if (key == "N_R") in.N_R = parse_double(key, value);
    else if (key == "c") in.c = parse_double(key, value);
    else if (key == "L_cav") in.L_cav = parse_double(key, value);
    else if (key == "Omega") in.Omega = parse_double(key, value);
    else if (key == "Delta_p") in.Delta_p = parse_double(key, value);
    else if (key == "F") in.F = parse_double(key, value);
    else if (key == "C6") in.C6 = parse_double(key, value);
    else if (key == "spacing") in.spacing = parse_double(key, value);
    else if (key == "unit_convention") {
      if (value == "angular") in.convention = FrequencyConvention::angular;
      else if (value == "ordinary") in.convention = FrequencyConvention::ordinary;
      else throw ConfigError("config: unit_convention must be angular or ordinary");
      saw_units = true;
    } else {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }
  if (!saw_units)
    throw ConfigError(
        "config: unit_convention (angular|ordinary) must be stated "
        "explicitly");
  return in;
}

ExperimentalInputs load_experimental_inputs(const std::string& path) {
  return experimental_inputs_from(parse_kv_file(path));
}

}  // namespace jchx
