// Copyright 2026 The symprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "run_config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "symprep/serialization.hpp"

namespace symprep::cli {
namespace {

using nlohmann::json;

template <typename T>
T get_as(const json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Complex coefficient_from_json(const json& v) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return Complex(v[0].get<double>(), v[1].get<double>());
  }
  if (v.is_object() && v.contains("re") && v.contains("im") && v.size() == 2 && v["re"].is_number() &&
      v["im"].is_number()) {
    return Complex(v["re"].get<double>(), v["im"].get<double>());
  }
  throw ConfigError("coefficient entries must be numbers, [re, im] pairs or {\"re\", \"im\"} objects");
}

std::vector<Complex> coefficients_from_json(const json& j) {
  const json* list = &j;
  if (j.is_object()) {
    if (!j.contains("coefficients") || j.size() != 1) {
      throw ConfigError("coefficient document must hold exactly one \"coefficients\" array");
    }
    list = &j["coefficients"];
  }
  if (!list->is_array()) throw ConfigError("coefficients must form a JSON array");
  std::vector<Complex> out;
  for (const auto& v : *list) out.push_back(coefficient_from_json(v));
  return out;
}

// "a", "bi", "a+bi", "a-bi" (i or j as imaginary unit).
Complex parse_complex_token(const std::string& token) {
  const std::string t = trim(token);
  if (t.empty()) throw ConfigError("empty coefficient in list");
  const char* begin = t.c_str();
  char* end = nullptr;
  const double first = std::strtod(begin, &end);
  if (end == begin) throw ConfigError("cannot parse coefficient '" + t + "'");
  std::string rest(end);
  if (rest.empty()) return Complex(first, 0.0);
  if (rest == "i" || rest == "j") return Complex(0.0, first);
  if (rest[0] == '+' || rest[0] == '-') {
    const char* rbegin = rest.c_str();
    char* rend = nullptr;
    const double second = std::strtod(rbegin, &rend);
    const std::string tail(rend);
    if (rend != rbegin && (tail == "i" || tail == "j")) return Complex(first, second);
  }
  throw ConfigError("cannot parse coefficient '" + t + "'");
}

}  // namespace

void apply_config_json(const json& j, RunConfig& config) {
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "target") {
      if (value.is_string()) {
        config.target = value.get<std::string>();
      } else {
        config.target = value.dump();
      }
    } else if (key == "target_file") {
      config.target_file = get_as<std::string>(value, key);
    } else if (key == "n") {
      config.num_qubits = get_as<int>(value, key);
    } else if (key == "normalize") {
      config.normalize = get_as<bool>(value, key);
    } else if (key == "backend") {
      config.backend = get_as<std::string>(value, key);
    } else if (key == "g1") {
      config.g1 = get_as<double>(value, key);
    } else if (key == "g2") {
      config.g2 = get_as<double>(value, key);
    } else if (key == "delta1") {
      config.delta1 = get_as<double>(value, key);
    } else if (key == "truncation") {
      config.truncation = get_as<int>(value, key);
    } else if (key == "samples_per_step") {
      config.samples_per_step = get_as<int>(value, key);
    } else if (key == "skip_zero") {
      config.skip_zero = get_as<bool>(value, key);
    } else if (key == "stark_compensation") {
      config.stark_compensation = get_as<bool>(value, key);
    } else if (key == "precompensate") {
      config.precompensate = get_as<bool>(value, key);
    } else if (key == "reference_table2") {
      config.reference_table2 = get_as<bool>(value, key);
    } else if (key == "physical_g1") {
      config.physical_g1 = get_as<std::string>(value, key);
    } else if (key == "chirp") {
      config.chirp = chirp_from_json(value, config.chirp);
    } else if (key == "sweep_durations") {
      config.sweep_durations = get_as<std::vector<double>>(value, key);
    } else if (key == "rel_tol") {
      config.rel_tol = get_as<double>(value, key);
    } else if (key == "out_dir") {
      config.out_dir = get_as<std::string>(value, key);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

void load_config_file(const std::filesystem::path& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("malformed config file " + path.string() + ": " + e.what());
  }
  apply_config_json(j, config);
}

std::vector<Complex> parse_coefficient_list(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw ConfigError("empty coefficient list");
  if (t.front() == '[' || t.front() == '{') {
    json j;
    try {
      j = json::parse(t);
    } catch (const json::exception& e) {
      throw ConfigError(std::string("malformed coefficient list: ") + e.what());
    }
    return coefficients_from_json(j);
  }
  std::vector<Complex> out;
  std::string token;
  std::istringstream in(t);
  while (std::getline(in, token, ',')) {
    std::istringstream words(token);
    std::string word;
    bool any = false;
    while (words >> word) {
      out.push_back(parse_complex_token(word));
      any = true;
    }
    if (!any) throw ConfigError("empty coefficient in list '" + t + "'");
  }
  return out;
}

std::vector<Complex> read_coefficient_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open coefficients file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  // Plain lists may be split across lines.
  const std::string trimmed = trim(text);
  if (!trimmed.empty() && trimmed.front() != '[' && trimmed.front() != '{') {
    for (char& ch : text) {
      if (ch == '\n' || ch == '\r') ch = ',';
    }
    std::string compact;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == ',' && (compact.empty() || compact.back() == ',')) continue;
      compact.push_back(text[i]);
    }
    while (!compact.empty() && compact.back() == ',') compact.pop_back();
    text = compact;
  }
  try {
    return parse_coefficient_list(text);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::optional<SymmetricCoefficients> named_target(const std::string& name, int num_qubits) {
  std::string lower;
  for (char ch : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  const bool known = lower == "ghz" || lower == "w" || lower == "ground" || lower == "excited" ||
                     lower.rfind("dicke:", 0) == 0;
  if (!known) return std::nullopt;
  if (num_qubits < 1) throw ConfigError("named target '" + name + "' needs the qubit count (--n)");
  const auto n = static_cast<std::size_t>(num_qubits);
  std::vector<Complex> c(n + 1, Complex{});
  if (lower == "ghz") {
    c.front() = c.back() = Complex(1.0 / std::sqrt(2.0), 0.0);
  } else if (lower == "w") {
    c[1] = 1.0;
  } else if (lower == "ground") {
    c.front() = 1.0;
  } else if (lower == "excited") {
    c.back() = 1.0;
  } else {
    const std::string digits = lower.substr(6);
    std::size_t used = 0;
    int k = -1;
    try {
      k = std::stoi(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != digits.size()) throw ConfigError("malformed Dicke target '" + name + "'");
    if (k < 0 || k > num_qubits) throw ConfigError("Dicke excitation out of range in '" + name + "'");
    c[static_cast<std::size_t>(k)] = 1.0;
  }
  return SymmetricCoefficients(std::move(c));
}

SymmetricCoefficients resolve_target(const RunConfig& config) {
  if (!config.target.empty() && !config.target_file.empty()) {
    throw ConfigError("give either a target or a target file, not both");
  }
  if (config.target.empty() && config.target_file.empty()) throw ConfigError("no target given");
  if (!config.target.empty()) {
    if (auto named = named_target(config.target, config.num_qubits)) return *named;
  }
  const std::vector<Complex> raw = config.target_file.empty() ? parse_coefficient_list(config.target)
                                                              : read_coefficient_file(config.target_file);
  if (raw.size() < 2) throw ConfigError("a target needs at least two coefficients (N >= 1)");
  if (config.num_qubits > 0 && static_cast<std::size_t>(config.num_qubits) + 1 != raw.size()) {
    throw ConfigError("target has " + std::to_string(raw.size()) + " coefficients but --n is " +
                      std::to_string(config.num_qubits));
  }
  double norm2 = 0.0;
  for (const Complex& z : raw) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ConfigError("non-finite coefficient");
    norm2 += std::norm(z);
  }
  if (!config.normalize && std::abs(std::sqrt(norm2) - 1.0) > kNormalizationTolerance) {
    std::ostringstream msg;
    msg << "coefficients have norm " << std::sqrt(norm2) << "; pass --normalize to rescale them";
    throw ConfigError(msg.str());
  }
  return SymmetricCoefficients(raw);
}

}  // namespace symprep::cli
