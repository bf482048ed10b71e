//
// Copyright 2026 The arts-toolkit Authors
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
//

#ifndef ARTS_APP_MANIFEST_HPP_
#define ARTS_APP_MANIFEST_HPP_

#include <array>
#include <cstdio>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include <openssl/evp.h>

#include "json.hpp"

#include "arts/errors.hpp"
#include "arts/io.hpp"

namespace arts::app {

inline constexpr std::string_view kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

// Lowercase hex SHA-256 of `data`.
inline std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("DigestError", "SHA-256 computation failed");
  }
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof(buf), "%02x", md[i]);
    out += buf;
  }
  return out;
}

inline std::string sha256_file(const std::filesystem::path& path) {
  return sha256_hex(io::read_file(path));
}

// Run record: tool version, seed, the full configuration with its digest,
// and SHA-256 digests of every input and output file.
struct Manifest {
  std::string command;
  std::uint64_t seed = 0;
  Json config = Json::object();
  std::map<std::string, std::string> inputs;   // role -> sha256
  std::map<std::string, std::string> outputs;  // file name -> sha256

  Json to_json() const {
    Json j;
    j["tool"] = "arts";
    j["version"] = std::string(kToolVersion);
    j["command"] = command;
    j["seed"] = seed;
    j["config"] = config;
    j["config_sha256"] = sha256_hex(config.dump());
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    return j;
  }

  static Manifest from_json(const Json& j) {
    Manifest m;
    try {
      m.command = j.at("command").get<std::string>();
      m.seed = j.at("seed").get<std::uint64_t>();
      m.config = j.at("config");
      m.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
      if (j.contains("outputs")) {
        m.outputs = j.at("outputs").get<std::map<std::string, std::string>>();
      }
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("malformed manifest: ") + e.what());
    }
    if (j.contains("config_sha256") &&
        j.at("config_sha256") != sha256_hex(m.config.dump())) {
      throw ConfigError("manifest config digest does not match its config");
    }
    return m;
  }
};

inline Manifest load_manifest(const std::filesystem::path& path) {
  Json j;
  try {
    j = Json::parse(io::read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("manifest " + path.string() + " is not JSON: " + e.what());
  }
  return Manifest::from_json(j);
}

}  // namespace arts::app

#endif  // ARTS_APP_MANIFEST_HPP_
