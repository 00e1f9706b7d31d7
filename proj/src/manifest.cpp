#include "sumsetlab/manifest.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sumsetlab {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

ExperimentManifest ExperimentManifest::parse(const std::string& text) {
  ExperimentManifest m;
  m.raw_ = text;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("manifest line " + std::to_string(lineno) +
                                  ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("manifest line " + std::to_string(lineno) +
                                  ": empty key");
    if (!m.values_.emplace(key, value).second)
      throw std::invalid_argument("manifest line " + std::to_string(lineno) +
                                  ": duplicate key '" + key + "'");
  }
  return m;
}

ExperimentManifest ExperimentManifest::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open manifest " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

std::string ExperimentManifest::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : raw_) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  static const char* hex = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = hex[h & 0xf];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string(buf);
}

std::string ExperimentManifest::get_string(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end())
    throw std::invalid_argument("manifest: missing required key '" + key + "'");
  return it->second;
}

std::string ExperimentManifest::get_string(const std::string& key,
                                           const std::string& def) const {
  auto it = values_.find(key);
  return it == values_.end() ? def : it->second;
}

std::int64_t ExperimentManifest::get_int(const std::string& key) const {
  const std::string v = get_string(key);
  try {
    std::size_t used = 0;
    std::int64_t out = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument("");
    return out;
  } catch (...) {
    throw std::invalid_argument("manifest: key '" + key +
                                "' is not an integer: " + v);
  }
}

std::int64_t ExperimentManifest::get_int(const std::string& key,
                                         std::int64_t def) const {
  return has(key) ? get_int(key) : def;
}

bool ExperimentManifest::get_bool(const std::string& key, bool def) const {
  if (!has(key)) return def;
  const std::string v = get_string(key);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::invalid_argument("manifest: key '" + key + "' is not a boolean");
}

Rational ExperimentManifest::get_rational(const std::string& key,
                                          const Rational& def) const {
  if (!has(key)) return def;
  try {
    return Rational::parse(get_string(key));
  } catch (...) {
    throw std::invalid_argument("manifest: key '" + key + "' is not rational");
  }
}

std::vector<std::int64_t> ExperimentManifest::get_int_list(
    const std::string& key) const {
  auto out = get_int_list_opt(key);
  if (!out)
    throw std::invalid_argument("manifest: missing required key '" + key + "'");
  return *out;
}

std::optional<std::vector<std::int64_t>> ExperimentManifest::get_int_list_opt(
    const std::string& key) const {
  if (!has(key)) return std::nullopt;
  const std::string v = get_string(key);
  std::vector<std::int64_t> out;
  std::string token;
  std::istringstream ss(v);
  while (std::getline(ss, token, ',')) {
    token = trim(token);
    if (token.empty())
      throw std::invalid_argument("manifest: empty entry in list '" + key + "'");
    out.push_back(std::stoll(token));
  }
  if (out.empty())
    throw std::invalid_argument("manifest: empty list for key '" + key + "'");
  return out;
}

}  // namespace sumsetlab
