#ifndef SUMSETLAB_MANIFEST_HPP
#define SUMSETLAB_MANIFEST_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sumsetlab/rational.hpp"

namespace sumsetlab {

// Experiment manifests are flat "key = value" text files; '#' starts a
// comment, blank lines are skipped, keys may not repeat. Outputs embed the
// manifest hash so runs can be tied back to their exact inputs.
class ExperimentManifest {
public:
  static ExperimentManifest parse(const std::string& text);
  static ExperimentManifest load(const std::string& path);

  const std::string& raw_text() const { return raw_; }
  std::string hash() const;  // fnv1a64 over the raw text, hex

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& def) const;
  std::int64_t get_int(const std::string& key) const;
  std::int64_t get_int(const std::string& key, std::int64_t def) const;
  bool get_bool(const std::string& key, bool def) const;
  Rational get_rational(const std::string& key, const Rational& def) const;
  std::vector<std::int64_t> get_int_list(const std::string& key) const;
  std::optional<std::vector<std::int64_t>> get_int_list_opt(
      const std::string& key) const;

  const std::map<std::string, std::string>& entries() const { return values_; }

private:
  std::string raw_;
  std::map<std::string, std::string> values_;
};

}  // namespace sumsetlab

#endif
