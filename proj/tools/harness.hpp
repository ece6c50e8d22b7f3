#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dehnkit/serialize.hpp"

namespace dehnkit::harness {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Expected {
  std::string value;
  std::string route;  // how the value was derived
};

struct CorpusEntry {
  std::string name;
  std::string pd;
  std::optional<int> outer_face;
  std::map<std::string, Expected> expected;  // "determinant", "alexander"
  std::map<std::string, bool> flags;         // "special", "alternating", "split"
  std::string provenance;
};

std::vector<CorpusEntry> corpus_from_json(const Json& j);
std::vector<CorpusEntry> load_corpus(const std::string& path);
Json to_json(const CorpusEntry& e);

/// Entry with expected values from the Wirtinger route and flags from the diagram.
CorpusEntry make_entry(const std::string& name, const std::string& pd, std::optional<int> outer_face,
                       const std::string& provenance);

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct EntryResult {
  std::string name;
  std::vector<PropertyResult> properties;
  double millis = 0;
  bool pass() const;
};

/// Runs every applicable property on one entry. Never throws; failures are recorded.
EntryResult verify_entry(const CorpusEntry& e);

struct FoxSuiteOptions {
  std::uint64_t seed = 1;
  int words = 1000;
  int max_length = 50;
  int generators = 4;
};
/// Product rule, fundamental identity and reduction invariance on random words.
std::vector<PropertyResult> fox_property_suite(const FoxSuiteOptions& opts);

struct RunReport {
  std::vector<EntryResult> entries;  // sorted by name
  std::vector<PropertyResult> fox;
  std::string version;
  std::string input_hash;
  std::uint64_t seed = 0;
  bool pass() const;
};

RunReport run_verify(const std::vector<CorpusEntry>& corpus, const FoxSuiteOptions& fox, int jobs,
                     const std::string& input_hash);
Json to_json(const RunReport& r, bool with_timing);

/// FNV-1a 64-bit, hex encoded.
std::string fnv1a_hex(std::string_view bytes);

std::string version();

}  // namespace dehnkit::harness
