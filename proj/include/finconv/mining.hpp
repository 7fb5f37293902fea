#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finconv/document.hpp"

namespace finconv {

struct Verdict {
  enum class Status { Holds, Violated, NotApplicable };
  Status status = Status::Holds;
  std::string detail;

  static Verdict holds() { return {Status::Holds, {}}; }
  static Verdict violated(std::string why) { return {Status::Violated, std::move(why)}; }
  static Verdict skip(std::string why = {}) { return {Status::NotApplicable, std::move(why)}; }
};

struct Bounds {
  std::size_t max_points = 3;
  bool up_to_iso = false;
};

/// A finite instance stream: instance i is make(i).
struct InstanceSource {
  std::uint64_t count = 0;
  std::function<Document(std::uint64_t)> make;
};

/// A checkable statement. Instances are documents, so every verdict can be
/// reproduced from the document alone.
class Property {
 public:
  virtual ~Property() = default;

  virtual std::string name() const = 0;
  virtual std::string summary() const = 0;
  virtual std::size_t default_max_points() const = 0;

  /// Nullopt when the property has no exhaustive mode.
  virtual std::optional<InstanceSource> exhaustive(const Bounds& bounds) const;
  /// Instance `index` of the sampled stream for `seed`.
  virtual Document sample(std::uint64_t seed, std::uint64_t index, const Bounds& bounds) const = 0;
  /// Throws PreconditionError when the document lacks the expected items.
  virtual Verdict check(const Document& doc) const = 0;
};

/// All registered properties, sorted by name.
const std::vector<std::unique_ptr<Property>>& property_registry();
/// Throws PreconditionError for unknown names.
const Property& find_property(const std::string& name);

struct MiningTask {
  std::string property;
  bool exhaustive = false;
  std::uint64_t seed = 1;
  std::uint64_t count = 1000;
  std::optional<std::size_t> max_points;
  bool up_to_iso = false;
  std::optional<std::string> out_dir;  // witness documents are written here
  unsigned threads = 0;                // 0: hardware concurrency
  std::size_t max_witnesses = 10;
};

struct Witness {
  std::uint64_t index = 0;
  std::string detail;
  std::string document;  // serialized, with a header naming property and index
};

struct MiningReport {
  std::string property;
  std::string source;  // "exhaustive ..." or "sampled ..."
  std::uint64_t instances = 0;
  std::uint64_t applicable = 0;
  std::uint64_t violations = 0;
  std::uint64_t digest = 0;  // FNV-1a over every instance document and outcome
  std::vector<Witness> witnesses;

  bool ok() const { return violations == 0; }
  /// Deterministic text; contains no timings or paths.
  std::string text() const;
};

MiningReport mine(const MiningTask& task);

/// Re-checks a witness document; the property is taken from its
/// "# property:" header unless given.
Verdict replay(const Document& doc, const std::string& property = {});

}  // namespace finconv
