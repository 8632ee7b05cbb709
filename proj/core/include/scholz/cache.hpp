#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "scholz/rel_field.hpp"

namespace scholz {

inline constexpr int kEngineVersion = 1;

/// Summary of a computed field: one line of the cache file.
struct CachedField {
  FieldId field = FieldId::Q;
  RingElement mu;
  std::vector<Integer> invariant_factors;
  std::optional<KElement> eta;
  bool certified = false;
  int version = kEngineVersion;
};

/// `field-id | mu-coordinates | invariant-factors | unit-coordinates | certified-flag | engine-version`
std::string format_cache_line(const CachedField& c);
/// Returns nullopt for malformed lines.
std::optional<CachedField> parse_cache_line(std::string_view line);

/// Append-only concurrent map keyed by (field, mu), optionally backed by a file.
/// Records from other engine versions are ignored on load.
class FieldCache {
 public:
  FieldCache() = default;
  explicit FieldCache(std::string path);

  std::optional<CachedField> find(FieldId field, const RingElement& mu) const;
  /// Inserts (first writer wins) and appends the record to the file, if any.
  void store(const CachedField& c);
  std::size_t size() const;
  const std::string& path() const { return path_; }

 private:
  using Key = std::tuple<int, std::string, std::string>;
  static Key key(FieldId field, const RingElement& mu);

  std::string path_;
  mutable std::shared_mutex mutex_;
  std::map<Key, CachedField> entries_;
};

}  // namespace scholz
