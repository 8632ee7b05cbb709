#include "scholz/cache.hpp"

#include <fstream>
#include <sstream>

#include "scholz/error.hpp"

namespace scholz {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

bool parse_int(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  return out.set_str(std::string(s), 10) == 0;
}

bool parse_pair(std::string_view s, RingElement& out) {
  auto parts = split(s, ',');
  if (parts.size() != 2) return false;
  return parse_int(parts[0], out.x) && parse_int(parts[1], out.y);
}

std::string field_token(FieldId id) { return std::string(GroundField::get(id).name()); }

}  // namespace

std::string format_cache_line(const CachedField& c) {
  std::ostringstream os;
  os << field_token(c.field) << " | " << c.mu.x.get_str() << ',' << c.mu.y.get_str() << " | ";
  if (c.invariant_factors.empty()) os << '-';
  for (std::size_t i = 0; i < c.invariant_factors.size(); ++i) os << (i ? "," : "") << c.invariant_factors[i].get_str();
  os << " | ";
  if (c.eta)
    os << c.eta->x.x.get_str() << ',' << c.eta->x.y.get_str() << ';' << c.eta->y.x.get_str() << ','
       << c.eta->y.y.get_str();
  else
    os << '-';
  os << " | " << (c.certified ? 1 : 0) << " | " << c.version;
  return os.str();
}

std::optional<CachedField> parse_cache_line(std::string_view line) {
  auto f = split(line, '|');
  if (f.size() != 6) return std::nullopt;
  CachedField c;
  try {
    c.field = GroundField::parse(f[0]).id();
  } catch (const error&) {
    return std::nullopt;
  }
  if (!parse_pair(f[1], c.mu)) return std::nullopt;
  if (f[2] != "-") {
    for (auto t : split(f[2], ',')) {
      Integer v;
      if (!parse_int(t, v)) return std::nullopt;
      c.invariant_factors.push_back(v);
    }
  }
  if (f[3] != "-") {
    auto halves = split(f[3], ';');
    KElement e;
    if (halves.size() != 2 || !parse_pair(halves[0], e.x) || !parse_pair(halves[1], e.y)) return std::nullopt;
    c.eta = e;
  }
  if (f[4] != "0" && f[4] != "1") return std::nullopt;
  c.certified = f[4] == "1";
  Integer v;
  if (!parse_int(f[5], v) || !v.fits_sint_p()) return std::nullopt;
  c.version = static_cast<int>(v.get_si());
  return c;
}

FieldCache::Key FieldCache::key(FieldId field, const RingElement& mu) {
  return {static_cast<int>(field), mu.x.get_str(), mu.y.get_str()};
}

FieldCache::FieldCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    auto c = parse_cache_line(line);
    if (!c || c->version != kEngineVersion) continue;
    entries_.emplace(key(c->field, c->mu), *c);
  }
}

std::optional<CachedField> FieldCache::find(FieldId field, const RingElement& mu) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key(field, mu));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void FieldCache::store(const CachedField& c) {
  std::unique_lock lock(mutex_);
  if (!entries_.emplace(key(c.field, c.mu), c).second) return;
  if (path_.empty()) return;
  std::ofstream out(path_, std::ios::app);
  out << format_cache_line(c) << '\n';
}

std::size_t FieldCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

}  // namespace scholz
