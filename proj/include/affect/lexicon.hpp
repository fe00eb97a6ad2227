#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "affect/epa.hpp"

namespace affect {

// One dictionary entry. Word terms are stored lower-cased with underscores
// for spaces ("shout_at"); emoji terms are kept byte-exact.
struct LexiconEntry {
  std::string term;
  Kind kind = Kind::identity;
  EpaVector epa;
  Provenance provenance = Provenance::surveyed;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

struct LexiconMetadata {
  std::string source;   // free-form name of the originating survey or model
  std::string culture;  // e.g. "US"
  std::string year;     // collection year, kept as text

  friend bool operator==(const LexiconMetadata&, const LexiconMetadata&) = default;
};

// Term -> EPA store keyed by (term, kind). Instances are built once and
// treated as immutable afterwards; concurrent readers are safe.
class AffectiveLexicon {
 public:
  using Key = std::pair<std::string, Kind>;

  // Canonical key form: trimmed; ASCII-lower-cased and space->underscore for
  // non-emoji kinds. Emoji terms are compared by exact codepoint sequence.
  static std::string normalize_term(std::string_view term, Kind kind);

  // Inserts an entry after normalizing its term. Throws on empty terms and
  // duplicate (term, kind) keys. Components outside the nominal scale are
  // accepted but force provenance=estimated and append a warning.
  void add(LexiconEntry entry);

  const LexiconEntry* find(std::string_view term, Kind kind) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<Key, LexiconEntry>& entries() const { return entries_; }

  LexiconMetadata& metadata() { return metadata_; }
  const LexiconMetadata& metadata() const { return metadata_; }

  const std::vector<std::string>& warnings() const { return warnings_; }

  friend bool operator==(const AffectiveLexicon& lhs, const AffectiveLexicon& rhs) {
    return lhs.entries_ == rhs.entries_ && lhs.metadata_ == rhs.metadata_;
  }

 private:
  std::map<Key, LexiconEntry> entries_;
  LexiconMetadata metadata_;
  std::vector<std::string> warnings_;
};

// CSV I/O. Format: optional leading "# key=value" metadata lines, then the
// header "term,kind,e,p,a,provenance", then one entry per line. UTF-8, LF.
AffectiveLexicon load_lexicon(const std::string& path);
void save_lexicon(const AffectiveLexicon& lexicon, const std::string& path);

// The k entries of `kind` closest to `query` in EPA space, ascending by
// Euclidean distance, ties broken by term order. Fewer than k entries of the
// kind is not an error; the result is just shorter.
std::vector<std::pair<LexiconEntry, double>> nearest_entries(
    const AffectiveLexicon& lexicon, const EpaVector& query, Kind kind,
    std::size_t k);

}  // namespace affect
