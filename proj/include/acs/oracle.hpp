#pragma once

// Query-answering side of the search game. A superset query asks a set Q
// and learns whether Q contains at least one member of the hidden antichain.

#include <cstddef>
#include <vector>

#include "acs/core.hpp"

namespace acs {

struct TranscriptEntry {
  Mask query = 0;
  bool answer = false;

  bool operator==(const TranscriptEntry&) const = default;
};

/// Ordered record of (query, YES/NO) pairs; the full state of a search.
struct Transcript {
  int n = 0;
  std::vector<TranscriptEntry> entries;

  bool operator==(const Transcript&) const = default;
};

/// True iff some member of s is contained in q.
bool answer_query(const Antichain& s, const Subset& q);
bool answer_query(const Antichain& s, Mask q);

/// Anything that can answer superset queries: the truthful oracle or an
/// adversary. Single logical asker at a time; every answer is logged and
/// charged, duplicates included.
class Oracle {
 public:
  virtual ~Oracle() = default;

  int n() const { return log_.n; }

  bool ask(Mask q);
  bool ask(const Subset& q);

  std::size_t count() const { return log_.entries.size(); }
  const Transcript& log() const { return log_; }

 protected:
  explicit Oracle(int n) { log_.n = n; }
  virtual bool respond(Mask q) = 0;

 private:
  Transcript log_;
};

/// Holds a fixed hidden antichain and answers truthfully.
class AntichainOracle final : public Oracle {
 public:
  explicit AntichainOracle(Antichain hidden);

  const Antichain& hidden() const { return hidden_; }

 protected:
  bool respond(Mask q) override { return answer_query(hidden_, q); }

 private:
  Antichain hidden_;
};

/// All k-antichains consistent with every entry of t. Brute-force referee;
/// capped at n <= 6.
std::vector<Antichain> consistent_antichains(const Transcript& t, int k);

}  // namespace acs
