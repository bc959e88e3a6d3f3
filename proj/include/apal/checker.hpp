#pragma once

#include <string>
#include <unordered_map>

#include "apal/formula.hpp"
#include "apal/model.hpp"

namespace apal {

/// Memo table for truth sets, keyed by model fingerprint and canonical
/// formula rendering, so restriction-generated submodels hit the cache.
/// Confine a cache to one evaluation context; results are identical with
/// or without it.
class TruthSetCache {
 public:
  bool lookup(const std::string& model_key, const std::string& formula_key,
              WorldSet* out) const;
  void insert(const std::string& model_key, const std::string& formula_key,
              WorldSet value);
  std::size_t entries() const { return table_.size(); }

 private:
  std::unordered_map<std::string, WorldSet> table_;
};

/// Truth set of f in m. The box clause quantifies over the
/// bisimulation-closed subsets of the world set that contain the
/// evaluation world.
WorldSet truth_set(const KripkeModel& m, const Formula& f,
                   TruthSetCache* cache = nullptr);

bool satisfies(const KripkeModel& m, const std::string& world,
               const Formula& f, TruthSetCache* cache = nullptr);

bool valid_on(const KripkeModel& m, const Formula& f,
              TruthSetCache* cache = nullptr);

/// Brute-force check of "box inner" at a world: enumerates every subset
/// of the world set containing it, keeps the bisimulation-closed ones,
/// and demands inner after each such announcement. Intended for small
/// models; independent of the quotient shortcuts in truth_set.
bool box_oracle(const KripkeModel& m, const std::string& world,
                const Formula& inner);

}  // namespace apal
