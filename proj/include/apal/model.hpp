#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace apal {

/// Worlds of a model are indexed in document order; sets of worlds are
/// bitmasks over those indices. Models are capped at 64 worlds.
using WorldSet = std::uint64_t;

class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& message)
      : std::runtime_error(message) {}
};

constexpr std::size_t kMaxWorlds = 64;

/// Finite S5 Kripke model. Each agent's equivalence relation is stored
/// as a partition of the world set, so reflexivity, symmetry and
/// transitivity hold by construction.
class KripkeModel {
 public:
  KripkeModel(std::vector<std::string> worlds, std::vector<std::string> agents,
              std::vector<std::vector<WorldSet>> relation_blocks,
              std::vector<std::pair<std::string, WorldSet>> valuation);

  const std::vector<std::string>& worlds() const { return worlds_; }
  const std::vector<std::string>& agents() const { return agents_; }
  std::size_t world_count() const { return worlds_.size(); }
  WorldSet all_worlds() const {
    return worlds_.size() == kMaxWorlds
               ? ~WorldSet{0}
               : (WorldSet{1} << worlds_.size()) - 1;
  }

  /// Index of a world name; throws ModelError if unknown.
  std::size_t world_index(const std::string& name) const;
  /// Index of an agent, or -1 if the agent does not occur in the model.
  int agent_index(const std::string& agent) const;

  /// Blocks of agent a's equivalence relation, in document order.
  const std::vector<WorldSet>& blocks(std::size_t agent) const {
    return relation_blocks_[agent];
  }
  /// The a-equivalence class of world w (its set of a-successors).
  WorldSet block_of(std::size_t agent, std::size_t world) const;

  /// Truth set of an atom; atoms outside the signature are false everywhere.
  WorldSet atom_set(const std::string& atom) const;
  const std::vector<std::pair<std::string, WorldSet>>& valuation() const {
    return valuation_;
  }

  /// Canonical JSON serialization; doubles as the caching fingerprint and
  /// round-trips through load_model.
  const std::string& fingerprint() const;

 private:
  std::vector<std::string> worlds_;
  std::vector<std::string> agents_;
  std::vector<std::vector<WorldSet>> relation_blocks_;  // per agent
  std::vector<std::pair<std::string, WorldSet>> valuation_;
  mutable std::string fingerprint_;  // computed lazily, model is immutable
};

KripkeModel load_model(const std::string& document);

/// Submodel on the kept worlds: relation blocks are intersected with
/// keep (empty intersections dropped), the valuation is intersected.
/// keep must be a nonempty subset of the world set.
KripkeModel restrict(const KripkeModel& m, WorldSet keep);

struct Partition {
  std::vector<WorldSet> blocks;  // disjoint, cover the worlds, doc order
  std::vector<int> class_of;     // world index -> block index
};

/// Coarsest partition whose blocks agree on all signature atoms and are
/// uniform with respect to every agent's relation (iterated refinement).
Partition bisim_quotient(const KripkeModel& m);

/// All unions of quotient blocks that contain w's block: block(w) joined
/// with each subset of the remaining blocks, 2^(k-1) sets in a fixed
/// enumeration order.
std::vector<WorldSet> closed_supersets(const Partition& part,
                                       std::size_t world);

std::string format_world_set(const KripkeModel& m, WorldSet set);

}  // namespace apal
