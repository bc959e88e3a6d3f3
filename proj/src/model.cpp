#include "apal/model.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "json.hpp"

namespace apal {

KripkeModel::KripkeModel(
    std::vector<std::string> worlds, std::vector<std::string> agents,
    std::vector<std::vector<WorldSet>> relation_blocks,
    std::vector<std::pair<std::string, WorldSet>> valuation)
    : worlds_(std::move(worlds)),
      agents_(std::move(agents)),
      relation_blocks_(std::move(relation_blocks)),
      valuation_(std::move(valuation)) {
  if (worlds_.empty()) throw ModelError("nonempty domain required");
  if (worlds_.size() > kMaxWorlds)
    throw ModelError("at most " + std::to_string(kMaxWorlds) +
                     " worlds supported");
  for (std::size_t i = 0; i < worlds_.size(); ++i)
    for (std::size_t j = i + 1; j < worlds_.size(); ++j)
      if (worlds_[i] == worlds_[j])
        throw ModelError("duplicate world '" + worlds_[i] + "'");
  if (relation_blocks_.size() != agents_.size())
    throw ModelError("one block list per agent required");

  WorldSet all = all_worlds();
  for (std::size_t a = 0; a < agents_.size(); ++a) {
    WorldSet seen = 0;
    for (WorldSet block : relation_blocks_[a]) {
      if (block == 0)
        throw ModelError("agent '" + agents_[a] + "': empty block");
      if (block & ~all)
        throw ModelError("agent '" + agents_[a] + "': block out of range");
      if (block & seen)
        throw ModelError("agent '" + agents_[a] + "': blocks not disjoint");
      seen |= block;
    }
    if (seen != all)
      throw ModelError("agent '" + agents_[a] +
                       "': blocks do not cover the world set");
  }
  for (const auto& [atom, set] : valuation_)
    if (set & ~all)
      throw ModelError("valuation of '" + atom + "' mentions unknown world");
}

std::size_t KripkeModel::world_index(const std::string& name) const {
  for (std::size_t i = 0; i < worlds_.size(); ++i)
    if (worlds_[i] == name) return i;
  throw ModelError("unknown world '" + name + "'");
}

int KripkeModel::agent_index(const std::string& agent) const {
  for (std::size_t i = 0; i < agents_.size(); ++i)
    if (agents_[i] == agent) return static_cast<int>(i);
  return -1;
}

WorldSet KripkeModel::block_of(std::size_t agent, std::size_t world) const {
  for (WorldSet block : relation_blocks_[agent])
    if (block & (WorldSet{1} << world)) return block;
  return 0;  // unreachable on a validated model
}

WorldSet KripkeModel::atom_set(const std::string& atom) const {
  for (const auto& [name, set] : valuation_)
    if (name == atom) return set;
  return 0;
}

const std::string& KripkeModel::fingerprint() const {
  if (!fingerprint_.empty()) return fingerprint_;
  nlohmann::ordered_json doc;
  doc["worlds"] = worlds_;
  doc["agents"] = agents_;
  nlohmann::ordered_json relations = nlohmann::ordered_json::object();
  for (std::size_t a = 0; a < agents_.size(); ++a) {
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (WorldSet block : relation_blocks_[a]) {
      nlohmann::ordered_json names = nlohmann::ordered_json::array();
      for (std::size_t w = 0; w < worlds_.size(); ++w)
        if (block & (WorldSet{1} << w)) names.push_back(worlds_[w]);
      blocks.push_back(names);
    }
    relations[agents_[a]] = blocks;
  }
  doc["relations"] = relations;
  nlohmann::ordered_json valuation = nlohmann::ordered_json::object();
  for (const auto& [atom, set] : valuation_) {
    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    for (std::size_t w = 0; w < worlds_.size(); ++w)
      if (set & (WorldSet{1} << w)) names.push_back(worlds_[w]);
    valuation[atom] = names;
  }
  doc["valuation"] = valuation;
  fingerprint_ = doc.dump();
  return fingerprint_;
}

KripkeModel load_model(const std::string& document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ModelError(std::string("malformed model document: ") + e.what());
  }
  if (!doc.is_object()) throw ModelError("model document must be an object");
  for (const char* key : {"worlds", "agents", "relations", "valuation"})
    if (!doc.contains(key))
      throw ModelError(std::string("missing field '") + key + "'");

  std::vector<std::string> worlds;
  for (const auto& w : doc["worlds"]) {
    if (!w.is_string()) throw ModelError("world names must be strings");
    worlds.push_back(w.get<std::string>());
  }
  if (worlds.empty()) throw ModelError("nonempty domain required");
  if (worlds.size() > kMaxWorlds)
    throw ModelError("at most " + std::to_string(kMaxWorlds) +
                     " worlds supported");

  auto index_of = [&worlds](const std::string& name) -> std::size_t {
    auto it = std::find(worlds.begin(), worlds.end(), name);
    if (it == worlds.end())
      throw ModelError("unknown world '" + name + "'");
    return static_cast<std::size_t>(it - worlds.begin());
  };

  std::vector<std::string> agents;
  for (const auto& a : doc["agents"]) {
    if (!a.is_string()) throw ModelError("agent names must be strings");
    agents.push_back(a.get<std::string>());
  }

  std::vector<std::vector<WorldSet>> relation_blocks;
  for (const std::string& agent : agents) {
    if (!doc["relations"].contains(agent))
      throw ModelError("no relation given for agent '" + agent + "'");
    std::vector<WorldSet> blocks;
    for (const auto& block : doc["relations"][agent]) {
      WorldSet mask = 0;
      for (const auto& w : block)
        mask |= WorldSet{1} << index_of(w.get<std::string>());
      blocks.push_back(mask);
    }
    relation_blocks.push_back(std::move(blocks));
  }

  std::vector<std::pair<std::string, WorldSet>> valuation;
  for (const auto& [atom, list] : doc["valuation"].items()) {
    WorldSet mask = 0;
    for (const auto& w : list) mask |= WorldSet{1} << index_of(w.get<std::string>());
    valuation.emplace_back(atom, mask);
  }

  return KripkeModel(std::move(worlds), std::move(agents),
                     std::move(relation_blocks), std::move(valuation));
}

KripkeModel restrict(const KripkeModel& m, WorldSet keep) {
  if (keep == 0) throw ModelError("cannot restrict to an empty world set");
  if (keep & ~m.all_worlds())
    throw ModelError("restriction set is not a subset of the world set");

  std::vector<std::string> worlds;
  std::vector<int> new_index(m.world_count(), -1);
  for (std::size_t w = 0; w < m.world_count(); ++w)
    if (keep & (WorldSet{1} << w)) {
      new_index[w] = static_cast<int>(worlds.size());
      worlds.push_back(m.worlds()[w]);
    }

  auto remap = [&](WorldSet set) {
    WorldSet out = 0;
    for (std::size_t w = 0; w < m.world_count(); ++w)
      if ((set & keep) & (WorldSet{1} << w))
        out |= WorldSet{1} << new_index[w];
    return out;
  };

  std::vector<std::vector<WorldSet>> relation_blocks;
  for (std::size_t a = 0; a < m.agents().size(); ++a) {
    std::vector<WorldSet> blocks;
    for (WorldSet block : m.blocks(a)) {
      WorldSet cut = remap(block);
      if (cut) blocks.push_back(cut);
    }
    relation_blocks.push_back(std::move(blocks));
  }

  std::vector<std::pair<std::string, WorldSet>> valuation;
  for (const auto& [atom, set] : m.valuation())
    valuation.emplace_back(atom, remap(set));

  return KripkeModel(std::move(worlds), m.agents(), std::move(relation_blocks),
                     std::move(valuation));
}

Partition bisim_quotient(const KripkeModel& m) {
  const std::size_t n = m.world_count();

  // Initial partition: agreement on all signature atoms, blocks ordered
  // by first occurrence.
  std::vector<int> class_of(n);
  {
    std::vector<std::vector<bool>> signature(n);
    for (std::size_t w = 0; w < n; ++w)
      for (const auto& [atom, set] : m.valuation())
        signature[w].push_back((set >> w) & 1);
    std::vector<std::vector<bool>> seen;
    for (std::size_t w = 0; w < n; ++w) {
      auto it = std::find(seen.begin(), seen.end(), signature[w]);
      if (it == seen.end()) {
        class_of[w] = static_cast<int>(seen.size());
        seen.push_back(signature[w]);
      } else {
        class_of[w] = static_cast<int>(it - seen.begin());
      }
    }
  }

  // Refine: two worlds stay together iff for every agent their
  // equivalence classes meet the same set of current blocks.
  while (true) {
    std::vector<std::vector<int>> keys(n);
    for (std::size_t w = 0; w < n; ++w) {
      std::vector<int>& key = keys[w];
      key.push_back(class_of[w]);
      for (std::size_t a = 0; a < m.agents().size(); ++a) {
        WorldSet succ = m.block_of(a, w);
        std::vector<int> reached;
        for (std::size_t v = 0; v < n; ++v)
          if (succ & (WorldSet{1} << v)) reached.push_back(class_of[v]);
        std::sort(reached.begin(), reached.end());
        reached.erase(std::unique(reached.begin(), reached.end()),
                      reached.end());
        key.push_back(-1);  // separator
        key.insert(key.end(), reached.begin(), reached.end());
      }
    }
    std::vector<int> next(n);
    std::vector<std::vector<int>> seen;
    for (std::size_t w = 0; w < n; ++w) {
      auto it = std::find(seen.begin(), seen.end(), keys[w]);
      if (it == seen.end()) {
        next[w] = static_cast<int>(seen.size());
        seen.push_back(keys[w]);
      } else {
        next[w] = static_cast<int>(it - seen.begin());
      }
    }
    if (next == class_of) break;
    class_of = std::move(next);
  }

  Partition part;
  part.class_of = class_of;
  int block_count = *std::max_element(class_of.begin(), class_of.end()) + 1;
  part.blocks.assign(block_count, 0);
  for (std::size_t w = 0; w < n; ++w)
    part.blocks[class_of[w]] |= WorldSet{1} << w;
  return part;
}

std::vector<WorldSet> closed_supersets(const Partition& part,
                                       std::size_t world) {
  if (world >= part.class_of.size())
    throw ModelError("unknown world index " + std::to_string(world));
  int own = part.class_of[world];
  std::vector<WorldSet> others;
  for (std::size_t b = 0; b < part.blocks.size(); ++b)
    if (static_cast<int>(b) != own) others.push_back(part.blocks[b]);
  if (others.size() >= 30)
    throw ModelError("too many bisimulation classes to enumerate");

  std::vector<WorldSet> result;
  result.reserve(std::size_t{1} << others.size());
  for (std::uint32_t choice = 0; choice < (1u << others.size()); ++choice) {
    WorldSet set = part.blocks[own];
    for (std::size_t i = 0; i < others.size(); ++i)
      if (choice & (1u << i)) set |= others[i];
    result.push_back(set);
  }
  return result;
}

std::string format_world_set(const KripkeModel& m, WorldSet set) {
  std::string out = "{";
  bool first = true;
  for (std::size_t w = 0; w < m.world_count(); ++w)
    if (set & (WorldSet{1} << w)) {
      if (!first) out += ",";
      out += m.worlds()[w];
      first = false;
    }
  out += "}";
  return out;
}

}  // namespace apal
