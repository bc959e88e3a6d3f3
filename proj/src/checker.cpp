#include "apal/checker.hpp"

namespace apal {

bool TruthSetCache::lookup(const std::string& model_key,
                           const std::string& formula_key,
                           WorldSet* out) const {
  auto it = table_.find(model_key + "\x1f" + formula_key);
  if (it == table_.end()) return false;
  *out = it->second;
  return true;
}

void TruthSetCache::insert(const std::string& model_key,
                           const std::string& formula_key, WorldSet value) {
  table_.emplace(model_key + "\x1f" + formula_key, value);
}

namespace {

WorldSet eval(const KripkeModel& m, const Formula& f, TruthSetCache* cache) {
  std::string formula_key;
  if (cache) {
    formula_key = render(f);
    WorldSet cached;
    if (cache->lookup(m.fingerprint(), formula_key, &cached)) return cached;
  }

  WorldSet result = 0;
  const WorldSet all = m.all_worlds();
  switch (f.kind()) {
    case Kind::Atom:
      result = f.name().empty() ? 0 : m.atom_set(f.name());
      break;
    case Kind::Bottom:
      result = 0;
      break;
    case Kind::Neg:
      result = all & ~eval(m, f.child(), cache);
      break;
    case Kind::Or:
      result = eval(m, f.left(), cache) | eval(m, f.right(), cache);
      break;
    case Kind::Know: {
      // K_a is block-uniform: an equivalence class is in or out en masse.
      WorldSet child = eval(m, f.child(), cache);
      int agent = m.agent_index(f.agent());
      if (agent < 0) {
        // Agent absent from the model: identity relation, K_a f == f.
        result = child;
      } else {
        for (WorldSet block : m.blocks(static_cast<std::size_t>(agent)))
          if ((block & child) == block) result |= block;
      }
      break;
    }
    case Kind::Announce: {
      WorldSet where = eval(m, f.announced(), cache);
      if (where == 0) {
        result = all;  // announcement never truthful, vacuously satisfied
      } else {
        KripkeModel sub = restrict(m, where);
        WorldSet sub_truth = eval(sub, f.continuation(), cache);
        WorldSet surviving = 0;
        std::size_t next = 0;
        for (std::size_t w = 0; w < m.world_count(); ++w)
          if (where & (WorldSet{1} << w)) {
            if (sub_truth & (WorldSet{1} << next)) surviving |= WorldSet{1} << w;
            ++next;
          }
        result = (all & ~where) | surviving;
      }
      break;
    }
    case Kind::Box: {
      // For all epistemic announcements: the announcement truth sets
      // containing w are exactly the bisimulation-closed supersets of w.
      Partition part = bisim_quotient(m);
      result = all;
      for (std::size_t b = 0; b < part.blocks.size(); ++b) {
        std::size_t witness = 0;
        while (!(part.blocks[b] & (WorldSet{1} << witness))) ++witness;
        for (WorldSet keep : closed_supersets(part, witness)) {
          KripkeModel sub = restrict(m, keep);
          WorldSet sub_truth = eval(sub, f.child(), cache);
          std::size_t next = 0;
          for (std::size_t w = 0; w < m.world_count(); ++w)
            if (keep & (WorldSet{1} << w)) {
              if ((part.blocks[b] & (WorldSet{1} << w)) &&
                  !(sub_truth & (WorldSet{1} << next)))
                result &= ~(WorldSet{1} << w);
              ++next;
            }
        }
      }
      break;
    }
  }

  if (cache) cache->insert(m.fingerprint(), formula_key, result);
  return result;
}

}  // namespace

WorldSet truth_set(const KripkeModel& m, const Formula& f,
                   TruthSetCache* cache) {
  return eval(m, f, cache);
}

bool satisfies(const KripkeModel& m, const std::string& world,
               const Formula& f, TruthSetCache* cache) {
  std::size_t w = m.world_index(world);
  return (truth_set(m, f, cache) >> w) & 1;
}

bool valid_on(const KripkeModel& m, const Formula& f, TruthSetCache* cache) {
  return truth_set(m, f, cache) == m.all_worlds();
}

bool box_oracle(const KripkeModel& m, const std::string& world,
                const Formula& inner) {
  std::size_t w = m.world_index(world);
  const std::size_t n = m.world_count();
  if (n > 20) throw ModelError("box_oracle is limited to small models");

  Partition part = bisim_quotient(m);
  for (WorldSet keep = 1; keep < (WorldSet{1} << n); ++keep) {
    if (!(keep & (WorldSet{1} << w))) continue;
    bool closed = true;
    for (WorldSet block : part.blocks)
      if ((keep & block) != 0 && (keep & block) != block) {
        closed = false;
        break;
      }
    if (!closed) continue;
    KripkeModel sub = restrict(m, keep);
    if (!satisfies(sub, m.worlds()[w], inner)) return false;
  }
  return true;
}

}  // namespace apal
