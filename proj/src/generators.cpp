#include <random>

#include "apal/axioms.hpp"

namespace apal {

namespace {

const std::vector<std::string>& atom_pool() {
  static const std::vector<std::string> pool = {"p", "q", "r"};
  return pool;
}

const std::vector<std::string>& agent_pool() {
  static const std::vector<std::string> pool = {"a", "b"};
  return pool;
}

Formula gen_rec(std::mt19937_64& rng, std::uint64_t budget,
                Fragment fragment) {
  auto pick = [&rng](std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
  };

  if (budget <= 1) {
    if (pick(8) == 0) return Formula::bottom();
    return Formula::atom(atom_pool()[pick(atom_pool().size())]);
  }

  // Candidate constructors under the remaining size budget. Leaves stay
  // reachable at every size so small formulas occur.
  enum Op { Leaf, Neg, Or, Know, Announce, Box };
  std::vector<Op> ops = {Leaf, Neg, Neg, Know, Know};
  if (budget >= 3) {
    ops.push_back(Or);
    ops.push_back(Or);
  }
  if (fragment != Fragment::Epistemic && budget >= 4) {
    ops.push_back(Announce);
    ops.push_back(Announce);
  }
  if (fragment == Fragment::Apal) ops.push_back(Box);

  switch (ops[pick(ops.size())]) {
    case Leaf:
      return gen_rec(rng, 1, fragment);
    case Neg:
      return Formula::neg(gen_rec(rng, budget - 1, fragment));
    case Or: {
      std::uint64_t left = 1 + pick(budget - 2);
      return Formula::disj(gen_rec(rng, left, fragment),
                           gen_rec(rng, budget - 1 - left, fragment));
    }
    case Know:
      return Formula::know(agent_pool()[pick(agent_pool().size())],
                           gen_rec(rng, budget - 1, fragment));
    case Announce: {
      // size([x]y) = size(x) + 3*size(y); pick the continuation budget
      // first, the announced part gets the rest.
      std::uint64_t cont = 1 + pick((budget - 1) / 3);
      return Formula::announce(gen_rec(rng, budget - 3 * cont, fragment),
                               gen_rec(rng, cont, fragment));
    }
    case Box:
      return Formula::box(gen_rec(rng, budget - 1, fragment));
  }
  return Formula::bottom();
}

}  // namespace

Formula gen_formula(std::uint64_t seed, std::uint64_t max_size,
                    Fragment fragment) {
  if (max_size < 1) throw std::invalid_argument("max_size must be positive");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  return gen_rec(rng, max_size, fragment);
}

KripkeModel gen_model(std::uint64_t seed, std::size_t max_worlds,
                      const std::vector<std::string>& agents,
                      const std::vector<std::string>& atoms) {
  if (max_worlds < 1)
    throw std::invalid_argument("max_worlds must be positive");
  if (max_worlds > kMaxWorlds)
    throw std::invalid_argument("max_worlds exceeds the world cap");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x94d049bb133111ebULL);
  auto pick = [&rng](std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
  };

  std::size_t n = 1 + static_cast<std::size_t>(pick(max_worlds));
  std::vector<std::string> worlds;
  for (std::size_t w = 0; w < n; ++w)
    worlds.push_back("w" + std::to_string(w + 1));

  std::vector<std::vector<WorldSet>> relation_blocks;
  for (std::size_t a = 0; a < agents.size(); ++a) {
    // Random partition: assign each world a bucket, keep buckets in
    // first-occurrence order.
    std::vector<std::size_t> bucket(n);
    for (std::size_t w = 0; w < n; ++w) bucket[w] = pick(n);
    std::vector<WorldSet> blocks;
    std::vector<std::size_t> bucket_ids;
    for (std::size_t w = 0; w < n; ++w) {
      std::size_t b = 0;
      while (b < bucket_ids.size() && bucket_ids[b] != bucket[w]) ++b;
      if (b == bucket_ids.size()) {
        bucket_ids.push_back(bucket[w]);
        blocks.push_back(0);
      }
      blocks[b] |= WorldSet{1} << w;
    }
    relation_blocks.push_back(std::move(blocks));
  }

  std::vector<std::pair<std::string, WorldSet>> valuation;
  for (const std::string& atom : atoms) {
    WorldSet set = 0;
    for (std::size_t w = 0; w < n; ++w)
      if (pick(2)) set |= WorldSet{1} << w;
    valuation.emplace_back(atom, set);
  }

  return KripkeModel(std::move(worlds), agents, std::move(relation_blocks),
                     std::move(valuation));
}

}  // namespace apal
