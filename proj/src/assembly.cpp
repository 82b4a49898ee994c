#include "srgddg/assembly.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "srgddg/coclique.hpp"
#include "srgddg/errors.hpp"
#include "srgddg/theory.hpp"

namespace srgddg {

namespace {

std::string str(std::int64_t x) { return std::to_string(x); }

}  // namespace

Graph construct_gamma(const Graph& delta, const CanonicalPartition& partition, const SymmetricDesign& design,
                      const std::vector<int>& phi) {
  try {
    partition.validate(delta.order());
  } catch (const Error& e) {
    throw Error(ErrorCode::ParameterMismatch, std::string("partition: ") + e.what());
  }
  auto dp = verify_ddg_partition(delta, partition);
  if (!dp) throw Error(ErrorCode::ParameterMismatch, "delta with this partition is not a DDG: " + dp.error());
  const DdgParams ddg = dp.value();
  if (!ddg.proper()) throw Error(ErrorCode::ParameterMismatch, "DDG" + ddg.to_string() + " is not proper");
  const auto fam = theory::family_of_ddg(ddg);
  if (!fam)
    throw Error(ErrorCode::ParameterMismatch,
                "DDG" + ddg.to_string() + " does not match the pattern of any (n, s) in the family");

  const DesignParams want = required_design_params(fam->n, fam->s);
  if (design.points() != want.points || design.block_size() != want.block_size || design.lambda() != want.lambda ||
      static_cast<std::int64_t>(design.blocks().size()) != want.points)
    throw Error(ErrorCode::DesignMismatch,
                "design is 2-(" + str(design.points()) + "," + str(design.block_size()) + "," + str(design.lambda()) +
                    "), need 2-(" + str(want.points) + "," + str(want.block_size) + "," + str(want.lambda) + ")");
  if (auto bad = verify_design(design)) throw Error(ErrorCode::DesignMismatch, "design: " + bad->what);

  const std::size_t m = partition.class_count();
  if (phi.size() != m) throw Error(ErrorCode::PhiNotBijective, "phi has " + str(static_cast<std::int64_t>(phi.size())) +
                                                                   " entries for " + str(static_cast<std::int64_t>(m)) +
                                                                   " classes");
  std::vector<bool> hit(m, false);
  for (int b : phi) {
    if (b < 0 || static_cast<std::size_t>(b) >= m || hit[static_cast<std::size_t>(b)])
      throw Error(ErrorCode::PhiNotBijective, "phi is not a permutation of 0.." + str(static_cast<std::int64_t>(m) - 1));
    hit[static_cast<std::size_t>(b)] = true;
  }

  const int V = delta.order();
  const int total = V + static_cast<int>(m);
  std::vector<Bitset> rows(static_cast<std::size_t>(total), Bitset(static_cast<std::size_t>(total)));
  for (int x = 0; x < V; ++x) delta.neighbors(x).for_each([&](std::size_t y) { rows[static_cast<std::size_t>(x)].set(y); });
  for (std::size_t i = 0; i < m; ++i) {
    const Bitset& block = design.block(phi[i]);
    partition.classes[i].for_each([&](std::size_t x) {
      block.for_each([&](std::size_t y) {
        rows[x].set(static_cast<std::size_t>(V) + y);
        rows[static_cast<std::size_t>(V) + y].set(x);
      });
    });
  }
  Graph out(std::move(rows), "construct(" + ddg.to_string() + ")");

  const std::int64_t t = -fam->s;
  auto got = srg_params(out);
  if (!got) throw Error(ErrorCode::ConstructionFailed, "output is not strongly regular: " + got.error().message);
  const SrgParams& p = got.value();
  const std::int64_t lam = t * (fam->n + fam->s);
  if (p.v != fam->m * (fam->n + 1) || p.k != t * fam->n || p.lambda != lam || p.mu != lam)
    throw Error(ErrorCode::ConstructionFailed, "output is SRG(" + str(p.v) + "," + str(p.k) + "," + str(p.lambda) +
                                                   "," + str(p.mu) + "), expected a different parameter set");
  return out;
}

Graph construction_order(const Graph& gamma, const Decomposition& dec) {
  std::vector<int> order = dec.delta_vertices;
  for (int z : dec.coclique.members()) order.push_back(z);
  return gamma.permuted(order);
}

namespace {

struct CocliqueOutcome {
  std::vector<Decomposition> found;
  std::vector<OutsidePattern> outside;
  std::vector<std::string> diagnostics;
};

CocliqueOutcome examine(const Graph& gamma, const VertexSet& C) {
  CocliqueOutcome out;
  const auto cmembers = C.members();
  Bitset keep = C.complement();
  std::vector<int> delta_vertices = keep.members();
  Graph delta = induced_subgraph(gamma, keep);

  auto witnesses = ddg_recognize(delta);
  if (!witnesses) return out;

  auto tag = [&] {
    std::string t = "coclique {";
    for (std::size_t i = 0; i < cmembers.size(); ++i) t += (i ? "," : "") + std::to_string(cmembers[i]);
    return t + "}";
  };

  for (const DdgWitness& w : witnesses.value()) {
    const auto fam = theory::family_of_ddg(w.params);
    if (!fam) {
      out.outside.push_back({C, w.params});
      continue;
    }
    const std::size_t m = w.partition.class_count();
    if (cmembers.size() != m) {
      out.diagnostics.push_back(tag() + ": class count differs from |C|");
      continue;
    }
    // Block of class i: C-neighbourhood of its vertices, in point indices.
    std::vector<Bitset> class_blocks;
    bool uniform = true;
    for (const VertexSet& cls : w.partition.classes) {
      std::optional<Bitset> seen;
      cls.for_each([&](std::size_t x) {
        Bitset b(m);
        for (std::size_t j = 0; j < m; ++j)
          if (gamma.adjacent(delta_vertices[x], cmembers[j])) b.set(j);
        if (!seen) seen = b;
        else if (!(*seen == b)) uniform = false;
      });
      class_blocks.push_back(*seen);
    }
    if (!uniform) {
      out.diagnostics.push_back(tag() + ": a class does not see a single block of C");
      continue;
    }
    std::vector<Bitset> blocks = class_blocks;
    std::sort(blocks.begin(), blocks.end(), [](const Bitset& a, const Bitset& b) { return lex_less(a, b); });
    if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end()) {
      out.diagnostics.push_back(tag() + ": two classes see the same block");
      continue;
    }
    SymmetricDesign design(static_cast<int>(m), blocks);
    if (auto bad = verify_design(design)) {
      out.diagnostics.push_back(tag() + ": extracted blocks are not a symmetric design (" + bad->what + ")");
      continue;
    }
    std::vector<int> phi;
    for (const Bitset& b : class_blocks) phi.push_back(design.find_block(b));

    auto q = quotient_matrix(delta, w.partition);
    if (!q || !q.value().is_constant(fam->n + fam->s)) {
      out.diagnostics.push_back(tag() + ": quotient matrix is not (n+s)J");
      continue;
    }

    Decomposition dec{C, delta_vertices, delta, w.partition, w.params, std::move(design), std::move(phi),
                      fam->n, fam->s, q.value()};
    Graph rebuilt = construct_gamma(dec.delta, dec.partition, dec.design, dec.phi);
    if (!(rebuilt == construction_order(gamma, dec)))
      throw Error(ErrorCode::ConstructionFailed, tag() + ": rebuilt graph differs from the input");
    out.found.push_back(std::move(dec));
  }
  return out;
}

}  // namespace

DecomposeResult decompose(const Graph& gamma, const DecomposeOptions& opts) {
  auto sp = srg_params(gamma);
  if (!sp) throw Error(ErrorCode::InvalidArgument, "not a strongly regular graph: " + sp.error().message);
  if (!sp.value().primitive()) throw Error(ErrorCode::InvalidArgument, "strongly regular graph is imprimitive");

  CocliqueQuery q;
  q.mode = CocliqueMode::All;
  q.node_budget = opts.node_budget;
  CocliqueSearch search = hoffman_cocliques(gamma, sp.value(), q);

  DecomposeResult result;
  result.budget_exceeded = search.budget_exceeded;
  const std::size_t count = search.sets.size();
  std::vector<CocliqueOutcome> outcomes(count);

  if (opts.first_only || opts.threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) {
      outcomes[i] = examine(gamma, search.sets[i]);
      result.cocliques_examined = i + 1;
      if (opts.first_only && !outcomes[i].found.empty()) {
        outcomes[i].found.resize(1);
        outcomes.resize(i + 1);
        break;
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(opts.threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < opts.threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i; (i = next.fetch_add(1)) < count;) outcomes[i] = examine(gamma, search.sets[i]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    result.cocliques_examined = count;
  }

  for (auto& o : outcomes) {
    for (auto& d : o.found) result.decompositions.push_back(std::move(d));
    for (auto& x : o.outside) result.outside_pattern.push_back(std::move(x));
    for (auto& s : o.diagnostics) result.diagnostics.push_back(std::move(s));
  }
  return result;
}

std::optional<StructureViolation> verify_coclique_structure(const Graph& gamma, const Decomposition& dec) {
  const auto cmembers = dec.coclique.members();
  const std::size_t m = dec.partition.class_count();
  if (cmembers.size() != m || dec.phi.size() != m)
    return StructureViolation{"|C| = " + str(static_cast<std::int64_t>(cmembers.size())) + " but there are " +
                          str(static_cast<std::int64_t>(m)) + " classes"};
  for (std::size_t i = 0; i < m; ++i) {
    if (dec.phi[i] < 0 || static_cast<std::size_t>(dec.phi[i]) >= m) return StructureViolation{"phi out of range"};
    const Bitset& block = dec.design.block(dec.phi[i]);
    for (int x : dec.partition.classes[i].members()) {
      const int gx = dec.delta_vertices[static_cast<std::size_t>(x)];
      for (std::size_t j = 0; j < m; ++j)
        if (gamma.adjacent(gx, cmembers[j]) != block.test(j))
          return StructureViolation{"vertex " + str(gx) + " of class " + str(static_cast<std::int64_t>(i)) +
                                " does not see exactly its block in C (point " + str(cmembers[j]) + ")"};
    }
  }
  for (int z : cmembers) {
    if (gamma.degree(z) != -dec.s * dec.n)
      return StructureViolation{"coclique vertex " + str(z) + " has degree " + str(gamma.degree(z))};
    std::int64_t inside = 0;
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t hits = 0, size = 0;
      dec.partition.classes[i].for_each([&](std::size_t x) {
        ++size;
        if (gamma.adjacent(z, dec.delta_vertices[x])) ++hits;
      });
      if (hits != 0 && hits != size)
        return StructureViolation{"coclique vertex " + str(z) + " splits class " + str(static_cast<std::int64_t>(i))};
      if (hits == size) ++inside;
    }
    if (inside != -dec.s)
      return StructureViolation{"coclique vertex " + str(z) + " covers " + str(inside) + " classes, expected " +
                            str(-dec.s)};
  }
  return std::nullopt;
}

SymmetricDesign extract_dual_design(const Graph& gamma, const Decomposition& dec) {
  const std::size_t m = dec.partition.class_count();
  std::vector<Bitset> blocks;
  for (int z : dec.coclique.members()) {
    Bitset b(m);
    for (std::size_t i = 0; i < m; ++i) {
      const int x = dec.delta_vertices[dec.partition.classes[i].first()];
      if (gamma.adjacent(z, x)) b.set(i);
    }
    blocks.push_back(std::move(b));
  }
  return SymmetricDesign(static_cast<int>(m), std::move(blocks));
}

}  // namespace srgddg
