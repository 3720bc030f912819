#include "tautsys/systems.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace tautsys {

const char* group_name(GeneratorGroup g) {
  switch (g) {
    case GeneratorGroup::Binomial: return "binomial";
    case GeneratorGroup::Linear: return "linear";
    case GeneratorGroup::GOp: return "g_ops";
    case GeneratorGroup::Euler: return "euler";
  }
  return "?";
}

std::vector<std::uint32_t> TautSystem::distinguished() const {
  return {offsets.begin(), offsets.end()};
}

std::vector<Generator>& TautSystem::group(GeneratorGroup g) {
  return const_cast<std::vector<Generator>&>(std::as_const(*this).group(g));
}

const std::vector<Generator>& TautSystem::group(GeneratorGroup g) const {
  switch (g) {
    case GeneratorGroup::Binomial: return binomial;
    case GeneratorGroup::Linear: return linear;
    case GeneratorGroup::GOp: return g_ops;
    case GeneratorGroup::Euler: return euler;
  }
  throw std::logic_error("unknown generator group");
}

std::size_t TautSystem::generator_count() const {
  return binomial.size() + linear.size() + g_ops.size() + euler.size();
}

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

DiffOp second_order_binomial(std::size_t nvars, std::size_t u, std::size_t v, std::size_t w, std::size_t t) {
  auto d = [](std::size_t p, std::size_t q) {
    return ExpVec::unit(static_cast<std::uint32_t>(p)) + ExpVec::unit(static_cast<std::uint32_t>(q));
  };
  return DiffOp(nvars, {{1, {}, d(u, v)}, {-1, {}, d(w, t)}});
}

DiffOp euler_operator(std::size_t nvars, std::size_t begin, std::size_t end, const Rat& beta) {
  std::vector<WeylTerm> terms;
  for (std::size_t i = begin; i < end; ++i) {
    const auto e = ExpVec::unit(static_cast<std::uint32_t>(i));
    terms.push_back({1, e, e});
  }
  terms.push_back({beta, {}, {}});
  return DiffOp(nvars, std::move(terms));
}

// All d_u d_v - d_w d_t with u + v = w + t, grouped by the sum; pairs may span
// two blocks, in which case the block pair is part of the key.
std::vector<Generator> quadratic_binomials(const std::vector<ExpVec>& monomials,
                                           const std::vector<std::size_t>& block_of, std::size_t nvars) {
  std::uint32_t marker = 0;
  for (const auto& m : monomials) marker = std::max(marker, m.extent());
  std::unordered_map<ExpVec, std::size_t> key_index;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> groups;
  for (std::size_t u = 0; u < nvars; ++u)
    for (std::size_t v = u; v < nvars; ++v) {
      ExpVec key = monomials[u] + monomials[v] + ExpVec::unit(marker + static_cast<std::uint32_t>(block_of[u])) +
                   ExpVec::unit(marker + static_cast<std::uint32_t>(block_of[v]));
      auto [it, inserted] = key_index.try_emplace(std::move(key), groups.size());
      if (inserted) groups.emplace_back();
      groups[it->second].emplace_back(u, v);
    }
  std::vector<Generator> out;
  for (const auto& g : groups)
    for (std::size_t p = 0; p < g.size(); ++p)
      for (std::size_t q = p + 1; q < g.size(); ++q) {
        const auto [u, v] = g[p];
        const auto [w, t] = g[q];
        out.push_back({"d" + idx(u) + "d" + idx(v) + "-d" + idx(w) + "d" + idx(t),
                       second_order_binomial(nvars, u, v, w, t), std::nullopt});
      }
  return out;
}

std::unordered_map<ExpVec, std::size_t> index_of(const MonomialBasis& basis) {
  std::unordered_map<ExpVec, std::size_t> m;
  for (std::size_t i = 0; i < basis.size(); ++i) m.emplace(basis.monomials[i], i);
  return m;
}

}  // namespace

TautSystem build_gkz(const IntMatrix& a, std::optional<std::vector<Rat>> beta, long box_cap) {
  VarietyDesc::toric(a, 0);  // validates the all-ones first row
  const std::size_t nvars = a.cols();
  const std::size_t rows = a.rows();
  TautSystem sys;
  sys.variety = "toric";
  sys.nvars = nvars;
  sys.offsets = {0};
  sys.multidegrees = {{1}};
  for (std::size_t c = 0; c < nvars; ++c) sys.monomials.push_back(ExpVec::unit(static_cast<std::uint32_t>(c)));
  if (!beta) {
    beta.emplace();
    for (std::size_t r = 0; r < rows; ++r) beta->push_back(Rat(-a(r, 0)));
  }
  if (beta->size() != rows) throw std::invalid_argument("beta needs one entry per row of A");
  sys.beta = *beta;

  // Multisets of equal size and equal A-image with disjoint supports.
  std::map<std::pair<long, IntVec>, std::vector<ExpVec>> by_image;
  std::vector<std::int64_t> image(rows, 0);
  std::vector<std::int32_t> counts(nvars, 0);
  auto rec = [&](auto&& self, std::size_t start, long size) -> void {
    if (size > 0) {
      std::vector<ExpVec::Entry> e;
      for (std::size_t c = 0; c < nvars; ++c)
        if (counts[c]) e.emplace_back(static_cast<std::uint32_t>(c), counts[c]);
      by_image[{size, image}].push_back(ExpVec::from_sorted(std::move(e)));
    }
    if (size == box_cap) return;
    for (std::size_t c = start; c < nvars; ++c) {
      ++counts[c];
      for (std::size_t r = 0; r < rows; ++r) image[r] += a(r, c).get_si();
      self(self, c, size + 1);
      for (std::size_t r = 0; r < rows; ++r) image[r] -= a(r, c).get_si();
      --counts[c];
    }
  };
  rec(rec, 0, 0);
  for (const auto& [key, list] : by_image)
    for (std::size_t p = 0; p < list.size(); ++p)
      for (std::size_t q = p + 1; q < list.size(); ++q) {
        bool disjoint = true;
        for (const auto& [c, k] : list[p].entries())
          if (list[q][c] != 0) disjoint = false;
        if (!disjoint) continue;
        // First nonzero entry of l = plus - minus is positive.
        const ExpVec l = list[p] - list[q];
        const bool flip = l.entries().front().second < 0;
        const ExpVec& plus = flip ? list[q] : list[p];
        const ExpVec& minus = flip ? list[p] : list[q];
        std::string label;
        for (auto v : l.scaled(flip ? -1 : 1).dense(nvars)) label += (label.empty() ? "box[" : ",") + std::to_string(v);
        sys.binomial.push_back({label + "]", DiffOp(nvars, {{1, {}, plus}, {-1, {}, minus}}), std::nullopt});
      }
  std::sort(sys.binomial.begin(), sys.binomial.end(),
            [](const Generator& p, const Generator& q) { return p.label < q.label; });

  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<WeylTerm> terms;
    for (std::size_t c = 0; c < nvars; ++c) {
      if (a(r, c) == 0) continue;
      const auto e = ExpVec::unit(static_cast<std::uint32_t>(c));
      terms.push_back({Rat(a(r, c)), e, e});
    }
    terms.push_back({-(*beta)[r], {}, {}});
    sys.euler.push_back({"torus[" + idx(r) + "]", DiffOp(nvars, std::move(terms)), std::nullopt});
  }
  return sys;
}

TautSystem build_extended_gkz(int n, int degree) {
  auto sys = build_flag_system(VarietyDesc::projective_space(n - 1), {degree}, 1, kDefaultSeed);
  return sys;
}

RatMatrix coordinate_action(const VarietyDesc& x, const RatMatrix& lie) {
  if (x.is_toric()) throw std::invalid_argument("no group action on a toric descriptor");
  if (lie.rows() != static_cast<std::size_t>(x.n) || lie.cols() != static_cast<std::size_t>(x.n))
    throw std::invalid_argument("Lie algebra element must be n x n");
  const auto lay = coordinate_layout(x);
  RatMatrix rho(lay.total, lay.total);
  for (std::size_t s = 0; s < lay.subsets.size(); ++s)
    for (std::size_t k = 0; k < lay.subsets[s].size(); ++k) {
      const auto& subset = lay.subsets[s][k];
      const std::size_t c = lay.offsets[s] + k;
      for (int a = 1; a <= x.n; ++a)
        for (int b = 1; b <= x.n; ++b) {
          const Rat& coeff = lie(a - 1, b - 1);
          if (coeff == 0) continue;
          const auto pos_b = std::find(subset.begin(), subset.end(), b);
          if (pos_b == subset.end()) continue;
          if (a == b) {
            rho(c, c) += coeff;
            continue;
          }
          if (std::find(subset.begin(), subset.end(), a) != subset.end()) continue;
          std::vector<int> image = subset;
          image[static_cast<std::size_t>(pos_b - subset.begin())] = a;
          int sign = 1;
          for (std::size_t i = 0; i < image.size(); ++i)
            for (std::size_t j = i + 1; j < image.size(); ++j)
              if (image[i] > image[j]) sign = -sign;
          std::sort(image.begin(), image.end());
          rho(lay.offsets[s] + plucker_position(image, x.n), c) += sign * coeff;
        }
    }
  return rho;
}

DiffOp g_operator(const VarietyDesc& x, const MonomialBasis& basis, const RatMatrix& lie, std::size_t offset,
                  std::size_t nvars) {
  const RatMatrix rho = coordinate_action(x, lie);
  const auto where = index_of(basis);
  std::vector<WeylTerm> terms;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const ExpVec& v = basis.monomials[j];
    for (const auto& [c, k] : v.entries())
      for (std::size_t cp = 0; cp < rho.rows(); ++cp) {
        const Rat& r = rho(cp, c);
        if (r == 0) continue;
        const ExpVec u = v - ExpVec::unit(c) + ExpVec::unit(static_cast<std::uint32_t>(cp));
        const auto it = where.find(u);
        if (it == where.end()) throw std::logic_error("derivation left the monomial basis");
        terms.push_back({-r * k, ExpVec::unit(static_cast<std::uint32_t>(offset + j)),
                         ExpVec::unit(static_cast<std::uint32_t>(offset + it->second))});
      }
  }
  return DiffOp(nvars, std::move(terms));
}

std::vector<std::pair<std::string, RatMatrix>> sl_basis(int n) {
  std::vector<std::pair<std::string, RatMatrix>> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      RatMatrix m(n, n);
      m(a, b) = 1;
      out.emplace_back("E[" + idx(a + 1) + "," + idx(b + 1) + "]", std::move(m));
    }
  for (int a = 0; a + 1 < n; ++a) {
    RatMatrix m(n, n);
    m(a, a) = 1;
    m(a + 1, a + 1) = -1;
    out.emplace_back("H[" + idx(a + 1) + "]", std::move(m));
  }
  return out;
}

namespace {

RatMatrix echelon_rows(RatMatrix m, std::size_t cols) {
  if (m.rows() == 0) return RatMatrix(0, cols);
  const auto piv = row_reduce(m);
  RatMatrix out(0, cols);
  for (std::size_t r = 0; r < piv.size(); ++r) out.append_row(m.row(r));
  return out;
}

RatMatrix evaluation_forms(const VarietyDesc& x, const MonomialBasis& basis, std::uint64_t seed) {
  const std::size_t n = basis.size();
  constexpr std::size_t kMargin = 20;
  constexpr std::size_t kRecheck = 10;
  const RatMatrix samples = sample_points(x, basis, n + kMargin, seed);
  const RatMatrix extra = sample_points(x, basis, kRecheck, seed ^ 0x9e3779b97f4a7c15ull);

  // Vanishing forms split by torus weight, so each weight block is solved alone.
  std::map<IntVec, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks[torus_weight(x, basis.monomials[i])].push_back(i);

  RatMatrix forms(0, n);
  for (const auto& [w, cols] : blocks) {
    auto restrict = [&](const RatMatrix& pts) {
      RatMatrix sub(pts.rows(), cols.size());
      for (std::size_t r = 0; r < pts.rows(); ++r)
        for (std::size_t k = 0; k < cols.size(); ++k) sub(r, k) = pts(r, cols[k]);
      return sub;
    };
    const RatMatrix base = restrict(samples);
    const RatMatrix null = rational_nullspace(base);
    RatMatrix all = base;
    const RatMatrix more = restrict(extra);
    for (std::size_t r = 0; r < more.rows(); ++r) all.append_row(more.row(r));
    if (rational_nullspace(all).rows() != null.rows())
      throw std::runtime_error("evaluation rank did not stabilise on extra samples");
    for (std::size_t r = 0; r < null.rows(); ++r) {
      std::vector<Rat> row(n);
      for (std::size_t k = 0; k < cols.size(); ++k) row[cols[k]] = null(r, k);
      forms.append_row(row);
    }
  }
  return echelon_rows(std::move(forms), n);
}

RatMatrix symbolic_forms(const VarietyDesc& x, const MonomialBasis& basis) {
  if (x.kind != VarietyKind::Grassmannian)
    throw std::invalid_argument("symbolic ideal backend covers Grassmannians only");
  const int d = x.steps[0];
  const int k = basis.multidegree.at(0);
  const std::size_t n = basis.size();
  if (k < 2) return RatMatrix(0, n);
  const auto where = index_of(basis);
  const auto rels = plucker_relations(d, x.n);
  const auto cofactors = monomial_basis(x, {k - 2}).monomials;
  RatMatrix rows(0, n);
  for (const auto& rel : rels)
    for (const auto& m : cofactors) {
      std::vector<Rat> row(n);
      for (const auto& [e, c] : rel.terms()) row[where.at(e + m)] += c;
      rows.append_row(row);
    }
  return echelon_rows(std::move(rows), n);
}

}  // namespace

RatMatrix linear_ideal_forms(const VarietyDesc& x, const MonomialBasis& basis, LinearBackend backend,
                             std::uint64_t seed) {
  if (x.is_toric()) return RatMatrix(0, basis.size());
  return backend == LinearBackend::Symbolic ? symbolic_forms(x, basis) : evaluation_forms(x, basis, seed);
}

std::vector<DiffOp> linear_ideal_operators(const VarietyDesc& x, const MonomialBasis& basis, LinearBackend backend,
                                           std::uint64_t seed) {
  const RatMatrix forms = linear_ideal_forms(x, basis, backend, seed);
  std::vector<DiffOp> out;
  for (std::size_t r = 0; r < forms.rows(); ++r) {
    std::vector<WeylTerm> terms;
    for (std::size_t c = 0; c < forms.cols(); ++c)
      if (forms(r, c) != 0) terms.push_back({forms(r, c), {}, ExpVec::unit(static_cast<std::uint32_t>(c))});
    out.emplace_back(basis.size(), std::move(terms));
  }
  return out;
}

namespace {

// Re-index an operator on one block into the full variable set.
DiffOp shift_operator(const DiffOp& op, std::size_t offset, std::size_t nvars) {
  auto shift = [&](const ExpVec& e) {
    std::vector<ExpVec::Entry> out;
    for (const auto& [i, k] : e.entries()) out.emplace_back(static_cast<std::uint32_t>(i + offset), k);
    return ExpVec::from_sorted(std::move(out));
  };
  std::vector<WeylTerm> terms;
  for (const auto& t : op.terms()) terms.push_back({t.coeff, shift(t.a), shift(t.d)});
  return DiffOp(nvars, std::move(terms));
}

}  // namespace

TautSystem build_ci_system(const VarietyDesc& x, const std::vector<std::vector<int>>& multidegrees,
                           const std::vector<Rat>& betas, std::uint64_t seed) {
  if (x.is_toric()) throw std::invalid_argument("tautological systems need a flag variety; use build_gkz");
  if (betas.size() != multidegrees.size()) throw std::invalid_argument("one beta per factor");
  const auto bases = complete_intersection_bases(x, multidegrees);
  TautSystem sys;
  sys.variety = x.label();
  sys.multidegrees = multidegrees;
  sys.beta = betas;
  std::vector<std::size_t> block_of;
  for (std::size_t f = 0; f < bases.size(); ++f) {
    sys.offsets.push_back(sys.nvars);
    sys.nvars += bases[f].size();
    sys.monomials.insert(sys.monomials.end(), bases[f].monomials.begin(), bases[f].monomials.end());
    block_of.insert(block_of.end(), bases[f].size(), f);
  }
  const std::size_t nvars = sys.nvars;
  const bool single = bases.size() == 1;

  sys.binomial = quadratic_binomials(sys.monomials, block_of, nvars);

  for (std::size_t f = 0; f < bases.size(); ++f) {
    const auto ops = linear_ideal_operators(x, bases[f], LinearBackend::Evaluation, seed + f);
    for (std::size_t k = 0; k < ops.size(); ++k)
      sys.linear.push_back({(single ? "Q[" : "Q[" + idx(f) + ":") + idx(k) + "]",
                            shift_operator(ops[k], sys.offsets[f], nvars), std::nullopt});
  }

  for (auto& [label, lie] : sl_basis(x.n)) {
    DiffOp z(nvars);
    for (std::size_t f = 0; f < bases.size(); ++f) z = z + g_operator(x, bases[f], lie, sys.offsets[f], nvars);
    sys.g_ops.push_back({label, std::move(z), lie});
  }

  for (std::size_t f = 0; f < bases.size(); ++f) {
    const std::size_t end = f + 1 < bases.size() ? sys.offsets[f + 1] : nvars;
    sys.euler.push_back({single ? "euler" : "euler[" + idx(f) + "]", euler_operator(nvars, sys.offsets[f], end, betas[f]),
                         std::nullopt});
  }
  return sys;
}

TautSystem build_flag_system(const VarietyDesc& x, const std::vector<int>& multidegree, const Rat& beta,
                             std::uint64_t seed) {
  return build_ci_system(x, {multidegree}, {beta}, seed);
}

}  // namespace tautsys
