#include "tautsys/varieties.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tautsys {

namespace {

std::vector<int> parse_int_list(std::string_view s, char sep) {
  std::vector<int> out;
  std::string item;
  std::stringstream ss{std::string(s)};
  while (std::getline(ss, item, sep)) {
    if (item.empty()) throw std::invalid_argument("empty entry in variety descriptor");
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad integer in variety descriptor: " + item);
    out.push_back(v);
  }
  return out;
}

// Sign of the permutation sorting `idx`, or 0 if an entry repeats.
int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  std::sort(idx.begin(), idx.end());
  return sign;
}

void subsets_rec(int n, int d, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == d) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n; ++v) {
    cur.push_back(v);
    subsets_rec(n, d, v + 1, cur, out);
    cur.pop_back();
  }
}

// Exponent vectors of degree k in m variables, lexicographically decreasing.
void monomials_rec(std::size_t m, int k, std::size_t pos, std::vector<std::int64_t>& cur,
                   std::vector<std::vector<std::int64_t>>& out) {
  if (pos + 1 == m) {
    cur[pos] = k;
    out.push_back(cur);
    cur[pos] = 0;
    return;
  }
  for (int e = k; e >= 0; --e) {
    cur[pos] = e;
    monomials_rec(m, k - e, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

std::vector<std::vector<std::int64_t>> monomials_of_degree(std::size_t m, int k) {
  std::vector<std::vector<std::int64_t>> out;
  if (m == 0) return out;
  std::vector<std::int64_t> cur(m, 0);
  monomials_rec(m, k, 0, cur, out);
  return out;
}

Rat rat_determinant(RatMatrix m) {
  const std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Rat f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

LaurentPoly poly_determinant(const std::vector<std::vector<LaurentPoly>>& m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(nvars, 1);
  LaurentPoly total(nvars);
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r][0].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> minor;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r) continue;
      minor.emplace_back(m[i].begin() + 1, m[i].end());
    }
    LaurentPoly term = m[r][0] * poly_determinant(minor, nvars);
    total += (r % 2 == 0) ? term : -term;
  }
  return total;
}

std::vector<int> block_sizes(const VarietyDesc& x) {
  std::vector<int> sizes;
  int prev = 0;
  for (int d : x.steps) {
    sizes.push_back(d - prev);
    prev = d;
  }
  sizes.push_back(x.n - prev);
  return sizes;
}

}  // namespace

VarietyDesc VarietyDesc::toric(IntMatrix a, std::size_t interior_column) {
  if (a.rows() == 0 || a.cols() == 0) throw std::invalid_argument("empty A-matrix");
  if (interior_column >= a.cols()) throw std::out_of_range("interior column out of range");
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (a(0, c) != 1) throw std::invalid_argument("first row of A must be all ones");
  VarietyDesc x;
  x.kind = VarietyKind::Toric;
  // Move the interior column to position 0, keep the rest in order.
  IntMatrix moved(a.rows(), a.cols());
  std::size_t dst = 1;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const std::size_t to = c == interior_column ? 0 : dst++;
    for (std::size_t r = 0; r < a.rows(); ++r) moved(r, to) = a(r, c);
  }
  x.toric_a = std::move(moved);
  return x;
}

VarietyDesc VarietyDesc::grassmannian(int d, int n) {
  if (d < 1 || d >= n) throw std::invalid_argument("Grassmannian needs 0 < d < n");
  VarietyDesc x;
  x.kind = VarietyKind::Grassmannian;
  x.steps = {d};
  x.n = n;
  return x;
}

VarietyDesc VarietyDesc::flag(std::vector<int> steps, int n) {
  if (steps.empty()) throw std::invalid_argument("flag needs at least one step");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] < 1 || steps[i] >= n) throw std::invalid_argument("flag steps must lie in (0, n)");
    if (i > 0 && steps[i] <= steps[i - 1]) throw std::invalid_argument("flag steps must increase");
  }
  if (steps.size() == 1) return grassmannian(steps[0], n);
  VarietyDesc x;
  x.kind = VarietyKind::Flag;
  x.steps = std::move(steps);
  x.n = n;
  return x;
}

int VarietyDesc::dimension() const {
  if (is_toric()) return static_cast<int>(rank(to_rational(toric_a))) - 1;
  const auto sizes = block_sizes(*this);
  int dim = 0;
  for (std::size_t a = 0; a < sizes.size(); ++a)
    for (std::size_t b = a + 1; b < sizes.size(); ++b) dim += sizes[a] * sizes[b];
  return dim;
}

std::string VarietyDesc::label() const {
  if (is_toric()) return "toric";
  std::string s;
  if (kind == VarietyKind::Grassmannian) {
    if (steps[0] == 1) return "P^" + std::to_string(n - 1);
    return "G(" + std::to_string(steps[0]) + "," + std::to_string(n) + ")";
  }
  s = "F(";
  for (std::size_t i = 0; i < steps.size(); ++i) s += (i ? "," : "") + std::to_string(steps[i]);
  return s + ";" + std::to_string(n) + ")";
}

VarietyDesc parse_variety(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("variety descriptor needs a kind prefix");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  if (kind == "p") {
    const auto v = parse_int_list(body, ',');
    if (v.size() != 1 || v[0] < 1) throw std::invalid_argument("p:<dim> expects a positive dimension");
    return VarietyDesc::projective_space(v[0]);
  }
  if (kind == "g") {
    const auto v = parse_int_list(body, ',');
    if (v.size() != 2) throw std::invalid_argument("g:<d>,<n> expects two integers");
    return VarietyDesc::grassmannian(v[0], v[1]);
  }
  if (kind == "f") {
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) throw std::invalid_argument("f:<d1>,...;<n> needs ';'");
    const auto n = parse_int_list(body.substr(semi + 1), ',');
    if (n.size() != 1) throw std::invalid_argument("f: expects a single n after ';'");
    return VarietyDesc::flag(parse_int_list(body.substr(0, semi), ','), n[0]);
  }
  if (kind == "toric") {
    if (body.empty() || body[0] != '@') throw std::invalid_argument("toric:@<file.json> expected");
    std::ifstream in{std::string(body.substr(1))};
    if (!in) throw std::invalid_argument("cannot open toric descriptor " + std::string(body.substr(1)));
    const auto j = nlohmann::json::parse(in);
    const auto rows = j.at("A").get<std::vector<std::vector<long>>>();
    const std::size_t v0 = j.value("v0", std::size_t{0});
    return VarietyDesc::toric(int_matrix(rows), v0);
  }
  throw std::invalid_argument("unknown variety kind: " + std::string(kind));
}

std::vector<std::vector<int>> plucker_indices(int d, int n) {
  if (d < 0 || d > n) throw std::invalid_argument("plucker_indices needs 0 <= d <= n");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  subsets_rec(n, d, 1, cur, out);
  return out;
}

std::size_t plucker_position(const std::vector<int>& subset, int n) {
  // Rank of a sorted subset in lexicographic order.
  const int d = static_cast<int>(subset.size());
  std::size_t pos = 0;
  int prev = 0;
  for (int i = 0; i < d; ++i) {
    for (int v = prev + 1; v < subset[i]; ++v) pos += binomial(n - v, d - i - 1).get_ui();
    prev = subset[i];
  }
  return pos;
}

std::vector<LaurentPoly> plucker_relations(int d, int n) {
  const auto coords = plucker_indices(d, n);
  const std::size_t m = coords.size();
  std::vector<LaurentPoly> out;
  std::set<std::vector<std::pair<ExpVec, std::string>>> seen;
  for (const auto& low : plucker_indices(d - 1, n)) {
    for (const auto& high : plucker_indices(d + 1, n)) {
      LaurentPoly rel(m);
      for (std::size_t k = 0; k < high.size(); ++k) {
        std::vector<int> a = low;
        a.push_back(high[k]);
        std::vector<int> b;
        for (std::size_t j = 0; j < high.size(); ++j)
          if (j != k) b.push_back(high[j]);
        const int sa = sort_sign(a);
        if (sa == 0) continue;
        const int sign = (k % 2 == 0 ? 1 : -1) * sa;
        ExpVec e = ExpVec::unit(static_cast<std::uint32_t>(plucker_position(a, n))) +
                   ExpVec::unit(static_cast<std::uint32_t>(plucker_position(b, n)));
        rel.add_term(e, sign);
      }
      if (rel.is_zero()) continue;
      if (rel.terms().begin()->second < 0) rel = -rel;
      std::vector<std::pair<ExpVec, std::string>> key;
      for (const auto& [e, c] : rel.terms()) key.emplace_back(e, rat_to_string(c));
      if (seen.insert(key).second) out.push_back(std::move(rel));
    }
  }
  return out;
}

std::vector<int> anticanonical_degrees(const std::vector<int>& steps, int n) {
  std::vector<int> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const int prev = i == 0 ? 0 : steps[i - 1];
    const int next = i + 1 == steps.size() ? n : steps[i + 1];
    out.push_back(next - prev);
  }
  return out;
}

std::vector<int> anticanonical_degrees(const VarietyDesc& x) {
  if (x.is_toric()) return {1};
  return anticanonical_degrees(x.steps, x.n);
}

std::size_t CoordinateLayout::step_of(std::size_t coord) const {
  for (std::size_t i = offsets.size(); i-- > 0;)
    if (coord >= offsets[i]) return i;
  throw std::out_of_range("coordinate index");
}

CoordinateLayout coordinate_layout(const VarietyDesc& x) {
  CoordinateLayout lay;
  if (x.is_toric()) {
    lay.offsets = {0};
    lay.total = x.toric_a.cols();
    return lay;
  }
  for (int d : x.steps) {
    lay.offsets.push_back(lay.total);
    lay.subsets.push_back(plucker_indices(d, x.n));
    lay.total += lay.subsets.back().size();
  }
  return lay;
}

IntVec torus_weight(const VarietyDesc& x, const ExpVec& monomial) {
  if (x.is_toric()) {
    IntVec w(x.toric_a.rows(), 0);
    for (const auto& [c, k] : monomial.entries())
      for (std::size_t r = 0; r < w.size(); ++r) w[r] += k * x.toric_a(r, c).get_si();
    return w;
  }
  const auto lay = coordinate_layout(x);
  IntVec w(x.n, 0);
  for (const auto& [c, k] : monomial.entries()) {
    const auto s = lay.step_of(c);
    for (int v : lay.subsets[s][c - lay.offsets[s]]) w[v - 1] += k;
  }
  return w;
}

LaurentPoly Chart::restrict_monomial(const ExpVec& monomial) const {
  LaurentPoly p = LaurentPoly::constant(nvars, 1);
  for (const auto& [c, k] : monomial.entries()) {
    if (k < 0) throw std::invalid_argument("monomial with negative exponent");
    p = p * coordinates.at(c).pow(static_cast<unsigned>(k));
  }
  return p;
}

Chart big_cell_chart(const VarietyDesc& x) {
  Chart chart;
  if (x.is_toric()) {
    const IntMatrix& a = x.toric_a;
    chart.nvars = a.rows() - 1;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      std::vector<ExpVec::Entry> e;
      for (std::size_t r = 1; r < a.rows(); ++r) {
        const long k = Int(a(r, c) - a(r, 0)).get_si();
        if (k != 0) e.emplace_back(static_cast<std::uint32_t>(r - 1), static_cast<std::int32_t>(k));
      }
      chart.coordinates.push_back(LaurentPoly::monomial(chart.nvars, ExpVec::from_sorted(std::move(e))));
    }
    return chart;
  }
  // Block-unipotent n x n matrix; the first d_i rows span the i-th subspace.
  const auto sizes = block_sizes(x);
  std::vector<int> block_of(x.n);
  for (int b = 0, row = 0; b < static_cast<int>(sizes.size()); ++b)
    for (int k = 0; k < sizes[b]; ++k) block_of[row++] = b;
  std::vector<std::pair<int, int>> free_entries;
  for (int r = 0; r < x.n; ++r)
    for (int c = 0; c < x.n; ++c)
      if (block_of[r] < block_of[c]) free_entries.emplace_back(r, c);
  chart.nvars = free_entries.size();
  std::vector<std::vector<LaurentPoly>> mat(x.n, std::vector<LaurentPoly>(x.n, LaurentPoly(chart.nvars)));
  for (int r = 0; r < x.n; ++r) mat[r][r] = LaurentPoly::constant(chart.nvars, 1);
  for (std::size_t v = 0; v < free_entries.size(); ++v)
    mat[free_entries[v].first][free_entries[v].second] =
        LaurentPoly::variable(chart.nvars, static_cast<std::uint32_t>(v));
  for (int d : x.steps)
    for (const auto& subset : plucker_indices(d, x.n)) {
      std::vector<std::vector<LaurentPoly>> sub(d);
      for (int r = 0; r < d; ++r)
        for (int c : subset) sub[r].push_back(mat[r][c - 1]);
      chart.coordinates.push_back(poly_determinant(sub, chart.nvars));
    }
  std::vector<ExpVec::Entry> ones;
  for (std::size_t v = 0; v < chart.nvars; ++v) ones.emplace_back(static_cast<std::uint32_t>(v), 1);
  chart.volume_exponent = ExpVec::from_sorted(std::move(ones));
  return chart;
}

namespace {

std::vector<ExpVec> raw_monomials(const VarietyDesc& x, const std::vector<int>& multidegree) {
  std::vector<ExpVec> out;
  if (x.is_toric()) {
    if (multidegree != std::vector<int>{1}) throw std::invalid_argument("toric bases use multidegree (1)");
    for (std::size_t c = 0; c < x.toric_a.cols(); ++c) out.push_back(ExpVec::unit(static_cast<std::uint32_t>(c)));
    return out;
  }
  if (multidegree.size() != x.steps.size()) throw std::invalid_argument("multidegree length must match the steps");
  const auto lay = coordinate_layout(x);
  std::vector<ExpVec> partial{ExpVec{}};
  for (std::size_t s = 0; s < x.steps.size(); ++s) {
    if (multidegree[s] < 0) throw std::invalid_argument("negative multidegree");
    std::vector<ExpVec> next;
    const auto mons = monomials_of_degree(lay.subsets[s].size(), multidegree[s]);
    for (const auto& p : partial)
      for (const auto& m : mons) {
        std::vector<ExpVec::Entry> e(p.entries().begin(), p.entries().end());
        for (std::size_t k = 0; k < m.size(); ++k)
          if (m[k] != 0)
            e.emplace_back(static_cast<std::uint32_t>(lay.offsets[s] + k), static_cast<std::int32_t>(m[k]));
        next.push_back(ExpVec::from_sorted(std::move(e)));
      }
    partial = std::move(next);
  }
  return partial;
}

// Jointly choose one monomial per factor whose chart restrictions multiply to
// +-z^volume_exponent, using only coordinates that restrict to monomials.
std::optional<std::vector<ExpVec>> find_distinguished(const VarietyDesc& x, const Chart& chart,
                                                      const std::vector<std::vector<int>>& degrees) {
  const auto lay = coordinate_layout(x);
  std::vector<std::vector<std::pair<std::size_t, ExpVec>>> per_step(x.steps.size());
  for (std::size_t c = 0; c < lay.total; ++c) {
    const auto& p = chart.coordinates[c];
    if (!p.is_monomial()) continue;
    const auto& [e, coeff] = *p.terms().begin();
    if (coeff != 1 && coeff != -1) continue;
    per_step[lay.step_of(c)].emplace_back(c, e);
  }
  const ExpVec& target = chart.volume_exponent;
  std::vector<std::vector<std::size_t>> picks(degrees.size());
  std::function<bool(std::size_t, std::size_t, int, std::size_t, const ExpVec&)> dfs =
      [&](std::size_t f, std::size_t s, int left, std::size_t start, const ExpVec& acc) -> bool {
    for (const auto& [i, k] : acc.entries())
      if (k > target[i]) return false;
    if (f == degrees.size()) return acc == target;
    if (s == x.steps.size()) return dfs(f + 1, 0, f + 1 < degrees.size() ? degrees[f + 1][0] : 0, 0, acc);
    if (left == 0) {
      const int nl = s + 1 < x.steps.size() ? degrees[f][s + 1] : 0;
      return dfs(f, s + 1, nl, 0, acc);
    }
    for (std::size_t k = start; k < per_step[s].size(); ++k) {
      picks[f].push_back(per_step[s][k].first);
      if (dfs(f, s, left - 1, k, acc + per_step[s][k].second)) return true;
      picks[f].pop_back();
    }
    return false;
  };
  if (degrees.empty() || !dfs(0, 0, degrees[0][0], 0, ExpVec{})) return std::nullopt;
  std::vector<ExpVec> out;
  for (const auto& p : picks) {
    std::vector<ExpVec::Entry> e;
    for (auto c : p) e.emplace_back(static_cast<std::uint32_t>(c), 1);
    out.push_back(ExpVec::from_entries(std::move(e)));
  }
  return out;
}

// Fallback v0: the first monomial whose torus weight is the barycentre.
std::size_t central_monomial(const VarietyDesc& x, const std::vector<ExpVec>& mons) {
  for (std::size_t i = 0; i < mons.size(); ++i) {
    const auto w = torus_weight(x, mons[i]);
    if (std::all_of(w.begin(), w.end(), [&](std::int64_t v) { return v == w[0]; })) return i;
  }
  return 0;
}

}  // namespace

std::vector<MonomialBasis> complete_intersection_bases(const VarietyDesc& x,
                                                       const std::vector<std::vector<int>>& multidegrees) {
  if (multidegrees.empty()) throw std::invalid_argument("at least one factor required");
  std::vector<MonomialBasis> out;
  std::optional<std::vector<ExpVec>> chosen;
  if (!x.is_toric()) chosen = find_distinguished(x, big_cell_chart(x), multidegrees);
  for (std::size_t f = 0; f < multidegrees.size(); ++f) {
    auto mons = raw_monomials(x, multidegrees[f]);
    std::size_t v0 = 0;
    if (chosen) {
      v0 = static_cast<std::size_t>(std::find(mons.begin(), mons.end(), (*chosen)[f]) - mons.begin());
      if (v0 == mons.size()) throw std::logic_error("distinguished monomial outside the basis");
    } else if (!x.is_toric()) {
      v0 = central_monomial(x, mons);
    }
    std::rotate(mons.begin(), mons.begin() + static_cast<long>(v0), mons.begin() + static_cast<long>(v0) + 1);
    MonomialBasis b;
    b.multidegree = multidegrees[f];
    b.monomials = std::move(mons);
    b.chart_compatible = x.is_toric() || chosen.has_value();
    out.push_back(std::move(b));
  }
  return out;
}

MonomialBasis monomial_basis(const VarietyDesc& x, const std::vector<int>& multidegree) {
  return complete_intersection_bases(x, {multidegree}).front();
}

MonomialBasis monomial_basis(const VarietyDesc& x) { return monomial_basis(x, anticanonical_degrees(x)); }

std::vector<Rat> coordinate_values(const VarietyDesc& x, const RatMatrix& point) {
  std::vector<Rat> out;
  if (x.is_toric()) {
    const IntMatrix& a = x.toric_a;
    if (point.rows() != 1 || point.cols() != a.rows() - 1) throw std::invalid_argument("toric point has wrong shape");
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Rat v = 1;
      for (std::size_t r = 1; r < a.rows(); ++r) {
        const long k = Int(a(r, c) - a(r, 0)).get_si();
        Rat t = point(0, r - 1);
        if (t == 0) throw std::domain_error("toric point must lie in the torus");
        for (long j = 0; j < std::labs(k); ++j) v = k > 0 ? Rat(v * t) : Rat(v / t);
      }
      out.push_back(v);
    }
    return out;
  }
  if (point.cols() != static_cast<std::size_t>(x.n) || point.rows() < static_cast<std::size_t>(x.steps.back()))
    throw std::invalid_argument("matrix point has wrong shape");
  for (int d : x.steps)
    for (const auto& subset : plucker_indices(d, x.n)) {
      RatMatrix sub(d, d);
      for (int r = 0; r < d; ++r)
        for (int k = 0; k < d; ++k) sub(r, k) = point(r, subset[k] - 1);
      out.push_back(rat_determinant(sub));
    }
  return out;
}

std::vector<Rat> evaluate_monomials(const MonomialBasis& basis, std::span<const Rat> coords) {
  std::vector<Rat> out;
  out.reserve(basis.size());
  for (const auto& m : basis.monomials) {
    Rat v = 1;
    for (const auto& [c, k] : m.entries())
      for (int j = 0; j < k; ++j) v *= coords[c];
    out.push_back(v);
  }
  return out;
}

RatMatrix sample_points(const VarietyDesc& x, const MonomialBasis& basis, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&] { return static_cast<long>(rng() % 21) - 10; };
  RatMatrix out(0, basis.size());
  constexpr int kMaxRetries = 1000;
  for (std::size_t p = 0; p < count; ++p) {
    bool ok = false;
    for (int attempt = 0; attempt < kMaxRetries && !ok; ++attempt) {
      RatMatrix pt;
      if (x.is_toric()) {
        pt = RatMatrix(1, x.toric_a.rows() - 1);
        for (std::size_t k = 0; k < pt.cols(); ++k) {
          long v = 0;
          while (v == 0) v = draw();
          pt(0, k) = v;
        }
      } else {
        const int rows = x.kind == VarietyKind::Grassmannian ? x.steps[0] : x.n;
        pt = RatMatrix(rows, x.n);
        for (int r = 0; r < rows; ++r)
          for (int c = 0; c < x.n; ++c) pt(r, c) = draw();
      }
      const auto coords = coordinate_values(x, pt);
      if (!x.is_toric()) {
        // Each step's subspace must have full rank: some Plucker coordinate nonzero.
        const auto lay = coordinate_layout(x);
        bool full = true;
        for (std::size_t s = 0; s < x.steps.size(); ++s) {
          const auto first = coords.begin() + static_cast<long>(lay.offsets[s]);
          const auto last = first + static_cast<long>(lay.subsets[s].size());
          if (std::all_of(first, last, [](const Rat& v) { return v == 0; })) full = false;
        }
        if (!full) continue;
      }
      out.append_row(evaluate_monomials(basis, coords));
      ok = true;
    }
    if (!ok) throw std::runtime_error("sample_points: rank-deficient samples persisted");
  }
  return out;
}

Int weyl_dim(const std::vector<long>& lambda, int n) {
  if (static_cast<int>(lambda.size()) != n - 1) throw std::invalid_argument("weight needs n-1 coordinates");
  std::vector<long> part(n, 0);  // partition a_k = sum_{m >= k} lambda_m
  for (int k = n - 2; k >= 0; --k) part[k] = part[k + 1] + lambda[k];
  Rat dim = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) dim *= make_rat(part[i] - part[j] + j - i, j - i);
  if (dim.get_den() != 1) throw std::logic_error("Weyl dimension is not an integer");
  return dim.get_num();
}

std::vector<long> highest_weight(const VarietyDesc& x, const std::vector<int>& multidegree) {
  if (x.is_toric()) throw std::invalid_argument("highest weight needs a flag variety");
  std::vector<long> lambda(x.n - 1, 0);
  for (std::size_t s = 0; s < x.steps.size(); ++s) lambda[x.steps[s] - 1] += multidegree.at(s);
  return lambda;
}

Int degree_grassmannian(int d, int n) {
  if (d < 1 || d >= n) throw std::invalid_argument("Grassmannian needs 0 < d < n");
  Rat deg = factorial(static_cast<long>(d) * (n - d));
  for (int i = 0; i < d; ++i) deg *= make_rat(factorial(i), factorial(n - d + i));
  if (deg.get_den() != 1) throw std::logic_error("degree is not an integer");
  return deg.get_num();
}

std::vector<Int> poincare_polynomial(const std::vector<int>& steps, int n) {
  const VarietyDesc x = VarietyDesc::flag(steps, n);
  if (n > 10) throw std::invalid_argument("Poincare enumeration limited to n <= 10");
  const auto sizes = block_sizes(x);
  std::vector<Int> coeffs(2 * static_cast<std::size_t>(x.dimension()) + 1, 0);
  // Minimal coset representatives = words with sizes[k] copies of letter k;
  // the length is the inversion count.
  std::vector<int> left(sizes.begin(), sizes.end());
  std::vector<int> placed(sizes.size(), 0);
  std::function<void(int, int)> rec = [&](int pos, int inv) {
    if (pos == n) {
      coeffs[2 * inv] += 1;
      return;
    }
    int greater = 0;
    for (int c = static_cast<int>(sizes.size()) - 1; c >= 0; --c) {
      if (left[c] > 0) {
        --left[c];
        ++placed[c];
        rec(pos + 1, inv + greater);
        ++left[c];
        --placed[c];
      }
      greater += placed[c];
    }
  };
  rec(0, 0);
  return coeffs;
}

Int coset_count(const std::vector<int>& steps, int n) {
  const VarietyDesc x = VarietyDesc::flag(steps, n);
  Int c = factorial(n);
  for (int s : block_sizes(x)) c /= factorial(s);
  return c;
}

Int determinant(IntMatrix m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(k, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix projective_toric_matrix(int n) {
  const auto basis = monomial_basis(VarietyDesc::projective_space(n - 1));
  IntMatrix a(static_cast<std::size_t>(n), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    a(0, c) = 1;
    for (int r = 1; r < n; ++r) a(r, c) = basis.monomials[c][static_cast<std::uint32_t>(r - 1)] - 1;
  }
  return a;
}

}  // namespace tautsys
