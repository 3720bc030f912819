#include "tautsys/periods.hpp"

#include <algorithm>
#include <stdexcept>

#include "tautsys/parallel.hpp"

namespace tautsys {

namespace {

std::vector<std::size_t> block_offsets(const std::vector<MonomialBasis>& bases) {
  std::vector<std::size_t> off;
  std::size_t total = 0;
  for (const auto& b : bases) {
    off.push_back(total);
    total += b.size();
  }
  off.push_back(total);
  return off;
}

// Torus weights of every variable plus one indicator row per block.
IntMatrix relation_matrix(const VarietyDesc& x, const std::vector<MonomialBasis>& bases) {
  const auto off = block_offsets(bases);
  const std::size_t nvars = off.back();
  const std::size_t wrows = torus_weight(x, bases[0].monomials[0]).size();
  IntMatrix m(wrows + bases.size(), nvars);
  for (std::size_t f = 0; f < bases.size(); ++f)
    for (std::size_t j = 0; j < bases[f].size(); ++j) {
      const auto w = torus_weight(x, bases[f].monomials[j]);
      for (std::size_t r = 0; r < wrows; ++r) m(r, off[f] + j) = w[r];
      m(wrows + f, off[f] + j) = 1;
    }
  return m;
}

std::vector<std::uint32_t> distinguished_of(const std::vector<MonomialBasis>& bases) {
  const auto off = block_offsets(bases);
  return {off.begin(), off.end() - 1};
}

ExpVec stored_exponent(const IntVec& l, const std::vector<std::uint32_t>& dist) {
  ExpVec e = ExpVec::from_dense(l);
  for (auto d : dist) e.set(d, e[d] - 1);
  return e;
}

Rat multinomial_weight(const IntVec& l, const std::vector<std::uint32_t>& dist) {
  // prod_f (-1)^{m_f} m_f! / prod_{non-distinguished} l_i!
  Rat w = 1;
  std::size_t next = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (next < dist.size() && dist[next] == i) {
      const long m = -l[i];
      w *= factorial(m);
      if (m % 2) w = -w;
      ++next;
    } else {
      w /= factorial(l[i]);
    }
  }
  return w;
}

}  // namespace

std::vector<IntVec> period_lattice_points(const VarietyDesc& x, const std::vector<MonomialBasis>& bases,
                                          long order) {
  const auto basis = integer_kernel_basis(relation_matrix(x, bases));
  const auto dist = distinguished_of(bases);
  return enumerate_lattice_points(basis, SignPattern{std::vector<std::size_t>(dist.begin(), dist.end())}, order);
}

SparseSeries toric_period_series(const IntMatrix& a, long order) {
  const VarietyDesc x = VarietyDesc::toric(a, 0);
  const std::vector<MonomialBasis> bases{monomial_basis(x)};
  const std::vector<std::uint32_t> dist{0};
  SparseSeries s(a.cols(), dist, order);
  for (const auto& l : period_lattice_points(x, bases, order)) s.add(stored_exponent(l, dist), multinomial_weight(l, dist));
  return s;
}

SparseSeries ci_period_series(const VarietyDesc& x, const std::vector<std::vector<int>>& multidegrees, long order,
                              unsigned threads) {
  if (!x.is_toric()) {
    std::vector<int> sum(x.steps.size(), 0);
    for (const auto& md : multidegrees) {
      if (md.size() != sum.size()) throw std::invalid_argument("multidegree has the wrong number of entries");
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += md[i];
    }
    if (sum != anticanonical_degrees(x)) throw std::invalid_argument("multidegrees must sum to the anticanonical degree");
  } else if (multidegrees.size() != 1) {
    throw std::invalid_argument("toric periods have a single factor");
  }
  const auto bases = complete_intersection_bases(x, multidegrees);
  for (const auto& b : bases)
    if (!b.chart_compatible)
      throw std::invalid_argument("no distinguished monomial restricts to the chart volume monomial for " + x.label());
  const Chart chart = big_cell_chart(x);
  const auto off = block_offsets(bases);
  const auto dist = distinguished_of(bases);

  // Restrictions of every variable, and the leading monomial C_f = c_f z^{e_f}.
  std::vector<LaurentPoly> restricted;
  std::vector<ExpVec> lead_exp;
  std::vector<Rat> lead_coeff;
  ExpVec volume;
  for (std::size_t f = 0; f < bases.size(); ++f) {
    for (const auto& m : bases[f].monomials) restricted.push_back(chart.restrict_monomial(m));
    const auto& c = restricted[off[f]];
    if (!c.is_monomial()) throw std::invalid_argument("distinguished monomial is not a single Laurent monomial");
    lead_exp.push_back(c.terms().begin()->first);
    lead_coeff.push_back(c.terms().begin()->second);
    volume += lead_exp.back();
  }
  if (volume != chart.volume_exponent)
    throw std::invalid_argument("distinguished monomials do not restrict to the chart volume monomial");

  const auto points = period_lattice_points(x, bases, order);
  std::vector<Rat> coeffs(points.size());
  parallel_for(points.size(), threads, [&](std::size_t k) {
    const IntVec& l = points[k];
    // CT( prod_j P_j^{l_j} / prod_f C_f^{m_f} )
    ExpVec target;
    Rat scale = 1;
    LaurentPoly acc = LaurentPoly::constant(chart.nvars, 1);
    std::vector<std::pair<std::size_t, long>> factors;
    for (std::size_t f = 0; f < bases.size(); ++f) {
      const long m = -l[off[f]];
      target += lead_exp[f].scaled(static_cast<std::int32_t>(m));
      for (long j = 0; j < m; ++j) scale /= lead_coeff[f];
    }
    for (std::size_t i = 0; i < l.size(); ++i)
      if (l[i] > 0 && std::find(dist.begin(), dist.end(), i) == dist.end()) factors.emplace_back(i, l[i]);
    Rat ct;
    if (factors.empty()) {
      ct = target.empty() ? Rat(1) : Rat(0);
    } else {
      for (std::size_t j = 0; j + 1 < factors.size(); ++j)
        acc = acc * restricted[factors[j].first].pow(static_cast<unsigned>(factors[j].second));
      const auto& last = factors.back();
      ct = product_coefficient(acc, restricted[last.first].pow(static_cast<unsigned>(last.second)), target);
    }
    coeffs[k] = ct * scale * multinomial_weight(l, dist);
  });

  SparseSeries s(off.back(), dist, order);
  for (std::size_t k = 0; k < points.size(); ++k) s.add(stored_exponent(points[k], dist), coeffs[k]);
  return s;
}

SparseSeries chart_period_series(const VarietyDesc& x, long order, unsigned threads) {
  return ci_period_series(x, {anticanonical_degrees(x)}, order, threads);
}

std::vector<G24Reading> all_g24_readings() {
  return {G24Reading::SummationIndex, G24Reading::AmbientDimension, G24Reading::PluckerExponentN1,
          G24Reading::TotalPluckerDegree};
}

std::string reading_name(G24Reading r) {
  switch (r) {
    case G24Reading::SummationIndex: return "summation-index";
    case G24Reading::AmbientDimension: return "ambient-dimension";
    case G24Reading::PluckerExponentN1: return "plucker-exponent-n1";
    case G24Reading::TotalPluckerDegree: return "total-plucker-degree";
  }
  return "?";
}

std::optional<G24Reading> parse_reading(std::string_view name) {
  for (auto r : all_g24_readings())
    if (reading_name(r) == name) return r;
  return std::nullopt;
}

namespace {

const MonomialBasis& g24_basis() {
  static const MonomialBasis b = monomial_basis(VarietyDesc::grassmannian(2, 4));
  return b;
}

}  // namespace

Rat closed_form_g24_coeff(const ExpVec& l, G24Reading reading) {
  const auto& basis = g24_basis();
  // Plucker positions: 12, 13, 14, 23, 24, 34.
  constexpr std::uint32_t kP13 = 1, kP23 = 3, kP34 = 5;
  const long m = -l[0];
  if (m < 0) throw std::invalid_argument("closed form needs l_0 <= 0");
  ExpVec plucker;  // exponent of p^{sum_{i != 0} l_i v_i}
  Rat weight = factorial(m);
  if (m % 2) weight = -weight;
  for (const auto& [i, k] : l.entries()) {
    if (i == 0) continue;
    if (i >= basis.size() || k < 0) throw std::invalid_argument("closed form needs a G(2,4) lattice vector");
    plucker += basis.monomials[i].scaled(k);
    weight /= factorial(k);
  }
  const long n1 = plucker[kP13], n2 = plucker[kP23], n5 = plucker[kP34];
  long n = 0;
  switch (reading) {
    case G24Reading::SummationIndex: n = m; break;
    case G24Reading::AmbientDimension: n = 4; break;
    case G24Reading::PluckerExponentN1: n = n1; break;
    case G24Reading::TotalPluckerDegree: n = 4 * m; break;
  }
  // (n - n2) factors of -z2 z3 are taken from p34^{n5}.
  const long taken = n - n2;
  Rat c = weight * Rat(binomial(n5, n5 + n2 - n));
  if (taken % 2) c = -c;
  return c;
}

SparseSeries closed_form_g24_series(long order, G24Reading reading) {
  const VarietyDesc x = VarietyDesc::grassmannian(2, 4);
  SparseSeries s(g24_basis().size(), {0}, order);
  for (const auto& l : period_lattice_points(x, {g24_basis()}, order)) {
    const ExpVec e = ExpVec::from_dense(l);
    s.add(stored_exponent(l, {0}), closed_form_g24_coeff(e, reading));
  }
  return s;
}

std::vector<ReadingCheck> check_g24_readings(long order, unsigned threads) {
  const VarietyDesc x = VarietyDesc::grassmannian(2, 4);
  const SparseSeries series = chart_period_series(x, order, threads);
  const auto points = period_lattice_points(x, {g24_basis()}, order);
  std::vector<ReadingCheck> out;
  for (auto r : all_g24_readings()) {
    ReadingCheck chk{r, true, points.size(), 0};
    for (const auto& l : points) {
      const Rat expected = series.coefficient(stored_exponent(l, {0}));
      if (closed_form_g24_coeff(ExpVec::from_dense(l), r) != expected) ++chk.mismatches;
    }
    chk.matches = chk.mismatches == 0;
    out.push_back(chk);
  }
  return out;
}

}  // namespace tautsys
