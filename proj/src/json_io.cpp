#include "tautsys/json_io.hpp"

#include <stdexcept>

namespace tautsys {

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json exp_to_json(const ExpVec& e) {
  Json out = Json::array();
  for (const auto& [i, k] : e.entries()) out.push_back({i, k});
  return out;
}

ExpVec exp_from_json(const Json& j) {
  std::vector<ExpVec::Entry> entries;
  for (const auto& p : j) entries.emplace_back(p.at(0).get<std::uint32_t>(), p.at(1).get<std::int32_t>());
  return ExpVec::from_entries(std::move(entries));
}

namespace {

Json rat_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_parts(const Json& j) {
  return make_rat(Int(j.at("num").get<std::string>()), Int(j.at("den").get<std::string>()));
}
Rat rat_from(const Json& j) { return parse_rat(j.get<std::string>()); }

Json matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

RatMatrix matrix_from(const Json& j) {
  const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rat_from(j[i][k]);
  return m;
}

Json generators_json(const std::vector<Generator>& gens) {
  Json out = Json::array();
  for (const auto& g : gens) {
    Json e = {{"label", g.label}, {"op", op_to_json(g.op)}};
    if (g.lie_element) e["lie_element"] = matrix_json(*g.lie_element);
    out.push_back(e);
  }
  return out;
}

std::vector<Generator> generators_from(const Json& j, std::size_t nvars) {
  std::vector<Generator> out;
  for (const auto& e : j) {
    Generator g{e.at("label").get<std::string>(), op_from_json(e.at("op"), nvars), std::nullopt};
    if (e.contains("lie_element")) g.lie_element = matrix_from(e["lie_element"]);
    out.push_back(std::move(g));
  }
  return out;
}

constexpr GeneratorGroup kGroups[] = {GeneratorGroup::Binomial, GeneratorGroup::Linear, GeneratorGroup::GOp,
                                      GeneratorGroup::Euler};

}  // namespace

Json poly_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"exp", e.dense(p.nvars())}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return {{"vars", p.nvars()}, {"terms", terms}};
}

LaurentPoly poly_from_json(const Json& j) {
  LaurentPoly p(j.at("vars").get<std::size_t>());
  for (const auto& t : j.at("terms")) {
    const auto dense = t.at("exp").get<std::vector<std::int64_t>>();
    if (dense.size() != p.nvars()) throw std::invalid_argument("exponent length differs from the variable count");
    p.add_term(ExpVec::from_dense(dense), rat_from_parts(t));
  }
  return p;
}

Json series_to_json(const SparseSeries& s) {
  Json coeffs = Json::array();
  for (const auto& [e, c] : s.coefficients())
    coeffs.push_back({{"exp", exp_to_json(e)}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  const auto dist = s.distinguished();
  return {{"N", s.nvars()},
          {"v0", dist.empty() ? Json(nullptr) : Json(dist[0])},
          {"distinguished", std::vector<std::uint32_t>(dist.begin(), dist.end())},
          {"T", s.truncation()},
          {"coeffs", coeffs}};
}

SparseSeries series_from_json(const Json& j) {
  std::vector<std::uint32_t> dist;
  if (j.contains("distinguished")) dist = j["distinguished"].get<std::vector<std::uint32_t>>();
  else if (!j.at("v0").is_null()) dist = {j["v0"].get<std::uint32_t>()};
  SparseSeries s(j.at("N").get<std::size_t>(), dist, j.at("T").get<long>());
  for (const auto& c : j.at("coeffs")) {
    s.add(exp_from_json(c.at("exp")), rat_from_parts(c));
  }
  return s;
}

Json op_to_json(const DiffOp& op) {
  Json terms = Json::array();
  for (const auto& t : op.terms()) terms.push_back({{"c", rat_json(t.coeff)}, {"a", exp_to_json(t.a)}, {"d", exp_to_json(t.d)}});
  return terms;
}

DiffOp op_from_json(const Json& j, std::size_t nvars) {
  std::vector<WeylTerm> terms;
  for (const auto& t : j) terms.push_back({rat_from(t.at("c")), exp_from_json(t.at("a")), exp_from_json(t.at("d"))});
  return DiffOp(nvars, std::move(terms));
}

Json system_to_json(const TautSystem& sys) {
  Json monomials = Json::array();
  for (const auto& m : sys.monomials) monomials.push_back(exp_to_json(m));
  Json beta = Json::array();
  for (const auto& b : sys.beta) beta.push_back(rat_json(b));
  Json j = {{"variety", sys.variety},
            {"N", sys.nvars},
            {"offsets", sys.offsets},
            {"multidegrees", sys.multidegrees},
            {"beta", beta},
            {"monomials", monomials}};
  for (auto g : kGroups) j[group_name(g)] = generators_json(sys.group(g));
  return j;
}

TautSystem system_from_json(const Json& j) {
  TautSystem sys;
  sys.variety = j.at("variety").get<std::string>();
  sys.nvars = j.at("N").get<std::size_t>();
  sys.offsets = j.at("offsets").get<std::vector<std::size_t>>();
  sys.multidegrees = j.at("multidegrees").get<std::vector<std::vector<int>>>();
  for (const auto& b : j.at("beta")) sys.beta.push_back(rat_from(b));
  for (const auto& m : j.at("monomials")) sys.monomials.push_back(exp_from_json(m));
  for (auto g : kGroups) sys.group(g) = generators_from(j.at(group_name(g)), sys.nvars);
  return sys;
}

Json report_to_json(const AnnihilationReport& r) {
  Json gens = Json::array();
  for (const auto& g : r.generators) {
    Json e = {{"label", g.label},
              {"group", group_name(g.group)},
              {"safe_order", g.safe_order},
              {"checked", g.checked},
              {"pass", g.pass}};
    e["witness"] = g.witness ? exp_to_json(*g.witness) : Json(nullptr);
    e["residual"] = g.residual ? rat_json(*g.residual) : Json(nullptr);
    gens.push_back(e);
  }
  return {{"variety", r.variety}, {"T", r.truncation}, {"pass", r.pass()}, {"failures", r.failures()},
          {"generators", gens}};
}

Json lie_closure_to_json(const LieClosureReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"left", f.left}, {"right", f.right}, {"reason", f.reason}});
  return {{"pairs", r.pairs}, {"pass", r.pass()}, {"failures", failures}};
}

Json volform_to_json(const VolformCheck& c) {
  auto opt = [](const std::optional<Rat>& r) { return r ? rat_json(*r) : Json(nullptr); };
  return {{"d", c.d},
          {"n", c.n},
          {"terms", c.terms},
          {"closed_form_ratio", opt(c.closed_form_ratio)},
          {"sl_invariant", c.sl_invariant},
          {"horizontal", c.horizontal},
          {"identity_eigenvalue", opt(c.identity_eigenvalue)},
          {"character_exponent", opt(c.character_exponent)},
          {"pass", c.pass()}};
}

Json readings_to_json(const std::vector<ReadingCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks)
    out.push_back({{"reading", reading_name(c.reading)},
                   {"matches", c.matches},
                   {"points", c.points},
                   {"mismatches", c.mismatches}});
  return out;
}

std::string report_summary(const AnnihilationReport& r) {
  std::string out;
  for (auto g : kGroups) {
    std::size_t total = 0, passed = 0;
    for (const auto& c : r.generators)
      if (c.group == g) {
        ++total;
        passed += c.pass ? 1 : 0;
      }
    if (total == 0) continue;
    out += std::string(group_name(g)) + ": " + std::to_string(passed) + "/" + std::to_string(total) + " pass\n";
  }
  return out;
}

}  // namespace tautsys
