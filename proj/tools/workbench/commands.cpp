#include "commands.hpp"

#include "qweyl/errors.hpp"
#include "qweyl/expression.hpp"
#include "qweyl/moment.hpp"
#include "qweyl/polynomial.hpp"

namespace qweyl::workbench {

namespace {

nlohmann::json coefficients(const Scalar& s) {
  const std::size_t dim = static_cast<std::size_t>(s.field().degree());
  nlohmann::json v = nlohmann::json::array();
  for (std::size_t i = 0; i < dim; ++i) v.push_back(rational_to_string(s.cyclotomic().coeff(i)));
  return v;
}

nlohmann::json matrix_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(coefficients(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string eval_command(const std::string& expr, const WorkbenchConfig& cfg) {
  return canonical_form(expr, *cfg.spec);
}

std::string reduce_command(const std::string& expr, const WorkbenchConfig& cfg) {
  if (cfg.d == 0) throw ParameterError("reduce needs a torus with d > 0");
  const ReductionDatum datum(*cfg.torus, cfg.eta, cfg.l);
  return to_string(moment_ideal_reduce(parse_localized(expr, *cfg.spec), datum));
}

nlohmann::json rep_build_command(const WorkbenchConfig& cfg) {
  if (cfg.reps.empty()) throw ParameterError("the config lists no representations");
  nlohmann::json out = {{"field", cfg.field().name()}, {"l", cfg.l}, {"basis", "power basis in zeta"}};
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& slots : cfg.reps) {
    const MatrixRep rep = build_irrep(slots, cfg.l);
    nlohmann::json r = {{"dim", rep.dim}};
    nlohmann::json a = nlohmann::json::array(), w = nlohmann::json::array();
    for (const auto& s : rep.character.a) a.push_back(s.to_string());
    for (const auto& s : rep.character.omega) w.push_back(s.to_string());
    r["character"] = {{"a", a}, {"omega", w}};
    nlohmann::json xs = nlohmann::json::array(), ys = nlohmann::json::array();
    for (const auto& m : rep.x) xs.push_back(matrix_json(m));
    for (const auto& m : rep.y) ys.push_back(matrix_json(m));
    r["X"] = xs;
    r["Y"] = ys;
    reps.push_back(std::move(r));
  }
  out["reps"] = reps;
  return out;
}

}  // namespace qweyl::workbench
