#include "config.hpp"

#include <fstream>
#include <set>

#include "qweyl/errors.hpp"
#include "qweyl/expression.hpp"

namespace qweyl::workbench {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& p : v) s += (s.empty() ? "" : "\n") + p;
  return s;
}

class Validator {
 public:
  void problem(const std::string& path, const std::string& what) { problems_.push_back(path + ": " + what); }
  bool ok() const { return problems_.empty(); }
  std::vector<std::string> take() { return std::move(problems_); }

  std::optional<long> integer(const nlohmann::json& j, const std::string& path) {
    if (!j.is_number_integer()) {
      problem(path, "expected an integer");
      return std::nullopt;
    }
    return j.get<long>();
  }

  std::optional<IntMatrix> int_matrix(const nlohmann::json& j, const std::string& path, std::size_t rows,
                                      std::optional<std::size_t> cols) {
    if (!j.is_array()) {
      problem(path, "expected a list of integer rows");
      return std::nullopt;
    }
    if (j.size() != rows) {
      problem(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
      return std::nullopt;
    }
    IntMatrix m;
    bool good = true;
    for (std::size_t r = 0; r < j.size(); ++r) {
      const std::string rp = path + "[" + std::to_string(r) + "]";
      if (!j[r].is_array()) {
        problem(rp, "expected a list of integers");
        good = false;
        continue;
      }
      if (cols && j[r].size() != *cols) {
        problem(rp, "expected " + std::to_string(*cols) + " entries, got " + std::to_string(j[r].size()));
        good = false;
        continue;
      }
      IntVector row;
      for (std::size_t c = 0; c < j[r].size(); ++c) {
        auto v = integer(j[r][c], rp + "[" + std::to_string(c) + "]");
        good = good && v.has_value();
        row.push_back(v.value_or(0));
      }
      m.push_back(std::move(row));
    }
    if (!good) return std::nullopt;
    return m;
  }

  std::optional<Scalar> scalar(const nlohmann::json& j, const std::string& path, const Field& f) {
    std::string text;
    if (j.is_string()) {
      text = j.get<std::string>();
    } else if (j.is_number_integer()) {
      text = std::to_string(j.get<long>());
    } else {
      problem(path, "expected a scalar literal string");
      return std::nullopt;
    }
    try {
      return parse_scalar(text, f);
    } catch (const std::exception& e) {
      problem(path, e.what());
      return std::nullopt;
    }
  }

 private:
  std::vector<std::string> problems_;
};

const std::set<std::string> kKnownKeys = {"field", "l", "n", "d", "M", "normalization", "A",
                                          "eta", "reps", "bounds", "seed"};

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error("invalid configuration:\n" + join(problems)), problems_(std::move(problems)) {}

WorkbenchConfig parse_config(const nlohmann::json& j) {
  Validator v;
  WorkbenchConfig cfg;
  cfg.raw = j;
  if (!j.is_object()) throw ConfigError({"(root): expected a JSON object"});
  for (const auto& [key, value] : j.items())
    if (!kKnownKeys.count(key)) v.problem(key, "unknown field");

  // field and l
  std::optional<Field> field;
  if (!j.contains("field") || !j["field"].is_string()) {
    v.problem("field", "expected one of rational, rational_function_q, cyclotomic");
  } else {
    cfg.field_name = j["field"].get<std::string>();
    if (cfg.field_name == "rational") {
      field = Field::rational();
    } else if (cfg.field_name == "rational_function_q") {
      field = Field::rational_function();
    } else if (cfg.field_name == "cyclotomic") {
      if (!j.contains("l")) {
        v.problem("l", "required for the cyclotomic field");
      } else if (auto l = v.integer(j["l"], "l")) {
        if (*l < 3 || *l % 2 == 0 || *l > 97) {
          v.problem("l", "must be an odd integer between 3 and 97 (got " + std::to_string(*l) + ")");
        } else {
          cfg.l = static_cast<int>(*l);
          field = Field::cyclotomic(cfg.l);
        }
      }
    } else {
      v.problem("field", "unknown field '" + cfg.field_name + "'");
    }
    if (cfg.field_name != "cyclotomic" && j.contains("l")) v.problem("l", "only meaningful for the cyclotomic field");
  }

  // n
  if (!j.contains("n")) {
    v.problem("n", "required");
  } else if (auto n = v.integer(j["n"], "n")) {
    if (*n < 1 || *n > 8)
      v.problem("n", "must be between 1 and 8");
    else
      cfg.n = static_cast<std::size_t>(*n);
  }

  // normalization
  if (j.contains("normalization")) {
    const auto& nj = j["normalization"];
    if (nj == "rescaled")
      cfg.normalization = Normalization::Rescaled;
    else if (nj == "unscaled")
      cfg.normalization = Normalization::Unscaled;
    else
      v.problem("normalization", "expected unscaled or rescaled");
  }

  // M
  if (cfg.n > 0 && field) {
    if (!j.contains("M")) {
      v.problem("M", "required (an n x n integer matrix or \"single_parameter\")");
    } else if (j["M"].is_string()) {
      if (j["M"] != "single_parameter") {
        v.problem("M", "the only preset is \"single_parameter\"");
      } else if (field->kind() == FieldKind::Rational) {
        v.problem("M", "the single-parameter preset needs q; use rational_function_q or cyclotomic");
      } else {
        cfg.single_parameter = true;
        cfg.spec = AlgebraSpec::single_parameter(cfg.n, cfg.normalization, *field);
      }
    } else if (auto m = v.int_matrix(j["M"], "M", cfg.n, cfg.n)) {
      bool zero = true;
      for (const auto& row : *m)
        for (long x : row) zero = zero && x == 0;
      if (field->kind() == FieldKind::Rational && !zero) {
        v.problem("M", "the rational field has no q, so M must be zero");
      } else {
        try {
          cfg.spec = AlgebraSpec(*m, cfg.normalization, *field);
          cfg.single_parameter = cfg.spec->is_single_parameter();
        } catch (const std::exception& e) {
          v.problem("M", e.what());
        }
      }
    }
  }

  // d and A
  std::optional<long> d;
  if (j.contains("d")) d = v.integer(j["d"], "d");
  if (!d && j.contains("A") && j["A"].is_array() && !j["A"].empty() && j["A"][0].is_array())
    d = static_cast<long>(j["A"][0].size());
  if (!d && !j.contains("A")) d = 0;
  if (d && cfg.n > 0) {
    if (*d < 0 || static_cast<std::size_t>(*d) > cfg.n) {
      v.problem("d", "must satisfy 0 <= d <= n");
    } else {
      cfg.d = static_cast<std::size_t>(*d);
      if (cfg.d == 0) {
        cfg.torus = TorusData::trivial(cfg.n);
      } else if (!j.contains("A")) {
        v.problem("A", "required when d > 0");
      } else if (auto a = v.int_matrix(j["A"], "A", cfg.n, cfg.d)) {
        try {
          cfg.torus = TorusData(*a);
        } catch (const std::exception& e) {
          v.problem("A", e.what());
        }
      }
    }
  }

  // eta
  if (cfg.d > 0 && field) {
    if (!j.contains("eta") || !j["eta"].is_array()) {
      v.problem("eta", "expected a list of " + std::to_string(cfg.d) + " scalar literals");
    } else if (j["eta"].size() != cfg.d) {
      v.problem("eta", "expected " + std::to_string(cfg.d) + " entries, got " + std::to_string(j["eta"].size()));
    } else {
      for (std::size_t k = 0; k < cfg.d; ++k) {
        const std::string path = "eta[" + std::to_string(k) + "]";
        if (auto s = v.scalar(j["eta"][k], path, *field)) {
          if (s->is_zero())
            v.problem(path, "must be nonzero");
          else
            cfg.eta.push_back(*s);
        }
      }
    }
  } else if (j.contains("eta") && j["eta"].is_array() && !j["eta"].empty() && cfg.d == 0) {
    v.problem("eta", "given but d = 0");
  }

  // reps
  if (j.contains("reps")) {
    const auto& rj = j["reps"];
    if (!rj.is_array()) {
      v.problem("reps", "expected a list of representations");
    } else if (!rj.empty()) {
      if (!field || field->kind() != FieldKind::Cyclotomic || !cfg.single_parameter ||
          cfg.normalization != Normalization::Rescaled) {
        v.problem("reps", "representations need the cyclotomic field with the rescaled single-parameter algebra");
      } else {
        for (std::size_t r = 0; r < rj.size(); ++r) {
          const std::string rp = "reps[" + std::to_string(r) + "]";
          if (!rj[r].is_array() || rj[r].size() != cfg.n) {
            v.problem(rp, "expected a list of " + std::to_string(cfg.n) + " coordinate builders");
            continue;
          }
          std::vector<RankOneData> slots;
          for (std::size_t s = 0; s < cfg.n; ++s) {
            const std::string sp = rp + "[" + std::to_string(s) + "]";
            const auto& sj = rj[r][s];
            if (!sj.is_object() || !sj.contains("kind")) {
              v.problem(sp + ".kind", "expected diag or nilpotent");
              continue;
            }
            if (sj["kind"] == "nilpotent") {
              slots.push_back(RankOneData::nilpotent());
            } else if (sj["kind"] == "diag") {
              std::optional<Scalar> lambda;
              if (!sj.contains("lambda"))
                v.problem(sp + ".lambda", "required");
              else
                lambda = v.scalar(sj["lambda"], sp + ".lambda", *field);
              if (lambda && lambda->is_zero()) {
                v.problem(sp + ".lambda", "must be nonzero");
                lambda.reset();
              }
              std::vector<Scalar> b;
              if (!sj.contains("b") || !sj["b"].is_array() || sj["b"].size() != static_cast<std::size_t>(cfg.l)) {
                v.problem(sp + ".b", "expected " + std::to_string(cfg.l) + " scalar literals");
              } else {
                for (std::size_t k = 0; k < sj["b"].size(); ++k)
                  if (auto s = v.scalar(sj["b"][k], sp + ".b[" + std::to_string(k) + "]", *field)) b.push_back(*s);
              }
              if (lambda && b.size() == static_cast<std::size_t>(cfg.l)) slots.push_back(RankOneData::diagonal(*lambda, b));
            } else {
              v.problem(sp + ".kind", "expected diag or nilpotent");
            }
          }
          if (slots.size() == cfg.n) cfg.reps.push_back(std::move(slots));
        }
      }
    }
  }

  // bounds
  if (j.contains("bounds")) {
    const auto& bj = j["bounds"];
    if (!bj.is_object()) {
      v.problem("bounds", "expected an object");
    } else {
      auto read = [&](const char* key, long lo, long hi, auto& target) {
        if (!bj.contains(key)) return;
        const std::string path = std::string("bounds.") + key;
        if (auto x = v.integer(bj[key], path)) {
          if (*x < lo || *x > hi)
            v.problem(path, "must be between " + std::to_string(lo) + " and " + std::to_string(hi));
          else
            target = static_cast<std::remove_reference_t<decltype(target)>>(*x);
        }
      };
      for (const auto& [key, value] : bj.items())
        if (key != "degree_bound" && key != "exponent_bound" && key != "random_cases" && key != "enumeration_cap")
          v.problem("bounds." + key, "unknown field");
      read("degree_bound", 1, 8, cfg.bounds.degree_bound);
      read("exponent_bound", 1, 16, cfg.bounds.exponent_bound);
      read("random_cases", 0, 10000, cfg.bounds.random_cases);
      read("enumeration_cap", 1, 1000000, cfg.bounds.enumeration_cap);
    }
  }

  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned())
      v.problem("seed", "expected a nonnegative integer");
    else
      cfg.seed = j["seed"].get<std::uint64_t>();
  }

  if (!v.ok()) throw ConfigError(v.take());
  return cfg;
}

WorkbenchConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"(file): cannot open " + path});
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError({"(file): " + std::string(e.what())});
  }
  return parse_config(j);
}

}  // namespace qweyl::workbench
