#include "chebdesign/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chebdesign {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    std::ostringstream os;
    os << path << ": " << e.what();
    throw std::runtime_error(os.str());
  }
}

namespace {

double require_number(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_number()) {
    std::ostringstream os;
    os << "missing or non-numeric field \"" << field << "\"";
    throw std::runtime_error(os.str());
  }
  return j.at(field).get<double>();
}

std::vector<double> number_array(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_array()) {
    std::ostringstream os;
    os << "missing or non-array field \"" << field << "\"";
    throw std::runtime_error(os.str());
  }
  std::vector<double> out;
  for (const auto& v : j.at(field)) {
    if (!v.is_number()) {
      std::ostringstream os;
      os << "non-numeric entry in \"" << field << "\"";
      throw std::runtime_error(os.str());
    }
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

json domain_to_json(const IntervalDomain& domain) {
  return json{{"A", domain.A}, {"B", domain.B}};
}

IntervalDomain domain_from_json(const json& j) {
  return IntervalDomain(require_number(j, "A"), require_number(j, "B"));
}

json design_to_json(const Design& design) {
  return json{{"support", design.support()}, {"weights", design.weights()}};
}

Design design_from_json(const json& j, const IntervalDomain& domain) {
  std::vector<double> support = number_array(j, "support");
  if (!j.contains("weights")) return Design::uniform(support, domain);
  return Design(support, number_array(j, "weights"), domain);
}

ModelSpec model_from_json(const json& j) {
  if (!j.contains("type") || !j.at("type").is_string())
    throw std::runtime_error("model JSON needs a string \"type\"");
  if (!j.contains("domain"))
    throw std::runtime_error("model JSON needs a \"domain\" object");
  const std::string type = j.at("type").get<std::string>();
  IntervalDomain domain = domain_from_json(j.at("domain"));
  json params = j.value("params", json::object());

  if (type == "polynomial") {
    int degree = static_cast<int>(require_number(params, "degree"));
    return polynomial_model(degree, domain);
  }
  if (type == "weighted") {
    int p = static_cast<int>(require_number(params, "p"));
    std::string eff = params.value("efficiency", "exp_x2");
    if (eff == "exp_x2")
      return weighted_polynomial_model(p, Efficiency::exp_x2(), domain);
    if (eff == "jacobi")
      return weighted_polynomial_model(
          p,
          Efficiency::jacobi(require_number(params, "alpha"),
                             require_number(params, "beta")),
          domain);
    if (eff == "inverse_power")
      return weighted_polynomial_model(
          p, Efficiency::inverse_power(require_number(params, "n")), domain);
    throw std::runtime_error("unknown efficiency \"" + eff +
                             "\" (exp_x2 | jacobi | inverse_power)");
  }
  if (type == "rational") {
    std::vector<double> num = number_array(params, "numerator");
    std::vector<double> den = number_array(params, "denominator");
    std::vector<double> theta = num;
    theta.insert(theta.end(), den.begin(), den.end());
    return rational_model(static_cast<int>(num.size()),
                          static_cast<int>(den.size()), theta, domain);
  }
  if (type == "sin") {
    // Demonstration basis {1, x, sin(omega x)}; not a Chebyshev system for
    // large omega, which the verifier is expected to detect.
    double omega = require_number(params, "omega");
    ModelSpec m;
    m.name = "sin(omega x) basis";
    m.p = 2;
    m.domain = domain;
    m.theta = Eigen::VectorXd::Zero(0);
    m.psi.k = 2;
    m.psi.diag_index = 2;
    m.psi.analytic = true;
    m.psi.funcs = {[](const Taylor& x) { return x; },
                   [omega](const Taylor& x) { return sin(x * omega); }};
    m.psi.labels = {"x", "sin(omega x)"};
    m.layout.resize(2, 2);
    m.layout << 0, 1, 1, 2;
    m.P = Eigen::MatrixXd::Identity(2, 2);
    return m;
  }
  throw std::runtime_error("unknown model type \"" + type +
                           "\" (polynomial | weighted | rational | sin)");
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    rows.push_back(row);
  }
  return rows;
}

json witness_to_json(const ChebWitness& w) {
  return json{{"points", w.points},
              {"value", w.value},
              {"level", w.level},
              {"what", w.what}};
}

json cheb_report_to_json(const ChebReport& r) {
  json j{{"verdict", to_string(r.verdict)},
         {"method", to_string(r.method)},
         {"witness", nullptr},
         {"min_abs_det", r.min_abs_det},
         {"samples", r.samples_checked},
         {"note", r.note}};
  if (r.witness) j["witness"] = witness_to_json(*r.witness);
  return j;
}

json improvement_to_json(const ImprovementResult& r, const Design& original) {
  return json{{"original", design_to_json(original)},
              {"improved", design_to_json(r.improved)},
              {"original_moments", r.original_moments},
              {"original_dk", r.original_dk},
              {"achieved_dk", r.achieved_dk},
              {"direction", to_string(r.direction)},
              {"case_tag", to_string(r.case_tag)},
              {"loewner_certificate", r.loewner_certificate},
              {"support_bound_ok", r.support_bound_ok},
              {"refined", r.refined}};
}

json admissibility_to_json(const AdmissibilityReport& r) {
  return json{{"classification", to_string(r.classification)},
              {"unimprovable_in_fact", r.unimprovable_in_fact},
              {"dk_gap", r.dk_gap}};
}

}  // namespace chebdesign
